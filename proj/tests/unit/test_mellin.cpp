#include <doctest.h>

#include <cmath>

#include "mlfrac/mellin.hpp"
#include "near.hpp"

using namespace mlfrac;

TEST_SUITE("mellin") {
  TEST_CASE("moment of E_alpha(-v)") {
    const EvalPolicy pol;
    auto m = mellin_ml_moment(0.5, 0.75, 1, 1, 1, MellinMode::NumericCheck, pol);
    CHECK(rel_err(m.closed.value, 2.1899974739064652) < 1e-13);
    REQUIRE(m.numeric);
    CHECK(rel_err(m.numeric->value, 2.1899974739064652) < 1e-10);
    auto g = mellin_ml_moment(0.3, 1, 1, 1, 1, MellinMode::NumericCheck, pol);
    CHECK(rel_err(g.numeric->value, std::tgamma(0.3)) < 1e-10);
    CHECK(mellin_ml_moment(0.5, 1.5, 1, 1, 1, MellinMode::NumericCheck, pol).numeric->status ==
          Status::DomainError);
    // closed form scales as w^{-r}
    auto w = mellin_ml_moment(0.5, 0.75, 1, 1, 4, MellinMode::ClosedForm, pol);
    CHECK(rel_err(w.closed.value, m.closed.value / 2) < 1e-14);
  }

  TEST_CASE("power image transform") {
    const EvalPolicy pol;
    MellinRequest q{0.4, 1, -0.5, 1, 1, 0, MellinMode::ClosedForm};
    CHECK(rel_err(mellin_frac_power(q, pol).closed.value, 0.61906181974676513) < 1e-14);
    q.alpha = 0.5;
    q.mode = MellinMode::NumericCheck;
    auto m = mellin_frac_power(q, pol);
    CHECK(rel_err(m.closed.value, 0.79185581044219953) < 1e-14);
    REQUIRE(m.numeric);
    CHECK(rel_err(m.numeric->value, m.closed.value) < 1e-7);
  }

  TEST_CASE("binomial image transform") {
    const EvalPolicy pol;
    MellinRequest q{0.4, 0, -0.5, 0.75, 0.3, 1.2, MellinMode::NumericCheck};
    auto m = mellin_frac_binomial(q, pol);
    CHECK(rel_err(m.closed.value, 0.82427186526493093) < 1e-13);
    REQUIRE(m.numeric);
    CHECK(rel_err(m.numeric->value, 0.82427186526493093) < 1e-13);
    q.r = 1.2;
    CHECK(mellin_frac_binomial(q, pol).closed.status == Status::DomainError);
  }
}
