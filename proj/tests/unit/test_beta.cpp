#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mlfrac/beta.hpp"
#include "mlfrac/gamma.hpp"
#include "near.hpp"

using namespace mlfrac;

TEST_SUITE("beta") {
  TEST_CASE("classical and trivial kernels") {
    const EvalPolicy pol;
    CHECK(beta_extended({1, 1}, NoKernel{}, pol).value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rel_err(beta_extended({0.3, 0.4}, NoKernel{}, pol).value, 5.11209124445735163) < 1e-14);
    CHECK(rel_err(beta_extended({0.3, 0.4}, MittagLefflerBetaKernel{0, 0.5}, pol).value,
                  5.11209124445735163) < 1e-14);
    CHECK(beta_extended({-0.5, 1}, NoKernel{}, pol).status == Status::DomainError);
  }

  TEST_CASE("Chaudhry and two-parameter kernels against quadrature oracle") {
    const EvalPolicy pol;
    const double chaudhry = 0.021748977021897856;
    CHECK(rel_err(beta_extended({1.5, 2}, ChaudhryKernel{0.5}, pol).value, chaudhry) < 1e-13);
    CHECK(rel_err(beta_extended({1.5, 2}, TwoParamExpKernel{0.5, 0.5}, pol).value, chaudhry) < 1e-13);
    CHECK(rel_err(beta_extended({1.5, 2}, MittagLefflerBetaKernel{0.5, 1}, pol).value, chaudhry) < 1e-13);
    CHECK(rel_err(beta_extended({0.5, 1.5}, TwoParamExpKernel{0.3, 0.7}, pol).value,
                  0.091130816385778366) < 1e-13);
    // positivity of x and y is required whatever the kernel
    CHECK(beta_extended({-0.5, -0.5}, ChaudhryKernel{1}, pol).status == Status::DomainError);
  }

  TEST_CASE("Mittag-Leffler kernel against nested quadrature oracle") {
    const EvalPolicy pol;
    struct Case {
      double x, y, p, a, v;
    };
    for (const Case& c : {Case{0.5, 0.5, 1, 0.5, 0.2175130553241162},
                          Case{0.3, 0.4, 0.5, 0.75, 0.3894518800822573},
                          Case{1.5, 2.5, 0.25, 0.75, 0.05877749597571519}}) {
      CHECK(rel_err(beta_extended({c.x, c.y}, MittagLefflerBetaKernel{c.p, c.a}, pol).value, c.v) < 1e-12);
    }
  }

  TEST_CASE("vector evaluation matches scalar and the sequence cache") {
    const EvalPolicy pol;
    const MittagLefflerBetaKernel k{0.4, 0.8};
    std::vector<double> xs{0.7, 1.7, 2.7, 3.7};
    const auto many = beta_extended_many(xs, 1.3, k, pol);
    BetaSequence seq(0.7, 1.3, k, pol, 3);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double one = beta_extended({xs[i], 1.3}, k, pol).value;
      CHECK(rel_err(many[i].value, one) < 1e-13);
      CHECK(rel_err(seq.at(i).value, one) < 1e-13);
    }
    CHECK(seq.computed() == 6);
    CHECK(rel_err(seq.ratio(0), seq.at(0).value / beta(0.7, 1.3)) < 1e-15);
    CHECK(seq.matches(0.7, 1.3, k));
    CHECK_FALSE(seq.matches(0.7, 1.3, MittagLefflerBetaKernel{0.4, 0.9}));
  }

  TEST_CASE("kernel checks") {
    CHECK(check_kernel(MittagLefflerBetaKernel{0.5, 2.5}) != "");
    CHECK(check_kernel(ChaudhryKernel{-1}) != "");
    CHECK(check_kernel(MittagLefflerBetaKernel{0.5, 0.5}) == "");
    CHECK(is_trivial(TwoParamExpKernel{0, 0}));
    CHECK_FALSE(is_trivial(TwoParamExpKernel{0, 0.1}));
  }

  TEST_CASE("multi-index closed form differs from the integral") {
    const EvalPolicy pol;
    auto closed = beta_ml_closed(0.3, 0.4, 1, 0.5, pol);
    auto quad = beta_extended({0.3, 0.4}, MittagLefflerBetaKernel{0.5, 1}, pol);
    REQUIRE(closed.ok());
    CHECK(rel_err(quad.value, 0.18024) < 1e-4);
    CHECK(rel_err(closed.value, quad.value) > 1.0);
    // at p = 0 only the leading term survives and the closed form is exact
    CHECK(rel_err(beta_ml_closed(0.3, 0.4, 1, 0.0, pol).value, beta(0.3, 0.4)) < 1e-13);
  }

  TEST_CASE("Cauchy-Schwarz bound") {
    const EvalPolicy pol;
    auto r = beta_bound_check(0.1, 0.1, 0.5, 0.5, pol);
    CHECK(r.pass);
    CHECK(r.relation == Relation::UpperBound);
    CHECK(r.lhs < r.rhs);
    CHECK_THROWS_AS(beta_bound_check(0.6, 0.1, 0.5, 0.5, pol), std::invalid_argument);
    CHECK_THROWS_AS(beta_bound_check(0.1, 0.1, 0.0, 0.5, pol), std::invalid_argument);
  }
}
