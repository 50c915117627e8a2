#include <doctest.h>

#include <cmath>
#include <vector>

#include "mlfrac/frac_deriv.hpp"
#include "mlfrac/gamma.hpp"
#include "near.hpp"

using namespace mlfrac;

TEST_SUITE("frac_deriv") {
  TEST_CASE("power rule") {
    const EvalPolicy pol;
    const double classical = 0.75225277806367505;  // 1/Γ(5/2)
    CHECK(rel_err(frac_deriv_power_closed(1, {-0.5}, 1, 0, 1, pol).value, classical) < 1e-14);
    CHECK(rel_err(frac_deriv_numeric(Monomial{1}, {-0.5}, 1, NoKernel{}, pol).value, classical) < 1e-13);
    const double oracle = 0.16856138683426282;
    const MittagLefflerBetaKernel k{0.5, 0.75};
    CHECK(rel_err(frac_deriv_power_closed(0.5, {-0.5}, 2, 0.5, 0.75, pol).value, oracle) < 1e-12);
    CHECK(rel_err(frac_deriv_numeric(Monomial{0.5}, {-0.5}, 2, k, pol).value, oracle) < 1e-12);
    CHECK(frac_deriv_power_closed(-1.5, {-0.5}, 1, 0, 1, pol).status == Status::DomainError);
  }

  TEST_CASE("other kernels") {
    const EvalPolicy pol;
    CHECK(rel_err(frac_deriv_numeric(Monomial{1}, {-0.5}, 1, ConfluentPairKernel{0.3, 0.2, 1.5, 2.5}, pol).value,
                  0.21992320496647207) < 1e-12);
    const double a = frac_deriv_numeric(Monomial{1}, {-0.5}, 1, ConfluentPairKernel{0.3, 0.2, 2, 2}, pol).value;
    const double b = frac_deriv_numeric(Monomial{1}, {-0.5}, 1, TwoParamExpKernel{0.3, 0.2}, pol).value;
    CHECK(rel_err(a, b) < 1e-13);
    const double c = frac_deriv_numeric(Monomial{1}, {-0.5}, 1, ChaudhryKernel{0.3}, pol).value;
    const double d = frac_deriv_numeric(Monomial{1}, {-0.5}, 1, MittagLefflerBetaKernel{0.3, 1}, pol).value;
    CHECK(rel_err(c, d) < 1e-13);
  }

  TEST_CASE("power series term by term") {
    const EvalPolicy pol;
    std::vector<double> c(21, 1.0);
    for (std::size_t k = 1; k < c.size(); ++k) c[k] = c[k - 1] / static_cast<double>(k);
    const MittagLefflerBetaKernel k{0.3, 0.9};
    const double series = frac_deriv_series(c, {-0.5}, 0.5, 0.3, 0.9, pol).value;
    const double quad = frac_deriv_numeric(PowerSeries{c}, {-0.5}, 0.5, k, pol).value;
    CHECK(rel_err(series, quad) < 1e-12);
  }

  TEST_CASE("binomial images against quadrature oracle") {
    const EvalPolicy pol;
    CHECK(rel_err(frac_deriv_binomial_closed(1, 2.2, 0.8, 0.3, 0.3, 0.9, pol).value,
                  0.048371122592259631) < 1e-12);
    CHECK(rel_err(frac_deriv_double_binomial_closed(1, 2.5, 0.5, 0.7, 0.3, 0.4, 0.5, 0.2, 0.8, pol).value,
                  0.096222471356519744) < 1e-12);
    CHECK(frac_deriv_binomial_closed(1, 0.8, 0.8, 0.3, 0.3, 0.9, pol).status == Status::DomainError);
  }

  TEST_CASE("Prabhakar image and its unit-index form") {
    const EvalPolicy pol;
    const PrabhakarParams ml{0.8, 1.2, 0.7};
    const auto r = frac_deriv_prabhakar_closed(1, 2, ml, 0.6, 0.4, 1, pol);
    const double oracle = 0.085759942763119349;
    CHECK(rel_err(r.series.value, oracle) < 1e-12);
    REQUIRE(r.corollary);
    CHECK(rel_err(r.corollary->value, oracle) < 1e-12);
    REQUIRE(r.rel_diff);
    CHECK(*r.rel_diff < 1e-12);
    CHECK_FALSE(frac_deriv_prabhakar_closed(1, 2, ml, 0.6, 0.4, 0.9, pol).corollary);
  }

  TEST_CASE("Fox-Wright image and its unit-index form") {
    const EvalPolicy pol;
    const FoxWrightSpec spec{{{0.5, 1}}, {{1.5, 1}}, {}};
    const auto r = frac_deriv_fox_wright_closed(1, 2, spec, 0.4, 0.3, 1, pol);
    const double oracle = 0.14828316928262476;
    CHECK(rel_err(r.series.value, oracle) < 1e-12);
    REQUIRE(r.corollary);
    CHECK(rel_err(r.corollary->value, oracle) < 1e-12);
  }
}
