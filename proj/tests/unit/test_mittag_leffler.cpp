#include <doctest.h>

#include <cmath>

#include "mlfrac/mittag_leffler.hpp"
#include "near.hpp"

using namespace mlfrac;

namespace {
struct MlCase {
  double alpha, x, value;
};
// E_alpha(-x) from a 600-digit power series
const MlCase kCases[] = {
    {0.3, 0.5, 0.632649005943599022},  {0.3, 3, 0.211802633196435782},
    {0.3, 20, 0.0374062262138844531},  {0.5, 0.5, 0.615690344192925875},
    {0.5, 3, 0.17900115118138995},     {0.5, 20, 0.0281743487410513193},
    {0.75, 0.5, 0.603790345095246756}, {0.75, 3, 0.125855136911841527},
    {0.75, 20, 0.0145275221544595042}, {0.9, 0.5, 0.603405498695860968},
    {0.9, 3, 0.0838883540337732621},   {0.9, 20, 0.00574950781610911258},
    {1.3, 0.5, 0.633007935002399039},  {1.3, 3, -0.0846722639920440214},
    {1.3, 20, -0.0118411201100296197}, {1.7, 0.5, 0.700114660512972247},
    {1.7, 3, -0.221695826839097637},   {1.7, 20, 0.17585130935289227},
    {1.5, 10, -0.109713054252740147},  {1.5, 20, 0.0195957479301875057},
    {1.5, 50, -0.00457838510583927799},
    {2, 0.5, 0.760244597075630151},    {2, 3, -0.160556538574690627},
    {2, 20, -0.237948391980591094},
};
}  // namespace

TEST_SUITE("mittag_leffler") {
  TEST_CASE("kernel against high-precision series") {
    for (const auto& c : kCases) {
      MittagLefflerKernel k(c.alpha);
      CAPTURE(c.alpha);
      CAPTURE(c.x);
      CHECK(rel_err(k(c.x), c.value) < 5e-13);
    }
  }

  TEST_CASE("kernel exact regimes and large arguments") {
    CHECK(MittagLefflerKernel(1.0)(2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
    CHECK(rel_err(MittagLefflerKernel(2.0)(4.0), std::cos(2.0)) < 1e-15);
    CHECK(MittagLefflerKernel(0.5)(0.0) == 1.0);
    // e^{x^2} erfc(x) at x = 50
    CHECK(rel_err(MittagLefflerKernel(0.5)(50.0), 0.011281536265323773) < 1e-13);
    const double huge = MittagLefflerKernel(0.7)(1e200);
    CHECK(std::isfinite(huge));
    CHECK(huge > 0.0);
  }

  TEST_CASE("asymptotic and integral agree across the seam") {
    for (double a : {0.5, 0.75, 0.9}) {
      MittagLefflerKernel k(a);
      const auto asym = k.asymptotic(50.0);
      const auto quad = k.integral(50.0);
      CHECK(rel_err(asym.value, quad.value) < 1e-12);
    }
  }

  TEST_CASE("Prabhakar function") {
    const EvalPolicy pol;
    CHECK(rel_err(ml_prabhakar({1, 1, 1}, 1.0, pol).value, std::exp(1.0)) < 1e-15);
    // E_{1/2}(-2) = e^4 erfc(2)
    auto r = ml_prabhakar({0.5, 1, 1}, -2.0, pol);
    CHECK(rel_err(r.value, 0.25539567631050574) < 1e-14);
    CHECK(r.status == Status::Converged);
    // E_{1,2}(z) = (e^z - 1)/z
    CHECK(rel_err(ml_prabhakar({1, 2, 1}, 0.7, pol).value, std::expm1(0.7) / 0.7) < 1e-14);
    // E^2_{1,1}(z) = (1 + z) e^z
    CHECK(rel_err(ml_prabhakar({1, 1, 2}, -0.4, pol).value, 0.6 * std::exp(-0.4)) < 1e-13);
    auto big = ml_prabhakar({0.5, 1, 1}, -400.0, pol);
    CHECK(big.status == Status::AsymptoticUsed);
    CHECK(rel_err(big.value, 0.0014104695511795908) < 1e-14);
    CHECK(ml_prabhakar({0.5, 1.3, 1.0}, 500.0, pol).status == Status::DomainError);
  }

  TEST_CASE("E_1 reproduces exp on [-5, 5]") {
    const EvalPolicy pol;
    for (int i = 0; i <= 40; ++i) {
      const double z = -5.0 + 0.25 * i;
      CHECK(rel_err(ml_prabhakar({1, 1, 1}, z, pol).value, std::exp(z)) < 1e-12);
    }
  }

  TEST_CASE("p-extended series") {
    const EvalPolicy pol;
    // p = 0, (eta, omega) = (1, 2): Σ z^k/(k+1)! = (e^z - 1)/z
    auto r = ml_p_extended({1, 1, 1, 1, 1, 2, 0}, 1.0, pol);
    CHECK(rel_err(r.value, std::exp(1.0) - 1.0) < 1e-14);
    CHECK(ml_p_extended({1, 1, 1, 1, 1, 2, 0.3}, 1.0, pol).value < r.value);
  }

  TEST_CASE("multi-index series domain") {
    const EvalPolicy pol;
    CHECK(ml_multi_index_beta(0.3, 0.7, 1, 0.5, pol).status == Status::DomainError);
    CHECK(ml_multi_index_beta(1.0, 0.4, 1, 0.5, pol).status == Status::DomainError);
    CHECK(ml_multi_index_beta(0.3, 0.4, 1, 0.5, pol).ok());
  }
}
