#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mlfrac/hypergeom.hpp"
#include "near.hpp"

using namespace mlfrac;

TEST_SUITE("hypergeom") {
  TEST_CASE("Gauss 2F1") {
    const EvalPolicy pol;
    CHECK(rel_err(gauss_2f1(1, 1, 2, 0.5, EvalPath::Series, pol).value, 1.3862943611198906) < 1e-13);
    CHECK(rel_err(gauss_2f1(1, 1, 2, 0.5, EvalPath::Integral, pol).value, 1.3862943611198906) < 1e-13);
    CHECK(rel_err(gauss_2f1(0.5, 1.5, 2.5, -0.7, EvalPath::Series, pol).value, 0.84476588186882531) < 1e-13);
    CHECK(rel_err(gauss_2f1(1.2, 0.8, 2.2, 0.98, EvalPath::Integral, pol).value, 3.0315179254061651) < 1e-12);
    CHECK(gauss_2f1(1.2, 0.8, 2.2, 0.98, EvalPath::Series, pol).status == Status::DomainError);
    CHECK(gauss_2f1(1, 2, 1.5, 0.5, EvalPath::Integral, pol).status == Status::DomainError);
    // terminating series
    CHECK(rel_err(gauss_2f1(-2, 1, 1, 3.0, EvalPath::Series, pol).value, 4.0) < 1e-15);
  }

  TEST_CASE("Kummer 1F1") {
    const EvalPolicy pol;
    CHECK(rel_err(kummer_1f1(0.5, 1.5, -2, pol).value, 0.5981440066613041) < 1e-14);
    CHECK(rel_err(kummer_1f1(1.5, 2.5, 3, pol).value, 7.9316624651495779) < 1e-14);
    CHECK(rel_err(kummer_1f1(0.3, 2.2, -60, pol).value, 0.33390900962524214) < 1e-13);
    // sqrt(pi) erf(10) / 20
    CHECK(rel_err(kummer_1f1(0.5, 1.5, -100, pol).value, std::sqrt(std::numbers::pi) * std::erf(10.0) / 20) < 1e-14);
    CHECK(rel_err(kummer_1f1(1.7, 1.7, -3, pol).value, std::exp(-3.0)) < 1e-15);
  }

  TEST_CASE("extended 2F1") {
    const EvalPolicy pol;
    const Gauss2F1Params q{1, 0.8, 2.2, 0.3, 0.9};
    const double oracle = 0.20705042906134468;
    CHECK(rel_err(ext_gauss_2f1(q, 0.25, EvalPath::Series, pol).value, oracle) < 1e-13);
    CHECK(rel_err(ext_gauss_2f1(q, 0.25, EvalPath::Integral, pol).value, oracle) < 1e-13);
    CHECK(rel_err(ext_gauss_2f1({0.5, 1, 2, 0.5, 1}, -0.6, EvalPath::Series, pol).value,
                  0.058497446661200796) < 1e-13);
    // p = 0 is the classical function for every alpha
    CHECK(rel_err(ext_gauss_2f1({1, 1, 2, 0, 0.3}, 0.5, EvalPath::Series, pol).value, 2 * std::numbers::ln2) < 1e-13);
  }

  TEST_CASE("extended Appell F1") {
    const EvalPolicy pol;
    const AppellF1Params q{1, 0.5, 0.5, 2, 0.2, 0.8};
    const double oracle = 0.36043495139639784;
    CHECK(rel_err(ext_appell_f1(q, 0.2, 0.3, EvalPath::Series, pol).value, oracle) < 1e-13);
    CHECK(rel_err(ext_appell_f1(q, 0.2, 0.3, EvalPath::Integral, pol).value, oracle) < 1e-13);
    CHECK(rel_err(appell_f1_naive(q, 0.2, 0.3, 30, pol), oracle) < 1e-12);
    CHECK(rel_err(ext_appell_f1({1, 0.5, 0.5, 2, 0, 1}, 0.2, 0.3, EvalPath::Series, pol).value,
                  1.151522185527351) < 1e-13);
    // x = y collapses to 2F1(s1, s2 + s3; s4; x)
    const auto f1 = ext_appell_f1(q, 0.4, 0.4, EvalPath::Series, pol).value;
    const auto f21 = ext_gauss_2f1({1.0, 1.0, 2.0, 0.2, 0.8}, 0.4, EvalPath::Series, pol).value;
    CHECK(rel_err(f1, f21) < 1e-13);
  }

  TEST_CASE("Fox-Wright") {
    const EvalPolicy pol;
    FoxWrightSpec exp_spec{{{1, 1}}, {{1, 1}}, {}};
    CHECK(rel_err(fox_wright(exp_spec, 0.8, pol).value, std::exp(0.8)) < 1e-14);
    FoxWrightSpec s{{{0.5, 0.5}}, {{1.5, 1.5}}, {}};
    CHECK(rel_err(fox_wright(s, 2.0, pol).value, 3.163979156007537) < 1e-13);
    // one upper pair (a, 1) over (b, 1) is Γ(a)/Γ(b) 1F1(a; b; z)
    FoxWrightSpec k{{{0.5, 1}}, {{1.5, 1}}, {}};
    CHECK(rel_err(fox_wright(k, -2.0, pol).value, 2 * kummer_1f1(0.5, 1.5, -2, pol).value) < 1e-13);
    CHECK(check_fox_wright({{{1, 3}}, {{1, 1}}, {}}) != "");
    FoxWrightSpec ext{{{1, 1}}, {{1, 1}}, FoxWrightExtension{1, 2, 0.5}};
    CHECK(rel_err(ext_fox_wright(ext, 0.4, pol).value, 0.081462855630520389) < 1e-13);
  }
}
