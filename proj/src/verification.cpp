#include "mlfrac/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "mlfrac/beta.hpp"
#include "mlfrac/frac_deriv.hpp"
#include "mlfrac/gamma.hpp"
#include "mlfrac/hypergeom.hpp"
#include "mlfrac/mellin.hpp"

namespace mlfrac {

namespace {

EvalPath path_for(double z) { return std::abs(z) < 0.95 ? EvalPath::Series : EvalPath::Integral; }

std::string describe_failure(const char* side, const EvalResult& r) {
  return std::string(side) + " failed (" + std::string(to_string(r.status)) + "): " + r.note;
}

// Equality report from two evaluations; failed evaluations fail the report.
IdentityReport compare(const std::string& id, const ParamPoint& point, const EvalResult& lhs,
                       const EvalResult& rhs, double tol, std::string notes) {
  if (!lhs.ok()) return make_failed_report(id, point, tol, describe_failure("lhs", lhs));
  if (!rhs.ok()) return make_failed_report(id, point, tol, describe_failure("rhs", rhs));
  if (lhs.status == Status::Truncated) notes += "; lhs not converged: " + lhs.note;
  if (rhs.status == Status::Truncated) notes += "; rhs not converged: " + rhs.note;
  return make_equality_report(id, point, lhs.value, rhs.value, tol, std::move(notes));
}

double tail_scale(double a, int n_terms, double t) {
  // |(a)_{N+1}/(N+1)!| |t|^{N+1} / (1 - |t|)
  const auto n1 = static_cast<std::size_t>(n_terms + 1);
  const double lg = std::lgamma(static_cast<double>(n1) + 1.0);
  const double poch = std::abs(pochhammer(a, n1));
  return std::exp(std::log(poch) - lg + static_cast<double>(n1) * std::log(std::abs(t))) /
         (1.0 - std::abs(t));
}

double get(const ParamPoint& point, const std::string& name) {
  for (const auto& [k, v] : point) {
    if (k == name) return v;
  }
  throw std::invalid_argument("missing parameter " + name);
}

bool has(const ParamPoint& point, const std::string& name) {
  return std::any_of(point.begin(), point.end(), [&](const auto& kv) { return kv.first == name; });
}

using Runner =
    std::function<std::vector<IdentityReport>(const ParamPoint&, double, const SuiteConfig&)>;
using Validator = std::function<std::string(const ParamPoint&)>;

struct Identity {
  IdentityInfo info;
  Runner run;
  Validator validate;
};

ParamPoint point(std::initializer_list<std::pair<const char*, double>> kv) {
  ParamPoint p;
  for (const auto& [k, v] : kv) p.emplace_back(k, v);
  return p;
}

std::vector<ParamPoint> product(const std::vector<std::pair<std::string, std::vector<double>>>& axes) {
  std::vector<ParamPoint> out{{}};
  for (const auto& [name, values] : axes) {
    std::vector<ParamPoint> next;
    for (const auto& base : out) {
      for (double v : values) {
        ParamPoint p = base;
        p.emplace_back(name, v);
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::string require(bool cond, const char* why) { return cond ? std::string{} : std::string{why}; }

FoxWrightSpec single_pair_spec(const ParamPoint& pt) {
  return FoxWrightSpec{{{get(pt, "a1"), get(pt, "A1")}}, {{get(pt, "b1"), get(pt, "B1")}}, {}};
}

std::vector<Identity> build_registry() {
  std::vector<Identity> reg;

  reg.push_back(
      {{"prop_2_1",
        "closed form of the Mittag-Leffler-kernel Beta through a multi-index Mittag-Leffler "
        "series, against quadrature",
        1e-8, true, {{"s1", "s2", "alpha", "p"}},
        product({{"s1", {0.3, 0.6}}, {"s2", {0.3, 0.6}}, {"alpha", {0.5, 1}}, {"p", {0.1, 0.5, 1}}})},
       [](const ParamPoint& pt, double tol, const SuiteConfig& cfg) {
         const double s1 = get(pt, "s1"), s2 = get(pt, "s2"), a = get(pt, "alpha"),
                      p = get(pt, "p");
         auto lhs = beta_ml_closed(s1, s2, a, p, cfg.policy);
         auto rhs = beta_extended({s1, s2}, MittagLefflerBetaKernel{p, a}, cfg.policy);
         auto r = compare("prop_2_1", pt, lhs, rhs, tol,
                          "multi-index Mittag-Leffler closed form vs quadrature; the closed form "
                          "drops contributions non-analytic in p and is not expected to hold");
         r.informational = true;
         return std::vector{r};
       },
       [](const ParamPoint& pt) {
         return require(get(pt, "s1") > 0 && get(pt, "s2") > 0 && get(pt, "p") >= 0 &&
                            get(pt, "alpha") > 0 && get(pt, "alpha") <= 2,
                        "needs s1, s2 > 0, p >= 0, 0 < alpha <= 2");
       }});

  reg.push_back(
      {{"prop_2_3", "Cauchy-Schwarz upper bound for the two-parameter exponential Beta", 1e-12,
        false, {{"x", "y", "p", "q"}},
        product({{"x", {0.1, 0.25, 0.4}}, {"y", {0.1, 0.25, 0.4}}, {"p", {0.5, 1, 2}},
                 {"q", {0.5, 1, 2}}})},
       [](const ParamPoint& pt, double tol, const SuiteConfig& cfg) {
         IdentityReport r = beta_bound_check(get(pt, "x"), get(pt, "y"), get(pt, "p"),
                                             get(pt, "q"), cfg.policy);
         r.params = pt;
         if (std::isfinite(r.lhs) && std::isfinite(r.rhs)) {
           r.tolerance = tol;
           r.pass = r.lhs <= r.rhs * (1.0 + tol);
         }
         return std::vector{r};
       },
       [](const ParamPoint& pt) {
         const double x = get(pt, "x"), y = get(pt, "y");
         return require(x > 0 && x < 0.5 && y > 0 && y < 0.5 && get(pt, "p") > 0 &&
                            get(pt, "q") > 0,
                        "needs 0 < x, y < 1/2 and p, q > 0");
       }});

  reg.push_back(
      {{"thm_2_4",
        "series against integral representation of the extended 2F1 and Appell F1", 1e-8,
        false,
        {{"a", "b", "c", "p", "alpha", "z"}, {"s1", "s2", "s3", "s4", "p", "alpha", "x", "y"}},
        {point({{"a", 1}, {"b", 0.8}, {"c", 2.2}, {"p", 0.3}, {"alpha", 0.9}, {"z", 0.25}}),
         point({{"a", 0.5}, {"b", 1}, {"c", 2}, {"p", 0.5}, {"alpha", 1}, {"z", 0.3}}),
         point({{"a", 1.5}, {"b", 0.7}, {"c", 2.5}, {"p", 0.2}, {"alpha", 0.75}, {"z", -0.4}}),
         point({{"a", 0.3}, {"b", 1.2}, {"c", 3}, {"p", 1}, {"alpha", 0.5}, {"z", 0.6}}),
         point({{"a", 2}, {"b", 0.5}, {"c", 1.7}, {"p", 0.1}, {"alpha", 1}, {"z", 0.8}}),
         point({{"s1", 1}, {"s2", 0.5}, {"s3", 0.5}, {"s4", 2}, {"p", 0.2}, {"alpha", 0.8},
                {"x", 0.2}, {"y", 0.3}}),
         point({{"s1", 0.7}, {"s2", 1.2}, {"s3", 0.4}, {"s4", 2.5}, {"p", 0.5}, {"alpha", 1},
                {"x", -0.3}, {"y", 0.4}}),
         point({{"s1", 1.5}, {"s2", 0.3}, {"s3", 0.8}, {"s4", 3}, {"p", 0.1}, {"alpha", 0.6},
                {"x", 0.5}, {"y", -0.2}}),
         point({{"s1", 0.5}, {"s2", 0.5}, {"s3", 0.5}, {"s4", 1.5}, {"p", 1}, {"alpha", 0.9},
                {"x", 0.1}, {"y", 0.1}}),
         point({{"s1", 1.2}, {"s2", 1}, {"s3", 1}, {"s4", 2.4}, {"p", 0.3}, {"alpha", 0.75},
                {"x", 0.6}, {"y", 0.6}})}},
       [](const ParamPoint& pt, double tol, const SuiteConfig& cfg) {
         if (has(pt, "s1")) {
           const AppellF1Params q{get(pt, "s1"), get(pt, "s2"), get(pt, "s3"), get(pt, "s4"),
                                  get(pt, "p"), get(pt, "alpha")};
           const double x = get(pt, "x"), y = get(pt, "y");
           return std::vector{compare("thm_2_4", pt,
                                      ext_appell_f1(q, x, y, EvalPath::Series, cfg.policy),
                                      ext_appell_f1(q, x, y, EvalPath::Integral, cfg.policy), tol,
                                      "extended Appell F1: anti-diagonal series vs single integral")};
         }
         const Gauss2F1Params q{get(pt, "a"), get(pt, "b"), get(pt, "c"), get(pt, "p"),
                                get(pt, "alpha")};
         const double z = get(pt, "z");
         return std::vector{compare("thm_2_4", pt,
                                    ext_gauss_2f1(q, z, EvalPath::Series, cfg.policy),
                                    ext_gauss_2f1(q, z, EvalPath::Integral, cfg.policy), tol,
                                    "extended 2F1: Beta-coefficient series vs Euler-type integral")};
       },
       [](const ParamPoint& pt) {
         if (has(pt, "s1")) {
           return require(get(pt, "s4") > get(pt, "s1") && get(pt, "s1") > 0 &&
                              std::abs(get(pt, "x")) < 0.95 && std::abs(get(pt, "y")) < 0.95,
                          "needs s4 > s1 > 0 and |x|, |y| < 0.95");
         }
         return require(get(pt, "c") > get(pt, "b") && get(pt, "b") > 0 &&
                            std::abs(get(pt, "z")) < 0.95,
                        "needs c > b > 0 and |z| < 0.95");
       }});

  reg.push_back(
      {{"thm_3_1", "power rule of the Mittag-Leffler-kernel derivative against quadrature", 1e-6,
        false, {{"eta", "mu", "p", "alpha", "z"}},
        product({{"eta", {0.5, 1, 2}}, {"mu", {-0.5, -1.5}}, {"p", {0, 0.5}}, {"alpha", {0.75, 1}},
                 {"z", {0.5, 1, 2}}})},
       [](const ParamPoint& pt, double tol, const SuiteConfig& cfg) {
         const double eta = get(pt, "eta"), mu = get(pt, "mu"), p = get(pt, "p"),
                      a = get(pt, "alpha"), z = get(pt, "z");
         return std::vector{compare(
             "thm_3_1", pt, frac_deriv_power_closed(eta, {mu}, z, p, a, cfg.policy),
             frac_deriv_numeric(Monomial{eta}, {mu}, z, MittagLefflerBetaKernel{p, a}, cfg.policy),
             tol, "power rule closed form vs operator quadrature")};
       },
       [](const ParamPoint& pt) {
         return require(get(pt, "eta") > -1 && get(pt, "mu") < 0 && get(pt, "z") > 0,
                        "needs eta > -1, mu < 0, z > 0");
       }});

  reg.push_back(
      {{"thm_3_2",
        "term-by-term image of a truncated power series against quadrature (family 0: 1/n!, "
        "family 1: all ones)",
        1e-6, false, {{"family", "terms", "mu", "z", "p", "alpha"}},
        {point({{"family", 0}, {"terms", 20}, {"mu", -0.5}, {"z", 0.5}, {"p", 0.3}, {"alpha", 0.9}}),
         point({{"family", 1}, {"terms", 30}, {"mu", -0.5}, {"z", 0.25}, {"p", 0.3}, {"alpha", 0.9}}),
         point({{"family", 0}, {"terms", 20}, {"mu", -1.5}, {"z", 1}, {"p", 0.5}, {"alpha", 0.75}})}},
       [](const ParamPoint& pt, double tol, const SuiteConfig& cfg) {
         const int n = static_cast<int>(get(pt, "terms"));
         std::vector<double> c(static_cast<std::size_t>(n) + 1, 1.0);
         if (get(pt, "family") == 0) {
           for (int k = 1; k <= n; ++k) c[k] = c[k - 1] / k;
         }
         const double mu = get(pt, "mu"), z = get(pt, "z"), p = get(pt, "p"), a = get(pt, "alpha");
         return std::vector{compare(
             "thm_3_2", pt, frac_deriv_series(c, {mu}, z, p, a, cfg.policy),
             frac_deriv_numeric(PowerSeries{c}, {mu}, z, MittagLefflerBetaKernel{p, a}, cfg.policy),
             tol, "series image vs operator quadrature of the same polynomial")};
       },
       [](const ParamPoint& pt) {
         const double fam = get(pt, "family"), n = get(pt, "terms");
         return require((fam == 0 || fam == 1) && n >= 0 && n == std::floor(n) && n <= 200 &&
                            get(pt, "mu") < 0 && get(pt, "z") > 0,
                        "needs family in {0, 1}, integer 0 <= terms <= 200, mu < 0, z > 0");
       }});

  reg.push_back(
      {{"thm_3_3", "binomial image through the extended 2F1 against quadrature", 1e-6, false,
        {{"eta", "mu", "beta", "z", "p", "alpha"}},
        {point({{"eta", 1}, {"mu", 2.2}, {"beta", 0.8}, {"z", 0.3}, {"p", 0.3}, {"alpha", 0.9}}),
         point({{"eta", 0.5}, {"mu", 1.5}, {"beta", 1}, {"z", 0.2}, {"p", 0}, {"alpha", 1}}),
         point({{"eta", 1.5}, {"mu", 2.5}, {"beta", 0.5}, {"z", 0.5}, {"p", 0.5}, {"alpha", 0.75}}),
         point({{"eta", 0.8}, {"mu", 2}, {"beta", 1.2}, {"z", 0.7}, {"p", 0.2}, {"alpha", 0.5}}),
         point({{"eta", 1}, {"mu", 3}, {"beta", -0.5}, {"z", 0.4}, {"p", 1}, {"alpha", 1}}),
         point({{"eta", 2}, {"mu", 2.5}, {"beta", 0.3}, {"z", 0.9}, {"p", 0.1}, {"alpha", 0.9}})}},
       [](const ParamPoint& pt, double tol, const SuiteConfig& cfg) {
         const double eta = get(pt, "eta"), mu = get(pt, "mu"), b = get(pt, "beta"),
                      z = get(pt, "z"), p = get(pt, "p"), a = get(pt, "alpha");
         return std::vector{compare(
             "thm_3_3", pt, frac_deriv_binomial_closed(eta, mu, b, z, p, a, cfg.policy),
             frac_deriv_numeric(Binomial{eta, b}, FracOrder::from_target(eta, mu), z,
                                MittagLefflerBetaKernel{p, a}, cfg.policy),
             tol, "binomial closed form vs operator quadrature")};
       },
       [](const ParamPoint& pt) {
         return require(get(pt, "mu") > get(pt, "eta") && get(pt, "eta") > 0 && get(pt, "z") > 0 &&
                            get(pt, "z") < 1,
                        "needs mu > eta > 0 and 0 < z < 1");
       }});

  reg.push_back(
      {{"thm_3_4", "double binomial image through the extended Appell F1 against quadrature",
        1e-6, false, {{"eta", "mu", "a", "exp_a", "b", "exp_b", "z", "p", "alpha"}},
        {point({{"eta", 1}, {"mu", 2.5}, {"a", 0.5}, {"exp_a", 0.7}, {"b", 0.3}, {"exp_b", 0.4},
                {"z", 0.5}, {"p", 0.2}, {"alpha", 0.8}}),
         point({{"eta", 0.5}, {"mu", 1.5}, {"a", 0.4}, {"exp_a", 1}, {"b", -0.6}, {"exp_b", 0.5},
                {"z", 0.8}, {"p", 0}, {"alpha", 1}}),
         point({{"eta", 1.5}, {"mu", 3}, {"a", 0.9}, {"exp_a", 0.5}, {"b", 0.2}, {"exp_b", 1.2},
                {"z", 0.6}, {"p", 0.5}, {"alpha", 1}}),
         point({{"eta", 0.7}, {"mu", 2.2}, {"a", -0.5}, {"exp_a", 0.3}, {"b", 0.5}, {"exp_b", 0.6},
                {"z", 0.9}, {"p", 0.3}, {"alpha", 0.75}}),
         point({{"eta", 1}, {"mu", 2}, {"a", 0.3}, {"exp_a", 1}, {"b", 0.3}, {"exp_b", 1},
                {"z", 0.5}, {"p", 1}, {"alpha", 0.5}}),
         point({{"eta", 2}, {"mu", 3.5}, {"a", 0.6}, {"exp_a", -0.4}, {"b", 0.8}, {"exp_b", 0.9},
                {"z", 0.7}, {"p", 0.1}, {"alpha", 0.9}})}},
       [](const ParamPoint& pt, double tol, const SuiteConfig& cfg) {
         const double eta = get(pt, "eta"), mu = get(pt, "mu"), a = get(pt, "a"),
                      ea = get(pt, "exp_a"), b = get(pt, "b"), eb = get(pt, "exp_b"),
                      z = get(pt, "z"), p = get(pt, "p"), al = get(pt, "alpha");
         return std::vector{compare(
             "thm_3_4", pt,
             frac_deriv_double_binomial_closed(eta, mu, a, ea, b, eb, z, p, al, cfg.policy),
             frac_deriv_numeric(DoubleBinomial{eta, a, ea, b, eb}, FracOrder::from_target(eta, mu),
                                z, MittagLefflerBetaKernel{p, al}, cfg.policy),
             tol, "double binomial closed form vs operator quadrature")};
       },
       [](const ParamPoint& pt) {
         const double z = get(pt, "z");
         return require(get(pt, "mu") > get(pt, "eta") && get(pt, "eta") > 0 && z > 0 &&
                            std::abs(get(pt, "a") * z) < 0.95 && std::abs(get(pt, "b") * z) < 0.95,
                        "needs mu > eta > 0, z > 0 and |a z|, |b z| < 0.95");
       }});

  reg.push_back(
      {{"thm_3_5", "Mellin transform in p of the power image: nested quadrature vs closed form",
        1e-5, false, {{"r", "eta", "mu", "alpha", "z"}},
        {point({{"r", 0.4}, {"eta", 1}, {"mu", -0.5}, {"alpha", 0.5}, {"z", 1}}),
         point({{"r", 0.4}, {"eta", 1}, {"mu", -0.5}, {"alpha", 1}, {"z", 1}})}},
       [](const ParamPoint& pt, double tol, const SuiteConfig& cfg) {
         MellinRequest q{get(pt, "r"), get(pt, "eta"), get(pt, "mu"), get(pt, "alpha"),
                         get(pt, "z"), 0.0, MellinMode::NumericCheck};
         const MellinResult m = mellin_frac_power(q, cfg.policy);
         return std::vector{compare("thm_3_5", pt, *m.numeric, m.closed, tol,
                                    "nested operator quadrature vs Mellin closed form")};
       },
       [](const ParamPoint& pt) {
         return require(get(pt, "r") > 0 && get(pt, "r") < 1 && get(pt, "eta") > -1 &&
                            get(pt, "mu") < 0 && get(pt, "alpha") > 0 && get(pt, "alpha") <= 2 &&
                            get(pt, "z") > 0,
                        "needs 0 < r < 1, eta > -1, mu < 0, 0 < alpha <= 2, z > 0");
       }});

  reg.push_back(
      {{"thm_3_6",
        "Mellin transform of the binomial image: 2F1 closed form vs series of power transforms",
        1e-7, false, {{"lambda", "r", "mu", "alpha", "z"}},
        {point({{"lambda", 1.2}, {"r", 0.4}, {"mu", -0.5}, {"alpha", 0.75}, {"z", 0.3}})}},
       [](const ParamPoint& pt, double tol, const SuiteConfig& cfg) {
         MellinRequest q{get(pt, "r"), 0.0, get(pt, "mu"), get(pt, "alpha"), get(pt, "z"),
                         get(pt, "lambda"), MellinMode::NumericCheck};
         const MellinResult m = mellin_frac_binomial(q, cfg.policy);
         return std::vector{compare("thm_3_6", pt, m.closed, *m.numeric, tol,
                                    "2F1 closed form vs series of power-rule Mellin transforms; "
                                    "binomial exponent lambda")};
       },
       [](const ParamPoint& pt) {
         return require(get(pt, "r") > 0 && get(pt, "r") < 1 && get(pt, "mu") < 0 &&
                            get(pt, "alpha") > 0 && get(pt, "alpha") <= 2 && get(pt, "z") > 0 &&
                            get(pt, "z") < 0.95,
                        "needs 0 < r < 1, mu < 0, 0 < alpha <= 2, 0 < z < 0.95");
       }});

  reg.push_back(
      {{"eq_gam",
        "Mellin moment of E_alpha(-v): closed Gamma ratio vs half-line quadrature; at alpha = 1 "
        "the quadrature is also held to Gamma(r) at 1e-10",
        1e-7, false, {{"r", "alpha"}},
        product({{"r", {0.2, 0.5, 0.8}}, {"alpha", {0.5, 0.75, 1}}})},
       [](const ParamPoint& pt, double tol, const SuiteConfig& cfg) {
         const double r = get(pt, "r"), a = get(pt, "alpha");
         const MellinResult m = mellin_ml_moment(r, a, 1.0, 1.0, 1.0, MellinMode::NumericCheck,
                                                 cfg.policy);
         std::vector<IdentityReport> out{compare("eq_gam", pt, *m.numeric, m.closed, tol,
                                                 "half-line quadrature vs Gamma-ratio moment")};
         if (a == 1.0) {
           out.push_back(compare("eq_gam", pt, *m.numeric, EvalResult::exact(std::tgamma(r)),
                                 1e-10, "unit index: quadrature vs Gamma(r)"));
         }
         return out;
       },
       [](const ParamPoint& pt) {
         return require(get(pt, "r") > 0 && get(pt, "r") < 1 && get(pt, "alpha") > 0 &&
                            get(pt, "alpha") <= 1,
                        "needs 0 < r < 1 and 0 < alpha <= 1");
       }});

  reg.push_back(
      {{"thm_4_1", "linear generating relation of the extended 2F1 (truncated sum)", 1e-6, false,
        {{"lambda", "beta", "gamma", "z", "t", "p", "alpha"}},
        {point({{"lambda", 1.5}, {"beta", 0.8}, {"gamma", 2.2}, {"z", 0.1}, {"t", 0.2}, {"p", 0.3},
                {"alpha", 0.9}}),
         point({{"lambda", 1.5}, {"beta", 0.8}, {"gamma", 2.2}, {"z", 0.1}, {"t", 0.2}, {"p", 0},
                {"alpha", 1}})}},
       [](const ParamPoint& pt, double tol, const SuiteConfig& cfg) {
         auto r = check_generating_linear(get(pt, "lambda"), get(pt, "beta"), get(pt, "gamma"),
                                          get(pt, "z"), get(pt, "t"), get(pt, "p"),
                                          get(pt, "alpha"), cfg.truncation_order, cfg.policy, tol);
         return std::vector{r};
       },
       [](const ParamPoint& pt) {
         const double z = get(pt, "z"), t = get(pt, "t");
         return require(get(pt, "gamma") > get(pt, "beta") && get(pt, "beta") > 0 &&
                            get(pt, "lambda") > 0 && std::abs(t) < 1 &&
                            std::abs(z) < std::min(1.0, std::abs(1 - t)) &&
                            std::abs(z / (1 - t)) < 0.95,
                        "needs gamma > beta > 0, lambda > 0, |t| < 1, |z| < min(1, |1-t|)");
       }});

  reg.push_back(
      {{"thm_4_2",
        "bilinear generating relation; every reading of the one-argument Appell function and "
        "both left-hand forms are reported",
        1e-6, true, {{"lambda", "delta", "beta", "gamma", "z", "t", "p", "alpha"}},
        {point({{"lambda", 1}, {"delta", 1.3}, {"beta", 0.7}, {"gamma", 2.1}, {"z", 0.15},
                {"t", 0.2}, {"p", 0}, {"alpha", 1}}),
         point({{"lambda", 1}, {"delta", 1.3}, {"beta", 0.7}, {"gamma", 2.1}, {"z", 0.15},
                {"t", 0.2}, {"p", 0.2}, {"alpha", 0.8}})}},
       [](const ParamPoint& pt, double tol, const SuiteConfig& cfg) {
         std::vector<IdentityReport> out;
         for (auto form : {BilinearLhs::ProofConsistent, BilinearLhs::AsPrinted}) {
           for (auto cand : {BilinearCandidate::A, BilinearCandidate::B}) {
             auto r = check_generating_bilinear(
                 get(pt, "lambda"), get(pt, "delta"), get(pt, "beta"), get(pt, "gamma"),
                 get(pt, "z"), get(pt, "t"), get(pt, "p"), get(pt, "alpha"), cfg.truncation_order,
                 cand, form, cfg.policy, tol);
             r.informational = true;
             out.push_back(std::move(r));
           }
         }
         return out;
       },
       [](const ParamPoint& pt) {
         const double z = get(pt, "z"), t = get(pt, "t");
         return require(get(pt, "gamma") > get(pt, "lambda") && get(pt, "lambda") > 0 &&
                            get(pt, "gamma") > get(pt, "beta") && get(pt, "beta") > 0 &&
                            std::abs(t) < 1 && std::abs(z) < 1 / (1 + std::abs(t)),
                        "needs gamma > lambda, beta > 0, |t| < 1, |z| < 1/(1+|t|)");
       }});

  const auto prab_valid = [](const ParamPoint& pt) {
    return require(get(pt, "mu") > get(pt, "eta") && get(pt, "eta") > 0 && get(pt, "z") > 0 &&
                       get(pt, "rho") > 0 && get(pt, "rho") <= 2,
                   "needs mu > eta > 0, z > 0, 0 < rho <= 2");
  };
  reg.push_back(
      {{"thm_4_3", "image of t^{eta-1} times a Prabhakar function against quadrature", 1e-6,
        false, {{"eta", "mu", "rho", "delta", "upper", "z", "p", "alpha"}},
        {point({{"eta", 1}, {"mu", 2}, {"rho", 0.8}, {"delta", 1.2}, {"upper", 0.7}, {"z", 0.6},
                {"p", 0.4}, {"alpha", 0.9}}),
         point({{"eta", 0.5}, {"mu", 1.8}, {"rho", 0.5}, {"delta", 1}, {"upper", 1}, {"z", 0.9},
                {"p", 0}, {"alpha", 1}}),
         point({{"eta", 1.5}, {"mu", 2.5}, {"rho", 1.5}, {"delta", 0.5}, {"upper", 2}, {"z", 1.2},
                {"p", 0.3}, {"alpha", 0.75}})}},
       [](const ParamPoint& pt, double tol, const SuiteConfig& cfg) {
         const double eta = get(pt, "eta"), mu = get(pt, "mu"), z = get(pt, "z"),
                      p = get(pt, "p"), a = get(pt, "alpha");
         const PrabhakarParams ml{get(pt, "rho"), get(pt, "delta"), get(pt, "upper")};
         const ClosedFormResult c = frac_deriv_prabhakar_closed(eta, mu, ml, z, p, a, cfg.policy);
         return std::vector{compare(
             "thm_4_3", pt, c.series,
             frac_deriv_numeric(PrabhakarFunction{eta, ml}, FracOrder::from_target(eta, mu), z,
                                MittagLefflerBetaKernel{p, a}, cfg.policy),
             tol, "Prabhakar image series vs operator quadrature")};
       },
       prab_valid});

  reg.push_back(
      {{"cor_prabhakar",
        "unit-index Prabhakar image: series vs p-extended Mittag-Leffler form", 1e-10, false,
        {{"eta", "mu", "rho", "delta", "upper", "z", "p"}},
        {point({{"eta", 1}, {"mu", 2}, {"rho", 0.8}, {"delta", 1.2}, {"upper", 0.7}, {"z", 0.6},
                {"p", 0.4}}),
         point({{"eta", 0.5}, {"mu", 1.8}, {"rho", 0.5}, {"delta", 1}, {"upper", 1}, {"z", 0.9},
                {"p", 1}}),
         point({{"eta", 1.5}, {"mu", 2.5}, {"rho", 1.5}, {"delta", 0.5}, {"upper", 2}, {"z", 1.2},
                {"p", 0.3}})}},
       [](const ParamPoint& pt, double tol, const SuiteConfig& cfg) {
         const PrabhakarParams ml{get(pt, "rho"), get(pt, "delta"), get(pt, "upper")};
         const ClosedFormResult c = frac_deriv_prabhakar_closed(
             get(pt, "eta"), get(pt, "mu"), ml, get(pt, "z"), get(pt, "p"), 1.0, cfg.policy);
         return std::vector{compare("cor_prabhakar", pt, c.series, *c.corollary, tol,
                                    "series image vs p-extended Mittag-Leffler form")};
       },
       [prab_valid](const ParamPoint& pt) {
         if (auto why = prab_valid(pt); !why.empty()) return why;
         return require(get(pt, "delta") > 0 && get(pt, "upper") > 0 && get(pt, "p") >= 0,
                        "needs delta, upper > 0 and p >= 0");
       }});

  const auto fw_valid = [](const ParamPoint& pt) {
    return require(get(pt, "mu") > get(pt, "eta") && get(pt, "eta") > 0 && get(pt, "z") > 0 &&
                       get(pt, "A1") > 0 && get(pt, "B1") > 0,
                   "needs mu > eta > 0, z > 0, A1, B1 > 0");
  };
  reg.push_back(
      {{"fox_wright",
        "image of t^{eta-1} times a Fox-Wright function (one upper pair (a1, A1), one lower "
        "pair (b1, B1)) against quadrature",
        1e-6, false, {{"eta", "mu", "a1", "A1", "b1", "B1", "z", "p", "alpha"}},
        {point({{"eta", 1}, {"mu", 2}, {"a1", 0.5}, {"A1", 1}, {"b1", 1.5}, {"B1", 1}, {"z", 0.4},
                {"p", 0}, {"alpha", 1}}),
         point({{"eta", 1}, {"mu", 2}, {"a1", 1}, {"A1", 1}, {"b1", 1}, {"B1", 1}, {"z", 0.7},
                {"p", 0.3}, {"alpha", 0.9}}),
         point({{"eta", 0.6}, {"mu", 1.9}, {"a1", 1.5}, {"A1", 0.5}, {"b1", 2}, {"B1", 1.5},
                {"z", 1.1}, {"p", 0.5}, {"alpha", 0.75}})}},
       [](const ParamPoint& pt, double tol, const SuiteConfig& cfg) {
         const double eta = get(pt, "eta"), mu = get(pt, "mu"), z = get(pt, "z"),
                      p = get(pt, "p"), a = get(pt, "alpha");
         const FoxWrightSpec spec = single_pair_spec(pt);
         const ClosedFormResult c = frac_deriv_fox_wright_closed(eta, mu, spec, z, p, a, cfg.policy);
         return std::vector{compare(
             "fox_wright", pt, c.series,
             frac_deriv_numeric(FoxWrightFunction{eta, spec}, FracOrder::from_target(eta, mu), z,
                                MittagLefflerBetaKernel{p, a}, cfg.policy),
             tol, "Fox-Wright image series vs operator quadrature")};
       },
       fw_valid});

  reg.push_back(
      {{"cor_fox_wright",
        "unit-index Fox-Wright image: series vs extended Wright function form", 1e-10, false,
        {{"eta", "mu", "a1", "A1", "b1", "B1", "z", "p"}},
        {point({{"eta", 1}, {"mu", 2}, {"a1", 0.5}, {"A1", 1}, {"b1", 1.5}, {"B1", 1}, {"z", 0.4},
                {"p", 0.3}}),
         point({{"eta", 1}, {"mu", 2}, {"a1", 1}, {"A1", 1}, {"b1", 1}, {"B1", 1}, {"z", 0.7},
                {"p", 0.5}}),
         point({{"eta", 0.6}, {"mu", 1.9}, {"a1", 1.5}, {"A1", 0.5}, {"b1", 2}, {"B1", 1.5},
                {"z", 1.1}, {"p", 1}})}},
       [](const ParamPoint& pt, double tol, const SuiteConfig& cfg) {
         const ClosedFormResult c =
             frac_deriv_fox_wright_closed(get(pt, "eta"), get(pt, "mu"), single_pair_spec(pt),
                                          get(pt, "z"), get(pt, "p"), 1.0, cfg.policy);
         return std::vector{compare("cor_fox_wright", pt, c.series, *c.corollary, tol,
                                    "series image vs extended Wright function form")};
       },
       [fw_valid](const ParamPoint& pt) {
         if (auto why = fw_valid(pt); !why.empty()) return why;
         return require(get(pt, "p") >= 0, "needs p >= 0");
       }});

  return reg;
}

const std::vector<Identity>& registry() {
  static const std::vector<Identity> reg = build_registry();
  return reg;
}

const Identity& lookup(const std::string& id) {
  for (const auto& e : registry()) {
    if (e.info.id == id) return e;
  }
  throw std::invalid_argument("unknown identity id: " + id);
}

std::string check_names(const IdentityInfo& info, const ParamPoint& pt) {
  for (const auto& names : info.param_sets) {
    if (names.size() != pt.size()) continue;
    bool all = true;
    for (const auto& n : names) all = all && has(pt, n);
    if (all) return {};
  }
  std::ostringstream os;
  os << "grid point for " << info.id << " must carry exactly the parameters";
  for (std::size_t i = 0; i < info.param_sets.size(); ++i) {
    os << (i == 0 ? " {" : " or {");
    for (std::size_t j = 0; j < info.param_sets[i].size(); ++j) {
      os << (j ? ", " : "") << info.param_sets[i][j];
    }
    os << "}";
  }
  return os.str();
}

}  // namespace

IdentityReport check_generating_linear(double lambda_exp, double beta_exp, double gamma_c,
                                       double z, double t, double p, double alpha, int n_terms,
                                       const EvalPolicy& policy, double tolerance) {
  const ParamPoint params{{"lambda", lambda_exp}, {"beta", beta_exp}, {"gamma", gamma_c},
                          {"z", z},           {"t", t},           {"p", p},
                          {"alpha", alpha},   {"N", n_terms}};
  const std::string id = "thm_4_1";
  if (!(gamma_c > beta_exp && beta_exp > 0.0) || !(std::abs(t) < 1.0) ||
      !(std::abs(z) < std::min(1.0, std::abs(1.0 - t))) || n_terms < 0) {
    return make_failed_report(id, params, tolerance,
                              "outside gamma > beta > 0, |t| < 1, |z| < min(1, |1-t|), N >= 0");
  }
  const double tol = std::max(tolerance, tail_scale(lambda_exp, n_terms, t));
  BetaSequence cache(beta_exp, gamma_c - beta_exp, MittagLefflerBetaKernel{p, alpha}, policy);
  double lhs = 0.0;
  double coef = 1.0;  // (lambda)_n t^n / n!
  for (int n = 0; n <= n_terms; ++n) {
    if (n > 0) coef *= (lambda_exp + n - 1.0) / n * t;
    const EvalResult f = ext_gauss_2f1({lambda_exp + n, beta_exp, gamma_c, p, alpha}, z,
                                       path_for(z), policy, &cache);
    if (!f.ok()) return make_failed_report(id, params, tol, describe_failure("lhs term", f));
    lhs += coef * f.value;
  }
  const double w = z / (1.0 - t);
  const EvalResult f =
      ext_gauss_2f1({lambda_exp, beta_exp, gamma_c, p, alpha}, w, path_for(w), policy, &cache);
  if (!f.ok()) return make_failed_report(id, params, tol, describe_failure("rhs", f));
  const double rhs = std::pow(1.0 - t, -lambda_exp) * f.value;
  std::ostringstream notes;
  notes << "linear generating relation truncated after N=" << n_terms
        << " terms; truncation scale " << tail_scale(lambda_exp, n_terms, t);
  return make_equality_report(id, params, lhs, rhs, tol, notes.str());
}

IdentityReport check_generating_bilinear(double lambda_exp, double delta_exp, double beta_exp,
                                         double gamma_c, double z, double t, double p,
                                         double alpha, int n_terms, BilinearCandidate candidate,
                                         BilinearLhs lhs_form, const EvalPolicy& policy,
                                         double tolerance) {
  const bool proof_form = lhs_form == BilinearLhs::ProofConsistent;
  const ParamPoint params{{"lambda", lambda_exp},
                          {"delta", delta_exp},
                          {"beta", beta_exp},
                          {"gamma", gamma_c},
                          {"z", z},
                          {"t", t},
                          {"p", p},
                          {"alpha", alpha},
                          {"N", n_terms},
                          {"candidate", candidate == BilinearCandidate::A ? 0.0 : 1.0},
                          {"lhs_form", proof_form ? 1.0 : 0.0}};
  const std::string id = "thm_4_2";
  std::string reading = candidate == BilinearCandidate::A
                            ? "candidate A: F1(lambda; delta, beta; gamma; z, -zt/(1-t))"
                            : "candidate B: F1(lambda; delta, beta; gamma; -zt/(1-t), -zt/(1-t))";
  reading += proof_form ? "; left side F(delta-n, lambda; gamma; z) as derived"
                        : "; left side F(delta-n, beta; gamma; z) as printed";
  const double b = proof_form ? lambda_exp : beta_exp;
  if (!(gamma_c > lambda_exp && lambda_exp > 0.0 && gamma_c > b && b > 0.0) ||
      !(std::abs(t) < 1.0) || !(std::abs(z) < 1.0 / (1.0 + std::abs(t))) || n_terms < 0) {
    return make_failed_report(id, params, tolerance,
                              reading + "; outside gamma > lambda > 0, |z| < 1/(1+|t|)");
  }
  const double tol = std::max(tolerance, tail_scale(beta_exp, n_terms, t));
  BetaSequence cache(b, gamma_c - b, MittagLefflerBetaKernel{p, alpha}, policy);
  double lhs = 0.0;
  double coef = 1.0;  // (beta)_n t^n / n!
  for (int n = 0; n <= n_terms; ++n) {
    if (n > 0) coef *= (beta_exp + n - 1.0) / n * t;
    const EvalResult f =
        ext_gauss_2f1({delta_exp - n, b, gamma_c, p, alpha}, z, path_for(z), policy, &cache);
    if (!f.ok()) return make_failed_report(id, params, tol, describe_failure("lhs term", f));
    lhs += coef * f.value;
  }
  const double y = -z * t / (1.0 - t);
  const double x = candidate == BilinearCandidate::A ? z : y;
  const EvalPath path = std::max(std::abs(x), std::abs(y)) < 0.95 ? EvalPath::Series
                                                                    : EvalPath::Integral;
  const EvalResult f1 = ext_appell_f1({lambda_exp, delta_exp, beta_exp, gamma_c, p, alpha}, x, y,
                                      path, policy);
  if (!f1.ok()) return make_failed_report(id, params, tol, describe_failure("rhs", f1));
  const double rhs = std::pow(1.0 - t, -beta_exp) * f1.value;
  return make_equality_report(id, params, lhs, rhs, tol, "bilinear generating relation, " + reading);
}

const std::vector<IdentityInfo>& identity_catalog() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> v;
    for (const auto& e : registry()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

std::vector<std::string> registered_identities() {
  std::vector<std::string> ids;
  for (const auto& e : registry()) ids.push_back(e.info.id);
  return ids;
}

std::vector<IdentityReport> run_identity_suite(const SuiteConfig& config) {
  config.policy.validate();
  if (config.truncation_order < 1) throw std::invalid_argument("truncation order must be >= 1");
  // validate everything before running anything
  for (const auto& id : config.ids) lookup(id);
  for (const auto& [id, tol] : config.tolerance_overrides) {
    lookup(id);
    if (!(tol > 0.0) || !std::isfinite(tol)) {
      throw std::invalid_argument("tolerance for " + id + " must be positive");
    }
  }
  for (const auto& [id, grid] : config.grid_overrides) {
    const Identity& e = lookup(id);
    for (const auto& pt : grid) {
      if (auto why = check_names(e.info, pt); !why.empty()) throw std::invalid_argument(why);
      if (auto why = e.validate(pt); !why.empty()) {
        throw std::invalid_argument("grid point for " + id + " out of domain: " + why);
      }
    }
  }

  std::vector<IdentityReport> out;
  for (const auto& id : config.ids) {
    const Identity& e = lookup(id);
    const auto tol_it = config.tolerance_overrides.find(id);
    const double tol = tol_it != config.tolerance_overrides.end() ? tol_it->second
                                                                   : e.info.default_tolerance;
    const auto grid_it = config.grid_overrides.find(id);
    const auto& grid = grid_it != config.grid_overrides.end() ? grid_it->second
                                                               : e.info.default_grid;
    for (const auto& pt : grid) {
      std::vector<IdentityReport> reports;
      try {
        reports = e.run(pt, tol, config);
      } catch (const std::exception& ex) {
        reports = {make_failed_report(id, pt, tol, std::string("evaluation threw: ") + ex.what())};
        reports.back().informational = e.info.informational;
      }
      for (auto& r : reports) {
        if (r.notes.empty()) r.notes = e.info.anchor;
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

SuiteSummary summarize(const std::vector<IdentityReport>& reports) {
  SuiteSummary s;
  for (const auto& r : reports) {
    ++s.total;
    if (r.pass) {
      ++s.passed;
    } else if (r.informational) {
      ++s.informational_failed;
    } else {
      ++s.failed;
    }
  }
  return s;
}

}  // namespace mlfrac
