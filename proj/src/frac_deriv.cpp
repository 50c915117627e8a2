#include "mlfrac/frac_deriv.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "mlfrac/gamma.hpp"
#include "mlfrac/quadrature.hpp"
#include "fox_wright_terms.hpp"
#include "series_sum.hpp"

namespace mlfrac {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

using UnitFn = std::function<double(double u, double uc)>;

struct PreparedKernel {
  UnitFn k;
  double left_decay = 0.0;
  double right_decay = 0.0;
  std::string error;
};

PreparedKernel prepare_kernel(const KernelSpec& spec, const EvalPolicy& policy) {
  return std::visit(
      overloaded{
          [&](const ConfluentPairKernel& c) {
            PreparedKernel out;
            if (!(c.p >= 0.0 && c.q >= 0.0) || !std::isfinite(c.p) || !std::isfinite(c.q)) {
              out.error = "p and q must be >= 0";
              return out;
            }
            if (is_nonpositive_integer(c.rho)) {
              out.error = "rho must not be a nonpositive integer";
              return out;
            }
            // 1F1(l; r; -x) ~ x^{-l}; exponential when l = r
            const double d = c.lambda == c.rho ? kInf : std::max(0.0, c.lambda);
            out.left_decay = c.p > 0.0 ? d : 0.0;
            out.right_decay = c.q > 0.0 ? d : 0.0;
            out.k = [c, policy](double u, double uc) {
              double v = 1.0;
              if (c.p > 0.0) v *= kummer_1f1(c.lambda, c.rho, -c.p / u, policy).value;
              if (c.q > 0.0 && v != 0.0) v *= kummer_1f1(c.lambda, c.rho, -c.q / uc, policy).value;
              return v;
            };
            return out;
          },
          [&](const auto& beta_kernel) {
            PreparedKernel out;
            const BetaKernelSpec b = beta_kernel;
            out.error = check_kernel(b);
            if (!out.error.empty()) return out;
            std::tie(out.left_decay, out.right_decay) = kernel_decay(b);
            if (is_trivial(b)) {
              out.k = [](double, double) { return 1.0; };
            } else {
              out.k = make_kernel(b);
            }
            return out;
          },
      },
      spec);
}

// f(z u) = scale * u^{left} * smooth(u)
struct PreparedFunction {
  double left = 0.0;
  double scale = 1.0;
  UnitFn smooth;
  std::string error;
};

PreparedFunction prepare_function(const FunctionSpec& spec, double z, const EvalPolicy& policy) {
  return std::visit(
      overloaded{
          [&](const Monomial& m) {
            PreparedFunction out;
            if (!(m.eta > -1.0)) out.error = "monomial needs eta > -1";
            out.left = m.eta;
            out.scale = std::pow(z, m.eta);
            out.smooth = [](double, double) { return 1.0; };
            return out;
          },
          [&](const Binomial& b) {
            PreparedFunction out;
            if (!(b.eta > 0.0)) out.error = "binomial needs eta > 0";
            if (!(z < 1.0)) out.error = "binomial needs 0 < z < 1";
            out.left = b.eta - 1.0;
            out.scale = std::pow(z, b.eta - 1.0);
            const double be = b.beta_exp;
            out.smooth = [z, be](double u, double uc) {
              return be == 0.0 ? 1.0 : std::pow(uc + u * (1.0 - z), -be);
            };
            return out;
          },
          [&](const DoubleBinomial& d) {
            PreparedFunction out;
            if (!(d.eta > 0.0)) out.error = "double binomial needs eta > 0";
            if (!(std::abs(d.a * z) < 1.0 && std::abs(d.b * z) < 1.0)) {
              out.error = "double binomial needs |a z|, |b z| < 1";
            }
            out.left = d.eta - 1.0;
            out.scale = std::pow(z, d.eta - 1.0);
            out.smooth = [d, z](double u, double) {
              const double fa = d.exp_a == 0.0 ? 1.0 : std::pow(1.0 - d.a * z * u, -d.exp_a);
              const double fb = d.exp_b == 0.0 ? 1.0 : std::pow(1.0 - d.b * z * u, -d.exp_b);
              return fa * fb;
            };
            return out;
          },
          [&](const PowerSeries& s) {
            PreparedFunction out;
            if (s.coeffs.empty()) out.error = "power series needs at least one coefficient";
            const std::vector<double> c = s.coeffs;
            out.smooth = [c, z](double u, double) {
              double acc = 0.0;
              for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * (z * u) + *it;
              return acc;
            };
            return out;
          },
          [&](const PrabhakarFunction& f) {
            PreparedFunction out;
            if (!(f.eta > 0.0)) out.error = "eta must be positive";
            if (!(f.ml.rho > 0.0)) out.error = "rho must be positive";
            out.left = f.eta - 1.0;
            out.scale = std::pow(z, f.eta - 1.0);
            const PrabhakarParams ml = f.ml;
            out.smooth = [ml, z, policy](double u, double) {
              const EvalResult e = ml_prabhakar(ml, z * u, policy);
              return e.ok() ? e.value : kNaN;
            };
            return out;
          },
          [&](const FoxWrightFunction& f) {
            PreparedFunction out;
            if (!(f.eta > 0.0)) out.error = "eta must be positive";
            if (auto why = check_fox_wright(f.spec); !why.empty()) out.error = why;
            out.left = f.eta - 1.0;
            out.scale = std::pow(z, f.eta - 1.0);
            const FoxWrightSpec spec = f.spec;
            out.smooth = [spec, z, policy](double u, double) {
              const EvalResult e = fox_wright(spec, z * u, policy);
              return e.ok() ? e.value : kNaN;
            };
            return out;
          },
      },
      spec);
}

std::string check_order(FracOrder order, double z) {
  if (!(order.mu < 0.0) || !std::isfinite(order.mu)) return "order mu must be negative";
  if (!(z > 0.0) || !std::isfinite(z)) return "z must be positive";
  return {};
}

std::string check_target(double eta, double mu_target, double z) {
  if (!(mu_target > eta && eta > 0.0)) return "needs mu > eta > 0";
  if (!(z > 0.0) || !std::isfinite(z)) return "z must be positive";
  return {};
}

// z^{mu-1}/Γ(mu-eta) Σ_n c_n B_p^alpha(eta+n, mu-eta) z^n, c_n in log form.
template <class CoefFn>
EvalResult beta_image_series(double eta, double mu_target, double z, double p, double alpha,
                             CoefFn&& coef, std::size_t n0, const EvalPolicy& policy) {
  BetaSequence seq(eta, mu_target - eta, MittagLefflerBetaKernel{p, alpha}, policy);
  EvalResult sub;
  double beta_err = 0.0;
  const double lz = std::log(z);
  auto term = [&](std::size_t n) {
    const EvalResult& b = seq.at(n);
    absorb(sub, b);
    if (!b.ok()) return kNaN;
    detail::LogTerm t = coef(n) * detail::log_of(b.value);
    if (t.sign == 0) return 0.0;
    t.log_mag += static_cast<double>(n) * lz;
    const double v = t.value();
    if (b.value != 0.0) beta_err += std::abs(v) * b.err_estimate / std::abs(b.value);
    return v;
  };
  EvalResult r = detail::sum_series(term, n0, policy);
  if (!sub.ok()) return EvalResult::domain_error(sub.note);
  r.nodes_used += sub.nodes_used;
  if (!r.ok()) return r;
  const Status before = r.status;
  r.err_estimate += beta_err;
  const double pre = std::pow(z, mu_target - 1.0) * rgamma(mu_target - eta);
  r.value *= pre;
  r.err_estimate *= std::abs(pre);
  settle(r, policy);
  r.status = worst(r.status, worst(before, sub.status));
  return r;
}

void attach_corollary(ClosedFormResult& out, EvalResult corollary) {
  if (out.series.ok() && corollary.ok() && corollary.value != 0.0) {
    out.rel_diff = std::abs(out.series.value - corollary.value) / std::abs(corollary.value);
  }
  out.corollary = std::move(corollary);
}

}  // namespace

EvalResult frac_deriv_numeric(const FunctionSpec& f, FracOrder order, double z,
                              const KernelSpec& kernel, const EvalPolicy& policy) {
  policy.validate();
  if (auto why = check_order(order, z); !why.empty()) return EvalResult::domain_error(why);
  PreparedKernel k = prepare_kernel(kernel, policy);
  if (!k.error.empty()) return EvalResult::domain_error(k.error);
  PreparedFunction fn = prepare_function(f, z, policy);
  if (!fn.error.empty()) return EvalResult::domain_error(fn.error);

  QuadSpec spec;
  spec.left_exponent = fn.left;
  spec.right_exponent = -order.mu - 1.0;
  spec.left_decay = k.left_decay;
  spec.right_decay = k.right_decay;
  EvalResult r = quad_weighted(
      [&](double u, double uc) {
        const double kv = k.k(u, uc);
        return kv == 0.0 ? 0.0 : kv * fn.smooth(u, uc);
      },
      spec, policy);
  if (!r.ok()) return r;
  const double pre = fn.scale * std::pow(z, -order.mu) * rgamma(-order.mu);
  r.value *= pre;
  r.err_estimate *= std::abs(pre);
  return r;
}

EvalResult frac_deriv_power_closed(double eta, FracOrder order, double z, double p, double alpha,
                                   const EvalPolicy& policy) {
  policy.validate();
  if (auto why = check_order(order, z); !why.empty()) return EvalResult::domain_error(why);
  if (!(eta > -1.0)) return EvalResult::domain_error("eta must exceed -1");
  EvalResult r = beta_extended({eta + 1.0, -order.mu}, MittagLefflerBetaKernel{p, alpha}, policy);
  if (!r.ok()) return r;
  const double pre = rgamma(-order.mu) * std::pow(z, eta - order.mu);
  r.value *= pre;
  r.err_estimate *= std::abs(pre);
  return r;
}

EvalResult frac_deriv_series(std::span<const double> coeffs, FracOrder order, double z, double p,
                             double alpha, const EvalPolicy& policy) {
  policy.validate();
  if (auto why = check_order(order, z); !why.empty()) return EvalResult::domain_error(why);
  if (coeffs.empty()) return EvalResult::domain_error("no coefficients");
  EvalResult out;
  out.value = 0.0;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (coeffs[n] == 0.0) continue;
    const EvalResult t = frac_deriv_power_closed(static_cast<double>(n), order, z, p, alpha, policy);
    absorb(out, t);
    if (!t.ok()) return EvalResult::domain_error(t.note);
    out.value += coeffs[n] * t.value;
    out.err_estimate += std::abs(coeffs[n]) * t.err_estimate;
  }
  return out;
}

EvalResult frac_deriv_binomial_closed(double eta, double mu_target, double beta_exp, double z,
                                      double p, double alpha, const EvalPolicy& policy) {
  policy.validate();
  if (auto why = check_target(eta, mu_target, z); !why.empty()) {
    return EvalResult::domain_error(why);
  }
  if (!(z < 1.0)) return EvalResult::domain_error("needs 0 < z < 1");
  const EvalPath path = z < 0.95 ? EvalPath::Series : EvalPath::Integral;
  EvalResult r = ext_gauss_2f1({beta_exp, eta, mu_target, p, alpha}, z, path, policy);
  if (!r.ok()) return r;
  const double pre = std::exp(std::lgamma(eta) - std::lgamma(mu_target)) * std::pow(z, mu_target - 1.0);
  r.value *= pre;
  r.err_estimate *= pre;
  return r;
}

EvalResult frac_deriv_double_binomial_closed(double eta, double mu_target, double a,
                                             double exp_a, double b, double exp_b, double z,
                                             double p, double alpha, const EvalPolicy& policy) {
  policy.validate();
  if (auto why = check_target(eta, mu_target, z); !why.empty()) {
    return EvalResult::domain_error(why);
  }
  if (!(std::abs(a * z) < 1.0 && std::abs(b * z) < 1.0)) {
    return EvalResult::domain_error("needs |a z|, |b z| < 1");
  }
  const EvalPath path =
      std::max(std::abs(a * z), std::abs(b * z)) < 0.95 ? EvalPath::Series : EvalPath::Integral;
  EvalResult r =
      ext_appell_f1({eta, exp_a, exp_b, mu_target, p, alpha}, a * z, b * z, path, policy);
  if (!r.ok()) return r;
  const double pre = std::exp(std::lgamma(eta) - std::lgamma(mu_target)) * std::pow(z, mu_target - 1.0);
  r.value *= pre;
  r.err_estimate *= pre;
  return r;
}

ClosedFormResult frac_deriv_prabhakar_closed(double eta, double mu_target,
                                             const PrabhakarParams& ml, double z, double p,
                                             double alpha, const EvalPolicy& policy) {
  policy.validate();
  ClosedFormResult out;
  if (auto why = check_target(eta, mu_target, z); !why.empty()) {
    out.series = EvalResult::domain_error(why);
    return out;
  }
  if (!(ml.rho > 0.0)) {
    out.series = EvalResult::domain_error("rho must be positive");
    return out;
  }
  auto coef = [&](std::size_t n) {
    const double dn = static_cast<double>(n);
    return detail::log_pochhammer(ml.upper, n) * detail::log_rgamma(ml.rho * dn + ml.beta_idx) /
           detail::log_gamma_term(dn + 1.0);
  };
  const std::size_t n0 = detail::ratio_onset(z * std::max(1.0, std::abs(ml.upper)), 1.0, 1.0) +
                         static_cast<std::size_t>(std::ceil(std::abs(ml.upper)));
  out.series = beta_image_series(eta, mu_target, z, p, alpha, coef, n0, policy);
  if (alpha == 1.0) {
    PMittagLefflerParams q;
    q.lambda_exp = 1.0;
    q.rho = ml.rho;
    q.beta_idx = ml.beta_idx;
    q.upper = ml.upper;
    q.eta = eta;
    q.omega = mu_target;
    q.p = p;
    EvalResult c = ml_p_extended(q, z, policy);
    if (c.ok()) {
      const double pre = std::pow(z, mu_target - 1.0) *
                         std::exp(std::lgamma(eta) - std::lgamma(mu_target));
      c.value *= pre;
      c.err_estimate *= pre;
    }
    attach_corollary(out, std::move(c));
  }
  return out;
}

ClosedFormResult frac_deriv_fox_wright_closed(double eta, double mu_target,
                                              const FoxWrightSpec& spec, double z, double p,
                                              double alpha, const EvalPolicy& policy) {
  policy.validate();
  ClosedFormResult out;
  if (auto why = check_target(eta, mu_target, z); !why.empty()) {
    out.series = EvalResult::domain_error(why);
    return out;
  }
  if (auto why = check_fox_wright(spec); !why.empty()) {
    out.series = EvalResult::domain_error(why);
    return out;
  }
  if (auto why = detail::upper_pole(spec, policy.max_terms); !why.empty()) {
    out.series = EvalResult::domain_error(why);
    return out;
  }
  auto coef = [&](std::size_t n) { return detail::fox_wright_coefficient(spec, n); };
  FoxWrightSpec widened = spec;
  widened.upper.push_back({eta, 1.0});
  widened.lower.push_back({mu_target, 1.0});
  out.series = beta_image_series(eta, mu_target, z, p, alpha, coef,
                                 detail::fox_wright_onset(widened, z), policy);
  if (alpha == 1.0) {
    FoxWrightSpec ext = spec;
    ext.extension = FoxWrightExtension{eta, mu_target, p};
    EvalResult c = ext_fox_wright(ext, z, policy);
    if (c.ok()) {
      const double pre = std::pow(z, mu_target - 1.0);
      c.value *= pre;
      c.err_estimate *= pre;
    }
    attach_corollary(out, std::move(c));
  }
  return out;
}

}  // namespace mlfrac
