#include "mlfrac/mellin.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mlfrac/beta.hpp"
#include "mlfrac/frac_deriv.hpp"
#include "mlfrac/gamma.hpp"
#include "mlfrac/hypergeom.hpp"
#include "mlfrac/mittag_leffler.hpp"
#include "mlfrac/quadrature.hpp"
#include "series_sum.hpp"

namespace mlfrac {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

void compare(MellinResult& m) {
  if (m.numeric && m.closed.ok() && m.numeric->ok() && m.closed.value != 0.0) {
    m.rel_diff = std::abs(m.numeric->value - m.closed.value) / std::abs(m.closed.value);
  }
}

std::string check_request(const MellinRequest& q) {
  if (!(q.r > 0.0 && q.r < 1.0)) return "r must lie in (0, 1)";
  if (!(q.eta > -1.0)) return "eta must exceed -1";
  if (!(q.mu < 0.0)) return "mu must be negative";
  if (!(q.alpha > 0.0 && q.alpha <= 2.0)) return "alpha must lie in (0, 2]";
  if (!(q.z > 0.0) || !std::isfinite(q.z)) return "z must be positive";
  if (is_nonpositive_integer(1.0 - q.r * q.alpha)) return "1 - r alpha is a Gamma pole";
  return {};
}

// π/sin(πr) / (Γ(-mu) Γ(1 - r alpha))
double mellin_prefactor(const MellinRequest& q) {
  return kPi / std::sin(kPi * q.r) * rgamma(-q.mu) * rgamma(1.0 - q.r * q.alpha);
}

EvalResult power_closed(const MellinRequest& q) {
  const double v = mellin_prefactor(q) * std::pow(q.z, q.eta - q.mu) *
                   beta(q.eta + q.r + 1.0, q.r - q.mu);
  EvalResult r = EvalResult::exact(v);
  r.err_estimate = 8.0 * detail::kEps * std::abs(v);
  return r;
}

}  // namespace

MellinResult mellin_ml_moment(double r, double alpha, double gamma_idx, double delta_idx, double w,
                              MellinMode mode, const EvalPolicy& policy) {
  policy.validate();
  MellinResult out;
  if (!(r > 0.0 && r < delta_idx)) {
    out.closed = EvalResult::domain_error("needs 0 < r < delta");
    return out;
  }
  if (!(alpha > 0.0) || !(w > 0.0) || !std::isfinite(w)) {
    out.closed = EvalResult::domain_error("alpha and w must be positive");
    return out;
  }
  if (is_nonpositive_integer(gamma_idx - r * alpha)) {
    out.closed = EvalResult::domain_error("gamma - r alpha is a Gamma pole");
    return out;
  }
  const double v = std::exp(std::lgamma(r) + std::lgamma(delta_idx - r) - std::lgamma(delta_idx) -
                            r * std::log(w)) *
                   rgamma(gamma_idx - r * alpha);
  out.closed = EvalResult::exact(v);
  out.closed.err_estimate = 8.0 * detail::kEps * std::abs(v);
  if (mode == MellinMode::ClosedForm) return out;

  if (!(gamma_idx == 1.0 && delta_idx == 1.0 && alpha <= 1.0)) {
    out.numeric = EvalResult::domain_error(
        "numeric check is available for gamma = delta = 1 and alpha <= 1 only");
    return out;
  }
  const MittagLefflerKernel kernel(alpha);
  // weight v^{r-1} (1+v)^{-1}; E_alpha(-w v) (1+v) stays bounded for alpha < 1
  QuadSpec spec;
  spec.domain = Domain::HalfLine;
  spec.left_exponent = r - 1.0;
  spec.right_exponent = r - 2.0;
  spec.right_decay = alpha == 1.0 ? kInf : 0.0;
  out.numeric = quad_weighted(
      [&kernel, w](double x, double) {
        const double e = kernel(w * x);
        return e == 0.0 ? 0.0 : e * (1.0 + x);
      },
      spec, policy);
  compare(out);
  return out;
}

MellinResult mellin_frac_power(const MellinRequest& q, const EvalPolicy& policy) {
  policy.validate();
  MellinResult out;
  if (auto why = check_request(q); !why.empty()) {
    out.closed = EvalResult::domain_error(why);
    return out;
  }
  out.closed = power_closed(q);
  if (q.mode == MellinMode::ClosedForm) return out;

  // inner operator values to ~1e-10, outer level budget two below the cap
  EvalPolicy inner = policy;
  inner.rel_tol = std::max(policy.rel_tol, 1e-11);
  EvalPolicy outer = policy;
  outer.rel_tol = std::max(policy.rel_tol, 1e-9);
  outer.max_quad_levels = std::max(1, policy.max_quad_levels - 2);
  EvalResult failure;
  bool failed = false;
  const double order = q.mu;
  // D(p) ~ 1/p for alpha != 1, so weight p^{r-1}(1+p)^{-1}
  QuadSpec spec;
  spec.domain = Domain::HalfLine;
  spec.left_exponent = q.r - 1.0;
  spec.right_exponent = q.r - 2.0;
  spec.right_decay = q.alpha == 1.0 ? kInf : 0.0;
  EvalResult num = quad_weighted(
      [&](double p, double) {
        const EvalResult d = frac_deriv_numeric(Monomial{q.eta}, {order}, q.z,
                                                MittagLefflerBetaKernel{p, q.alpha}, inner);
        absorb(failure, d);
        if (!d.ok()) {
          failed = true;
          return std::numeric_limits<double>::quiet_NaN();
        }
        return d.value * (1.0 + p);
      },
      spec, outer);
  num.terms_used += failure.terms_used;
  num.nodes_used += failure.nodes_used;
  if (failed) {
    num = EvalResult::domain_error("inner operator evaluation failed: " + failure.note);
  } else if (num.ok() && failure.status == Status::Truncated) {
    num.status = Status::Truncated;
    num.note = "some inner evaluations did not converge";
  }
  out.numeric = num;
  compare(out);
  return out;
}

MellinResult mellin_frac_binomial(const MellinRequest& q, const EvalPolicy& policy) {
  policy.validate();
  MellinResult out;
  MellinRequest base = q;
  base.eta = 0.0;
  if (auto why = check_request(base); !why.empty()) {
    out.closed = EvalResult::domain_error(why);
    return out;
  }
  if (!(q.z < 1.0)) {
    out.closed = EvalResult::domain_error("needs 0 < z < 1");
    return out;
  }
  const double pre = std::pow(q.z, -q.mu) * mellin_prefactor(q) * beta(1.0 + q.r, q.r - q.mu);
  const EvalPath path = q.z < 0.95 ? EvalPath::Series : EvalPath::Integral;
  EvalResult f = gauss_2f1(q.lambda_exp, q.r + 1.0, 1.0 - q.mu + 2.0 * q.r, q.z, path, policy);
  if (f.ok()) {
    f.value *= pre;
    f.err_estimate *= std::abs(pre);
  }
  out.closed = f;
  if (q.mode == MellinMode::ClosedForm) return out;

  // Σ (lambda)_n / n! times the power transform at eta = n
  double coef = 1.0;
  auto term = [&](std::size_t n) {
    if (n > 0) {
      const double dn = static_cast<double>(n);
      coef *= (q.lambda_exp + dn - 1.0) / dn;
    }
    MellinRequest qn = q;
    qn.eta = static_cast<double>(n);
    return coef * power_closed(qn).value;
  };
  const std::size_t n0 = static_cast<std::size_t>(std::ceil(std::abs(q.lambda_exp))) + 2;
  EvalPolicy tight = policy;
  tight.rel_tol = policy.rel_tol * (1.0 - q.z);
  EvalResult s = detail::sum_series(term, n0, tight);
  if (s.ok()) {
    s.err_estimate /= (1.0 - q.z);
    settle(s, policy);
  }
  out.numeric = s;
  compare(out);
  return out;
}

}  // namespace mlfrac
