#include "mlfrac/mittag_leffler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mlfrac/beta.hpp"
#include "mlfrac/gamma.hpp"
#include "mlfrac/quadrature.hpp"
#include "series_sum.hpp"

namespace mlfrac {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// x^{1/alpha} bounds of the regimes. Below kSeriesLimit the power series
// loses at most e^3 in cancellation; from kAsymptoticStart on the smallest
// asymptotic term is about e^{-30} relative.
constexpr double kSeriesLimit = 3.0;
constexpr double kAsymptoticStart = 30.0;

bool one_parameter(const PrabhakarParams& p) {
  return p.beta_idx == 1.0 && p.upper == 1.0;
}

}  // namespace

MittagLefflerKernel::MittagLefflerKernel(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    throw std::invalid_argument("Mittag-Leffler kernel needs 0 < alpha <= 2");
  }
  sin_api_ = std::sin(kPi * alpha);
  cos_api_ = std::cos(kPi * alpha);
  const auto n_series = static_cast<std::size_t>(std::ceil(60.0 / alpha)) + 10;
  series_coeff_.reserve(n_series);
  for (std::size_t n = 0; n < n_series; ++n) {
    series_coeff_.push_back(rgamma(alpha * static_cast<double>(n) + 1.0));
  }
  // enough terms to reach the smallest one up to x^{1/alpha} ~ 300
  const auto n_asym = std::min<std::size_t>(
      4000, static_cast<std::size_t>(std::ceil(300.0 / alpha)) + 2);
  asym_log_.reserve(n_asym);
  asym_sign_.reserve(n_asym);
  for (std::size_t k = 1; k <= n_asym; ++k) {
    const double arg = 1.0 - alpha * static_cast<double>(k);
    const detail::LogTerm t = detail::log_rgamma(arg);
    asym_log_.push_back(t.log_mag);
    asym_sign_.push_back(k % 2 == 1 ? t.sign : -t.sign);
  }
}

double MittagLefflerKernel::operator()(double x) const { return evaluate(x, kInf).value; }

MittagLefflerKernel::Detail MittagLefflerKernel::evaluate(double x, double asymptotic_from) const {
  if (x == 0.0) return {1.0, 0.0, Regime::Exact, 0};
  if (x == kInf) return {0.0, 0.0, Regime::Exact, 0};
  if (alpha_ == 1.0) return {std::exp(-x), 0.0, Regime::Exact, 0};
  if (alpha_ == 2.0) return {std::cos(std::sqrt(x)), 0.0, Regime::Exact, 0};
  const double scale = std::pow(x, 1.0 / alpha_);
  if (scale <= kSeriesLimit) return series(x);
  if (scale >= kAsymptoticStart || x >= asymptotic_from) {
    Detail a = asymptotic(x);
    if (x >= asymptotic_from || a.err_estimate <= 3.0 * detail::kEps * std::abs(a.value)) return a;
  }
  return integral(x);
}

MittagLefflerKernel::Detail MittagLefflerKernel::series(double x) const {
  double sum = 0.0;
  double abs_sum = 0.0;
  double power = 1.0;
  double last = 0.0;
  std::size_t n = 0;
  for (; n < series_coeff_.size(); ++n) {
    const double t = power * series_coeff_[n];
    sum += t;
    abs_sum += std::abs(t);
    last = std::abs(t);
    if (n > 2 && last < 1e-17 * abs_sum) break;
    power *= -x;
  }
  return {sum, last + 4.0 * detail::kEps * abs_sum, Regime::Series, n + 1};
}

MittagLefflerKernel::Detail MittagLefflerKernel::asymptotic(double x) const {
  const double lx = std::log(x);
  double sum = 0.0;
  double prev = kInf;
  double omitted = kInf;
  std::size_t k = 0;
  for (; k < asym_log_.size(); ++k) {
    if (asym_sign_[k] == 0) continue;  // pole of Γ(1 - alpha k): zero coefficient
    const double mag = std::exp(asym_log_[k] - static_cast<double>(k + 1) * lx);
    if (mag > prev) {
      omitted = mag;
      break;
    }
    prev = mag;
    sum += asym_sign_[k] * mag;
    if (mag < 1e-18 * std::abs(sum)) {
      omitted = mag;
      break;
    }
  }
  if (k == asym_log_.size()) omitted = prev;
  if (alpha_ > 1.0) sum += oscillatory(x);
  return {sum, omitted + 2.0 * detail::kEps * std::abs(sum), Regime::Asymptotic, k};
}

double MittagLefflerKernel::oscillatory(double x) const {
  if (alpha_ <= 1.0) return 0.0;
  const double r = std::pow(x, 1.0 / alpha_);
  return 2.0 / alpha_ * std::exp(r * std::cos(kPi / alpha_)) * std::cos(r * std::sin(kPi / alpha_));
}

MittagLefflerKernel::Detail MittagLefflerKernel::integral(double x) const {
  const double a = alpha_;
  const double c = cos_api_;
  const double xs = x * sin_api_;
  // (w^a + x c)^2 + (x s)^2 rather than the expanded form, which turns into
  // inf - inf for large w when c < 0
  auto f = [x, a, c, xs](double w, double) {
    const double e = std::exp(-w);
    if (e == 0.0) return 0.0;
    const double shifted = std::pow(w, a) + x * c;
    return e * x / (shifted * shifted + xs * xs);
  };
  QuadSpec spec;
  spec.domain = Domain::HalfLine;
  spec.left_exponent = a - 1.0;
  spec.right_exponent = a - 1.0;
  spec.right_decay = kInf;
  if (c < 0.0) {
    // the denominator dips where w^alpha = -x cos(alpha pi)
    const double peak = std::pow(-x * c, 1.0 / a);
    spec.split = peak / (1.0 + peak);
  }
  EvalPolicy pol;
  pol.rel_tol = 1e-14;
  pol.max_quad_levels = 10;
  const EvalResult q = quad_weighted(f, spec, pol);
  const double value = sin_api_ / kPi * q.value + oscillatory(x);
  return {value, std::abs(sin_api_ / kPi) * q.err_estimate + 2.0 * detail::kEps * std::abs(value),
          Regime::Integral, q.nodes_used};
}

EvalResult ml_prabhakar(const PrabhakarParams& params, double z, const EvalPolicy& policy) {
  policy.validate();
  if (!(params.rho > 0.0)) return EvalResult::domain_error("rho must be positive");
  if (!std::isfinite(z) || !std::isfinite(params.beta_idx) || !std::isfinite(params.upper)) {
    return EvalResult::domain_error("arguments must be finite");
  }
  if (z == 0.0) return EvalResult::exact(rgamma(params.beta_idx));
  if (params.rho == 1.0 && one_parameter(params)) return EvalResult::exact(std::exp(z));

  if (one_parameter(params) && z < 0.0 && params.rho <= 2.0) {
    const MittagLefflerKernel kernel(params.rho);
    const double x = -z;
    MittagLefflerKernel::Detail d{};
    bool asym = false;
    if (x > policy.asym_threshold && params.rho < 1.0) {
      d = kernel.asymptotic(x);
      asym = true;
    } else {
      d = kernel.evaluate(x, kInf);
    }
    EvalResult r;
    r.value = d.value;
    r.err_estimate = d.err_estimate;
    if (d.regime == MittagLefflerKernel::Regime::Integral) {
      r.nodes_used = d.work;
    } else {
      r.terms_used = d.work;
    }
    if (asym) {
      r.status = Status::AsymptoticUsed;
      r.note = "algebraic asymptotic expansion";
      if (r.err_estimate > policy.tolerance_for(r.value)) {
        r.status = Status::Truncated;
        r.note = "asymptotic expansion above tolerance at this argument";
      }
      return r;
    }
    settle(r, policy);
    return r;
  }

  if (std::abs(z) > policy.asym_threshold) {
    return EvalResult::domain_error(
        "series restricted to |z| <= asym_threshold outside the one-parameter negative axis");
  }
  const double lz = std::log(std::abs(z));
  const int zsign = z < 0.0 ? -1 : 1;
  const PrabhakarParams pp = params;
  auto term = [&](std::size_t n) {
    const double dn = static_cast<double>(n);
    detail::LogTerm t = detail::log_pochhammer(pp.upper, n) *
                        detail::log_rgamma(pp.rho * dn + pp.beta_idx) /
                        detail::log_gamma_term(dn + 1.0);
    if (t.sign == 0) return 0.0;
    t.log_mag += dn * lz;
    if (n % 2 == 1 && zsign < 0) t.sign = -t.sign;
    return t.value();
  };
  // ratio of consecutive terms ~ |upper + n| |z| / (n (rho n)^rho)
  const std::size_t n0 = std::max(
      detail::ratio_onset(std::abs(z), std::pow(params.rho, params.rho / (1.0 + params.rho)),
                          1.0 + params.rho),
      static_cast<std::size_t>(std::max(0.0, std::ceil(std::abs(params.upper)))));
  return detail::sum_series(term, n0, policy);
}

EvalResult ml_multi_index_beta(double s1, double s2, double alpha, double p,
                               const EvalPolicy& policy) {
  policy.validate();
  if (!(alpha > 0.0)) return EvalResult::domain_error("alpha must be positive");
  if (!(p >= 0.0) || !std::isfinite(p)) return EvalResult::domain_error("p must be >= 0");
  const double s = s1 + s2;
  if (s1 == std::round(s1) || s2 == std::round(s2) || s == std::round(s)) {
    return EvalResult::domain_error("sigma1, sigma2 and their sum must not be integers");
  }
  auto term = [&](std::size_t n) {
    const double dn = static_cast<double>(n);
    detail::LogTerm t = detail::log_gamma_term(2.0 * dn + 1.0 - s) *
                        detail::log_rgamma(alpha * dn + 1.0) *
                        detail::log_rgamma(dn + 1.0 - s1) * detail::log_rgamma(dn + 1.0 - s2);
    if (t.sign == 0) return 0.0;
    if (n > 0) {
      if (p == 0.0) return 0.0;
      t.log_mag += dn * std::log(p);
      if (n % 2 == 1) t.sign = -t.sign;
    }
    return t.value();
  };
  // term ratio -> 4 p / (alpha n)^alpha
  const std::size_t n0 = detail::ratio_onset(4.0 * p, alpha, alpha) +
                         static_cast<std::size_t>(std::ceil(std::abs(s1) + std::abs(s2)));
  return detail::sum_series(term, n0, policy);
}

EvalResult ml_p_extended(const PMittagLefflerParams& q, double z, const EvalPolicy& policy) {
  policy.validate();
  if (!(q.lambda_exp > 0.0 && q.rho > 0.0 && q.beta_idx > 0.0 && q.upper > 0.0 && q.eta > 0.0 &&
        q.omega > 0.0)) {
    return EvalResult::domain_error("lambda, rho, beta, upper, eta, omega must all be positive");
  }
  if (!(q.omega > q.eta)) return EvalResult::domain_error("omega must exceed eta");
  if (!(q.p >= 0.0) || !std::isfinite(q.p) || !std::isfinite(z)) {
    return EvalResult::domain_error("p must be finite and >= 0");
  }
  BetaSequence seq(q.eta, q.omega - q.eta, ChaudhryKernel{q.p}, policy);
  const double lz = z == 0.0 ? 0.0 : std::log(std::abs(z));
  double beta_err = 0.0;  // Σ |term| * relative error of its Beta value
  EvalResult sub;
  auto term = [&](std::size_t k) {
    const EvalResult& b = seq.at(k);
    absorb(sub, b);
    if (!b.ok()) return std::numeric_limits<double>::quiet_NaN();
    if (k > 0 && z == 0.0) return 0.0;
    const double dk = static_cast<double>(k);
    // only the reciprocal Gamma is raised to lambda; all parameters are
    // positive so it has no sign
    const detail::LogTerm poch = detail::log_pochhammer(q.upper, k);
    const double rg = -std::lgamma(q.rho * dk + q.beta_idx);
    const double lm = poch.log_mag + q.lambda_exp * rg - std::lgamma(dk + 1.0) + dk * lz;
    const double sign = (z < 0.0 && k % 2 == 1) ? -1.0 : 1.0;
    const double t = sign * std::exp(lm) * seq.ratio(k);
    if (b.value != 0.0) beta_err += std::abs(t) * b.err_estimate / std::abs(b.value);
    return t;
  };
  const std::size_t n0 = detail::ratio_onset(std::abs(z) * std::max(1.0, q.upper), 1.0, 1.0);
  EvalResult r = detail::sum_series(term, n0, policy);
  if (!sub.ok()) {
    EvalResult e = EvalResult::domain_error(sub.note.empty() ? "Beta value failed" : sub.note);
    e.terms_used = r.terms_used;
    e.nodes_used = sub.nodes_used;
    return e;
  }
  r.nodes_used += sub.nodes_used;
  if (r.ok()) {
    const Status series_status = r.status;
    r.err_estimate += beta_err;
    settle(r, policy);
    r.status = worst(r.status, worst(series_status, sub.status));
    if (r.status == Status::Truncated && r.note.empty()) r.note = "Beta values not fully converged";
  }
  return r;
}

}  // namespace mlfrac
