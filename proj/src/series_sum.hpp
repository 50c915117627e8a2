#pragma once

// Shared summation loop for power-type series whose terms are formed in
// log space (magnitude and sign), so that huge Gamma ratios neither overflow
// nor underflow before they are combined.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "mlfrac/gamma.hpp"
#include "mlfrac/policy.hpp"

namespace mlfrac::detail {

struct LogTerm {
  double log_mag = -std::numeric_limits<double>::infinity();
  int sign = 0;  // 0 marks an exactly vanishing term

  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_mag); }
};

inline LogTerm operator*(LogTerm a, LogTerm b) {
  if (a.sign == 0 || b.sign == 0) return {};
  return {a.log_mag + b.log_mag, a.sign * b.sign};
}

inline LogTerm operator/(LogTerm a, LogTerm b) {
  // b must not vanish
  if (a.sign == 0) return {};
  return {a.log_mag - b.log_mag, a.sign * b.sign};
}

inline LogTerm log_of(double v) {
  if (v == 0.0) return {};
  return {std::log(std::abs(v)), v > 0 ? 1 : -1};
}

inline LogTerm log_gamma_term(double x) {
  const LogGamma g = log_gamma(x);
  return {g.value, g.sign};
}

/// 1/Γ(x), zero at the poles.
inline LogTerm log_rgamma(double x) {
  if (is_nonpositive_integer(x)) return {};
  const LogGamma g = log_gamma(x);
  return {-g.value, g.sign};
}

/// (a)_n; a direct product while it stays representable.
inline LogTerm log_pochhammer(double a, std::size_t n) {
  if (n == 0) return {0.0, 1};
  if (is_nonpositive_integer(a)) {
    if (static_cast<double>(n) > -a) return {};
    LogTerm acc{0.0, 1};
    for (std::size_t i = 0; i < n; ++i) acc = acc * log_of(a + static_cast<double>(i));
    return acc;
  }
  if (n <= 64) {
    double prod = 1.0;
    for (std::size_t i = 0; i < n; ++i) prod *= a + static_cast<double>(i);
    if (std::isfinite(prod) && prod != 0.0) return log_of(prod);
  }
  const LogGamma hi = log_gamma(a + static_cast<double>(n));
  const LogGamma lo = log_gamma(a);
  return {hi.value - lo.value, hi.sign * lo.sign};
}

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

/// Sums term(n) for n = 0, 1, ... and stops once three consecutive terms at
/// or beyond `n_min` satisfy |term| < rel_tol * |partial sum|. `n_min` is
/// where the term ratio is known to have dropped below 1/2, which guards
/// against stopping inside an early lull of a series whose terms still grow.
template <class TermFn>
EvalResult sum_series(TermFn&& term, std::size_t n_min, const EvalPolicy& policy) {
  EvalResult r;
  double sum = 0.0;
  double abs_sum = 0.0;
  int quiet = 0;
  double recent = 0.0;
  std::size_t n = 0;
  bool stopped = false;
  for (; n < policy.max_terms; ++n) {
    const double t = term(n);
    if (!std::isfinite(t)) {
      r = EvalResult::domain_error("series term is not finite");
      r.terms_used = n + 1;
      return r;
    }
    sum += t;
    abs_sum += std::abs(t);
    if (n >= n_min && std::abs(t) < policy.rel_tol * std::abs(sum)) {
      recent = quiet == 0 ? std::abs(t) : std::max(recent, std::abs(t));
      if (++quiet == 3) {
        stopped = true;
        ++n;
        break;
      }
    } else {
      quiet = 0;
      recent = std::abs(t);
    }
  }
  r.value = sum;
  r.terms_used = n;
  r.err_estimate = recent + 4.0 * kEps * abs_sum;
  if (!stopped) {
    r.status = Status::Truncated;
    r.err_estimate = std::max(r.err_estimate, recent);
    r.note = "series term cap reached";
    return r;
  }
  settle(r, policy);
  if (r.status == Status::Truncated) r.note = "series lost accuracy to cancellation";
  return r;
}

/// Index beyond which a ratio bound of the form c / (scale n)^power < 1/2.
inline std::size_t ratio_onset(double c, double scale, double power) {
  if (c <= 0.0) return 0;
  const double n = std::pow(2.0 * c, 1.0 / power) / scale;
  if (!(n < 1e9)) return static_cast<std::size_t>(1e9);
  return static_cast<std::size_t>(std::ceil(n)) + 1;
}

}  // namespace mlfrac::detail
