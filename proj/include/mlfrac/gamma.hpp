#pragma once

#include <cstddef>

namespace mlfrac {

/// log|Γ(x)| together with the sign of Γ(x).
struct LogGamma {
  double value;
  int sign;
};

bool is_nonpositive_integer(double x);

/// Throws std::domain_error at the poles x = 0, -1, -2, ...
LogGamma log_gamma(double x);

/// Γ(x); throws std::domain_error at poles, overflows to ±inf.
double gamma(double x);

/// 1/Γ(x), which is entire: exactly zero at the poles of Γ.
double rgamma(double x);

/// Γ(s, x) = ∫_x^∞ t^{s-1} e^{-t} dt for s > 0, x >= 0.
/// Throws std::domain_error outside that range.
double upper_incomplete_gamma(double s, double x);

/// Rising factorial (a)_n = Γ(a+n)/Γ(a).
double pochhammer(double a, std::size_t n);

/// Classical Beta function B(x, y) for x, y > 0.
double beta(double x, double y);

}  // namespace mlfrac
