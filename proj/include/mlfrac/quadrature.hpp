#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "mlfrac/policy.hpp"

namespace mlfrac {

enum class Domain { UnitInterval, HalfLine };

/// Declared algebraic endpoint behavior of a weighted integrand.
///
/// UnitInterval: the integral is ∫_0^1 f(t) t^a (1-t)^b dt.
/// HalfLine: the integral is ∫_0^∞ f(v) v^a (1+v)^{b-a} dv, i.e. the weight
/// behaves like v^a at the origin and like v^b at infinity. It is mapped onto
/// the unit interval by v = u/(1-u).
///
/// `left_decay` / `right_decay` give the extra algebraic order of vanishing
/// that f itself supplies at each end (use infinity for exponentially
/// decaying kernels). They only enter the integrability check.
struct QuadSpec {
  Domain domain = Domain::UnitInterval;
  double left_exponent = 0.0;
  double right_exponent = 0.0;
  double left_decay = 0.0;
  double right_decay = 0.0;
  /// Interior split point in unit-interval coordinates; each side is
  /// integrated separately so that it carries a single endpoint singularity.
  double split = 0.5;
};

/// On UnitInterval the second argument is 1 - x, computed without
/// cancellation. On HalfLine it is 1/x.
using Integrand = std::function<double(double x, double xc)>;

EvalResult quad_weighted(const Integrand& f, const QuadSpec& spec, const EvalPolicy& policy);

/// Writes the integrand components at (t, 1-t) into `out`.
using VectorIntegrand = std::function<void(double t, double tc, std::span<double> out)>;

/// Double-exponential quadrature of a vector-valued integrand on (0, 1).
/// All components share the abscissae, so an expensive factor common to the
/// components is evaluated once per node. Refinement stops when every
/// component meets the policy tolerance or the level cap is reached; each
/// component's error estimate is the difference of its last two levels.
std::vector<EvalResult> tanh_sinh_unit(const VectorIntegrand& f, std::size_t components,
                                       double split, const EvalPolicy& policy);

}  // namespace mlfrac
