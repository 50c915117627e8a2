#pragma once

#include <optional>

#include "mlfrac/policy.hpp"

namespace mlfrac {

enum class MellinMode { ClosedForm, NumericCheck };

/// Mellin transforms in the kernel parameter p, ∫_0^∞ p^{r-1} (...) dp.
struct MellinRequest {
  double r = 0.5;           // in (0, 1)
  double eta = 0.0;         // > -1
  double mu = -0.5;         // < 0
  double alpha = 1.0;       // > 0
  double z = 1.0;           // > 0 (and < 1 for the binomial transform)
  double lambda_exp = 0.0;  // binomial exponent: f(t) = (1-t)^{-lambda}
  MellinMode mode = MellinMode::ClosedForm;
};

struct MellinResult {
  EvalResult closed;
  std::optional<EvalResult> numeric;
  std::optional<double> rel_diff;
};

/// ∫_0^∞ v^{r-1} E^delta_{alpha,gamma}(-w v) dv = Γ(r)Γ(delta-r)/(Γ(delta) w^r Γ(gamma - r alpha)).
/// NumericCheck integrates on the half line; it is offered for
/// gamma = delta = 1 with 0 < alpha <= 1, where E_alpha(-x) is evaluated
/// uniformly, and is a DomainError otherwise.
MellinResult mellin_ml_moment(double r, double alpha, double gamma_idx, double delta_idx, double w,
                              MellinMode mode, const EvalPolicy& policy);

/// Transform of the image of t^eta under the Mittag-Leffler-kernel operator:
/// π/sin(πr) z^{eta-mu}/(Γ(-mu)Γ(1-r alpha)) B(eta+r+1, r-mu).
/// NumericCheck nests the operator quadrature inside a half-line quadrature.
MellinResult mellin_frac_power(const MellinRequest& req, const EvalPolicy& policy);

/// Transform of the image of (1-t)^{-lambda}:
/// z^{-mu} π/sin(πr) B(1+r, r-mu)/(Γ(-mu)Γ(1-r alpha)) 2F1(lambda, r+1; 1-mu+2r; z).
/// NumericCheck sums Σ (lambda)_n/n! times the power transform at eta = n.
MellinResult mellin_frac_binomial(const MellinRequest& req, const EvalPolicy& policy);

}  // namespace mlfrac
