#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "mlfrac/beta.hpp"
#include "mlfrac/hypergeom.hpp"
#include "mlfrac/mittag_leffler.hpp"
#include "mlfrac/policy.hpp"

namespace mlfrac {

/// 1F1(lambda; rho; -p z/t) 1F1(lambda; rho; -q z/(z-t)).
struct ConfluentPairKernel {
  double p = 0.0;
  double q = 0.0;
  double lambda = 1.0;
  double rho = 1.0;
};

/// Kernel multiplying the Riemann-Liouville integrand. After t = z u each
/// one depends on u only:
///   NoKernel                 classical operator
///   ChaudhryKernel           exp(-p z^2/(t(z-t)))  ->  exp(-p/(u(1-u)))
///   TwoParamExpKernel        exp(-p z/t - q z/(z-t))
///   ConfluentPairKernel      product of two 1F1
///   MittagLefflerBetaKernel  E_alpha(-p z^2/(t(z-t)))
using KernelSpec = std::variant<NoKernel, ChaudhryKernel, TwoParamExpKernel, ConfluentPairKernel,
                                MittagLefflerBetaKernel>;

/// t^eta
struct Monomial {
  double eta = 0.0;
};
/// t^{eta-1} (1-t)^{-beta_exp}
struct Binomial {
  double eta = 1.0;
  double beta_exp = 0.0;
};
/// t^{eta-1} (1-a t)^{-exp_a} (1-b t)^{-exp_b}
struct DoubleBinomial {
  double eta = 1.0;
  double a = 0.0;
  double exp_a = 0.0;
  double b = 0.0;
  double exp_b = 0.0;
};
/// Σ coeffs[n] t^n, finite
struct PowerSeries {
  std::vector<double> coeffs;
};
/// t^{eta-1} E^{upper}_{rho, beta_idx}(t)
struct PrabhakarFunction {
  double eta = 1.0;
  PrabhakarParams ml;
};
/// t^{eta-1} times the Fox-Wright function of t
struct FoxWrightFunction {
  double eta = 1.0;
  FoxWrightSpec spec;
};

using FunctionSpec = std::variant<Monomial, Binomial, DoubleBinomial, PowerSeries,
                                  PrabhakarFunction, FoxWrightFunction>;

/// Negative operator order. Results of the form D^{eta - mu} keep the pair
/// (eta, mu) and convert here.
struct FracOrder {
  double mu = -1.0;
  static FracOrder from_target(double eta, double mu_target) { return {eta - mu_target}; }
};

/// (1/Γ(-mu)) ∫_0^z f(t) (z-t)^{-mu-1} K dt by quadrature after t = z u,
/// with the endpoint powers of f declared to the quadrature.
EvalResult frac_deriv_numeric(const FunctionSpec& f, FracOrder order, double z,
                              const KernelSpec& kernel, const EvalPolicy& policy);

/// B_p^alpha(eta+1, -mu)/Γ(-mu) z^{eta-mu}.
EvalResult frac_deriv_power_closed(double eta, FracOrder order, double z, double p, double alpha,
                                   const EvalPolicy& policy);

/// Σ coeffs[n] * frac_deriv_power_closed(n, ...), summed in index order.
EvalResult frac_deriv_series(std::span<const double> coeffs, FracOrder order, double z, double p,
                             double alpha, const EvalPolicy& policy);

/// Image of t^{eta-1}(1-t)^{-beta_exp} under order eta - mu_target:
/// Γ(eta)/Γ(mu) z^{mu-1} 2F1_p^alpha(beta_exp, eta; mu; z), 0 < z < 1.
EvalResult frac_deriv_binomial_closed(double eta, double mu_target, double beta_exp, double z,
                                      double p, double alpha, const EvalPolicy& policy);

/// Image of t^{eta-1}(1-at)^{-exp_a}(1-bt)^{-exp_b}:
/// Γ(eta)/Γ(mu) z^{mu-1} F1_p^alpha(eta; exp_a, exp_b; mu; a z, b z).
EvalResult frac_deriv_double_binomial_closed(double eta, double mu_target, double a,
                                             double exp_a, double b, double exp_b, double z,
                                             double p, double alpha, const EvalPolicy& policy);

/// A closed-form image, plus its alternative form when alpha = 1.
struct ClosedFormResult {
  EvalResult series;
  std::optional<EvalResult> corollary;
  /// |series - corollary| / |corollary| when both exist
  std::optional<double> rel_diff;
};

/// z^{mu-1}/Γ(mu-eta) Σ (upper)_n/Γ(rho n + delta) B_p^alpha(eta+n, mu-eta) z^n/n!;
/// at alpha = 1 also z^{mu-1} Γ(eta)/Γ(mu) times the p-extended
/// Mittag-Leffler series with (lambda, eta, omega) = (1, eta, mu).
ClosedFormResult frac_deriv_prabhakar_closed(double eta, double mu_target,
                                             const PrabhakarParams& ml, double z, double p,
                                             double alpha, const EvalPolicy& policy);

/// Fox-Wright analogue; the alpha = 1 form is z^{mu-1} times the extended
/// Fox-Wright series with the pairs (eta, 1) / (mu, 1) appended.
ClosedFormResult frac_deriv_fox_wright_closed(double eta, double mu_target,
                                              const FoxWrightSpec& spec, double z, double p,
                                              double alpha, const EvalPolicy& policy);

}  // namespace mlfrac
