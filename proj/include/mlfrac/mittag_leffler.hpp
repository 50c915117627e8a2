#pragma once

#include <cstddef>
#include <vector>

#include "mlfrac/policy.hpp"

namespace mlfrac {

/// Three-parameter (Prabhakar) Mittag-Leffler function
/// E^{upper}_{rho, beta_idx}(z) = Σ (upper)_n z^n / (Γ(rho n + beta_idx) n!).
/// The one-parameter E_rho(z) is rho with beta_idx = upper = 1.
struct PrabhakarParams {
  double rho = 1.0;
  double beta_idx = 1.0;
  double upper = 1.0;
};

/// Parameters of the p-extended Mittag-Leffler series
/// Σ (upper)_k / Γ(rho k + beta_idx)^lambda_exp · B_p(eta+k, omega-eta)/B(eta, omega-eta) · z^k/k!.
struct PMittagLefflerParams {
  double lambda_exp = 1.0;
  double rho = 1.0;
  double beta_idx = 1.0;
  double upper = 1.0;
  double eta = 1.0;
  double omega = 2.0;
  double p = 0.0;
};

/// Direct summation for |z| <= asym_threshold. On the negative axis the
/// one-parameter function (0 < rho <= 2) switches to an integral
/// representation where the series would cancel catastrophically, and to the
/// algebraic asymptotic expansion beyond asym_threshold (status
/// AsymptoticUsed). rho = 1 returns exp(z).
EvalResult ml_prabhakar(const PrabhakarParams& params, double z, const EvalPolicy& policy);

/// Σ_n Γ(2n+1-s1-s2) (-p)^n / (Γ(alpha n+1) Γ(n+1-s1) Γ(n+1-s2)).
EvalResult ml_multi_index_beta(double s1, double s2, double alpha, double p,
                               const EvalPolicy& policy);

EvalResult ml_p_extended(const PMittagLefflerParams& params, double z, const EvalPolicy& policy);

/// E_alpha(-x) for x >= 0 and 0 < alpha <= 2, tuned for repeated use as a
/// regularizing kernel (~1e-14 relative, away from the zeros that exist for
/// alpha > 1). Picks the cheapest accurate regime per call: power series for
/// small x, the algebraic asymptotic expansion once its smallest term is
/// negligible, and otherwise the real integral representation
///   E_a(-x) = sin(a pi)/pi ∫_0^∞ e^{-w} w^{a-1} x / (w^{2a} + 2 x w^a cos(a pi) + x^2) dw
/// plus (2/a) exp(x^{1/a} cos(pi/a)) cos(x^{1/a} sin(pi/a)) when a > 1.
class MittagLefflerKernel {
 public:
  explicit MittagLefflerKernel(double alpha);

  double alpha() const { return alpha_; }
  double operator()(double x) const;

  enum class Regime { Exact, Series, Integral, Asymptotic };

  struct Detail {
    double value;
    double err_estimate;
    Regime regime;
    std::size_t work;
  };

  /// Series is used while x^{1/alpha} <= series_limit. With
  /// `asymptotic_from` finite, the asymptotic expansion is used from there on
  /// even if its truncation error is not negligible.
  Detail evaluate(double x, double asymptotic_from) const;

  /// Asymptotic expansion alone; err_estimate is the smallest omitted term.
  Detail asymptotic(double x) const;
  Detail series(double x) const;
  Detail integral(double x) const;

 private:
  double oscillatory(double x) const;

  double alpha_;
  double sin_api_;
  double cos_api_;
  std::vector<double> series_coeff_;  // 1/Γ(alpha n + 1)
  // (-1)^{k+1}/Γ(1 - alpha k) for k >= 1 as log magnitude and sign; the
  // magnitudes outgrow a double long before the expansion stops being useful
  std::vector<double> asym_log_;
  std::vector<int> asym_sign_;
};

}  // namespace mlfrac
