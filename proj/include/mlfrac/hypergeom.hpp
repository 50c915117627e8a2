#pragma once

#include <optional>
#include <vector>

#include "mlfrac/beta.hpp"
#include "mlfrac/policy.hpp"

namespace mlfrac {

enum class EvalPath { Series, Integral };

/// 2F1(a, b; c; z) and its Mittag-Leffler-kernel extension, where the Beta
/// ratio (b)_n/(c)_n is replaced by B_p^alpha(b+n, c-b)/B(b, c-b).
struct Gauss2F1Params {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
  double p = 0.0;
  double alpha = 1.0;
};

/// Appell F1(s1; s2, s3; s4; x, y) with the same Beta-ratio extension in the
/// shared first parameter.
struct AppellF1Params {
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;
  double s4 = 1.0;
  double p = 0.0;
  double alpha = 1.0;
};

/// Gamma argument shift + scale * k.
struct WrightPair {
  double shift = 0.0;
  double scale = 1.0;
};

/// Adds B_p(gamma+k, c-gamma)/Γ(c-gamma) with the exp(-p/(t(1-t))) kernel to
/// each Fox-Wright term.
struct FoxWrightExtension {
  double gamma = 1.0;
  double c = 2.0;
  double p = 0.0;
};

struct FoxWrightSpec {
  std::vector<WrightPair> upper;
  std::vector<WrightPair> lower;
  std::optional<FoxWrightExtension> extension;
};

/// Series: |z| < 0.95. Integral (Euler): c > b > 0 and z < 1.
EvalResult gauss_2f1(double a, double b, double c, double z, EvalPath path,
                     const EvalPolicy& policy);

/// 1F1(lambda; rho; z). Negative z goes through Kummer's transformation,
/// large negative z through the algebraic asymptotic expansion.
EvalResult kummer_1f1(double lambda, double rho, double z, const EvalPolicy& policy);

/// Extended 2F1. p = 0 reduces to the classical function (any alpha). For
/// p > 0 both paths need c > b > 0; Series needs |z| < 0.95, Integral z < 1.
/// `cache` may carry the Beta values B_p^alpha(b+n, c-b) across calls that
/// share (b, c, p, alpha); it is ignored when it does not match.
EvalResult ext_gauss_2f1(const Gauss2F1Params& params, double z, EvalPath path,
                         const EvalPolicy& policy, BetaSequence* cache = nullptr);

/// Extended Appell F1. Series sums anti-diagonals m + n = N so that each
/// Beta value is computed once; needs |x|, |y| < 0.95. Integral needs
/// x, y < 1 and s4 > s1 > 0.
EvalResult ext_appell_f1(const AppellF1Params& params, double x, double y, EvalPath path,
                         const EvalPolicy& policy);

/// Naive double sum over m + n <= degree, for cross-checking.
double appell_f1_naive(const AppellF1Params& params, double x, double y, int degree,
                       const EvalPolicy& policy);

/// Empty string when Σ lower scales - Σ upper scales > -1 and all scales are positive.
std::string check_fox_wright(const FoxWrightSpec& spec);

/// Σ_k Π Γ(shift_i + scale_i k) / Π Γ(shift_j + scale_j k) z^k / k!.
/// Any extension is ignored.
EvalResult fox_wright(const FoxWrightSpec& spec, double z, const EvalPolicy& policy);

/// Fox-Wright series with the extension factor; requires spec.extension with
/// c > gamma > 0 and p >= 0.
EvalResult ext_fox_wright(const FoxWrightSpec& spec, double z, const EvalPolicy& policy);

}  // namespace mlfrac
