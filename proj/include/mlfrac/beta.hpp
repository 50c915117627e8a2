#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mlfrac/policy.hpp"
#include "mlfrac/report.hpp"

namespace mlfrac {

/// Regularizing kernels K(t) multiplying t^{x-1}(1-t)^{y-1} on (0, 1).
struct NoKernel {
  bool operator==(const NoKernel&) const = default;
};
/// exp(-p / (t(1-t)))
struct ChaudhryKernel {
  double p = 0.0;
  bool operator==(const ChaudhryKernel&) const = default;
};
/// exp(-p/t - q/(1-t))
struct TwoParamExpKernel {
  double p = 0.0;
  double q = 0.0;
  bool operator==(const TwoParamExpKernel&) const = default;
};
/// E_alpha(-p / (t(1-t)))
struct MittagLefflerBetaKernel {
  double p = 0.0;
  double alpha = 1.0;
  bool operator==(const MittagLefflerBetaKernel&) const = default;
};

using BetaKernelSpec =
    std::variant<NoKernel, ChaudhryKernel, TwoParamExpKernel, MittagLefflerBetaKernel>;

struct BetaArgs {
  double x = 1.0;
  double y = 1.0;
};

/// Empty string when the kernel parameters are admissible.
std::string check_kernel(const BetaKernelSpec& kernel);

/// Extra algebraic order of vanishing the kernel adds at t -> 0 and t -> 1
/// (infinity for exponential suppression).
std::pair<double, double> kernel_decay(const BetaKernelSpec& kernel);

/// True when the kernel is identically 1 (p = q = 0), so the classical Beta applies.
bool is_trivial(const BetaKernelSpec& kernel);

/// K(t) with tc = 1 - t supplied without cancellation.
std::function<double(double t, double tc)> make_kernel(const BetaKernelSpec& kernel);

/// ∫_0^1 t^{x-1}(1-t)^{y-1} K(t) dt. Kernels that reduce to 1 use the exact
/// classical Beta; the others use double-exponential quadrature.
EvalResult beta_extended(BetaArgs args, const BetaKernelSpec& kernel, const EvalPolicy& policy);

/// Same integral for several first arguments sharing y and the kernel; the
/// kernel is evaluated once per quadrature node.
std::vector<EvalResult> beta_extended_many(std::span<const double> xs, double y,
                                           const BetaKernelSpec& kernel,
                                           const EvalPolicy& policy);

/// Lazily computed values B_K(x0 + n, y), n = 0, 1, 2, ..., filled in blocks.
/// Meant to live for one evaluation (or one caller-owned group of them).
class BetaSequence {
 public:
  BetaSequence(double x0, double y, BetaKernelSpec kernel, EvalPolicy policy,
               std::size_t block = 24);

  const EvalResult& at(std::size_t n);
  /// Value normalized by the classical B(x0, y).
  double ratio(std::size_t n);
  double classical() const { return classical_; }
  std::size_t computed() const { return values_.size(); }
  bool matches(double x0, double y, const BetaKernelSpec& kernel) const;

 private:
  double x0_;
  double y_;
  BetaKernelSpec kernel_;
  EvalPolicy policy_;
  std::size_t block_;
  double classical_;
  std::vector<EvalResult> values_;
};

/// π sin(π(s1+s2)) / (sin(π s1) sin(π s2)) · ml_multi_index_beta(s1, s2, alpha, p):
/// the term-by-term expansion of the Mittag-Leffler kernel in powers of p.
EvalResult beta_ml_closed(double s1, double s2, double alpha, double p, const EvalPolicy& policy);

/// Throws std::invalid_argument outside 0 < x, y < 1/2, p, q > 0.
/// Cauchy-Schwarz bound for the two-parameter exponential kernel:
/// B_{p,q}(x,y) <= (2p)^{(2x-1)/2} (2q)^{(2y-1)/2} sqrt(Γ(1-2x, 2p) Γ(1-2y, 2q))
/// on 0 < x, y < 1/2 and p, q > 0.
IdentityReport beta_bound_check(double x, double y, double p, double q,
                                const EvalPolicy& policy);

}  // namespace mlfrac
