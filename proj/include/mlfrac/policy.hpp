#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>

namespace mlfrac {

/// Tolerances and work budgets shared by every evaluator.
struct EvalPolicy {
  double rel_tol = 1e-12;
  double abs_tol = 1e-300;
  std::size_t max_terms = 10000;
  int max_quad_levels = 12;
  /// |z| beyond which the one-parameter Mittag-Leffler function on the
  /// negative axis is evaluated from its algebraic asymptotic expansion.
  double asym_threshold = 50.0;

  /// Throws std::invalid_argument when a field is outside its range.
  void validate() const;

  /// Acceptance bound for a value of the given magnitude.
  double tolerance_for(double value) const;
};

enum class Status { Converged, Truncated, AsymptoticUsed, DomainError };

std::string_view to_string(Status status);

/// Severity order: DomainError > Truncated > AsymptoticUsed > Converged.
Status worst(Status a, Status b);

struct EvalResult {
  double value = std::numeric_limits<double>::quiet_NaN();
  double err_estimate = 0.0;
  Status status = Status::Converged;
  std::size_t terms_used = 0;
  std::size_t nodes_used = 0;
  /// Diagnostic text; set for domain errors and non-convergence.
  std::string note;

  bool ok() const { return status != Status::DomainError; }

  static EvalResult domain_error(std::string why);
  static EvalResult exact(double value);
};

/// Folds the status, work counters and note of `part` into `into`.
/// The value and error estimate are left alone.
void absorb(EvalResult& into, const EvalResult& part);

/// Sets status to Converged or Truncated from the error estimate.
void settle(EvalResult& result, const EvalPolicy& policy);

}  // namespace mlfrac
