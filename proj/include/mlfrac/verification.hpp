#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mlfrac/policy.hpp"
#include "mlfrac/report.hpp"

namespace mlfrac {

/// Σ_{n<=N} (lambda)_n/n! F(lambda+n, beta; gamma; z) t^n against
/// (1-t)^{-lambda} F(lambda, beta; gamma; z/(1-t)) for the extended 2F1.
/// The tolerance is max(tolerance, |(lambda)_{N+1}/(N+1)!| |t|^{N+1}/(1-|t|)).
IdentityReport check_generating_linear(double lambda_exp, double beta_exp, double gamma_c,
                                       double z, double t, double p, double alpha, int n_terms,
                                       const EvalPolicy& policy, double tolerance = 1e-6);

/// Readings of the two-variable Appell function on the right-hand side of
/// the bilinear relation, which is printed with a single argument.
enum class BilinearCandidate {
  A,  // F1(lambda; delta, beta; gamma; z, -zt/(1-t))
  B,  // F1(lambda; delta, beta; gamma; -zt/(1-t), -zt/(1-t))
};

/// Second parameter of F(delta-n, . ; gamma; z) on the left-hand side: the
/// printed statement has beta, its derivation produces lambda.
enum class BilinearLhs { AsPrinted, ProofConsistent };

/// Σ_{n<=N} (beta)_n/n! F(delta-n, b; gamma; z) t^n against
/// (1-t)^{-beta} F1(...) for the selected readings.
IdentityReport check_generating_bilinear(double lambda_exp, double delta_exp, double beta_exp,
                                         double gamma_c, double z, double t, double p,
                                         double alpha, int n_terms, BilinearCandidate candidate,
                                         BilinearLhs lhs_form, const EvalPolicy& policy,
                                         double tolerance = 1e-6);

using ParamPoint = std::vector<std::pair<std::string, double>>;

struct SuiteConfig {
  /// Identities to run, in the order given. Empty runs nothing.
  std::vector<std::string> ids;
  std::map<std::string, double> tolerance_overrides;
  /// Replaces an identity's default grid; each point must carry exactly the
  /// identity's parameter names.
  std::map<std::string, std::vector<ParamPoint>> grid_overrides;
  /// Truncation order of the generating-relation sums.
  int truncation_order = 40;
  EvalPolicy policy;
};

struct IdentityInfo {
  std::string id;
  std::string anchor;
  double default_tolerance;
  bool informational;
  std::vector<std::vector<std::string>> param_sets;
  std::vector<ParamPoint> default_grid;
};

/// Registered identities in canonical order.
const std::vector<IdentityInfo>& identity_catalog();

/// All registered ids in canonical order.
std::vector<std::string> registered_identities();

/// Runs the selected identities over their grids. Throws
/// std::invalid_argument for unknown ids, malformed grids or tolerances;
/// evaluation failures only mark the affected reports failed.
std::vector<IdentityReport> run_identity_suite(const SuiteConfig& config);

struct SuiteSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t informational_failed = 0;
  /// True when every non-informational report passed.
  bool ok() const { return failed == 0; }
};

SuiteSummary summarize(const std::vector<IdentityReport>& reports);

}  // namespace mlfrac
