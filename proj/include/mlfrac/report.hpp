#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace mlfrac {

enum class Relation { Equality, UpperBound };

/// One verified identity at one parameter point.
///
/// Equality: pass = (rel_diff <= tolerance) or (rhs == 0 and abs_diff <= abs_floor).
/// UpperBound: pass = lhs <= rhs * (1 + tolerance).
struct IdentityReport {
  std::string identity_id;
  std::vector<std::pair<std::string, double>> params;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_diff = 0.0;
  double rel_diff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  /// Set for identities whose printed form is known to be ambiguous or not
  /// to hold; their failures do not count against a suite.
  bool informational = false;
  Relation relation = Relation::Equality;
  std::string notes;
};

IdentityReport make_equality_report(std::string id,
                                    std::vector<std::pair<std::string, double>> params,
                                    double lhs, double rhs, double tolerance,
                                    std::string notes = {}, double abs_floor = 1e-300);

IdentityReport make_bound_report(std::string id,
                                 std::vector<std::pair<std::string, double>> params,
                                 double lhs, double rhs, double tolerance,
                                 std::string notes = {});

/// Marks a report failed because an evaluation did not produce a value.
IdentityReport make_failed_report(std::string id,
                                  std::vector<std::pair<std::string, double>> params,
                                  double tolerance, std::string why);

nlohmann::ordered_json to_json(const IdentityReport& report);

}  // namespace mlfrac
