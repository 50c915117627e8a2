#include "mlfrac/report.hpp"

#include <cmath>
#include <limits>

namespace mlfrac {

namespace {

void fill_diffs(IdentityReport& r) {
  r.abs_diff = std::abs(r.lhs - r.rhs);
  if (r.rhs != 0.0) {
    r.rel_diff = r.abs_diff / std::abs(r.rhs);
  } else {
    r.rel_diff = r.abs_diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
}

nlohmann::ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

}  // namespace

IdentityReport make_equality_report(std::string id,
                                    std::vector<std::pair<std::string, double>> params,
                                    double lhs, double rhs, double tolerance, std::string notes,
                                    double abs_floor) {
  IdentityReport r;
  r.identity_id = std::move(id);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tolerance = tolerance;
  r.notes = std::move(notes);
  fill_diffs(r);
  r.pass = std::isfinite(lhs) && std::isfinite(rhs) &&
           (r.rel_diff <= tolerance || (rhs == 0.0 && r.abs_diff <= abs_floor));
  return r;
}

IdentityReport make_bound_report(std::string id,
                                 std::vector<std::pair<std::string, double>> params,
                                 double lhs, double rhs, double tolerance, std::string notes) {
  IdentityReport r;
  r.identity_id = std::move(id);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tolerance = tolerance;
  r.notes = std::move(notes);
  r.relation = Relation::UpperBound;
  fill_diffs(r);
  r.pass = std::isfinite(lhs) && std::isfinite(rhs) && lhs <= rhs * (1.0 + tolerance);
  return r;
}

IdentityReport make_failed_report(std::string id,
                                  std::vector<std::pair<std::string, double>> params,
                                  double tolerance, std::string why) {
  IdentityReport r;
  r.identity_id = std::move(id);
  r.params = std::move(params);
  r.lhs = std::numeric_limits<double>::quiet_NaN();
  r.rhs = std::numeric_limits<double>::quiet_NaN();
  r.abs_diff = r.rel_diff = std::numeric_limits<double>::quiet_NaN();
  r.tolerance = tolerance;
  r.pass = false;
  r.notes = std::move(why);
  return r;
}

nlohmann::ordered_json to_json(const IdentityReport& r) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : r.params) params[name] = number(value);
  nlohmann::ordered_json j;
  j["identity_id"] = r.identity_id;
  j["params"] = std::move(params);
  j["relation"] = r.relation == Relation::Equality ? "equality" : "upper_bound";
  j["lhs"] = number(r.lhs);
  j["rhs"] = number(r.rhs);
  j["abs_diff"] = number(r.abs_diff);
  j["rel_diff"] = number(r.rel_diff);
  j["tolerance"] = number(r.tolerance);
  j["pass"] = r.pass;
  j["informational"] = r.informational;
  j["notes"] = r.notes;
  return j;
}

}  // namespace mlfrac
