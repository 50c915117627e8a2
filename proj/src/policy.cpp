#include "mlfrac/policy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mlfrac {

void EvalPolicy::validate() const {
  if (!(rel_tol > 0.0)) throw std::invalid_argument("rel_tol must be positive");
  if (!(abs_tol >= 0.0)) throw std::invalid_argument("abs_tol must be nonnegative");
  if (max_terms < 1) throw std::invalid_argument("max_terms must be at least 1");
  if (max_quad_levels < 1) throw std::invalid_argument("max_quad_levels must be at least 1");
  if (!(asym_threshold > 0.0)) throw std::invalid_argument("asym_threshold must be positive");
}

double EvalPolicy::tolerance_for(double value) const {
  return std::max(rel_tol * std::abs(value), abs_tol);
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Converged: return "Converged";
    case Status::Truncated: return "Truncated";
    case Status::AsymptoticUsed: return "AsymptoticUsed";
    case Status::DomainError: return "DomainError";
  }
  return "Unknown";
}

namespace {
int rank(Status s) {
  switch (s) {
    case Status::Converged: return 0;
    case Status::AsymptoticUsed: return 1;
    case Status::Truncated: return 2;
    case Status::DomainError: return 3;
  }
  return 3;
}
}  // namespace

Status worst(Status a, Status b) { return rank(a) >= rank(b) ? a : b; }

EvalResult EvalResult::domain_error(std::string why) {
  EvalResult r;
  r.status = Status::DomainError;
  r.note = std::move(why);
  return r;
}

EvalResult EvalResult::exact(double value) {
  EvalResult r;
  r.value = value;
  r.err_estimate = 0.0;
  return r;
}

void absorb(EvalResult& into, const EvalResult& part) {
  into.status = worst(into.status, part.status);
  into.terms_used += part.terms_used;
  into.nodes_used += part.nodes_used;
  if (!part.note.empty() && into.note.find(part.note) == std::string::npos) {
    if (!into.note.empty()) into.note += "; ";
    into.note += part.note;
  }
}

void settle(EvalResult& result, const EvalPolicy& policy) {
  if (result.status == Status::DomainError) return;
  const bool within = result.err_estimate <= policy.tolerance_for(result.value);
  if (!within) {
    result.status = Status::Truncated;
  }
}

}  // namespace mlfrac
