#include <doctest.h>

#include <set>
#include <stdexcept>

#include "mlfrac/verification.hpp"
#include "near.hpp"

using namespace mlfrac;

namespace {
std::vector<IdentityReport> run(std::vector<std::string> ids) {
  SuiteConfig c;
  c.ids = std::move(ids);
  return run_identity_suite(c);
}
}  // namespace

TEST_SUITE("verification") {
  TEST_CASE("registry") {
    const auto ids = registered_identities();
    CHECK(ids.size() == 16);
    CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
    for (const auto& info : identity_catalog()) {
      CHECK_FALSE(info.anchor.empty());
      CHECK_FALSE(info.default_grid.empty());
      CHECK(info.default_tolerance > 0);
    }
  }

  TEST_CASE("empty selection") { CHECK(run({}).empty()); }

  TEST_CASE("power rule suite passes on its grid") {
    const auto reports = run({"thm_3_1"});
    CHECK(reports.size() == 72);
    const auto s = summarize(reports);
    CHECK(s.passed == 72);
    CHECK(s.ok());
  }

  TEST_CASE("config errors abort") {
    CHECK_THROWS_AS(run({"none_such"}), std::invalid_argument);
    SuiteConfig c;
    c.ids = {"thm_3_1"};
    c.tolerance_overrides["thm_3_1"] = -1;
    CHECK_THROWS_AS(run_identity_suite(c), std::invalid_argument);
    c.tolerance_overrides.clear();
    c.grid_overrides["thm_3_1"] = {{{"eta", 1}, {"mu", -0.5}}};
    CHECK_THROWS_AS(run_identity_suite(c), std::invalid_argument);
    c.grid_overrides["thm_3_1"] = {{{"eta", 1}, {"mu", 0.5}, {"p", 0}, {"alpha", 1}, {"z", 1}}};
    CHECK_THROWS_AS(run_identity_suite(c), std::invalid_argument);
  }

  TEST_CASE("grid and tolerance overrides") {
    SuiteConfig c;
    c.ids = {"thm_3_1"};
    c.grid_overrides["thm_3_1"] = {{{"eta", 1}, {"mu", -0.5}, {"p", 0.2}, {"alpha", 0.6}, {"z", 1.5}}};
    c.tolerance_overrides["thm_3_1"] = 1e-30;
    const auto r = run_identity_suite(c);
    REQUIRE(r.size() == 1);
    CHECK(r[0].tolerance == 1e-30);
    CHECK(r[0].rel_diff < 1e-10);
  }

  TEST_CASE("deterministic reports") {
    const auto a = run({"thm_2_4", "thm_4_1"});
    const auto b = run({"thm_2_4", "thm_4_1"});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].lhs == b[i].lhs);
      CHECK(a[i].rhs == b[i].rhs);
    }
  }

  TEST_CASE("linear generating relation") {
    const EvalPolicy pol;
    auto classical = check_generating_linear(1.5, 0.8, 2.2, 0.1, 0.2, 0, 1, 40, pol);
    CHECK(classical.pass);
    CHECK(rel_err(classical.rhs, 1.5021121995890588) < 1e-13);
    CHECK(rel_err(classical.lhs, 1.5021121995890588) < 1e-13);
    CHECK(check_generating_linear(1.5, 0.8, 2.2, 0.1, 0.2, 0.3, 0.9, 40, pol).pass);
    // truncation error shrinks with N
    double prev = 1.0;
    for (int n : {10, 20, 30, 40}) {
      const double d = check_generating_linear(1.5, 0.8, 2.2, 0.1, 0.6, 0.3, 0.9, n, pol).rel_diff;
      CHECK(d < prev);
      prev = d;
    }
    CHECK_FALSE(check_generating_linear(1.5, 0.8, 2.2, 0.9, 0.2, 0, 1, 40, pol).pass);
  }

  TEST_CASE("bilinear generating relation readings") {
    const EvalPolicy pol;
    for (double p : {0.0, 0.2}) {
      const double a = p == 0 ? 1 : 0.8;
      auto derived = check_generating_bilinear(1, 1.3, 0.7, 2.1, 0.15, 0.2, p, a, 40,
                                               BilinearCandidate::A, BilinearLhs::ProofConsistent, pol);
      CHECK(derived.pass);
      CHECK(derived.rel_diff < 1e-12);
      auto other = check_generating_bilinear(1, 1.3, 0.7, 2.1, 0.15, 0.2, p, a, 40,
                                             BilinearCandidate::B, BilinearLhs::ProofConsistent, pol);
      CHECK_FALSE(other.pass);
      auto printed = check_generating_bilinear(1, 1.3, 0.7, 2.1, 0.15, 0.2, p, a, 40,
                                               BilinearCandidate::A, BilinearLhs::AsPrinted, pol);
      CHECK_FALSE(printed.pass);
    }
    const auto reports = run({"thm_4_2"});
    CHECK(reports.size() == 8);
    for (const auto& r : reports) CHECK(r.informational);
    CHECK(summarize(reports).ok());
  }

  TEST_CASE("full suite") {
    const auto reports = run(registered_identities());
    const auto s = summarize(reports);
    CHECK(s.failed == 0);
    CHECK(s.ok());
    CHECK(s.informational_failed == 30);  // all 24 closed-form Beta points and 6 bilinear readings
    for (const auto& r : reports) CHECK_FALSE(r.notes.empty());
  }

  TEST_CASE("report serialization order") {
    auto r = make_equality_report("x", {{"a", 1}}, 1.0, std::nan(""), 1e-6);
    const auto j = to_json(r);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"identity_id", "params", "relation", "lhs", "rhs", "abs_diff",
                                           "rel_diff", "tolerance", "pass", "informational", "notes"});
    CHECK(j["rhs"] == "nan");
    CHECK(j["pass"] == false);
  }
}
