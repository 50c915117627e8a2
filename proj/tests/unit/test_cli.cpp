#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mlfrac/cli.hpp"
#include "near.hpp"

namespace {
struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = mlfrac::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

double value_of(const Outcome& o) { return nlohmann::json::parse(o.out).at("value").get<double>(); }
}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("eval examples") {
    auto b = call({"eval", "beta", "--x", "1", "--y", "1", "--kernel", "none"});
    CHECK(b.code == 0);
    CHECK(value_of(b) == 1.0);
    auto e = call({"eval", "ml", "--rho", "1", "--beta", "1", "--upper", "1", "--z", "1"});
    CHECK(rel_err(value_of(e), 2.71828183) < 1e-8);
    auto f = call({"eval", "fracderiv-power", "--eta", "1", "--mu", "-0.5", "--z", "1", "--p", "0", "--alpha", "1"});
    CHECK(rel_err(value_of(f), 0.75225278) < 1e-8);
    const auto j = nlohmann::ordered_json::parse(f.out);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"function", "params", "value", "err_estimate", "status",
                                           "terms_used", "nodes_used"});
  }

  TEST_CASE("exit codes") {
    CHECK(call({"eval", "nope", "--x", "1"}).code == 2);
    CHECK(call({"eval", "beta", "--x", "1"}).code == 2);
    CHECK(call({"eval", "beta", "--x", "1", "--y", "1", "--w", "3"}).code == 2);
    CHECK(call({"eval", "beta", "--x", "one", "--y", "1"}).code == 2);
    CHECK(call({"eval", "beta", "--x", "1", "--y", "1", "--kernel", "bogus"}).code == 2);
    CHECK(call({"eval", "beta", "--x", "-1", "--y", "1"}).code == 2);
    CHECK(call({"--max-terms", "5", "eval", "1f1", "--a", "0.5", "--b", "1.5", "--z", "0.9"}).code == 1);
    CHECK(call({"eval", "ml", "--rho", "0.5", "--z", "-400"}).code == 0);
    CHECK(call({"check", "--suite", "none_such"}).code == 2);
    CHECK(call({"check", "--suite", "prop_2_3"}).code == 0);
    CHECK(call({"check", "--suite", "thm_3_1"}).code == 0);
    CHECK(call({"check", "--suite", "prop_2_1"}).code == 0);  // informational failures only
    CHECK(call({"check", "--suite", "thm_4_1", "--tolerance", "thm_4_1=1e-30"}).code == 1);
    CHECK(call({"--rel-tol", "-1", "eval", "ml", "--z", "1"}).code == 2);
    CHECK(call({}).code == 2);
    CHECK(call({"--help"}).code == 0);
  }

  TEST_CASE("check output carries a summary") {
    auto c = call({"check", "--suite", "prop_2_3,thm_3_6"});
    const auto j = nlohmann::json::parse(c.out);
    CHECK(j["reports"].size() == 82);
    CHECK(j["summary"]["total"] == 82);
    CHECK(j["summary"]["ok"] == true);
  }

  TEST_CASE("table grid order and consistency with eval") {
    auto t = call({"--format", "csv", "table", "beta", "--x", "0.5,1,2", "--y", "0.5,1,2", "--kernel", "ml",
                   "--p", "0.5", "--alpha", "1"});
    CHECK(t.code == 0);
    std::istringstream lines(t.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "x,y,p,alpha,kernel,value,err_estimate,status");
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 9);

    auto tab = call({"table", "fracderiv-power", "--eta", "0.5,1", "--mu", "-0.5,-1.5", "--z", "1", "--p", "0.3",
                     "--alpha", "0.9"});
    const auto rowsj = nlohmann::json::parse(tab.out)["rows"];
    REQUIRE(rowsj.size() == 4);
    CHECK(rowsj[1]["eta"] == 0.5);
    CHECK(rowsj[1]["mu"] == -1.5);
    for (const auto& r : rowsj) {
      auto one = call({"eval", "fracderiv-power", "--eta", r["eta"].dump(), "--mu", r["mu"].dump(), "--z", "1",
                       "--p", "0.3", "--alpha", "0.9"});
      CHECK(value_of(one) == r["value"].get<double>());
    }
  }

  TEST_CASE("csv numbers round-trip") {
    auto t = call({"--format", "csv", "eval", "ml", "--rho", "0.5", "--z", "-3"});
    auto j = call({"eval", "ml", "--rho", "0.5", "--z", "-3"});
    std::istringstream lines(t.out);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    std::vector<std::string> cells;
    std::stringstream ss(row);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    REQUIRE(cells.size() == 7);
    CHECK(std::stod(cells[4]) == value_of(j));
  }

  TEST_CASE("ranges and row cap") {
    auto t = call({"--format", "csv", "table", "ml", "--z", "-1:1:0.5"});
    CHECK(t.code == 0);
    CHECK(t.out.find("\n-0.5,") != std::string::npos);
    CHECK(std::count(t.out.begin(), t.out.end(), '\n') == 6);
    CHECK(call({"--row-cap", "4", "table", "ml", "--z", "-1:1:0.5"}).code == 2);
    CHECK(call({"table", "ml", "--z", "1:0:0.5"}).code == 2);
  }

  TEST_CASE("policy file from the environment") {
    const auto path = std::filesystem::temp_directory_path() / "mlfrac_policy_test.json";
    {
      std::ofstream f(path);
      f << R"({"max_terms": 5})";
    }
    ::setenv("MLFRAC_POLICY", path.c_str(), 1);
    auto limited = call({"eval", "1f1", "--a", "0.5", "--b", "1.5", "--z", "0.9"});
    CHECK(limited.code == 1);
    auto flag = call({"--max-terms", "10000", "eval", "1f1", "--a", "0.5", "--b", "1.5", "--z", "0.9"});
    CHECK(flag.code == 0);
    {
      std::ofstream f(path);
      f << R"({"max_turns": 5})";
    }
    CHECK(call({"eval", "ml", "--z", "1"}).code == 2);
    ::unsetenv("MLFRAC_POLICY");
    std::filesystem::remove(path);
  }

  TEST_CASE("golden outputs") {
    const std::string dir = MLFRAC_GOLDEN_DIR;
    auto slurp = [](const std::string& p) {
      std::ifstream f(p);
      std::ostringstream s;
      s << f.rdbuf();
      return s.str();
    };
    CHECK(call({"eval", "beta", "--x", "1", "--y", "1", "--kernel", "none"}).out == slurp(dir + "/eval_beta.json"));
    CHECK(call({"check", "--suite", "prop_2_3"}).out == slurp(dir + "/check_prop_2_3.json"));
  }
}
