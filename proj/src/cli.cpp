#include "mlfrac/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "mlfrac/beta.hpp"
#include "mlfrac/frac_deriv.hpp"
#include "mlfrac/gamma.hpp"
#include "mlfrac/hypergeom.hpp"
#include "mlfrac/mellin.hpp"
#include "mlfrac/mittag_leffler.hpp"
#include "mlfrac/verification.hpp"

namespace mlfrac::cli {

namespace {

using json = nlohmann::ordered_json;
constexpr double kAbsent = std::numeric_limits<double>::quiet_NaN();

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- argument values -------------------------------------------------------

double parse_number(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw UsageError("bad number '" + text + "' for " + what);
  }
  return v;
}

// "a,b,c", "start:stop:step" or a mix of both separated by commas
std::vector<double> parse_values(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto c1 = item.find(':');
    if (c1 == std::string::npos) {
      out.push_back(parse_number(item, what));
      continue;
    }
    const auto c2 = item.find(':', c1 + 1);
    if (c2 == std::string::npos || item.find(':', c2 + 1) != std::string::npos) {
      throw UsageError("range for " + what + " must be start:stop:step");
    }
    const double start = parse_number(item.substr(0, c1), what);
    const double stop = parse_number(item.substr(c1 + 1, c2 - c1 - 1), what);
    const double step = parse_number(item.substr(c2 + 1), what);
    if (!(step != 0.0) || !std::isfinite(step) || (stop - start) / step < 0.0) {
      throw UsageError("range for " + what + " has a step that never reaches stop");
    }
    const double span = (stop - start) / step;
    if (span > 1e7) throw UsageError("range for " + what + " is too long");
    const auto n = static_cast<long>(std::floor(span + 1e-9));
    for (long i = 0; i <= n; ++i) out.push_back(start + static_cast<double>(i) * step);
  }
  if (out.empty()) throw UsageError("no values for " + what);
  return out;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

json json_number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

// --- function catalog ------------------------------------------------------

struct Args {
  std::map<std::string, double> num;
  std::map<std::string, std::string> str;

  double operator[](const std::string& k) const { return num.at(k); }
  bool has(const std::string& k) const { return !std::isnan(num.at(k)); }
  const std::string& choice(const std::string& k) const { return str.at(k); }
};

struct Choice {
  std::string name;
  std::vector<std::string> allowed;
};

struct Function {
  std::string name;
  std::string summary;
  std::vector<std::string> required;
  std::vector<std::pair<std::string, double>> optional;  // NaN default means "absent"
  std::vector<Choice> choices;                             // first allowed value is the default
  std::function<EvalResult(const Args&, const EvalPolicy&)> eval;
};

EvalPath path_choice(const Args& a, double z) {
  const auto& s = a.choice("path");
  if (s == "series") return EvalPath::Series;
  if (s == "integral") return EvalPath::Integral;
  return std::abs(z) < 0.95 ? EvalPath::Series : EvalPath::Integral;
}

BetaKernelSpec beta_kernel(const Args& a) {
  const auto& k = a.choice("kernel");
  const double p = a["p"];
  if (k == "chaudhry") return ChaudhryKernel{p};
  if (k == "exp2") return TwoParamExpKernel{p, a.has("q") ? a["q"] : p};
  if (k == "ml") return MittagLefflerBetaKernel{p, a["alpha"]};
  return NoKernel{};
}

KernelSpec operator_kernel(const Args& a) {
  const auto& k = a.choice("kernel");
  const double p = a["p"];
  const double q = a.has("q") ? a["q"] : p;
  if (k == "none") return NoKernel{};
  if (k == "chaudhry") return ChaudhryKernel{p};
  if (k == "exp2") return TwoParamExpKernel{p, q};
  if (k == "confluent") return ConfluentPairKernel{p, q, a["lambda"], a["rho"]};
  return MittagLefflerBetaKernel{p, a["alpha"]};
}

FoxWrightSpec fox_wright_spec(const Args& a) {
  return FoxWrightSpec{{{a["a1"], a["A1"]}}, {{a["b1"], a["B1"]}}, {}};
}

EvalResult closed_of(const MellinResult& m) { return m.closed; }

const std::vector<Function>& catalog() {
  static const std::vector<Function> fns = [] {
    std::vector<Function> v;
    v.push_back({"log-gamma", "log|Gamma(x)|", {"x"}, {}, {},
                 [](const Args& a, const EvalPolicy&) {
                   return EvalResult::exact(log_gamma(a["x"]).value);
                 }});
    v.push_back({"gamma-upper", "upper incomplete Gamma(s, x)", {"s", "x"}, {}, {},
                 [](const Args& a, const EvalPolicy&) {
                   return EvalResult::exact(upper_incomplete_gamma(a["s"], a["x"]));
                 }});
    v.push_back({"pochhammer", "(a)_n for integer n >= 0", {"a", "n"}, {}, {},
                 [](const Args& a, const EvalPolicy&) {
                   const double n = a["n"];
                   if (!(n >= 0) || n != std::floor(n) || n > 1e9) {
                     return EvalResult::domain_error("n must be a nonnegative integer");
                   }
                   return EvalResult::exact(pochhammer(a["a"], static_cast<std::size_t>(n)));
                 }});
    v.push_back({"beta", "extended Beta; --kernel none|chaudhry|exp2|ml (q defaults to p)",
                 {"x", "y"}, {{"p", 0.0}, {"q", kAbsent}, {"alpha", 1.0}},
                 {{"kernel", {"none", "chaudhry", "exp2", "ml"}}},
                 [](const Args& a, const EvalPolicy& pol) {
                   return beta_extended({a["x"], a["y"]}, beta_kernel(a), pol);
                 }});
    v.push_back({"beta-ml-closed", "Mittag-Leffler-kernel Beta through the multi-index series",
                 {"s1", "s2", "alpha", "p"}, {}, {},
                 [](const Args& a, const EvalPolicy& pol) {
                   return beta_ml_closed(a["s1"], a["s2"], a["alpha"], a["p"], pol);
                 }});
    v.push_back({"ml", "Prabhakar Mittag-Leffler E^upper_{rho,beta}(z)", {"z"},
                 {{"rho", 1.0}, {"beta", 1.0}, {"upper", 1.0}}, {},
                 [](const Args& a, const EvalPolicy& pol) {
                   return ml_prabhakar({a["rho"], a["beta"], a["upper"]}, a["z"], pol);
                 }});
    v.push_back({"ml-multi-beta", "multi-index Mittag-Leffler series behind beta-ml-closed",
                 {"s1", "s2", "alpha", "p"}, {}, {},
                 [](const Args& a, const EvalPolicy& pol) {
                   return ml_multi_index_beta(a["s1"], a["s2"], a["alpha"], a["p"], pol);
                 }});
    v.push_back({"ml-p", "p-extended Mittag-Leffler series", {"eta", "omega", "p", "z"},
                 {{"lambda", 1.0}, {"rho", 1.0}, {"beta", 1.0}, {"upper", 1.0}}, {},
                 [](const Args& a, const EvalPolicy& pol) {
                   return ml_p_extended({a["lambda"], a["rho"], a["beta"], a["upper"], a["eta"],
                                         a["omega"], a["p"]},
                                        a["z"], pol);
                 }});
    v.push_back({"2f1", "Gauss 2F1(a, b; c; z); --path auto|series|integral", {"a", "b", "c", "z"},
                 {}, {{"path", {"auto", "series", "integral"}}},
                 [](const Args& a, const EvalPolicy& pol) {
                   return gauss_2f1(a["a"], a["b"], a["c"], a["z"], path_choice(a, a["z"]), pol);
                 }});
    v.push_back({"1f1", "Kummer 1F1(a; b; z)", {"a", "b", "z"}, {}, {},
                 [](const Args& a, const EvalPolicy& pol) {
                   return kummer_1f1(a["a"], a["b"], a["z"], pol);
                 }});
    v.push_back({"ext-2f1", "extended 2F1 with Mittag-Leffler-kernel Beta",
                 {"a", "b", "c", "z"}, {{"p", 0.0}, {"alpha", 1.0}},
                 {{"path", {"auto", "series", "integral"}}},
                 [](const Args& a, const EvalPolicy& pol) {
                   return ext_gauss_2f1({a["a"], a["b"], a["c"], a["p"], a["alpha"]}, a["z"],
                                        path_choice(a, a["z"]), pol);
                 }});
    v.push_back({"appell", "extended Appell F1(s1; s2, s3; s4; x, y)",
                 {"s1", "s2", "s3", "s4", "x", "y"}, {{"p", 0.0}, {"alpha", 1.0}},
                 {{"path", {"auto", "series", "integral"}}},
                 [](const Args& a, const EvalPolicy& pol) {
                   const double m = std::max(std::abs(a["x"]), std::abs(a["y"]));
                   return ext_appell_f1({a["s1"], a["s2"], a["s3"], a["s4"], a["p"], a["alpha"]},
                                        a["x"], a["y"], path_choice(a, m), pol);
                 }});
    v.push_back({"fox-wright",
                 "Fox-Wright 1Psi1[(a1, A1); (b1, B1); z]; giving p (with gamma and c) selects "
                 "the extended form",
                 {"a1", "A1", "b1", "B1", "z"}, {{"p", kAbsent}, {"gamma", kAbsent}, {"c", kAbsent}},
                 {},
                 [](const Args& a, const EvalPolicy& pol) {
                   FoxWrightSpec spec = fox_wright_spec(a);
                   if (!a.has("p")) return fox_wright(spec, a["z"], pol);
                   if (!a.has("gamma") || !a.has("c")) {
                     throw UsageError("the extended Fox-Wright function needs --gamma and --c");
                   }
                   spec.extension = FoxWrightExtension{a["gamma"], a["c"], a["p"]};
                   return ext_fox_wright(spec, a["z"], pol);
                 }});
    v.push_back({"fracderiv-power", "closed image of t^eta under order mu < 0",
                 {"eta", "mu", "z"}, {{"p", 0.0}, {"alpha", 1.0}}, {},
                 [](const Args& a, const EvalPolicy& pol) {
                   return frac_deriv_power_closed(a["eta"], {a["mu"]}, a["z"], a["p"], a["alpha"],
                                                  pol);
                 }});
    v.push_back({"fracderiv-numeric",
                 "operator quadrature of order mu < 0 on t^eta (--f monomial) or "
                 "t^{eta-1}(1-t)^{-beta} (--f binomial); --kernel ml|none|chaudhry|exp2|confluent",
                 {"eta", "mu", "z"},
                 {{"beta", 0.0}, {"p", 0.0}, {"q", kAbsent}, {"alpha", 1.0}, {"lambda", 1.0},
                  {"rho", 1.0}},
                 {{"f", {"monomial", "binomial"}},
                  {"kernel", {"ml", "none", "chaudhry", "exp2", "confluent"}}},
                 [](const Args& a, const EvalPolicy& pol) {
                   FunctionSpec f = Monomial{a["eta"]};
                   if (a.choice("f") == "binomial") f = Binomial{a["eta"], a["beta"]};
                   return frac_deriv_numeric(f, {a["mu"]}, a["z"], operator_kernel(a), pol);
                 }});
    v.push_back({"fracderiv-binomial", "closed image of t^{eta-1}(1-t)^{-beta}, order eta - mu",
                 {"eta", "mu", "beta", "z"}, {{"p", 0.0}, {"alpha", 1.0}}, {},
                 [](const Args& a, const EvalPolicy& pol) {
                   return frac_deriv_binomial_closed(a["eta"], a["mu"], a["beta"], a["z"], a["p"],
                                                     a["alpha"], pol);
                 }});
    v.push_back({"fracderiv-double-binomial",
                 "closed image of t^{eta-1}(1-at)^{-exp_a}(1-bt)^{-exp_b}, order eta - mu",
                 {"eta", "mu", "a", "exp_a", "b", "exp_b", "z"}, {{"p", 0.0}, {"alpha", 1.0}}, {},
                 [](const Args& a, const EvalPolicy& pol) {
                   return frac_deriv_double_binomial_closed(a["eta"], a["mu"], a["a"], a["exp_a"],
                                                            a["b"], a["exp_b"], a["z"], a["p"],
                                                            a["alpha"], pol);
                 }});
    v.push_back({"fracderiv-prabhakar",
                 "series image of t^{eta-1} E^upper_{rho,delta}(t), order eta - mu",
                 {"eta", "mu", "rho", "delta", "upper", "z"}, {{"p", 0.0}, {"alpha", 1.0}}, {},
                 [](const Args& a, const EvalPolicy& pol) {
                   return frac_deriv_prabhakar_closed(a["eta"], a["mu"],
                                                      {a["rho"], a["delta"], a["upper"]}, a["z"],
                                                      a["p"], a["alpha"], pol)
                       .series;
                 }});
    v.push_back({"fracderiv-fox-wright",
                 "series image of t^{eta-1} 1Psi1[(a1, A1); (b1, B1); t], order eta - mu",
                 {"eta", "mu", "a1", "A1", "b1", "B1", "z"}, {{"p", 0.0}, {"alpha", 1.0}}, {},
                 [](const Args& a, const EvalPolicy& pol) {
                   return frac_deriv_fox_wright_closed(a["eta"], a["mu"], fox_wright_spec(a),
                                                       a["z"], a["p"], a["alpha"], pol)
                       .series;
                 }});
    v.push_back({"mellin-moment", "integral of v^{r-1} E^delta_{alpha,gamma}(-w v) over v > 0",
                 {"r", "alpha"}, {{"gamma", 1.0}, {"delta", 1.0}, {"w", 1.0}}, {},
                 [](const Args& a, const EvalPolicy& pol) {
                   return closed_of(mellin_ml_moment(a["r"], a["alpha"], a["gamma"], a["delta"],
                                                     a["w"], MellinMode::ClosedForm, pol));
                 }});
    v.push_back({"mellin-power", "Mellin transform in p of the image of t^eta",
                 {"r", "eta", "mu", "alpha", "z"}, {}, {},
                 [](const Args& a, const EvalPolicy& pol) {
                   MellinRequest q{a["r"], a["eta"], a["mu"], a["alpha"], a["z"], 0.0,
                                   MellinMode::ClosedForm};
                   return closed_of(mellin_frac_power(q, pol));
                 }});
    v.push_back({"mellin-binomial", "Mellin transform in p of the image of (1-t)^{-lambda}",
                 {"lambda", "r", "mu", "alpha", "z"}, {}, {},
                 [](const Args& a, const EvalPolicy& pol) {
                   MellinRequest q{a["r"], 0.0, a["mu"], a["alpha"], a["z"], a["lambda"],
                                   MellinMode::ClosedForm};
                   return closed_of(mellin_frac_binomial(q, pol));
                 }});
    return v;
  }();
  return fns;
}

const Function& find_function(const std::string& name) {
  for (const auto& f : catalog()) {
    if (f.name == name) return f;
  }
  throw UsageError("unknown function '" + name + "' (see 'mlfrac list')");
}

// numeric parameter names in declaration order
std::vector<std::string> numeric_names(const Function& f) {
  std::vector<std::string> names = f.required;
  for (const auto& [k, v] : f.optional) names.push_back(k);
  return names;
}

struct Grid {
  std::vector<std::pair<std::string, std::vector<double>>> axes;  // declaration order
  std::map<std::string, std::string> choices;
};

// extras are "--name value" pairs
Grid parse_grid(const Function& f, const std::vector<std::string>& extras, bool single) {
  std::map<std::string, std::string> raw;
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const auto& tok = extras[i];
    if (tok.rfind("--", 0) != 0 || tok.size() == 2) {
      throw UsageError("unexpected argument '" + tok + "'");
    }
    std::string key = tok.substr(2);
    std::string value;
    if (const auto eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
    } else {
      if (i + 1 >= extras.size()) throw UsageError("missing value for --" + key);
      value = extras[++i];
    }
    if (!raw.emplace(key, value).second) throw UsageError("--" + key + " given twice");
  }

  Grid g;
  for (const auto& c : f.choices) {
    auto it = raw.find(c.name);
    std::string v = c.allowed.front();
    if (it != raw.end()) {
      v = it->second;
      raw.erase(it);
      if (std::find(c.allowed.begin(), c.allowed.end(), v) == c.allowed.end()) {
        throw UsageError("--" + c.name + " must be one of " + [&] {
          std::string s;
          for (const auto& a : c.allowed) s += (s.empty() ? "" : "|") + a;
          return s;
        }());
      }
    }
    g.choices[c.name] = v;
  }
  auto take = [&](const std::string& name, std::optional<double> fallback) {
    auto it = raw.find(name);
    if (it == raw.end()) {
      if (!fallback) throw UsageError("missing parameter --" + name + " for " + f.name);
      g.axes.emplace_back(name, std::vector<double>{*fallback});
      return;
    }
    std::vector<double> vals =
        single ? std::vector<double>{parse_number(it->second, "--" + name)}
               : parse_values(it->second, "--" + name);
    g.axes.emplace_back(name, std::move(vals));
    raw.erase(it);
  };
  for (const auto& name : f.required) take(name, std::nullopt);
  for (const auto& [name, def] : f.optional) take(name, def);
  if (!raw.empty()) {
    throw UsageError("unknown parameter --" + raw.begin()->first + " for " + f.name);
  }
  return g;
}

EvalResult evaluate(const Function& f, const Args& a, const EvalPolicy& policy) {
  try {
    return f.eval(a, policy);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& ex) {
    return EvalResult::domain_error(ex.what());
  }
}

json params_json(const Function& f, const Args& a) {
  json p = json::object();
  for (const auto& name : numeric_names(f)) {
    const double v = a.num.at(name);
    if (!std::isnan(v)) p[name] = v;
  }
  for (const auto& c : f.choices) p[c.name] = a.str.at(c.name);
  return p;
}

int exit_code_for(Status s) {
  switch (s) {
    case Status::Converged:
    case Status::AsymptoticUsed:
      return 0;
    case Status::Truncated:
      return 1;
    case Status::DomainError:
      return 2;
  }
  return 2;
}

// --- policy ----------------------------------------------------------------

void apply_policy_file(EvalPolicy& policy, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read policy file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& ex) {
    throw UsageError("policy file " + path + ": " + ex.what());
  }
  if (!j.is_object()) throw UsageError("policy file must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number()) throw UsageError("policy field " + key + " must be a number");
    if (key == "rel_tol") {
      policy.rel_tol = value.get<double>();
    } else if (key == "abs_tol") {
      policy.abs_tol = value.get<double>();
    } else if (key == "max_terms") {
      if (!value.is_number_unsigned()) throw UsageError("max_terms must be a positive integer");
      policy.max_terms = value.get<std::size_t>();
    } else if (key == "max_quad_levels") {
      if (!value.is_number_integer()) throw UsageError("max_quad_levels must be an integer");
      policy.max_quad_levels = value.get<int>();
    } else if (key == "asym_threshold") {
      policy.asym_threshold = value.get<double>();
    } else {
      throw UsageError("unknown policy field " + key);
    }
  }
}

// --- output ----------------------------------------------------------------

class Sink {
 public:
  Sink(std::ostream& fallback, const std::string& path) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot write " + path);
      out_ = &file_;
    }
  }
  std::ostream& get() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

struct Options {
  std::optional<double> rel_tol;
  std::optional<std::size_t> max_terms;
  std::optional<int> max_quad_levels;
  std::optional<double> asym_threshold;
  std::string format = "json";
  std::string output;
  std::size_t row_cap = 100000;
  std::string function;
  std::string suite;
  std::vector<std::string> tolerances;
  int truncation = 40;
};

EvalPolicy make_policy(const Options& o) {
  EvalPolicy policy;
  if (const char* path = std::getenv("MLFRAC_POLICY"); path != nullptr && *path != '\0') {
    apply_policy_file(policy, path);
  }
  if (o.rel_tol) policy.rel_tol = *o.rel_tol;
  if (o.max_terms) policy.max_terms = *o.max_terms;
  if (o.max_quad_levels) policy.max_quad_levels = *o.max_quad_levels;
  if (o.asym_threshold) policy.asym_threshold = *o.asym_threshold;
  try {
    policy.validate();
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  return policy;
}

// --- commands --------------------------------------------------------------

int cmd_eval(const Options& o, const std::vector<std::string>& extras, std::ostream& out,
             std::ostream& err) {
  const Function& f = find_function(o.function);
  const EvalPolicy policy = make_policy(o);
  const Grid g = parse_grid(f, extras, true);
  Args a;
  for (const auto& [k, v] : g.axes) a.num[k] = v.front();
  a.str = g.choices;
  const EvalResult r = evaluate(f, a, policy);
  Sink sink(out, o.output);
  if (o.format == "csv") {
    auto& os = sink.get();
    for (const auto& [k, v] : g.axes) os << k << ',';
    for (const auto& [k, v] : g.choices) os << k << ',';
    os << "value,err_estimate,status\n";
    for (const auto& [k, v] : g.axes) os << format_number(v.front()) << ',';
    for (const auto& [k, v] : g.choices) os << csv_field(v) << ',';
    os << format_number(r.value) << ',' << format_number(r.err_estimate) << ','
       << to_string(r.status) << '\n';
  } else {
    json j;
    j["function"] = f.name;
    j["params"] = params_json(f, a);
    j["value"] = json_number(r.value);
    j["err_estimate"] = json_number(r.err_estimate);
    j["status"] = std::string(to_string(r.status));
    j["terms_used"] = r.terms_used;
    j["nodes_used"] = r.nodes_used;
    sink.get() << j.dump(2) << '\n';
  }
  if (r.status != Status::Converged && !r.note.empty()) {
    err << "mlfrac: " << f.name << ": " << r.note << '\n';
  }
  return exit_code_for(r.status);
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.format != "json") throw UsageError("check writes JSON only");
  SuiteConfig config;
  config.policy = make_policy(o);
  config.truncation_order = o.truncation;
  if (o.suite == "all") {
    config.ids = registered_identities();
  } else {
    std::stringstream ss(o.suite);
    std::string id;
    while (std::getline(ss, id, ',')) {
      if (!id.empty()) config.ids.push_back(id);
    }
  }
  for (const auto& t : o.tolerances) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw UsageError("--tolerance expects id=value");
    config.tolerance_overrides[t.substr(0, eq)] = parse_number(t.substr(eq + 1), "--tolerance");
  }
  std::vector<IdentityReport> reports;
  try {
    reports = run_identity_suite(config);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  const SuiteSummary s = summarize(reports);
  json j;
  j["reports"] = json::array();
  for (const auto& r : reports) j["reports"].push_back(to_json(r));
  j["summary"] = {{"total", s.total},
                  {"passed", s.passed},
                  {"failed", s.failed},
                  {"informational_failed", s.informational_failed},
                  {"ok", s.ok()}};
  Sink sink(out, o.output);
  sink.get() << j.dump(2) << '\n';
  if (!s.ok()) err << "mlfrac: " << s.failed << " check(s) failed\n";
  return s.ok() ? 0 : 1;
}

int cmd_table(const Options& o, const std::vector<std::string>& extras, std::ostream& out) {
  const Function& f = find_function(o.function);
  const EvalPolicy policy = make_policy(o);
  const Grid g = parse_grid(f, extras, false);
  std::size_t rows = 1;
  for (const auto& [k, v] : g.axes) {
    if (v.size() > o.row_cap || rows > o.row_cap / v.size()) {
      throw UsageError("grid exceeds the row cap of " + std::to_string(o.row_cap));
    }
    rows *= v.size();
  }

  // columns: numeric parameters actually supplied or defaulted to a value
  std::vector<std::size_t> shown;
  for (std::size_t i = 0; i < g.axes.size(); ++i) {
    if (!std::isnan(g.axes[i].second.front()) || g.axes[i].second.size() > 1) shown.push_back(i);
  }

  Sink sink(out, o.output);
  auto& os = sink.get();
  json arr = json::array();
  if (o.format == "csv") {
    for (auto i : shown) os << g.axes[i].first << ',';
    for (const auto& [k, v] : g.choices) os << k << ',';
    os << "value,err_estimate,status\n";
  }
  std::vector<std::size_t> idx(g.axes.size(), 0);
  for (std::size_t row = 0; row < rows; ++row) {
    Args a;
    a.str = g.choices;
    for (std::size_t i = 0; i < g.axes.size(); ++i) a.num[g.axes[i].first] = g.axes[i].second[idx[i]];
    const EvalResult r = evaluate(f, a, policy);
    if (o.format == "csv") {
      for (auto i : shown) os << format_number(a.num[g.axes[i].first]) << ',';
      for (const auto& [k, v] : g.choices) os << csv_field(v) << ',';
      os << format_number(r.value) << ',' << format_number(r.err_estimate) << ','
         << to_string(r.status) << '\n';
    } else {
      json j = params_json(f, a);
      j["value"] = json_number(r.value);
      j["err_estimate"] = json_number(r.err_estimate);
      j["status"] = std::string(to_string(r.status));
      arr.push_back(std::move(j));
    }
    // last axis varies fastest
    for (std::size_t i = g.axes.size(); i-- > 0;) {
      if (++idx[i] < g.axes[i].second.size()) break;
      idx[i] = 0;
    }
  }
  if (o.format != "csv") os << json{{"function", f.name}, {"rows", arr}}.dump(2) << '\n';
  return 0;
}

void cmd_list(std::ostream& out) {
  for (const auto& f : catalog()) {
    out << f.name << "\n    " << f.summary << "\n    params:";
    for (const auto& n : f.required) out << " --" << n;
    for (const auto& [n, d] : f.optional) {
      out << " [--" << n;
      if (!std::isnan(d)) out << ' ' << format_number(d);
      out << ']';
    }
    for (const auto& c : f.choices) out << " [--" << c.name << ' ' << c.allowed.front() << ']';
    out << '\n';
  }
  out << "\nidentities:\n";
  for (const auto& info : identity_catalog()) {
    out << "  " << info.id << (info.informational ? " (informational)" : "") << "\n    "
        << info.anchor << '\n';
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Mittag-Leffler kernel special functions and identity checks", "mlfrac"};
  app.require_subcommand(1);
  app.allow_extras();
  app.add_option("--rel-tol", o.rel_tol, "relative tolerance")->group("Policy");
  app.add_option("--max-terms", o.max_terms, "series term cap")->group("Policy");
  app.add_option("--max-quad-levels", o.max_quad_levels, "quadrature refinement cap")
      ->group("Policy");
  app.add_option("--asym-threshold", o.asym_threshold, "asymptotic switch for E_alpha")
      ->group("Policy");
  app.add_option("--format", o.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--output", o.output, "write to a file instead of standard output");
  app.add_option("--row-cap", o.row_cap, "largest table")->capture_default_str();

  auto* eval = app.add_subcommand("eval", "evaluate one function at one point");
  eval->add_option("function", o.function, "function name")->required();
  eval->allow_extras()->fallthrough()->positionals_at_end(false);

  auto* check = app.add_subcommand("check", "run identity suites");
  check->add_option("--suite", o.suite, "comma-separated identity ids or 'all'")->required();
  check->add_option("--tolerance", o.tolerances, "per-identity tolerance id=value");
  check->add_option("--truncation", o.truncation, "terms of the generating series")
      ->capture_default_str();
  check->fallthrough();

  auto* table = app.add_subcommand("table", "evaluate over a parameter grid");
  table->add_option("function", o.function, "function name")->required();
  table->allow_extras()->fallthrough()->positionals_at_end(false);

  auto* list = app.add_subcommand("list", "list functions and identities");
  list->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "mlfrac: " << ex.what() << '\n';
    return 2;
  }

  try {
    const std::vector<std::string> extras = app.remaining(true);
    if (*eval) return cmd_eval(o, extras, out, err);
    if (*table) return cmd_table(o, extras, out);
    if (!extras.empty()) throw UsageError("unexpected argument '" + extras.front() + "'");
    if (*check) return cmd_check(o, out, err);
    cmd_list(out);
    return 0;
  } catch (const UsageError& ex) {
    err << "mlfrac: " << ex.what() << '\n';
    return 2;
  }
}

}  // namespace mlfrac::cli
