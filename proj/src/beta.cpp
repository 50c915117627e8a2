#include "mlfrac/beta.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "mlfrac/gamma.hpp"
#include "mlfrac/mittag_leffler.hpp"
#include "mlfrac/quadrature.hpp"

namespace mlfrac {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool admissible(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

std::pair<double, double> kernel_decay(const BetaKernelSpec& kernel) {
  return std::visit(
      overloaded{
          [](const NoKernel&) { return std::pair{0.0, 0.0}; },
          [](const ChaudhryKernel& k) {
            return k.p > 0 ? std::pair{kInf, kInf} : std::pair{0.0, 0.0};
          },
          [](const TwoParamExpKernel& k) {
            return std::pair{k.p > 0 ? kInf : 0.0, k.q > 0 ? kInf : 0.0};
          },
          [](const MittagLefflerBetaKernel& k) {
            // E_a(-u) ~ u^{-1}/Γ(1-a) for a != 1 and u ~ 1/t at the ends
            if (k.p == 0) return std::pair{0.0, 0.0};
            if (k.alpha == 1.0) return std::pair{kInf, kInf};
            return std::pair{1.0, 1.0};
          },
      },
      kernel);
}

std::string check_kernel(const BetaKernelSpec& kernel) {
  return std::visit(overloaded{
                        [](const NoKernel&) { return std::string{}; },
                        [](const ChaudhryKernel& k) {
                          return admissible(k.p) ? std::string{} : std::string{"p must be >= 0"};
                        },
                        [](const TwoParamExpKernel& k) {
                          return admissible(k.p) && admissible(k.q)
                                     ? std::string{}
                                     : std::string{"p and q must be >= 0"};
                        },
                        [](const MittagLefflerBetaKernel& k) {
                          if (!admissible(k.p)) return std::string{"p must be >= 0"};
                          if (!(k.alpha > 0.0 && k.alpha <= 2.0)) {
                            return std::string{"alpha must lie in (0, 2]"};
                          }
                          return std::string{};
                        },
                    },
                    kernel);
}

bool is_trivial(const BetaKernelSpec& kernel) {
  return std::visit(overloaded{
                        [](const NoKernel&) { return true; },
                        [](const ChaudhryKernel& k) { return k.p == 0.0; },
                        [](const TwoParamExpKernel& k) { return k.p == 0.0 && k.q == 0.0; },
                        [](const MittagLefflerBetaKernel& k) { return k.p == 0.0; },
                    },
                    kernel);
}

std::function<double(double, double)> make_kernel(const BetaKernelSpec& kernel) {
  return std::visit(
      overloaded{
          [](const NoKernel&) -> std::function<double(double, double)> {
            return [](double, double) { return 1.0; };
          },
          [](const ChaudhryKernel& k) -> std::function<double(double, double)> {
            const double p = k.p;
            return [p](double t, double tc) { return std::exp(-p / (t * tc)); };
          },
          [](const TwoParamExpKernel& k) -> std::function<double(double, double)> {
            const double p = k.p;
            const double q = k.q;
            return [p, q](double t, double tc) { return std::exp(-p / t - q / tc); };
          },
          [](const MittagLefflerBetaKernel& k) -> std::function<double(double, double)> {
            const double p = k.p;
            auto ml = std::make_shared<const MittagLefflerKernel>(k.alpha);
            return [p, ml](double t, double tc) { return (*ml)(p / (t * tc)); };
          },
      },
      kernel);
}

EvalResult beta_extended(BetaArgs args, const BetaKernelSpec& kernel, const EvalPolicy& policy) {
  policy.validate();
  if (!(args.x > 0.0 && args.y > 0.0) || !std::isfinite(args.x) || !std::isfinite(args.y)) {
    return EvalResult::domain_error("Beta arguments must be positive");
  }
  if (auto why = check_kernel(kernel); !why.empty()) return EvalResult::domain_error(why);
  if (is_trivial(kernel)) return EvalResult::exact(beta(args.x, args.y));

  const auto k = make_kernel(kernel);
  const auto [left, right] = kernel_decay(kernel);
  QuadSpec spec;
  spec.left_exponent = args.x - 1.0;
  spec.right_exponent = args.y - 1.0;
  spec.left_decay = left;
  spec.right_decay = right;
  return quad_weighted([&k](double t, double tc) { return k(t, tc); }, spec, policy);
}

std::vector<EvalResult> beta_extended_many(std::span<const double> xs, double y,
                                           const BetaKernelSpec& kernel,
                                           const EvalPolicy& policy) {
  policy.validate();
  std::vector<EvalResult> out(xs.size());
  if (xs.empty()) return out;
  const std::string why = check_kernel(kernel);
  bool args_ok = y > 0.0 && std::isfinite(y);
  for (double x : xs) args_ok = args_ok && x > 0.0 && std::isfinite(x);
  if (!why.empty() || !args_ok) {
    for (auto& r : out) {
      r = EvalResult::domain_error(why.empty() ? "Beta arguments must be positive" : why);
    }
    return out;
  }
  if (is_trivial(kernel)) {
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = EvalResult::exact(beta(xs[i], y));
    return out;
  }
  const auto k = make_kernel(kernel);
  std::vector<double> xm1(xs.begin(), xs.end());
  for (double& v : xm1) v -= 1.0;
  const double ym1 = y - 1.0;
  auto f = [&](double t, double tc, std::span<double> vals) {
    const double kv = k(t, tc);
    if (kv == 0.0) return;
    const double lt = std::log(t);
    const double base = ym1 == 0.0 ? 0.0 : ym1 * std::log(tc);
    for (std::size_t i = 0; i < vals.size(); ++i) {
      vals[i] = kv * std::exp(xm1[i] * lt + base);
    }
  };
  return tanh_sinh_unit(f, xs.size(), 0.5, policy);
}

BetaSequence::BetaSequence(double x0, double y, BetaKernelSpec kernel, EvalPolicy policy,
                           std::size_t block)
    : x0_(x0),
      y_(y),
      kernel_(kernel),
      policy_(policy),
      block_(block == 0 ? 1 : block),
      classical_(x0 > 0.0 && y > 0.0 ? beta(x0, y) : std::numeric_limits<double>::quiet_NaN()) {}

const EvalResult& BetaSequence::at(std::size_t n) {
  while (values_.size() <= n) {
    std::vector<double> xs;
    for (std::size_t i = 0; i < block_; ++i) {
      xs.push_back(x0_ + static_cast<double>(values_.size() + i));
    }
    auto got = beta_extended_many(xs, y_, kernel_, policy_);
    // the shared node count belongs to the block, charge it once
    for (std::size_t i = 1; i < got.size(); ++i) got[i].nodes_used = 0;
    for (auto& r : got) values_.push_back(std::move(r));
  }
  return values_[n];
}

double BetaSequence::ratio(std::size_t n) { return at(n).value / classical_; }

bool BetaSequence::matches(double x0, double y, const BetaKernelSpec& kernel) const {
  return x0 == x0_ && y == y_ && kernel == kernel_;
}

EvalResult beta_ml_closed(double s1, double s2, double alpha, double p, const EvalPolicy& policy) {
  EvalResult m = ml_multi_index_beta(s1, s2, alpha, p, policy);
  if (!m.ok()) return m;
  const double pre = kPi * std::sin(kPi * (s1 + s2)) / (std::sin(kPi * s1) * std::sin(kPi * s2));
  m.value *= pre;
  m.err_estimate *= std::abs(pre);
  return m;
}

IdentityReport beta_bound_check(double x, double y, double p, double q,
                                const EvalPolicy& policy) {
  if (!(x > 0.0 && x < 0.5 && y > 0.0 && y < 0.5)) {
    throw std::invalid_argument("bound needs 0 < x, y < 1/2");
  }
  if (!(p > 0.0 && q > 0.0) || !std::isfinite(p) || !std::isfinite(q)) {
    throw std::invalid_argument("bound needs p, q > 0");
  }
  std::vector<std::pair<std::string, double>> params{{"x", x}, {"y", y}, {"p", p}, {"q", q}};
  const EvalResult lhs = beta_extended({x, y}, TwoParamExpKernel{p, q}, policy);
  if (!lhs.ok()) return make_failed_report("prop_2_3", params, policy.rel_tol, lhs.note);
  const double rhs = std::pow(2.0 * p, (2.0 * x - 1.0) / 2.0) *
                     std::pow(2.0 * q, (2.0 * y - 1.0) / 2.0) *
                     std::sqrt(upper_incomplete_gamma(1.0 - 2.0 * x, 2.0 * p) *
                               upper_incomplete_gamma(1.0 - 2.0 * y, 2.0 * q));
  return make_bound_report("prop_2_3", std::move(params), lhs.value, rhs, policy.rel_tol,
                           "Cauchy-Schwarz bound for the two-parameter exponential Beta");
}

}  // namespace mlfrac
