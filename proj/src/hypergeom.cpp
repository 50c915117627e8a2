#include "mlfrac/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>
#include <string>

#include "mlfrac/gamma.hpp"
#include "mlfrac/quadrature.hpp"
#include "fox_wright_terms.hpp"
#include "series_sum.hpp"

namespace mlfrac {

namespace {

constexpr double kSeriesRadius = 0.95;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Series whose term ratio tends to r < 1: stop a little earlier than the
// plain rule would allow for and charge the geometric tail to the estimate.
template <class TermFn>
EvalResult sum_with_tail(TermFn&& term, std::size_t n0, const EvalPolicy& policy, double r) {
  EvalPolicy tight = policy;
  tight.rel_tol = policy.rel_tol * (1.0 - r);
  EvalResult res = detail::sum_series(term, n0, tight);
  if (!res.ok()) return res;
  const bool capped = res.status == Status::Truncated && res.note == "series term cap reached";
  res.err_estimate /= (1.0 - r);
  settle(res, policy);
  if (capped) res.status = Status::Truncated;
  if (res.status == Status::Converged) res.note.clear();
  return res;
}

std::size_t onset_from(std::initializer_list<double> params) {
  double m = 0.0;
  for (double v : params) m = std::max(m, std::abs(v));
  return static_cast<std::size_t>(std::ceil(m)) + 2;
}

// Plain 1F1 series by term recurrence.
EvalResult kummer_series(double a, double b, double z, const EvalPolicy& policy) {
  double t = 1.0;
  auto term = [&](std::size_t n) {
    if (n == 0) return t;
    const double dn = static_cast<double>(n);
    t *= (a + dn - 1.0) / ((b + dn - 1.0) * dn) * z;
    return t;
  };
  return detail::sum_series(term, onset_from({2.0 * z, a, b}), policy);
}

// 1F1(a; b; -x) ~ Γ(b)/Γ(b-a) x^{-a} Σ (a)_s (a-b+1)_s / s! x^{-s}; the
// exponentially small companion e^{-x} x^{a-b} Γ(b)/Γ(a) goes into the error.
EvalResult kummer_asymptotic(double a, double b, double x) {
  EvalResult r;
  double sum = 0.0;
  double t = 1.0;
  double prev = kInf;
  double omitted = 0.0;
  std::size_t s = 0;
  for (; s < 400; ++s) {
    if (s > 0) {
      const double ds = static_cast<double>(s);
      t *= (a + ds - 1.0) * (a - b + ds) / (ds * x);
    }
    if (std::abs(t) > prev) {
      omitted = std::abs(t);
      break;
    }
    sum += t;
    prev = std::abs(t);
    omitted = std::abs(t);
    if (t == 0.0 || std::abs(t) < 1e-18 * std::abs(sum)) break;
  }
  const double lead_log = log_gamma(b).value - a * std::log(x);
  const int lead_sign = log_gamma(b).sign;
  const detail::LogTerm inv = detail::log_rgamma(b - a);
  const double lead = inv.sign == 0 ? 0.0 : lead_sign * inv.sign * std::exp(lead_log + inv.log_mag);
  const detail::LogTerm ra = detail::log_rgamma(a);
  const double companion =
      ra.sign == 0 ? 0.0
                   : std::exp(-x + (a - b) * std::log(x) + log_gamma(b).value + ra.log_mag);
  r.value = lead * sum;
  r.err_estimate = std::abs(lead) * omitted + companion + 2.0 * detail::kEps * std::abs(r.value);
  r.terms_used = s + 1;
  return r;
}

// (1 - z t) without cancellation near t = 1
double one_minus(double z, double t, double tc) { return tc + t * (1.0 - z); }

std::function<double(double, double)> kernel_or_one(double p, double alpha) {
  if (p == 0.0) return [](double, double) { return 1.0; };
  return make_kernel(MittagLefflerBetaKernel{p, alpha});
}

// Algebraic/exponential decay the Mittag-Leffler kernel adds at both ends.
double ml_decay(double p, double alpha) {
  if (p == 0.0) return 0.0;
  return alpha == 1.0 ? kInf : 1.0;
}

std::string check_ml(double p, double alpha) {
  if (!(p >= 0.0) || !std::isfinite(p)) return "p must be >= 0";
  if (!(alpha > 0.0 && alpha <= 2.0)) return "alpha must lie in (0, 2]";
  return {};
}

// Coefficients (s1)_N/(s4)_N or their extended Beta-ratio counterparts.
class DiagonalCoefficients {
 public:
  DiagonalCoefficients(const AppellF1Params& q, const EvalPolicy& policy) : q_(q) {
    if (q.p > 0.0) {
      seq_ = std::make_unique<BetaSequence>(q.s1, q.s4 - q.s1,
                                            MittagLefflerBetaKernel{q.p, q.alpha}, policy);
    }
  }

  // returns the coefficient and records the relative error of its Beta value
  double at(std::size_t n) {
    if (!seq_) {
      while (classical_.size() <= n) {
        const std::size_t k = classical_.size();
        const double prev = k == 0 ? 1.0 : classical_.back();
        const double dk = static_cast<double>(k);
        classical_.push_back(k == 0 ? 1.0 : prev * (q_.s1 + dk - 1.0) / (q_.s4 + dk - 1.0));
      }
      return classical_[n];
    }
    const EvalResult& b = seq_->at(n);
    absorb(status_, b);
    if (b.value != 0.0) rel_err_ = b.err_estimate / std::abs(b.value);
    return seq_->ratio(n);
  }

  double last_rel_err() const { return rel_err_; }
  const EvalResult& status() const { return status_; }

 private:
  AppellF1Params q_;
  std::unique_ptr<BetaSequence> seq_;
  std::vector<double> classical_;
  EvalResult status_;
  double rel_err_ = 0.0;
};

std::string appell_series_domain(const AppellF1Params& q) {
  if (auto why = check_ml(q.p, q.alpha); !why.empty()) return why;
  if (q.p > 0.0) {
    if (!(q.s4 > q.s1 && q.s1 > 0.0)) return "extended Appell series needs s4 > s1 > 0";
  } else if (is_nonpositive_integer(q.s4)) {
    return "s4 must not be a nonpositive integer";
  }
  return {};
}

struct DiagonalSums {
  std::vector<double> u;  // (s2)_m x^m / m!
  std::vector<double> v;  // (s3)_n y^n / n!
  double x;
  double y;
  double s2;
  double s3;

  void grow(std::size_t n) {
    while (u.size() <= n) {
      const std::size_t k = u.size();
      const double dk = static_cast<double>(k);
      u.push_back(k == 0 ? 1.0 : u.back() * (s2 + dk - 1.0) * x / dk);
      v.push_back(k == 0 ? 1.0 : v.back() * (s3 + dk - 1.0) * y / dk);
    }
  }

  // Σ_{m+n=N} u_m v_n and the same with absolute values
  std::pair<double, double> at(std::size_t n) {
    grow(n);
    double s = 0.0;
    double a = 0.0;
    for (std::size_t m = 0; m <= n; ++m) {
      const double t = u[m] * v[n - m];
      s += t;
      a += std::abs(t);
    }
    return {s, a};
  }
};

}  // namespace

EvalResult gauss_2f1(double a, double b, double c, double z, EvalPath path,
                     const EvalPolicy& policy) {
  policy.validate();
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(z)) {
    return EvalResult::domain_error("arguments must be finite");
  }
  if (path == EvalPath::Series) {
    if (is_nonpositive_integer(c)) return EvalResult::domain_error("c is a nonpositive integer");
    // a polynomial when a or b is a nonpositive integer: any z
    const double top = is_nonpositive_integer(a) ? -a : is_nonpositive_integer(b) ? -b : -1.0;
    if (top >= 0.0 && top <= static_cast<double>(policy.max_terms)) {
      double t = 1.0, sum = 1.0, mag = 1.0;
      for (double n = 1.0; n <= top; n += 1.0) {
        t *= (a + n - 1.0) * (b + n - 1.0) / ((c + n - 1.0) * n) * z;
        sum += t;
        mag += std::abs(t);
      }
      EvalResult r = EvalResult::exact(sum);
      r.err_estimate = 2.0 * detail::kEps * mag * (top + 1.0);
      r.terms_used = static_cast<std::size_t>(top) + 1;
      settle(r, policy);
      if (r.status == Status::Truncated) r.note = "cancellation in the terminating sum";
      return r;
    }
    if (!(std::abs(z) < kSeriesRadius)) {
      return EvalResult::domain_error("series path needs |z| < 0.95; use the integral path");
    }
    if (z == 0.0) return EvalResult::exact(1.0);
    double t = 1.0;
    auto term = [&](std::size_t n) {
      if (n == 0) return t;
      const double dn = static_cast<double>(n);
      t *= (a + dn - 1.0) * (b + dn - 1.0) / ((c + dn - 1.0) * dn) * z;
      return t;
    };
    return sum_with_tail(term, onset_from({a, b, c}), policy, std::abs(z));
  }
  if (!(c > b && b > 0.0)) return EvalResult::domain_error("integral path needs c > b > 0");
  if (!(z < 1.0)) return EvalResult::domain_error("integral path needs z < 1");
  QuadSpec spec;
  spec.left_exponent = b - 1.0;
  spec.right_exponent = c - b - 1.0;
  EvalResult r = quad_weighted(
      [a, z](double t, double tc) { return std::pow(one_minus(z, t, tc), -a); }, spec, policy);
  if (!r.ok()) return r;
  const double norm = beta(b, c - b);
  r.value /= norm;
  r.err_estimate /= norm;
  return r;
}

EvalResult kummer_1f1(double lambda, double rho, double z, const EvalPolicy& policy) {
  policy.validate();
  if (!std::isfinite(lambda) || !std::isfinite(rho) || std::isnan(z)) {
    return EvalResult::domain_error("arguments must be finite");
  }
  if (is_nonpositive_integer(rho)) return EvalResult::domain_error("rho is a nonpositive integer");
  if (z == 0.0) return EvalResult::exact(1.0);
  if (lambda == rho) return EvalResult::exact(std::exp(z));
  if (z > 0.0) return kummer_series(lambda, rho, z, policy);

  const double x = -z;
  const double b_minus_a = rho - lambda;
  const bool terminates = is_nonpositive_integer(b_minus_a);
  if (!terminates && x >= 40.0 + 4.0 * (std::abs(lambda) + std::abs(rho))) {
    EvalResult r = kummer_asymptotic(lambda, rho, x);
    settle(r, policy);
    if (r.status == Status::Truncated) r.note = "1F1 asymptotic expansion above tolerance";
    return r;
  }
  if (terminates && x > 700.0) {
    // e^{-x} times a polynomial of degree rho - lambda
    return EvalResult::exact(0.0);
  }
  // Kummer: 1F1(a; b; -x) = e^{-x} 1F1(b-a; b; x), positive terms when b > a
  EvalResult r = kummer_series(b_minus_a, rho, x, policy);
  if (!r.ok()) return r;
  const double e = std::exp(-x);
  r.value *= e;
  r.err_estimate *= e;
  return r;
}

EvalResult ext_gauss_2f1(const Gauss2F1Params& q, double z, EvalPath path,
                         const EvalPolicy& policy, BetaSequence* cache) {
  policy.validate();
  if (auto why = check_ml(q.p, q.alpha); !why.empty()) return EvalResult::domain_error(why);
  if (q.p == 0.0) return gauss_2f1(q.a, q.b, q.c, z, path, policy);
  if (!(q.c > q.b && q.b > 0.0)) return EvalResult::domain_error("extended 2F1 needs c > b > 0");
  if (!std::isfinite(q.a) || !std::isfinite(z)) {
    return EvalResult::domain_error("arguments must be finite");
  }

  const MittagLefflerBetaKernel kernel{q.p, q.alpha};
  if (path == EvalPath::Series) {
    if (!(std::abs(z) < kSeriesRadius)) {
      return EvalResult::domain_error("series path needs |z| < 0.95; use the integral path");
    }
    std::unique_ptr<BetaSequence> own;
    BetaSequence* seq = cache;
    if (seq == nullptr || !seq->matches(q.b, q.c - q.b, kernel)) {
      own = std::make_unique<BetaSequence>(q.b, q.c - q.b, kernel, policy);
      seq = own.get();
    }
    EvalResult sub;
    double beta_err = 0.0;
    double t = 1.0;  // (a)_n z^n / n!
    auto term = [&](std::size_t n) {
      if (n > 0) {
        const double dn = static_cast<double>(n);
        t *= (q.a + dn - 1.0) * z / dn;
      }
      const EvalResult& b = seq->at(n);
      absorb(sub, b);
      if (!b.ok()) return std::numeric_limits<double>::quiet_NaN();
      const double v = t * seq->ratio(n);
      if (b.value != 0.0) beta_err += std::abs(v) * b.err_estimate / std::abs(b.value);
      return v;
    };
    EvalResult r = sum_with_tail(term, onset_from({q.a, q.b, q.c}), policy, std::abs(z));
    if (!sub.ok()) return EvalResult::domain_error(sub.note);
    r.nodes_used += sub.nodes_used;
    if (!r.ok()) return r;
    const Status before = r.status;
    r.err_estimate += beta_err;
    settle(r, policy);
    r.status = worst(r.status, worst(before, sub.status));
    return r;
  }

  if (!(z < 1.0)) return EvalResult::domain_error("integral path needs z < 1");
  const auto k = make_kernel(kernel);
  QuadSpec spec;
  spec.left_exponent = q.b - 1.0;
  spec.right_exponent = q.c - q.b - 1.0;
  spec.left_decay = spec.right_decay = ml_decay(q.p, q.alpha);
  const double a = q.a;
  EvalResult r = quad_weighted(
      [&k, a, z](double t, double tc) {
        const double kv = k(t, tc);
        return kv == 0.0 ? 0.0 : kv * std::pow(one_minus(z, t, tc), -a);
      },
      spec, policy);
  if (!r.ok()) return r;
  const double norm = beta(q.b, q.c - q.b);
  r.value /= norm;
  r.err_estimate /= norm;
  return r;
}

EvalResult ext_appell_f1(const AppellF1Params& q, double x, double y, EvalPath path,
                         const EvalPolicy& policy) {
  policy.validate();
  for (double v : {q.s1, q.s2, q.s3, q.s4, x, y}) {
    if (!std::isfinite(v)) return EvalResult::domain_error("arguments must be finite");
  }
  if (path == EvalPath::Series) {
    if (auto why = appell_series_domain(q); !why.empty()) return EvalResult::domain_error(why);
    const double r0 = std::max(std::abs(x), std::abs(y));
    if (!(r0 < kSeriesRadius)) {
      return EvalResult::domain_error("series path needs |x|, |y| < 0.95; use the integral path");
    }
    DiagonalCoefficients coef(q, policy);
    DiagonalSums diag{{}, {}, x, y, q.s2, q.s3};
    // the stopping rule looks at Σ |terms| along each anti-diagonal, since
    // the signed diagonal sum can vanish by cancellation
    EvalPolicy tight = policy;
    tight.rel_tol = policy.rel_tol * (1.0 - r0);
    const std::size_t n0 = onset_from({q.s1, q.s2, q.s3, q.s4});
    double sum = 0.0;
    double abs_total = 0.0;
    double recent = 0.0;
    double beta_err = 0.0;
    int quiet = 0;
    std::size_t n = 0;
    bool stopped = false;
    for (; n < policy.max_terms; ++n) {
      const double c = coef.at(n);
      if (!coef.status().ok()) return EvalResult::domain_error(coef.status().note);
      const auto [s, a] = diag.at(n);
      const double t = c * s;
      const double bound = std::abs(c) * a;
      if (!std::isfinite(t)) return EvalResult::domain_error("series term is not finite");
      sum += t;
      abs_total += bound;
      beta_err += bound * coef.last_rel_err();
      if (n >= n0 && bound < tight.tolerance_for(sum)) {
        recent = quiet == 0 ? bound : std::max(recent, bound);
        if (++quiet == 3) {
          stopped = true;
          ++n;
          break;
        }
      } else {
        quiet = 0;
        recent = bound;
      }
    }
    EvalResult r;
    r.value = sum;
    r.terms_used = n;
    r.nodes_used = coef.status().nodes_used;
    r.err_estimate = recent / (1.0 - r0) + 4.0 * detail::kEps * abs_total + beta_err;
    if (!stopped) {
      r.status = Status::Truncated;
      r.note = "series term cap reached";
      return r;
    }
    settle(r, policy);
    r.status = worst(r.status, coef.status().status);
    return r;
  }

  if (auto why = check_ml(q.p, q.alpha); !why.empty()) return EvalResult::domain_error(why);
  if (!(q.s4 > q.s1 && q.s1 > 0.0)) return EvalResult::domain_error("integral path needs s4 > s1 > 0");
  if (!(x < 1.0 && y < 1.0)) return EvalResult::domain_error("integral path needs x, y < 1");
  const auto k = kernel_or_one(q.p, q.alpha);
  QuadSpec spec;
  spec.left_exponent = q.s1 - 1.0;
  spec.right_exponent = q.s4 - q.s1 - 1.0;
  spec.left_decay = spec.right_decay = ml_decay(q.p, q.alpha);
  const double s2 = q.s2;
  const double s3 = q.s3;
  EvalResult r = quad_weighted(
      [&k, x, y, s2, s3](double t, double tc) {
        const double kv = k(t, tc);
        if (kv == 0.0) return 0.0;
        return kv * std::pow(one_minus(x, t, tc), -s2) * std::pow(one_minus(y, t, tc), -s3);
      },
      spec, policy);
  if (!r.ok()) return r;
  const double norm = beta(q.s1, q.s4 - q.s1);
  r.value /= norm;
  r.err_estimate /= norm;
  return r;
}

double appell_f1_naive(const AppellF1Params& q, double x, double y, int degree,
                       const EvalPolicy& policy) {
  double sum = 0.0;
  for (int m = 0; m <= degree; ++m) {
    for (int n = 0; m + n <= degree; ++n) {
      const auto mm = static_cast<std::size_t>(m);
      const auto nn = static_cast<std::size_t>(n);
      double c = 0.0;
      if (q.p > 0.0) {
        const EvalResult b = beta_extended({q.s1 + m + n, q.s4 - q.s1},
                                           MittagLefflerBetaKernel{q.p, q.alpha}, policy);
        c = b.value / beta(q.s1, q.s4 - q.s1);
      } else {
        c = pochhammer(q.s1, mm + nn) / pochhammer(q.s4, mm + nn);
      }
      sum += c * pochhammer(q.s2, mm) * pochhammer(q.s3, nn) * std::pow(x, m) * std::pow(y, n) /
             (std::tgamma(m + 1.0) * std::tgamma(n + 1.0));
    }
  }
  return sum;
}

std::string check_fox_wright(const FoxWrightSpec& spec) {
  double delta = 0.0;
  for (const auto& w : spec.upper) {
    if (!(w.scale > 0.0) || !std::isfinite(w.shift)) return "upper scales must be positive";
    delta -= w.scale;
  }
  for (const auto& w : spec.lower) {
    if (!(w.scale > 0.0) || !std::isfinite(w.shift)) return "lower scales must be positive";
    delta += w.scale;
  }
  if (!(delta > -1.0)) return "Fox-Wright series needs sum(lower scales) - sum(upper scales) > -1";
  return {};
}

EvalResult fox_wright(const FoxWrightSpec& spec, double z, const EvalPolicy& policy) {
  policy.validate();
  if (auto why = check_fox_wright(spec); !why.empty()) return EvalResult::domain_error(why);
  if (!std::isfinite(z)) return EvalResult::domain_error("z must be finite");
  if (auto why = detail::upper_pole(spec, policy.max_terms); !why.empty()) {
    return EvalResult::domain_error(why);
  }
  const double lz = z == 0.0 ? 0.0 : std::log(std::abs(z));
  auto term = [&](std::size_t k) {
    if (k > 0 && z == 0.0) return 0.0;
    detail::LogTerm t = detail::fox_wright_coefficient(spec, k);
    if (t.sign == 0) return 0.0;
    t.log_mag += static_cast<double>(k) * lz;
    if (z < 0.0 && k % 2 == 1) t.sign = -t.sign;
    return t.value();
  };
  return detail::sum_series(term, detail::fox_wright_onset(spec, z), policy);
}

EvalResult ext_fox_wright(const FoxWrightSpec& spec, double z, const EvalPolicy& policy) {
  policy.validate();
  if (!spec.extension) return EvalResult::domain_error("extension parameters missing");
  const FoxWrightExtension ext = *spec.extension;
  if (!(ext.c > ext.gamma && ext.gamma > 0.0)) {
    return EvalResult::domain_error("extension needs c > gamma > 0");
  }
  if (!(ext.p >= 0.0) || !std::isfinite(ext.p)) return EvalResult::domain_error("p must be >= 0");
  if (auto why = check_fox_wright(spec); !why.empty()) return EvalResult::domain_error(why);
  if (!std::isfinite(z)) return EvalResult::domain_error("z must be finite");
  if (auto why = detail::upper_pole(spec, policy.max_terms); !why.empty()) {
    return EvalResult::domain_error(why);
  }
  BetaSequence seq(ext.gamma, ext.c - ext.gamma, ChaudhryKernel{ext.p}, policy);
  const detail::LogTerm norm = detail::log_rgamma(ext.c - ext.gamma);
  const double lz = z == 0.0 ? 0.0 : std::log(std::abs(z));
  EvalResult sub;
  double beta_err = 0.0;
  auto term = [&](std::size_t k) {
    const EvalResult& b = seq.at(k);
    absorb(sub, b);
    if (!b.ok()) return std::numeric_limits<double>::quiet_NaN();
    if (k > 0 && z == 0.0) return 0.0;
    detail::LogTerm t = detail::fox_wright_coefficient(spec, k) * norm * detail::log_of(b.value);
    if (t.sign == 0) return 0.0;
    t.log_mag += static_cast<double>(k) * lz;
    if (z < 0.0 && k % 2 == 1) t.sign = -t.sign;
    const double v = t.value();
    if (b.value != 0.0) beta_err += std::abs(v) * b.err_estimate / std::abs(b.value);
    return v;
  };
  // the Beta factor behaves like one more (gamma, 1) / (c, 1) pair
  FoxWrightSpec widened = spec;
  widened.upper.push_back({ext.gamma, 1.0});
  widened.lower.push_back({ext.c, 1.0});
  EvalResult r = detail::sum_series(term, detail::fox_wright_onset(widened, z), policy);
  if (!sub.ok()) return EvalResult::domain_error(sub.note);
  r.nodes_used += sub.nodes_used;
  if (!r.ok()) return r;
  const Status before = r.status;
  r.err_estimate += beta_err;
  settle(r, policy);
  r.status = worst(r.status, worst(before, sub.status));
  return r;
}

}  // namespace mlfrac
