#include "mlfrac/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

namespace mlfrac {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTinyDistance = 1e-300;
// Nodes whose weighted contribution stays below this fraction of the
// largest one on the first two levels are not refined.
constexpr double kTailFraction = 1e-20;
constexpr int kMinLevels = 3;

struct Panel {
  double lo;
  double hi;
  double xmax;
  // Trimmed abscissa range per side, [0] for x < 0 and [1] for x > 0.
  std::array<double, 2> reach;
};

struct Node {
  double t;
  double tc;
  double w;
};

// Maps abscissa x of the tanh-sinh rule onto the panel. The distance to the
// nearer panel end is formed directly so that t and 1 - t stay accurate.
Node node_at(const Panel& p, double x, bool left_panel) {
  const double width = p.hi - p.lo;
  const double s = 0.5 * kPi * std::sinh(x);
  const double e = std::exp(-2.0 * std::abs(s));
  const double near = width * e / (1.0 + e);
  const double ch = std::cosh(s);
  const double w = std::isfinite(ch) ? width * 0.25 * kPi * std::cosh(x) / (ch * ch) : 0.0;
  double from_lo = 0.0;
  double from_hi = 0.0;
  if (x < 0.0) {
    from_lo = near;
    from_hi = width - near;
  } else {
    from_hi = near;
    from_lo = width - near;
  }
  Node n{};
  n.w = w;
  if (left_panel) {
    n.t = p.lo + from_lo;
    n.tc = (x > 0.0 && p.hi == 1.0) ? from_hi : 1.0 - n.t;
  } else {
    n.tc = (1.0 - p.hi) + from_hi;
    n.t = (x < 0.0 && p.lo == 0.0) ? from_lo : 1.0 - n.tc;
  }
  return n;
}

double panel_xmax(double width) {
  return std::asinh(std::log(width / kTinyDistance) / kPi);
}

}  // namespace

std::vector<EvalResult> tanh_sinh_unit(const VectorIntegrand& f, std::size_t components,
                                       double split, const EvalPolicy& policy) {
  std::vector<EvalResult> out(components);
  if (components == 0) return out;

  std::vector<Panel> panels;
  if (split > 0.0 && split < 1.0) {
    panels.push_back({0.0, split, panel_xmax(split), {0, 0}});
    panels.push_back({split, 1.0, panel_xmax(1.0 - split), {0, 0}});
  } else {
    panels.push_back({0.0, 1.0, panel_xmax(1.0), {0, 0}});
  }
  for (auto& p : panels) p.reach = {p.xmax, p.xmax};

  const std::size_t m = components;
  std::vector<double> raw(m, 0.0);       // running sum of w f over all nodes
  std::vector<double> prev(m, 0.0);      // previous level estimate
  std::vector<double> abs_raw(m, 0.0);   // running sum of |w f|
  std::vector<double> peak(m, 0.0);      // largest |w f| seen
  std::vector<double> buf(m, 0.0);
  std::size_t nodes = 0;
  bool bad_value = false;
  std::string bad_note;

  // Far-out abscissae per panel and side recorded on the first two levels.
  struct TailMark {
    double x;
    std::vector<double> mag;
  };
  std::vector<std::vector<TailMark>> marks(panels.size());

  auto visit = [&](std::size_t pi, double x, bool record) {
    const Panel& p = panels[pi];
    const Node n = node_at(p, x, pi == 0);
    if (n.w == 0.0 || n.t <= 0.0 || n.tc <= 0.0) return;
    std::fill(buf.begin(), buf.end(), 0.0);
    f(n.t, n.tc, buf);
    ++nodes;
    TailMark mark{x, {}};
    if (record) mark.mag.resize(m);
    for (std::size_t c = 0; c < m; ++c) {
      const double v = n.w * buf[c];
      if (!std::isfinite(v)) {
        if (!bad_value) {
          std::ostringstream os;
          os.precision(17);
          os << "integrand not finite at t=" << n.t;
          bad_note = os.str();
        }
        bad_value = true;
        continue;
      }
      raw[c] += v;
      abs_raw[c] += std::abs(v);
      peak[c] = std::max(peak[c], std::abs(v));
      if (record) mark.mag[c] = std::abs(v);
    }
    if (record) marks[pi].push_back(std::move(mark));
  };

  double h = 1.0;
  int level = 0;
  std::vector<double> err(m, std::numeric_limits<double>::infinity());
  std::vector<double> est(m, 0.0);
  bool all_ok = false;

  for (; level < policy.max_quad_levels + 1; ++level) {
    const bool record = level <= 1;
    for (std::size_t pi = 0; pi < panels.size(); ++pi) {
      const Panel& p = panels[pi];
      if (level == 0) {
        visit(pi, 0.0, record);
        for (double x = 1.0; x <= p.xmax; x += 1.0) {
          visit(pi, x, record);
          visit(pi, -x, record);
        }
      } else {
        for (double x = h; x <= p.xmax; x += 2.0 * h) {
          if (x <= p.reach[1]) visit(pi, x, record);
          if (x <= p.reach[0]) visit(pi, -x, record);
        }
      }
    }
    if (bad_value) break;

    if (level == 1) {
      // Trim abscissae whose contributions are negligible for every component.
      for (std::size_t pi = 0; pi < panels.size(); ++pi) {
        std::array<double, 2> reach{0.0, 0.0};
        for (const auto& mk : marks[pi]) {
          bool significant = false;
          for (std::size_t c = 0; c < m; ++c) {
            if (mk.mag[c] > kTailFraction * peak[c]) significant = true;
          }
          if (significant) {
            const int side = mk.x < 0.0 ? 0 : 1;
            reach[side] = std::max(reach[side], std::abs(mk.x));
          }
        }
        panels[pi].reach = {std::min(panels[pi].xmax, reach[0] + 1.0),
                            std::min(panels[pi].xmax, reach[1] + 1.0)};
      }
      marks.clear();
      marks.resize(panels.size());
    }

    all_ok = level >= kMinLevels - 1;
    for (std::size_t c = 0; c < m; ++c) {
      est[c] = h * raw[c];
      if (level > 0) err[c] = std::abs(est[c] - prev[c]);
      prev[c] = est[c];
      if (!(err[c] <= policy.tolerance_for(est[c]))) all_ok = false;
    }
    if (level > 0 && all_ok) break;
    h *= 0.5;
  }

  for (std::size_t c = 0; c < m; ++c) {
    EvalResult& r = out[c];
    r.nodes_used = nodes;
    r.terms_used = static_cast<std::size_t>(std::min(level, policy.max_quad_levels)) + 1;
    if (bad_value) {
      r = EvalResult::domain_error(bad_note);
      r.nodes_used = nodes;
      continue;
    }
    r.value = est[c];
    r.err_estimate = err[c];
    settle(r, policy);
    if (r.status == Status::Truncated) r.note = "quadrature level cap reached";
  }
  return out;
}

EvalResult quad_weighted(const Integrand& f, const QuadSpec& spec, const EvalPolicy& policy) {
  policy.validate();
  double a = spec.left_exponent;
  double b = spec.right_exponent;
  if (spec.domain == Domain::HalfLine) b = -spec.right_exponent - 2.0;
  if (!(a + spec.left_decay > -1.0)) {
    return EvalResult::domain_error("integrand not integrable at the left endpoint");
  }
  if (!(b + spec.right_decay > -1.0)) {
    return EvalResult::domain_error("integrand not integrable at the right endpoint");
  }
  const bool half_line = spec.domain == Domain::HalfLine;

  auto weighted = [&](double t, double tc, std::span<double> out) {
    double value = half_line ? f(t / tc, tc / t) : f(t, tc);
    if (value == 0.0) {
      out[0] = 0.0;
      return;
    }
    const double wa = a == 0.0 ? 1.0 : std::pow(t, a);
    const double wb = b == 0.0 ? 1.0 : std::pow(tc, b);
    double w = wa * wb;
    if (!std::isfinite(w) || w == 0.0) {
      // Combine in log space; the smooth factor usually compensates.
      const double lw = a * std::log(t) + b * std::log(tc) + std::log(std::abs(value));
      out[0] = std::copysign(std::exp(lw), value);
      return;
    }
    out[0] = value * w;
  };
  return tanh_sinh_unit(weighted, 1, spec.split, policy).front();
}

}  // namespace mlfrac
