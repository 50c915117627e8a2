#include "mlfrac/gamma.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mlfrac {

namespace {

namespace bmp = boost::math::policies;
using Policy = bmp::policy<bmp::overflow_error<bmp::ignore_error>,
                           bmp::underflow_error<bmp::ignore_error>,
                           bmp::denorm_error<bmp::ignore_error>,
                           bmp::evaluation_error<bmp::ignore_error>,
                           bmp::promote_double<false>>;

constexpr std::size_t kProductLimit = 64;

}  // namespace

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

LogGamma log_gamma(double x) {
  if (!std::isfinite(x)) throw std::domain_error("log_gamma: non-finite argument");
  if (is_nonpositive_integer(x)) {
    throw std::domain_error("log_gamma: pole at " + std::to_string(x));
  }
  int sign = 1;
  const double v = boost::math::lgamma(x, &sign, Policy{});
  return {v, sign};
}

double gamma(double x) {
  if (is_nonpositive_integer(x)) {
    throw std::domain_error("gamma: pole at " + std::to_string(x));
  }
  if (x > 171.7) return std::numeric_limits<double>::infinity();
  return boost::math::tgamma(x, Policy{});
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > 171.0 || x < -170.0) {
    const LogGamma lg = log_gamma(x);
    return lg.sign * std::exp(-lg.value);
  }
  return 1.0 / boost::math::tgamma(x, Policy{});
}

double upper_incomplete_gamma(double s, double x) {
  if (!(s > 0.0) || !(x >= 0.0)) {
    throw std::domain_error("upper_incomplete_gamma requires s > 0 and x >= 0");
  }
  if (x == 0.0) return gamma(s);
  return boost::math::tgamma(s, x, Policy{});
}

double pochhammer(double a, std::size_t n) {
  if (n == 0) return 1.0;
  if (n <= kProductLimit || is_nonpositive_integer(a)) {
    double p = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      p *= a + static_cast<double>(k);
      if (p == 0.0) break;
    }
    return p;
  }
  const double top = a + static_cast<double>(n);
  const LogGamma num = log_gamma(top);
  const LogGamma den = log_gamma(a);
  return num.sign * den.sign * std::exp(num.value - den.value);
}

double beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) {
    throw std::domain_error("beta requires positive arguments");
  }
  return boost::math::beta(x, y, Policy{});
}

}  // namespace mlfrac
