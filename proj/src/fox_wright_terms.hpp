#pragma once

// Term machinery shared by the Fox-Wright series and the fractional
// derivative images built on it.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "mlfrac/hypergeom.hpp"
#include "series_sum.hpp"

namespace mlfrac::detail {

// log of Π Γ(upper) / Π Γ(lower) / k! at index k; zero when a lower Gamma
// has a pole.
inline LogTerm fox_wright_coefficient(const FoxWrightSpec& spec, std::size_t k) {
  const double dk = static_cast<double>(k);
  LogTerm t{-std::lgamma(dk + 1.0), 1};
  for (const auto& w : spec.upper) t = t * log_gamma_term(w.shift + w.scale * dk);
  for (const auto& w : spec.lower) t = t * log_rgamma(w.shift + w.scale * dk);
  return t;
}

inline std::string upper_pole(const FoxWrightSpec& spec, std::size_t max_terms) {
  for (const auto& w : spec.upper) {
    for (std::size_t k = 0; k < max_terms; ++k) {
      const double arg = w.shift + w.scale * static_cast<double>(k);
      if (arg > 0.0) break;
      if (is_nonpositive_integer(arg)) {
        std::ostringstream os;
        os << "upper Gamma argument hits a pole at k=" << k;
        return os.str();
      }
    }
  }
  return {};
}

inline std::size_t fox_wright_onset(const FoxWrightSpec& spec, double z) {
  double delta = 0.0;
  double lc = 0.0;  // log of Π A^A / Π B^B
  double shift = 0.0;
  for (const auto& w : spec.upper) {
    delta -= w.scale;
    lc += w.scale * std::log(w.scale);
    shift = std::max(shift, std::abs(w.shift) / w.scale);
  }
  for (const auto& w : spec.lower) {
    delta += w.scale;
    lc -= w.scale * std::log(w.scale);
    shift = std::max(shift, std::abs(w.shift) / w.scale);
  }
  const double c = std::abs(z) * std::exp(lc);
  return ratio_onset(c, 1.0, 1.0 + delta) + static_cast<std::size_t>(std::ceil(shift)) + 1;
}

}  // namespace mlfrac::detail
