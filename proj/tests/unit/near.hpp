#pragma once

#include <cmath>

// |a - b| / |b|
inline double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }
