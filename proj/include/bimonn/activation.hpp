#pragma once

#include <cmath>
#include <stdexcept>

namespace bimonn {

/// softplus, ln(1 + e^x); linear branch avoids exp overflow past ~709.
inline double softplus(double x) {
  if (x > 30.0) return x;
  return std::log1p(std::exp(x));
}

/// Inverse of softplus on (0, inf).
inline double softplus_inv(double y) {
  if (y <= 0.0) throw std::domain_error("softplus_inv: argument must be > 0");
  if (y > 30.0) return y;
  return std::log(std::expm1(y));
}

/// d/dx softplus = standard logistic.
inline double logistic(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

/// Smooth 0/1 threshold: tanh(x)/2 + 1/2, increasing, limits 0 and 1.
inline double smooth_threshold(double x) {
  return 0.5 * std::tanh(x) + 0.5;
}

inline double smooth_threshold_deriv(double x) {
  const double t = std::tanh(x);
  return 0.5 * (1.0 - t * t);
}

}  // namespace bimonn
