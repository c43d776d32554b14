#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

// Shared numeric helpers for the integrand implementations.  Every integrand
// in this project that mixes algebraic powers with flat exponentials is
// assembled from merged log-space exponents through these.
namespace zetalab::detail {

inline constexpr double kLogZero = -745.0;  // below exp() underflow
inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline double exp_or_zero(double t) { return t < kLogZero ? 0.0 : std::exp(t); }

// log(1 + e^t), stable for all t.
inline double log1p_exp(double t) {
    if (t > 36.0) return t + std::exp(-t);
    if (t < -36.0) return std::exp(t);
    return std::log1p(std::exp(t));
}

// (1 + e^{logt})^s
inline double pow1p_exp(double logt, double s) { return exp_or_zero(s * log1p_exp(logt)); }

// log(1 + e^a + e^b), stable.
inline double log1p_exp2(double a, double b) {
    double m = std::max({0.0, a, b});
    return m + std::log(std::exp(-m) + std::exp(a - m) + std::exp(b - m));
}

inline bool close_rel(double x, double y, double tol) {
    return std::abs(x - y) <= tol * std::max({std::abs(x), std::abs(y), 1e-300});
}

} // namespace zetalab::detail
