#pragma once

#include <cmath>
#include <span>

#include "errors.hpp"
#include "numeric.hpp"

// The d_{alpha,N} family on R^N:
//
//     d_alpha(p, p') = (sum_i |p_i - p'_i|^alpha)^(1/alpha),   alpha > 0.
//
// For alpha >= 1 this is a metric.  For alpha < 1 it is only a
// quasi-metric: symmetric and point-separating, with the triangle
// inequality holding up to the factor 2^(1/alpha - 1).  power_sum is the
// inner sum d^alpha, which is what the stability bounds actually consume.

namespace lestab {

inline void require_same_length(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw shape_error("vectors must have equal length");
    }
}

// sum_i |p_i - r_i|^alpha  ( = alpha_distance^alpha )
inline double power_sum(std::span<const double> p, std::span<const double> r, double alpha) {
    require_same_length(p, r);
    require_alpha(alpha);
    SumAccumulator acc;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc.add(pow_abs(p[i] - r[i], alpha));
    }
    return acc.value();
}

inline double alpha_distance(std::span<const double> p, std::span<const double> r, double alpha) {
    const double s = power_sum(p, r, alpha);
    return s == 0.0 ? 0.0 : std::pow(s, 1.0 / alpha);
}

// Constant in the (quasi-)triangle inequality: 1 for alpha >= 1, else
// 2^(1/alpha - 1).
inline double quasi_triangle_factor(double alpha) {
    require_alpha(alpha);
    return alpha >= 1.0 ? 1.0 : std::exp2(1.0 / alpha - 1.0);
}

} // namespace lestab
