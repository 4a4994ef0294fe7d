#pragma once

#include <cmath>
#include <cstdint>
#include <span>

#include "errors.hpp"

namespace lestab {

// Neumaier-compensated accumulator.  Coordinate sums run over vectors with
// up to ~1e6 entries and feed tolerance checks at 1e-12, which plain
// left-to-right summation cannot honor at that length.
class SumAccumulator {
  public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) noexcept {
    SumAccumulator acc;
    for (double x : xs) {
        acc.add(x);
    }
    return acc.value();
}

// |x|^e with 0^e := 0 for e > 0.  Magnitudes below 1e-300 go through
// exp/log so the subnormal range does not poison pow.
inline double pow_abs(double x, double e) noexcept {
    const double a = std::abs(x);
    if (a == 0.0) {
        return 0.0;
    }
    if (a < 1e-300) {
        return std::exp(e * std::log(a));
    }
    return std::pow(a, e);
}

// x^e for x >= 0 under the same 0^e := 0 convention.
inline double pow_nn(double x, double e) noexcept { return x == 0.0 ? 0.0 : std::pow(x, e); }

inline double require_alpha(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw parameter_error("alpha must be a finite positive real");
    }
    return alpha;
}

// Deformation parameter of the q-families: q in (0, inf) \ {1}.
inline double require_deformation(double q) {
    if (!(q > 0.0) || !std::isfinite(q)) {
        throw parameter_error("deformation parameter q must be a finite positive real");
    }
    if (q == 1.0) {
        throw parameter_error("deformation parameter q = 1 is excluded");
    }
    return q;
}

// floor(x) + 1 where x is known exact in real arithmetic but carries double
// rounding; the nudge only ever rounds x up, which can only enlarge the
// result, the safe direction for every strict inequality we derive from it.
inline std::uint64_t floor_excess(double x) {
    const double guarded = x * (1.0 + 1e-12) + 1e-9;
    return static_cast<std::uint64_t>(std::floor(guarded)) + 1u;
}

} // namespace lestab
