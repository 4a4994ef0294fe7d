#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "metric.hpp"
#include "numeric.hpp"
#include "rng.hpp"

// Complete and incomplete probability vectors.
//
// A complete distribution is p in [0,1]^N with sum_i p_i = 1.  An
// incomplete distribution carries a deformation parameter q > 0, q != 1
// and satisfies sum_i p_i^q = 1 instead.  Both are immutable after
// construction; the constraint is validated to 1e-9 and self-consistency
// checks elsewhere work at 1e-12.
//
// Sampling is uniform on the complete simplex (normalized exponential
// spacings).  Incomplete samples come from the power map p_i = w_i^(1/q)
// of a complete sample w, which meets sum p^q = 1 by construction.
//
// perturb_within produces a neighbor inside the same constraint set at
// alpha-distance at most delta: move along a random direction, project
// back onto the constraint set (clamp negatives, renormalize), and shrink
// or grow the step until the distance budget is met.

namespace lestab {

inline constexpr double kConstraintTol = 1e-9;   // construction-time validation
inline constexpr double kSelfCheckTol = 1e-12;   // self-consistency checks
inline constexpr double kDistanceSlack = 1e-12;  // slack on distance budgets

using RawWeights = std::vector<double>;

namespace detail {

inline void require_weights(const RawWeights& w) {
    if (w.empty()) {
        throw domain_error("weight vector must have length >= 1");
    }
    for (double x : w) {
        if (!std::isfinite(x) || x < 0.0) {
            throw domain_error("weights must be finite and nonnegative");
        }
    }
}

inline void require_unit_range(const std::vector<double>& p) {
    if (p.empty()) {
        throw domain_error("distribution must have length >= 1");
    }
    for (double x : p) {
        if (!std::isfinite(x) || x < 0.0 || x > 1.0 + kConstraintTol) {
            throw domain_error("distribution entries must lie in [0, 1]");
        }
    }
}

} // namespace detail

class CompleteDistribution {
  public:
    explicit CompleteDistribution(std::vector<double> p) : p_(std::move(p)) {
        detail::require_unit_range(p_);
        const double s = compensated_sum(p_);
        if (std::abs(s - 1.0) > kConstraintTol) {
            throw domain_error("complete distribution must satisfy sum p_i = 1");
        }
    }

    [[nodiscard]] std::span<const double> values() const noexcept { return p_; }
    [[nodiscard]] std::size_t size() const noexcept { return p_.size(); }
    double operator[](std::size_t i) const noexcept { return p_[i]; }

  private:
    std::vector<double> p_;
};

class IncompleteDistribution {
  public:
    IncompleteDistribution(std::vector<double> p, double q) : p_(std::move(p)), q_(require_deformation(q)) {
        detail::require_unit_range(p_);
        SumAccumulator acc;
        for (double x : p_) {
            acc.add(pow_nn(x, q_));
        }
        if (std::abs(acc.value() - 1.0) > kConstraintTol) {
            throw domain_error("incomplete distribution must satisfy sum p_i^q = 1");
        }
    }

    [[nodiscard]] std::span<const double> values() const noexcept { return p_; }
    [[nodiscard]] std::size_t size() const noexcept { return p_.size(); }
    [[nodiscard]] double deformation() const noexcept { return q_; }
    double operator[](std::size_t i) const noexcept { return p_[i]; }

  private:
    std::vector<double> p_;
    double q_;
};

using AnyDistribution = std::variant<CompleteDistribution, IncompleteDistribution>;

enum class SimplexKind { complete, incomplete };

inline std::span<const double> values(const AnyDistribution& d) {
    return std::visit([](const auto& x) { return x.values(); }, d);
}

inline std::size_t dimension(const AnyDistribution& d) {
    return std::visit([](const auto& x) { return x.size(); }, d);
}

inline SimplexKind kind(const AnyDistribution& d) {
    return std::holds_alternative<CompleteDistribution>(d) ? SimplexKind::complete : SimplexKind::incomplete;
}

// --- construction -----------------------------------------------------------

inline CompleteDistribution normalize_complete(const RawWeights& w) {
    detail::require_weights(w);
    const double s = compensated_sum(w);
    if (!(s > 0.0)) {
        throw domain_error("cannot normalize an all-zero weight vector");
    }
    std::vector<double> p(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        p[i] = w[i] / s;
    }
    return CompleteDistribution(std::move(p));
}

inline IncompleteDistribution normalize_incomplete(const RawWeights& w, double q) {
    require_deformation(q);
    detail::require_weights(w);
    SumAccumulator acc;
    for (double x : w) {
        acc.add(pow_nn(x, q));
    }
    const double s = acc.value();
    if (!(s > 0.0)) {
        throw domain_error("cannot normalize an all-zero weight vector");
    }
    const double scale = std::pow(s, -1.0 / q);
    std::vector<double> p(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        p[i] = w[i] * scale;
    }
    return IncompleteDistribution(std::move(p), q);
}

inline CompleteDistribution uniform_complete(std::size_t n) {
    if (n == 0) {
        throw parameter_error("dimension must be >= 1");
    }
    return CompleteDistribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

inline IncompleteDistribution uniform_incomplete(std::size_t n, double q) {
    if (n == 0) {
        throw parameter_error("dimension must be >= 1");
    }
    require_deformation(q);
    const double level = std::pow(1.0 / static_cast<double>(n), 1.0 / q);
    return IncompleteDistribution(std::vector<double>(n, level), q);
}

// --- sampling ---------------------------------------------------------------

namespace detail {

// exponential spacings; sum is strictly positive (re-draw on the
// measure-zero all-zero event so the normalization below is safe)
inline std::vector<double> sample_simplex_weights(std::size_t n, Rng& rng) {
    std::vector<double> w(n);
    for (;;) {
        SumAccumulator acc;
        for (auto& x : w) {
            x = rng.next_exponential();
            acc.add(x);
        }
        const double s = acc.value();
        if (s > 0.0) {
            for (auto& x : w) {
                x /= s;
            }
            return w;
        }
    }
}

} // namespace detail

inline CompleteDistribution sample_complete(std::size_t n, Seed seed) {
    if (n == 0) {
        throw parameter_error("dimension must be >= 1");
    }
    Rng rng(seed);
    return CompleteDistribution(detail::sample_simplex_weights(n, rng));
}

inline IncompleteDistribution sample_incomplete(std::size_t n, double q, Seed seed) {
    if (n == 0) {
        throw parameter_error("dimension must be >= 1");
    }
    require_deformation(q);
    Rng rng(seed);
    std::vector<double> w = detail::sample_simplex_weights(n, rng);
    for (auto& x : w) {
        x = pow_nn(x, 1.0 / q);
    }
    return IncompleteDistribution(std::move(w), q);
}

inline AnyDistribution sample_distribution(SimplexKind kindv, std::size_t n, std::optional<double> q, Seed seed) {
    if (kindv == SimplexKind::complete) {
        return sample_complete(n, seed);
    }
    if (!q) {
        throw parameter_error("incomplete sampling requires a deformation parameter q");
    }
    return sample_incomplete(n, *q, seed);
}

// --- constrained perturbation -----------------------------------------------

namespace detail {

// clamp negatives to zero and renormalize to unit sum; falls back to the
// base point when the whole move lands at the origin
inline std::vector<double> project_unit_sum(std::span<const double> base, std::span<const double> dir, double t) {
    std::vector<double> x(base.size());
    SumAccumulator acc;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double v = base[i] + t * dir[i];
        x[i] = v > 0.0 ? v : 0.0;
        acc.add(x[i]);
    }
    const double s = acc.value();
    if (!(s > 0.0)) {
        x.assign(base.begin(), base.end());
        return x;
    }
    for (auto& v : x) {
        v /= s;
    }
    return x;
}

// Largest-step candidate within the distance budget.  make(t) maps a step
// size to a candidate vector in the constraint set; dist evaluates the
// alpha-distance from the base point.  The search shrinks until feasible,
// then grows and bisects toward the budget boundary.  fallback is the base
// point itself (distance exactly 0), returned when no positive step fits.
template <typename MakeFn, typename DistFn>
std::vector<double> fit_step_to_budget(double delta, double t0, std::vector<double> fallback, const MakeFn& make,
                                       const DistFn& dist) {
    double t = t0;
    std::vector<double> cand = make(t);
    double d = dist(cand);

    int guard = 0;
    while (d > delta && guard++ < 400) {
        t *= 0.5;
        if (t < 1e-300) {
            break;
        }
        cand = make(t);
        d = dist(cand);
    }
    if (d > delta) {
        return fallback;
    }

    // grow toward the boundary while it stays feasible
    double lo = t;
    std::vector<double> best = std::move(cand);
    double best_d = d;
    double hi = 0.0;
    for (int i = 0; i < 200 && best_d < 0.9 * delta; ++i) {
        const double t2 = lo * 2.0;
        std::vector<double> c2 = make(t2);
        const double d2 = dist(c2);
        if (d2 <= delta) {
            lo = t2;
            best = std::move(c2);
            best_d = d2;
        } else {
            hi = t2;
            break;
        }
    }
    // bisect the bracket to land near the boundary
    if (hi > 0.0) {
        for (int i = 0; i < 30 && best_d < 0.9 * delta; ++i) {
            const double tm = 0.5 * (lo + hi);
            std::vector<double> cm = make(tm);
            const double dm = dist(cm);
            if (dm <= delta) {
                lo = tm;
                best = std::move(cm);
                best_d = dm;
            } else {
                hi = tm;
            }
        }
    }
    return best;
}

} // namespace detail

// Neighbor of p in the same constraint set with d_alpha(p, p') <= delta.
inline CompleteDistribution perturb_within(const CompleteDistribution& p, double delta, double alpha, Seed seed) {
    require_alpha(alpha);
    if (delta < 0.0 || !std::isfinite(delta)) {
        throw parameter_error("delta must be finite and >= 0");
    }
    if (delta == 0.0) {
        return p;
    }
    Rng rng(seed);
    const std::size_t n = p.size();
    std::vector<double> dir(n);
    for (auto& g : dir) {
        g = rng.next_gaussian();
    }
    auto make = [&](double t) { return detail::project_unit_sum(p.values(), dir, t); };
    auto dist = [&](const std::vector<double>& c) { return alpha_distance(p.values(), c, alpha); };
    return CompleteDistribution(detail::fit_step_to_budget(delta, delta, make, dist));
}

// Incomplete variant: the random move happens in u-space (u_i = p_i^q, a
// unit-sum vector), and the power map back preserves sum p^q = 1 exactly;
// the distance budget is checked on p itself.
inline IncompleteDistribution perturb_within(const IncompleteDistribution& p, double delta, double alpha, Seed seed) {
    require_alpha(alpha);
    if (delta < 0.0 || !std::isfinite(delta)) {
        throw parameter_error("delta must be finite and >= 0");
    }
    if (delta == 0.0) {
        return p;
    }
    const double q = p.deformation();
    const std::size_t n = p.size();
    std::vector<double> u(n);
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = pow_nn(p[i], q);
    }
    Rng rng(seed);
    std::vector<double> dir(n);
    for (auto& g : dir) {
        g = rng.next_gaussian();
    }
    auto make = [&](double t) {
        std::vector<double> c = detail::project_unit_sum(u, dir, t);
        for (auto& v : c) {
            v = pow_nn(v, 1.0 / q);
        }
        return c;
    };
    auto dist = [&](const std::vector<double>& c) { return alpha_distance(p.values(), c, alpha); };
    return IncompleteDistribution(detail::fit_step_to_budget(delta, delta, make, dist), q);
}

inline AnyDistribution perturb_within(const AnyDistribution& p, double delta, double alpha, Seed seed) {
    return std::visit([&](const auto& x) -> AnyDistribution { return perturb_within(x, delta, alpha, seed); }, p);
}

} // namespace lestab
