#pragma once

#include <cmath>
#include <cstdint>

namespace lestab {

// 64-bit seed; all randomized operations are pure functions of it.
using Seed = std::uint64_t;

// splitmix64 stream.  Small, portable, and strong enough for sampling work;
// draws depend only on the seed, never on platform library state, so runs
// are reproducible bit for bit.
class Rng {
  public:
    explicit Rng(Seed seed) noexcept : state_(seed) {}

    std::uint64_t next_u64() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform on [0, 1)
    double next_unit() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // standard exponential; 1 - u stays in (0, 1] so the log is finite
    double next_exponential() noexcept { return -std::log1p(-next_unit()); }

    // standard normal via Box-Muller; fixed two-draw cost keeps the stream
    // position independent of the values produced
    double next_gaussian() noexcept {
        const double u1 = next_unit();
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log1p(-u1));
        return r * std::cos(6.28318530717958647692528676656 * u2);
    }

  private:
    std::uint64_t state_;
};

// Sub-seed for (seed, stream, index).  Trial k of stream s draws from
// derive_seed(seed, s, k) no matter how trials are scheduled across
// workers, and independent of the total trial count.
inline Seed derive_seed(Seed seed, std::uint64_t stream, std::uint64_t index) noexcept {
    Rng mix(seed ^ (0x9e3779b97f4a7c15ull * (stream + 1)));
    const std::uint64_t h = mix.next_u64();
    Rng mix2(h ^ (0xda942042e4dd58b5ull * (index + 1)));
    return mix2.next_u64();
}

} // namespace lestab
