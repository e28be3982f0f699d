#pragma once

// Counter-based random streams: each path derives its own generator from
// (seed, path_index), so serial and parallel runs produce identical output.
// Normal variates come from a 256-layer ziggurat over xoshiro256++; tables are
// built once at startup from the standard layer recursion.

#include <array>
#include <cmath>
#include <cstdint>

namespace ambiswitch {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class Xoshiro256pp {
public:
    Xoshiro256pp() : Xoshiro256pp(0x853C49E6748FEA9Bull) {}
    explicit Xoshiro256pp(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }
    /// Stream for path `index` under master `seed`; independent of call order.
    Xoshiro256pp(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t sm = seed ^ (0xD1B54A32D192ED03ull * (index + 1));
        for (auto& w : s_) w = splitmix64(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0,1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }
    std::array<std::uint64_t, 4> s_{};
};

namespace detail {

struct ZigguratTables {
    // 256 layers: x[i] layer abscissae, y[i] = f(x[i]), f the unnormalized
    // standard normal density exp(-x^2/2).
    std::array<double, 257> x{};
    std::array<double, 257> y{};
    double r = 0.0;      // rightmost abscissa
    double v = 0.0;      // common layer area
};

const ZigguratTables& ziggurat_tables();

}  // namespace detail

/// Standard normal variate by the ziggurat method (deterministic given the
/// generator state; identical across platforms with IEEE doubles).
double standard_normal(Xoshiro256pp& rng);

}  // namespace ambiswitch
