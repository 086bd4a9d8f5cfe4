#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace reconf {

/// Deterministic random stream. Wraps std::mt19937_64 (whose output sequence
/// is fully specified by the standard) and derives all floating-point and
/// bounded-integer draws from raw 64-bit words, so results are identical
/// across platforms and standard-library versions.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi].
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    /// Uniform integer in [lo, hi], inclusive. Unbiased (Lemire rejection).
    int uniform_int(int lo, int hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(bounded(range));
    }

    /// Uniform integer in [0, range), unbiased.
    std::uint64_t bounded(std::uint64_t range) {
        unsigned __int128 m =
            static_cast<unsigned __int128>(next_u64()) * range;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < range) {
            const std::uint64_t t = (0 - range) % range;
            while (lo < t) {
                m = static_cast<unsigned __int128>(next_u64()) * range;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::mt19937_64 gen_;
};

/// Derives a child seed from a master seed and a stream name. Every random
/// draw in the toolkit goes through a named stream so that adding or removing
/// instrumentation in one place never perturbs draws made elsewhere.
std::uint64_t derive_seed(std::uint64_t master, std::string_view name);

inline RngStream make_stream(std::uint64_t master, std::string_view name) {
    return RngStream(derive_seed(master, name));
}

}  // namespace reconf
