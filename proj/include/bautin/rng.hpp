#pragma once

#include "bautin/rational.hpp"

#include <cstdint>

namespace bautin {

// Deterministic 64-bit generator (splitmix64). Chosen over std::mt19937 so
// that reports are byte-identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound >= 1; rejection-free modulo is fine for the
    // small bounds used here (bias < 2^-57).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Uniform integer in [lo, hi] inclusive.
    long long integer(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Uniform integer in [lo, hi] \ {0}.
    long long nonzero_integer(long long lo, long long hi) {
        long long v = 0;
        do {
            v = integer(lo, hi);
        } while (v == 0);
        return v;
    }

    Rat rational_box(long long lo, long long hi) { return Rat(integer(lo, hi)); }

    Rat nonzero_rational_box(long long lo, long long hi) {
        return Rat(nonzero_integer(lo, hi));
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Independent stream for worker `index`; used by the parallel maps so the
    // result does not depend on scheduling.
    static Rng derive_worker(std::uint64_t seed, std::uint64_t index) {
        Rng mix(seed ^ (0xa0761d6478bd642fULL * (index + 1)));
        mix.next();
        return mix;
    }

private:
    std::uint64_t state_;
};

}  // namespace bautin
