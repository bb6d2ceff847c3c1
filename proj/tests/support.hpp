#pragma once

#include <cstdlib>
#include <random>

#include "margulis/mobius.hpp"

namespace margulis::testing {

// Seed for the randomized suites, overridable through MARGULIS_SEED.
inline std::uint64_t seed() {
    if (const char* s = std::getenv("MARGULIS_SEED")) {
        return std::strtoull(s, nullptr, 10);
    }
    return 0;
}

class Rng {
public:
    explicit Rng(std::uint64_t s = seed()) : rng_(s) {}

    double real(double lo = -2.0, double hi = 2.0) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

    cplx complex(double scale = 2.0) { return {real(-scale, scale), real(-scale, scale)}; }

    // Random map with entries O(1), well-conditioned determinant.
    MoebiusMap map() {
        for (;;) {
            const Matrix2 m{complex(), complex(), complex(), complex()};
            if (std::abs(m.det()) > 0.1) return MoebiusMap{m};
        }
    }

    // Random nonparabolic, non-identity map.
    MoebiusMap nonparabolic() {
        for (;;) {
            const MoebiusMap f = map();
            if (std::abs(beta(f)) > 1e-3) return f;
        }
    }

    // Random elliptic of order n about a random axis.
    MoebiusMap elliptic(int n) {
        const double theta = 2.0 * std::acos(-1.0) / n;
        const cplx e = std::polar(1.0, theta / 2.0);
        const MoebiusMap rot{{e, 0.0, 0.0, std::conj(e)}};
        const MoebiusMap h = map();
        return h * rot * h.inverse();
    }

    std::mt19937_64& gen() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace margulis::testing
