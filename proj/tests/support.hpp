// Shared helpers for the test suites: a deterministic RNG and generators for
// random-but-valid divergence pairs and solver queries.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "divergence.hpp"
#include "solver.hpp"

namespace testutil {

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double uniform(double lo, double hi) {
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }
};

// alpha away from the excluded points 0 and 1
inline double sample_alpha(Rng& rng, double lo = -5.0, double hi = 5.0) {
    for (;;) {
        const double a = rng.uniform(lo, hi);
        if (std::abs(a) >= 0.05 && std::abs(a - 1.0) >= 0.05) {
            return a;
        }
    }
}

struct DivergencePair {
    rdpf::Gaussian p;
    rdpf::Gaussian q;
    double alpha;
};

// A pair inside the divergence validity domain, rejected until the value is
// small enough for the quadrature oracle to resolve at 1e-6 absolute.
inline DivergencePair sample_divergence_pair(Rng& rng, bool with_mean_gap = true) {
    for (;;) {
        const double alpha = sample_alpha(rng);
        const double var_p = rng.uniform(0.2, 5.0);
        const double gap = with_mean_gap ? rng.uniform(-2.0, 2.0) : 0.0;
        double var_q;
        if (alpha > 1.0) {
            var_q = var_p * (1.0 - 1.0 / alpha) + rng.uniform(0.1, 3.0) * var_p;
        } else if (alpha < 0.0) {
            var_q = var_p * (1.0 - 1.0 / alpha) * rng.uniform(0.05, 0.95);
        } else {
            var_q = rng.uniform(0.2, 5.0);
        }
        const DivergencePair pair{{gap, var_p}, {0.0, var_q}, alpha};
        const double value =
            rdpf::alpha_divergence(pair.p, pair.q, rdpf::Alpha(alpha)).value;
        if (std::abs(value) <= 50.0) {
            return pair;
        }
    }
}

// A solver query with a feasible distortion budget; spans all three regimes.
inline rdpf::RdpfQuery sample_query(Rng& rng) {
    for (;;) {
        const double alpha = sample_alpha(rng, -3.0, 3.0);
        const double sigma2 = rng.uniform(0.5, 2.0);
        const double sup = rdpf::perception_sup(rdpf::Alpha(alpha));
        const double perception =
            rng.uniform(0.01, std::min(1.0, std::isinf(sup) ? 1.0 : 0.9 * sup));
        const double min_d = rdpf::min_distortion_at_perception(sigma2, perception,
                                                                rdpf::Alpha(alpha));
        const double distortion = min_d + rng.uniform(0.02, 2.2) * sigma2;
        return {sigma2, distortion, perception, alpha};
    }
}

}  // namespace testutil
