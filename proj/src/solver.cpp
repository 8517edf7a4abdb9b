#include "solver.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace rdpf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_positive(double v, const char* name) {
    if (!std::isfinite(v) || !(v > 0.0)) {
        throw InvalidArgument(std::string(name) + " must be finite and > 0");
    }
}

void check_query(const RdpfQuery& q) {
    check_positive(q.sigma2, "sigma2");
    check_positive(q.distortion, "distortion");
    if (std::isnan(q.perception) || q.perception < 0.0) {
        throw InvalidArgument("perception must be >= 0 (or +infinity)");
    }
}

}  // namespace

const char* regime_name(Regime regime) noexcept {
    switch (regime) {
        case Regime::DistortionOnly: return "distortion_only";
        case Regime::PerceptionOnly: return "perception_only";
        case Regime::BothActive: return "both_active";
    }
    return "unknown";
}

double classical_rd(double sigma2, double distortion) {
    check_positive(sigma2, "sigma2");
    check_positive(distortion, "distortion");
    return std::max(0.5 * std::log(sigma2 / distortion), 0.0);
}

double g_boundary(double distortion, double sigma2, Alpha alpha) {
    check_positive(sigma2, "sigma2");
    check_positive(distortion, "distortion");
    const double rho2 = std::abs(sigma2 - distortion);
    if (rho2 == 0.0) {
        // Degenerate reconstruction: the divergence limit is the supremum
        // for alpha in (0,1) and diverges otherwise.
        return alpha.in_unit_interval() ? perception_sup(alpha) : kInf;
    }
    const double a = alpha.value();
    if (a * rho2 + (1.0 - a) * sigma2 <= 0.0) {
        return kInf;
    }
    return alpha_divergence({0.0, sigma2}, {0.0, rho2}, alpha).value;
}

Regime classify(const RdpfQuery& query, const RootPair& roots) {
    check_query(query);
    if (std::isinf(query.perception)) {
        return Regime::DistortionOnly;
    }
    const Alpha alpha(query.alpha);
    const double g = g_boundary(query.distortion, query.sigma2, alpha);
    if (query.distortion <= query.sigma2 && query.perception > g) {
        return Regime::DistortionOnly;
    }
    // theta = 0 with the smallest perception-feasible variance meets the
    // distortion budget: rate zero is attainable.
    if (query.distortion >= query.sigma2 * (1.0 + roots.r0)) {
        return Regime::PerceptionOnly;
    }
    return Regime::BothActive;
}

RdpfSolution jg_rdpf(const RdpfQuery& query, const SolverOptions& options) {
    check_query(query);
    const Alpha alpha(query.alpha);

    if (std::isinf(query.perception)) {
        const double rate = classical_rd(query.sigma2, query.distortion);
        const double rho2 = std::max(query.sigma2 - query.distortion, 0.0);
        return {rate, rho2, rho2, Regime::DistortionOnly};
    }
    if (alpha.in_unit_interval() && query.perception > perception_sup(alpha)) {
        throw RangeError("perception budget exceeds the attainable supremum");
    }

    const RootPair roots =
        solve_roots(query.perception, alpha, options.root_tol, options.backsub_tol);

    switch (classify(query, roots)) {
        case Regime::DistortionOnly: {
            const double rho2 = query.sigma2 - query.distortion;
            return {classical_rd(query.sigma2, query.distortion), rho2, rho2,
                    Regime::DistortionOnly};
        }
        case Regime::PerceptionOnly:
            return {0.0, query.sigma2 * roots.r0, 0.0, Regime::PerceptionOnly};
        case Regime::BothActive:
            break;
    }

    // Both constraints bind: rho2 comes from a perception-equality root,
    // theta from distortion equality. The smaller root minimizes the rate;
    // the larger one is a fallback if the correlation saturates.
    for (const double r : {roots.r0, roots.r1}) {
        const double rho2 = query.sigma2 * r;
        const double theta = 0.5 * (query.sigma2 + rho2 - query.distortion);
        if (theta < 0.0) {
            // Distortion slack at theta = 0: no rate is needed after all.
            return {0.0, rho2, 0.0, Regime::PerceptionOnly};
        }
        const double denom = rho2 * query.sigma2 - theta * theta;
        if (denom <= 0.0) {
            continue;  // theta >= sigma*rho: infeasible correlation
        }
        const double rate = 0.5 * std::log(rho2 * query.sigma2 / denom);
        return {rate, rho2, theta, Regime::BothActive};
    }
    throw InfeasibleError("no perception-equality root admits |theta| <= sigma*rho "
                          "at this distortion");
}

double min_distortion_at_perception(double sigma2, double perception, Alpha alpha) {
    check_positive(sigma2, "sigma2");
    if (std::isnan(perception) || perception < 0.0) {
        throw InvalidArgument("perception must be >= 0 (or +infinity)");
    }
    if (perception == 0.0 || std::isinf(perception)) {
        return 0.0;
    }
    const RootPair roots = solve_roots(perception, alpha);
    const double sigma = std::sqrt(sigma2);
    const double d0 = sigma - sigma * std::sqrt(roots.r0);
    const double d1 = sigma - sigma * std::sqrt(roots.r1);
    return std::min(d0 * d0, d1 * d1);
}

}  // namespace rdpf
