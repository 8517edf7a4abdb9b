#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace rdpf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <typename F>
double simpson_halves(const F& f, double a, double b, double fa, double fm, double fb,
                      double whole, double tol, int depth, bool& converged) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    if (depth <= 0) {
        converged = false;
        return left + right + delta / 15.0;
    }
    return simpson_halves(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, converged) +
           simpson_halves(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, converged);
}

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double tol, int depth,
                        bool& converged) {
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_halves(f, a, b, fa, fm, fb, whole, tol, depth, converged);
}

}  // namespace

double quad_alpha_divergence(const Gaussian& p, const Gaussian& q, Alpha alpha,
                             const QuadratureSpec& spec) {
    if (!(spec.abs_tol > 0.0) || spec.max_depth < 1 || !(spec.half_width_sds > 0.0)) {
        throw InvalidArgument("quadrature spec: abs_tol > 0, max_depth >= 1, "
                              "half_width_sds > 0 required");
    }
    const double margin = validity_margin(p, q, alpha);
    if (!(margin > 0.0)) {
        throw DomainError("divergence integral diverges: validity margin <= 0");
    }
    const double a = alpha.value();
    const double log_two_pi = std::log(2.0 * std::numbers::pi);
    const double np = -0.5 * (log_two_pi + std::log(p.variance));
    const double nq = -0.5 * (log_two_pi + std::log(q.variance));
    const auto integrand = [&](double x) {
        const double dp = x - p.mean;
        const double dq = x - q.mean;
        const double lp = np - dp * dp / (2.0 * p.variance);
        const double lq = nq - dq * dq / (2.0 * q.variance);
        return std::exp(a * lp + (1.0 - a) * lq);
    };

    // The integrand is itself Gaussian-shaped with variance
    // var(p)var(q)/margin; window over the widest of the three scales.
    const double s_eff = std::sqrt(p.variance * q.variance / margin);
    const double s = std::max({std::sqrt(p.variance), std::sqrt(q.variance), s_eff});
    const double lo = std::min(p.mean, q.mean) - spec.half_width_sds * s;
    const double hi = std::max(p.mean, q.mean) + spec.half_width_sds * s;

    bool converged = true;
    const double integral =
        adaptive_simpson(integrand, lo, hi, spec.abs_tol, spec.max_depth, converged);
    if (!converged) {
        throw NonConvergentError("adaptive quadrature exhausted max_depth before "
                                 "reaching abs_tol");
    }
    return (integral - 1.0) / (a * (a - 1.0));
}

namespace {

struct Incumbent {
    double rate = kInf;
    double rho2 = 0.0;
    double theta = 0.0;
    bool found = false;
};

}  // namespace

RdpfSolution brute_force_rdpf(const RdpfQuery& query, const GridSearchSpec& spec) {
    if (spec.rho2_resolution < 64 || spec.theta_resolution < 64 ||
        spec.refinement_rounds < 2) {
        throw InvalidArgument("grid spec: resolutions >= 64 and rounds >= 2 required");
    }
    if (std::isinf(query.perception)) {
        const double rate = classical_rd(query.sigma2, query.distortion);
        const double rho2 = std::max(query.sigma2 - query.distortion, 0.0);
        return {rate, rho2, rho2, Regime::DistortionOnly};
    }
    const Alpha alpha(query.alpha);
    const double a = alpha.value();
    const double s2 = query.sigma2;
    const RootPair roots = solve_roots(query.perception, alpha);

    // Divergence of the zero-mean pair (sigma2, rho2); +inf outside validity.
    const auto div_at = [&](double rho2) {
        const double m = a * rho2 + (1.0 - a) * s2;
        if (!(rho2 > 0.0) || !(m > 0.0)) {
            return kInf;
        }
        const double log_h =
            0.5 * a * std::log(rho2) + 0.5 * (1.0 - a) * std::log(s2) - 0.5 * std::log(m);
        return (1.0 - std::exp(log_h)) / (a * (1.0 - a));
    };

    // Feasible reconstruction variances live in [s2*r0, s2*r1]; pad slightly
    // to exercise the boundary, then clip to the validity domain. At the
    // supremum budget (C = 0, double root at 0) every valid variance is
    // feasible, so scan up past the source variance instead.
    double range_lo = s2 * roots.r0;
    double range_hi = s2 * roots.r1;
    if (range_hi == 0.0) {
        range_hi = 1.05 * s2;
    }
    const double pad = 0.05 * (range_hi - range_lo) + 1e-9 * s2;
    range_lo = std::max(range_lo - pad, 1e-12 * s2);
    range_hi += pad;
    if (a > 1.0) {
        range_lo = std::max(range_lo, s2 * (1.0 - 1.0 / a) * (1.0 + 1e-9));
    }
    if (a < 0.0) {
        range_hi = std::min(range_hi, s2 * (1.0 - 1.0 / a) * (1.0 - 1e-9));
    }

    const double div_slop = 1e-9 * std::max(1.0, query.perception);
    const double dist_slop = 1e-12 * (s2 + range_hi + query.distortion);

    // Minimum over the theta grid for a fixed rho2, refining the theta window
    // locally so the per-row value is accurate well below the rho2 step.
    const auto best_theta_for = [&](double rho2, double& row_rate, double& row_theta) {
        const double theta_max = std::sqrt(rho2 * s2);
        double t_lo = 0.0;
        double t_hi = theta_max;
        bool found = false;
        for (int pass = 0; pass < spec.refinement_rounds; ++pass) {
            const double t_step = (t_hi - t_lo) / (spec.theta_resolution - 1);
            for (int j = 0; j < spec.theta_resolution; ++j) {
                const double theta = t_lo + j * t_step;
                if (s2 + rho2 - 2.0 * theta > query.distortion + dist_slop) {
                    continue;
                }
                const double denom = rho2 * s2 - theta * theta;
                if (!(denom > 0.0)) {
                    continue;
                }
                const double rate = 0.5 * std::log(rho2 * s2 / denom);
                if (!found || rate < row_rate) {
                    row_rate = rate;
                    row_theta = theta;
                    found = true;
                }
            }
            if (!found || t_step == 0.0) {
                break;
            }
            t_lo = std::max(0.0, row_theta - 2.0 * t_step);
            t_hi = std::min(theta_max, row_theta + 2.0 * t_step);
        }
        return found;
    };

    Incumbent best;
    double rho_lo = range_lo;
    double rho_hi = range_hi;
    double rho_step = 0.0;

    for (int round = 0; round < spec.refinement_rounds; ++round) {
        rho_step = (rho_hi - rho_lo) / (spec.rho2_resolution - 1);
        for (int i = 0; i < spec.rho2_resolution; ++i) {
            const double rho2 = rho_lo + i * rho_step;
            if (div_at(rho2) > query.perception + div_slop) {
                continue;
            }
            double row_rate = kInf;
            double row_theta = 0.0;
            if (!best_theta_for(rho2, row_rate, row_theta)) {
                continue;
            }
            if (!best.found || row_rate < best.rate) {
                best = {row_rate, rho2, row_theta, true};
            }
        }
        if (!best.found) {
            break;
        }
        const double rho_window = 3.0 * std::max(rho_step, 1e-15 * s2);
        rho_lo = std::max(range_lo, best.rho2 - rho_window);
        rho_hi = std::min(range_hi, best.rho2 + rho_window);
    }

    if (!best.found) {
        throw InfeasibleError("no grid point satisfies both constraints");
    }

    Regime regime;
    if (best.rate <= 1e-9) {
        regime = Regime::PerceptionOnly;
    } else {
        const bool perception_active =
            std::abs(best.rho2 - s2 * roots.r0) <= 4.0 * rho_step ||
            std::abs(s2 * roots.r1 - best.rho2) <= 4.0 * rho_step;
        regime = perception_active ? Regime::BothActive : Regime::DistortionOnly;
    }
    return {best.rate, best.rho2, best.theta, regime};
}

}  // namespace rdpf
