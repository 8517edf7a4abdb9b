#pragma once

#include "divergence.hpp"
#include "solver.hpp"

namespace rdpf {

struct QuadratureSpec {
    double abs_tol = 1e-10;
    int max_depth = 48;
    double half_width_sds = 10.0;  // integration window, in pooled standard deviations
};

// Adaptive-Simpson evaluation of the defining integral of the divergence,
// (integral of p^alpha q^(1-alpha) - 1) / (alpha(alpha-1)), independent of
// the closed form. DomainError when the integral diverges; NonConvergentError
// when max_depth is exhausted above abs_tol.
double quad_alpha_divergence(const Gaussian& p, const Gaussian& q, Alpha alpha,
                             const QuadratureSpec& spec = {});

struct GridSearchSpec {
    int rho2_resolution = 128;   // >= 64
    int theta_resolution = 128;  // >= 64
    int refinement_rounds = 3;   // >= 2, the first full pass included
};

// Grid-search minimizer of the mutual information over (rho2, theta) with
// local refinement around the incumbent; ground truth for jg_rdpf up to grid
// resolution. Searches the jointly Gaussian family only. Infinite P
// short-circuits to the classical rate-distortion corner.
RdpfSolution brute_force_rdpf(const RdpfQuery& query, const GridSearchSpec& spec = {});

}  // namespace rdpf
