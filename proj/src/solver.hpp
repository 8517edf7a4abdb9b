#pragma once

#include "divergence.hpp"
#include "polynomial.hpp"

namespace rdpf {

// Which constraints bind at the optimum.
enum class Regime { DistortionOnly, PerceptionOnly, BothActive };

const char* regime_name(Regime regime) noexcept;

struct RdpfQuery {
    double sigma2;      // source variance, > 0
    double distortion;  // MSE budget D, > 0, in squared source units
    double perception;  // divergence budget P, >= 0; +infinity disables it
    double alpha;       // divergence order, not 0 or 1
};

struct RdpfSolution {
    double rate;   // nats
    double rho2;   // reconstruction variance
    double theta;  // covariance E[X Xhat], in [0, sigma*rho]
    Regime regime;
};

struct SolverOptions {
    double root_tol = 1e-10;     // bisection bracket width
    double backsub_tol = 1e-6;   // divergence agreement at each root
};

// max{ (1/2) ln(sigma2/D), 0 }: the Gaussian rate-distortion function in nats.
double classical_rd(double sigma2, double distortion);

// Divergence incurred by the rate-distortion reconstruction of variance
// |sigma2 - D|; +infinity when its defining integral diverges. The
// distortion-only regime applies exactly when P exceeds this boundary.
double g_boundary(double distortion, double sigma2, Alpha alpha);

// Regime decision for a query with finite perception budget, given the
// perception-equality roots for (P, alpha). Infinite P is distortion-only.
Regime classify(const RdpfQuery& query, const RootPair& roots);

// The rate-distortion-perception value attained by a reconstruction jointly
// Gaussian with the source, together with the reconstruction variance and
// covariance achieving it. Throws InfeasibleError when no perception-equality
// root admits |theta| <= sigma*rho, RangeError when P exceeds the attainable
// supremum for alpha in (0,1).
RdpfSolution jg_rdpf(const RdpfQuery& query, const SolverOptions& options = {});

// Smallest distortion compatible with perception equality at budget P:
// (sigma - sigma*sqrt(r))^2 minimized over the validated roots. Below this
// the covariance would have to exceed sigma*rho.
double min_distortion_at_perception(double sigma2, double perception, Alpha alpha);

}  // namespace rdpf
