/*
 * rdpf - rate-distortion-perception solver for scalar Gaussian sources
 * under mean-squared-error distortion and an alpha-divergence perception
 * constraint.
 *
 * C interface of the shared library. Every fallible entry point returns an
 * rdpf_status and writes its result through out-pointers. A context carries
 * numeric tolerances and the last error message; contexts are cheap and not
 * thread-safe, use one per thread.
 */
#ifndef RDPF_H
#define RDPF_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define RDPF_API __declspec(dllexport)
#else
#define RDPF_API __attribute__((visibility("default")))
#endif

typedef enum rdpf_status {
    RDPF_OK = 0,
    RDPF_ERR_INVALID_ARGUMENT = 1, /* a type invariant was violated */
    RDPF_ERR_DOMAIN = 2,           /* divergent integral / undefined evaluation */
    RDPF_ERR_RANGE = 3,            /* perception budget above its supremum */
    RDPF_ERR_DEGENERATE = 4,       /* C = 0: stationary point collapses */
    RDPF_ERR_TANGENT = 5,          /* double root: no sign change to bracket */
    RDPF_ERR_NO_SIGN_CHANGE = 6,   /* bracket verification failed */
    RDPF_ERR_SPURIOUS_ROOT = 7,    /* root fails divergence back-substitution */
    RDPF_ERR_INFEASIBLE = 8,       /* constraints cannot be met jointly */
    RDPF_ERR_NON_CONVERGENT = 9,   /* quadrature depth exhausted */
    RDPF_ERR_INTERNAL = 10
} rdpf_status;

/* Stable error names: "DomainError", "RangeError", "Infeasible", ... */
RDPF_API const char *rdpf_status_name(rdpf_status status);
RDPF_API const char *rdpf_version(void);

/* ------------------------------------------------------------------ */
/* context                                                             */

typedef struct rdpf_ctx rdpf_ctx;

RDPF_API rdpf_ctx *rdpf_ctx_new(void);
RDPF_API void rdpf_ctx_free(rdpf_ctx *ctx);

/* Message of the most recent failure on this context; "" after success. */
RDPF_API const char *rdpf_ctx_last_error(const rdpf_ctx *ctx);

/* Bisection bracket width for root solving (default 1e-10). */
RDPF_API rdpf_status rdpf_ctx_set_root_tol(rdpf_ctx *ctx, double tol);
/* Absolute tolerance of the quadrature oracle (default 1e-10). */
RDPF_API rdpf_status rdpf_ctx_set_quad_tol(rdpf_ctx *ctx, double abs_tol);
/* Grid of the brute-force oracle (defaults 128, 128, 3). */
RDPF_API rdpf_status rdpf_ctx_set_grid(rdpf_ctx *ctx, int rho2_resolution,
                                       int theta_resolution, int refinement_rounds);

/* ------------------------------------------------------------------ */
/* Gaussian alpha-divergence                                           */

/* alpha*var_q + (1-alpha)*var_p; the divergence is finite iff positive. */
RDPF_API rdpf_status rdpf_validity_margin(rdpf_ctx *ctx, double var_p, double var_q,
                                          double alpha, double *margin);

/* Closed-form divergence between N(mean_p, var_p) and N(mean_q, var_q).
 * h_alpha may be NULL. RDPF_ERR_DOMAIN when the integral diverges. */
RDPF_API rdpf_status rdpf_alpha_divergence(rdpf_ctx *ctx, double mean_p, double var_p,
                                           double mean_q, double var_q, double alpha,
                                           double *value, double *h_alpha);

/* KL(p||q) in nats: the alpha -> 1 limit of the family. */
RDPF_API rdpf_status rdpf_kl_gaussian(rdpf_ctx *ctx, double mean_p, double var_p,
                                      double mean_q, double var_q, double *value);

/* 1/(alpha(1-alpha)) for alpha in (0,1), +infinity otherwise. */
RDPF_API rdpf_status rdpf_perception_sup(rdpf_ctx *ctx, double alpha, double *sup);

/* ------------------------------------------------------------------ */
/* perception polynomial f(x) = x^alpha - alpha C x - (1-alpha) C      */

typedef struct rdpf_root_pair {
    double r0;
    double r1;
    double residual0; /* |f(r0)| */
    double residual1; /* |f(r1)| */
} rdpf_root_pair;

typedef struct rdpf_root_report {
    double coefficient_c;
    double x0; /* stationary point C^(1/(alpha-1)); NaN for a degenerate C = 0 */
    double y0; /* tangent-zero upper bound of the larger root; NaN if unused */
    double bracket0_lo, bracket0_hi;
    double bracket1_lo, bracket1_hi;
    rdpf_root_pair roots;
    int is_double_root; /* 1 when P = 0 (root 1) or C = 0 (root 0) */
} rdpf_root_report;

/* Both variance-ratio roots for (alpha, P), bisected and validated by
 * divergence back-substitution. */
RDPF_API rdpf_status rdpf_solve_roots(rdpf_ctx *ctx, double alpha, double perception,
                                      rdpf_root_pair *out);

/* Same as rdpf_solve_roots plus the bracketing diagnostics. */
RDPF_API rdpf_status rdpf_get_root_report(rdpf_ctx *ctx, double alpha, double perception,
                                      rdpf_root_report *out);

/* Closed-form oracles: alpha = 2 and alpha = 1/2. */
RDPF_API rdpf_status rdpf_pearson_roots(rdpf_ctx *ctx, double perception,
                                        rdpf_root_pair *out);
RDPF_API rdpf_status rdpf_hellinger_roots(rdpf_ctx *ctx, double perception,
                                          rdpf_root_pair *out);

/* f, f', f'' at x for the polynomial of (alpha, P); f1/f2 may be NULL. */
RDPF_API rdpf_status rdpf_poly_eval(rdpf_ctx *ctx, double alpha, double perception,
                                    double x, double *f, double *f1, double *f2);

/* ------------------------------------------------------------------ */
/* solver                                                              */

typedef enum rdpf_regime {
    RDPF_REGIME_DISTORTION_ONLY = 0,
    RDPF_REGIME_PERCEPTION_ONLY = 1, /* rate zero */
    RDPF_REGIME_BOTH_ACTIVE = 2
} rdpf_regime;

/* "distortion_only", "perception_only", "both_active" */
RDPF_API const char *rdpf_regime_name(rdpf_regime regime);

typedef struct rdpf_solution {
    double rate_nats;
    double rho2;
    double theta;
    rdpf_regime regime;
} rdpf_solution;

/* The jointly Gaussian rate-distortion-perception value at (sigma2, D, P,
 * alpha). perception may be +infinity (classical rate-distortion). */
RDPF_API rdpf_status rdpf_eval(rdpf_ctx *ctx, double sigma2, double distortion,
                               double perception, double alpha, rdpf_solution *out);

/* max{ 0.5 ln(sigma2/D), 0 } in nats. */
RDPF_API rdpf_status rdpf_classical_rd(rdpf_ctx *ctx, double sigma2, double distortion,
                                       double *rate_nats);

/* Divergence of the rate-distortion reconstruction of variance |sigma2 - D|;
 * +infinity when its integral diverges. */
RDPF_API rdpf_status rdpf_g_boundary(rdpf_ctx *ctx, double distortion, double sigma2,
                                     double alpha, double *value);

/* Smallest distortion compatible with perception equality at budget P. */
RDPF_API rdpf_status rdpf_min_distortion_at_perception(rdpf_ctx *ctx, double sigma2,
                                                       double perception, double alpha,
                                                       double *distortion);

/* ------------------------------------------------------------------ */
/* verification oracles                                                */

/* Adaptive-quadrature divergence, independent of the closed form. */
RDPF_API rdpf_status rdpf_quad_alpha_divergence(rdpf_ctx *ctx, double mean_p,
                                                double var_p, double mean_q,
                                                double var_q, double alpha,
                                                double *value);

/* Grid-search minimizer over (rho2, theta); ground truth for rdpf_eval. */
RDPF_API rdpf_status rdpf_brute_force_rdpf(rdpf_ctx *ctx, double sigma2,
                                           double distortion, double perception,
                                           double alpha, rdpf_solution *out);

#ifdef __cplusplus
}
#endif

#endif /* RDPF_H */
