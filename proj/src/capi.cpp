#include "rdpf/rdpf.h"

#include <cmath>
#include <limits>
#include <string>

#include "divergence.hpp"
#include "errors.hpp"
#include "oracles.hpp"
#include "polynomial.hpp"
#include "solver.hpp"

struct rdpf_ctx {
    rdpf::SolverOptions solver;
    rdpf::QuadratureSpec quad;
    rdpf::GridSearchSpec grid;
    std::string last_error;
};

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

rdpf_status fail(rdpf_ctx* ctx, rdpf_status status, const char* what) noexcept {
    try {
        ctx->last_error = what;
    } catch (...) {
    }
    return status;
}

template <typename F>
rdpf_status guarded(rdpf_ctx* ctx, F&& body) noexcept {
    if (ctx == nullptr) {
        return RDPF_ERR_INVALID_ARGUMENT;
    }
    try {
        body();
        ctx->last_error.clear();
        return RDPF_OK;
    } catch (const rdpf::DomainError& e) {
        return fail(ctx, RDPF_ERR_DOMAIN, e.what());
    } catch (const rdpf::RangeError& e) {
        return fail(ctx, RDPF_ERR_RANGE, e.what());
    } catch (const rdpf::DegenerateError& e) {
        return fail(ctx, RDPF_ERR_DEGENERATE, e.what());
    } catch (const rdpf::TangentError& e) {
        return fail(ctx, RDPF_ERR_TANGENT, e.what());
    } catch (const rdpf::NoSignChangeError& e) {
        return fail(ctx, RDPF_ERR_NO_SIGN_CHANGE, e.what());
    } catch (const rdpf::SpuriousRootError& e) {
        return fail(ctx, RDPF_ERR_SPURIOUS_ROOT, e.what());
    } catch (const rdpf::InfeasibleError& e) {
        return fail(ctx, RDPF_ERR_INFEASIBLE, e.what());
    } catch (const rdpf::NonConvergentError& e) {
        return fail(ctx, RDPF_ERR_NON_CONVERGENT, e.what());
    } catch (const rdpf::InvalidArgument& e) {
        return fail(ctx, RDPF_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(ctx, RDPF_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(ctx, RDPF_ERR_INTERNAL, "unknown error");
    }
}

void require_out(const void* out) {
    if (out == nullptr) {
        throw rdpf::InvalidArgument("output pointer is null");
    }
}

rdpf_root_pair to_c(const rdpf::RootPair& r) noexcept {
    return {r.r0, r.r1, r.residual0, r.residual1};
}

rdpf_solution to_c(const rdpf::RdpfSolution& s) noexcept {
    return {s.rate, s.rho2, s.theta, static_cast<rdpf_regime>(s.regime)};
}

}  // namespace

extern "C" {

const char* rdpf_status_name(rdpf_status status) {
    switch (status) {
        case RDPF_OK: return "OK";
        case RDPF_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case RDPF_ERR_DOMAIN: return "DomainError";
        case RDPF_ERR_RANGE: return "RangeError";
        case RDPF_ERR_DEGENERATE: return "DegenerateError";
        case RDPF_ERR_TANGENT: return "TangentError";
        case RDPF_ERR_NO_SIGN_CHANGE: return "NoSignChange";
        case RDPF_ERR_SPURIOUS_ROOT: return "SpuriousRoot";
        case RDPF_ERR_INFEASIBLE: return "Infeasible";
        case RDPF_ERR_NON_CONVERGENT: return "NonConvergent";
        case RDPF_ERR_INTERNAL: return "InternalError";
    }
    return "InternalError";
}

const char* rdpf_version(void) {
    return "0.1.0";
}

rdpf_ctx* rdpf_ctx_new(void) {
    try {
        return new rdpf_ctx();
    } catch (...) {
        return nullptr;
    }
}

void rdpf_ctx_free(rdpf_ctx* ctx) {
    delete ctx;
}

const char* rdpf_ctx_last_error(const rdpf_ctx* ctx) {
    return ctx == nullptr ? "" : ctx->last_error.c_str();
}

rdpf_status rdpf_ctx_set_root_tol(rdpf_ctx* ctx, double tol) {
    return guarded(ctx, [&] {
        if (!(tol > 0.0)) {
            throw rdpf::InvalidArgument("root tolerance must be > 0");
        }
        ctx->solver.root_tol = tol;
    });
}

rdpf_status rdpf_ctx_set_quad_tol(rdpf_ctx* ctx, double abs_tol) {
    return guarded(ctx, [&] {
        if (!(abs_tol > 0.0)) {
            throw rdpf::InvalidArgument("quadrature tolerance must be > 0");
        }
        ctx->quad.abs_tol = abs_tol;
    });
}

rdpf_status rdpf_ctx_set_grid(rdpf_ctx* ctx, int rho2_resolution, int theta_resolution,
                              int refinement_rounds) {
    return guarded(ctx, [&] {
        if (rho2_resolution < 64 || theta_resolution < 64 || refinement_rounds < 2) {
            throw rdpf::InvalidArgument("grid spec: resolutions >= 64 and rounds >= 2");
        }
        ctx->grid = {rho2_resolution, theta_resolution, refinement_rounds};
    });
}

rdpf_status rdpf_validity_margin(rdpf_ctx* ctx, double var_p, double var_q, double alpha,
                                 double* margin) {
    return guarded(ctx, [&] {
        require_out(margin);
        *margin = rdpf::validity_margin({0.0, var_p}, {0.0, var_q}, rdpf::Alpha(alpha));
    });
}

rdpf_status rdpf_alpha_divergence(rdpf_ctx* ctx, double mean_p, double var_p,
                                  double mean_q, double var_q, double alpha,
                                  double* value, double* h_alpha) {
    return guarded(ctx, [&] {
        require_out(value);
        const auto d = rdpf::alpha_divergence({mean_p, var_p}, {mean_q, var_q},
                                              rdpf::Alpha(alpha));
        *value = d.value;
        if (h_alpha != nullptr) {
            *h_alpha = d.h_alpha;
        }
    });
}

rdpf_status rdpf_kl_gaussian(rdpf_ctx* ctx, double mean_p, double var_p, double mean_q,
                             double var_q, double* value) {
    return guarded(ctx, [&] {
        require_out(value);
        *value = rdpf::kl_gaussian({mean_p, var_p}, {mean_q, var_q});
    });
}

rdpf_status rdpf_perception_sup(rdpf_ctx* ctx, double alpha, double* sup) {
    return guarded(ctx, [&] {
        require_out(sup);
        *sup = rdpf::perception_sup(rdpf::Alpha(alpha));
    });
}

rdpf_status rdpf_solve_roots(rdpf_ctx* ctx, double alpha, double perception,
                             rdpf_root_pair* out) {
    return guarded(ctx, [&] {
        require_out(out);
        *out = to_c(rdpf::solve_roots(perception, rdpf::Alpha(alpha),
                                      ctx->solver.root_tol, ctx->solver.backsub_tol));
    });
}

rdpf_status rdpf_get_root_report(rdpf_ctx* ctx, double alpha, double perception,
                             rdpf_root_report* out) {
    return guarded(ctx, [&] {
        require_out(out);
        const rdpf::Alpha a(alpha);
        *out = rdpf_root_report{};
        out->x0 = kNan;
        out->y0 = kNan;
        out->bracket0_lo = out->bracket0_hi = kNan;
        out->bracket1_lo = out->bracket1_hi = kNan;
        out->coefficient_c = rdpf::coefficient_c(perception, a);
        if (perception == 0.0) {
            out->x0 = 1.0;
            out->roots = {1.0, 1.0, 0.0, 0.0};
            out->is_double_root = 1;
            return;
        }
        if (out->coefficient_c == 0.0) {
            out->roots = {0.0, 0.0, 0.0, 0.0};
            out->is_double_root = 1;
            return;
        }
        const rdpf::PerceptionPolynomial f(a, out->coefficient_c);
        out->x0 = f.stationary_point();
        const auto [lower, upper] = f.brackets();
        out->bracket0_lo = lower.lo;
        out->bracket0_hi = lower.hi;
        out->bracket1_lo = upper.lo;
        out->bracket1_hi = upper.hi;
        out->y0 = upper.hi;
        out->roots = to_c(rdpf::solve_roots(perception, a, ctx->solver.root_tol,
                                            ctx->solver.backsub_tol));
        out->is_double_root = 0;
    });
}

rdpf_status rdpf_pearson_roots(rdpf_ctx* ctx, double perception, rdpf_root_pair* out) {
    return guarded(ctx, [&] {
        require_out(out);
        *out = to_c(rdpf::pearson_roots(perception));
    });
}

rdpf_status rdpf_hellinger_roots(rdpf_ctx* ctx, double perception, rdpf_root_pair* out) {
    return guarded(ctx, [&] {
        require_out(out);
        *out = to_c(rdpf::hellinger_roots(perception));
    });
}

rdpf_status rdpf_poly_eval(rdpf_ctx* ctx, double alpha, double perception, double x,
                           double* f, double* f1, double* f2) {
    return guarded(ctx, [&] {
        require_out(f);
        const auto poly =
            rdpf::PerceptionPolynomial::for_perception(rdpf::Alpha(alpha), perception);
        *f = poly(x);
        if (f1 != nullptr) {
            *f1 = poly.derivative(x);
        }
        if (f2 != nullptr) {
            *f2 = poly.second_derivative(x);
        }
    });
}

const char* rdpf_regime_name(rdpf_regime regime) {
    return rdpf::regime_name(static_cast<rdpf::Regime>(regime));
}

rdpf_status rdpf_eval(rdpf_ctx* ctx, double sigma2, double distortion, double perception,
                      double alpha, rdpf_solution* out) {
    return guarded(ctx, [&] {
        require_out(out);
        *out = to_c(rdpf::jg_rdpf({sigma2, distortion, perception, alpha}, ctx->solver));
    });
}

rdpf_status rdpf_classical_rd(rdpf_ctx* ctx, double sigma2, double distortion,
                              double* rate_nats) {
    return guarded(ctx, [&] {
        require_out(rate_nats);
        *rate_nats = rdpf::classical_rd(sigma2, distortion);
    });
}

rdpf_status rdpf_g_boundary(rdpf_ctx* ctx, double distortion, double sigma2,
                            double alpha, double* value) {
    return guarded(ctx, [&] {
        require_out(value);
        *value = rdpf::g_boundary(distortion, sigma2, rdpf::Alpha(alpha));
    });
}

rdpf_status rdpf_min_distortion_at_perception(rdpf_ctx* ctx, double sigma2,
                                              double perception, double alpha,
                                              double* distortion) {
    return guarded(ctx, [&] {
        require_out(distortion);
        *distortion =
            rdpf::min_distortion_at_perception(sigma2, perception, rdpf::Alpha(alpha));
    });
}

rdpf_status rdpf_quad_alpha_divergence(rdpf_ctx* ctx, double mean_p, double var_p,
                                       double mean_q, double var_q, double alpha,
                                       double* value) {
    return guarded(ctx, [&] {
        require_out(value);
        *value = rdpf::quad_alpha_divergence({mean_p, var_p}, {mean_q, var_q},
                                             rdpf::Alpha(alpha), ctx->quad);
    });
}

rdpf_status rdpf_brute_force_rdpf(rdpf_ctx* ctx, double sigma2, double distortion,
                                  double perception, double alpha, rdpf_solution* out) {
    return guarded(ctx, [&] {
        require_out(out);
        *out = to_c(
            rdpf::brute_force_rdpf({sigma2, distortion, perception, alpha}, ctx->grid));
    });
}

}  // extern "C"
