#pragma once

#include "errors.hpp"

namespace rdpf {

// Scalar Gaussian N(mean, variance) with variance > 0.
struct Gaussian {
    double mean = 0.0;
    double variance = 1.0;
};

// Divergence order: finite and different from 0 and 1. The two excluded
// endpoints are the KL limits and are served by kl_gaussian instead.
class Alpha {
  public:
    explicit Alpha(double value);
    double value() const noexcept { return value_; }
    bool in_unit_interval() const noexcept { return value_ > 0.0 && value_ < 1.0; }

  private:
    double value_;
};

struct DivergenceValue {
    double value;    // D_alpha(p||q), nonnegative, dimensionless
    double h_alpha;  // integral of p^alpha q^(1-alpha), always positive
};

// alpha*var(q) + (1-alpha)*var(p). The divergence is finite iff this is
// positive; a pure predicate helper, never throws for valid Gaussians.
double validity_margin(const Gaussian& p, const Gaussian& q, Alpha alpha);

// Closed-form alpha-divergence between two scalar Gaussians, including the
// mean-gap term. Throws DomainError when the defining integral diverges.
DivergenceValue alpha_divergence(const Gaussian& p, const Gaussian& q, Alpha alpha);

// KL(p||q) in nats; the alpha -> 1 limit of the divergence family.
// The alpha -> 0 limit is kl_gaussian(q, p).
double kl_gaussian(const Gaussian& p, const Gaussian& q);

// Supremum of attainable divergence values: 1/(alpha(1-alpha)) for
// alpha in (0,1), +infinity otherwise.
double perception_sup(Alpha alpha);

}  // namespace rdpf
