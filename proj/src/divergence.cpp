#include "divergence.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace rdpf {

namespace {

void check_gaussian(const Gaussian& g, const char* name) {
    if (!std::isfinite(g.mean) || !std::isfinite(g.variance) || !(g.variance > 0.0)) {
        throw InvalidArgument(std::string(name) +
                              ": a Gaussian needs a finite mean and variance > 0");
    }
}

}  // namespace

Alpha::Alpha(double value) : value_(value) {
    if (!std::isfinite(value) || value == 0.0 || value == 1.0) {
        throw InvalidArgument("alpha must be finite and different from 0 and 1");
    }
}

double validity_margin(const Gaussian& p, const Gaussian& q, Alpha alpha) {
    check_gaussian(p, "p");
    check_gaussian(q, "q");
    const double a = alpha.value();
    return a * q.variance + (1.0 - a) * p.variance;
}

DivergenceValue alpha_divergence(const Gaussian& p, const Gaussian& q, Alpha alpha) {
    const double margin = validity_margin(p, q, alpha);
    if (!(margin > 0.0)) {
        throw DomainError("alpha-divergence is infinite: "
                          "alpha*var(q) + (1-alpha)*var(p) <= 0");
    }
    if (p.mean == q.mean && p.variance == q.variance) {
        return {0.0, 1.0};
    }
    const double a = alpha.value();
    const double gap = p.mean - q.mean;
    // Work in log space so large exponents stay representable.
    const double log_h = 0.5 * a * std::log(q.variance) +
                         0.5 * (1.0 - a) * std::log(p.variance) -
                         0.5 * std::log(margin) -
                         a * (1.0 - a) * gap * gap / (2.0 * margin);
    const double h = std::exp(log_h);
    double value = (1.0 - h) / (a * (1.0 - a));
    if (value < 0.0 && value > -1e-12) {
        value = 0.0;  // rounding noise near p == q
    }
    return {value, h};
}

double kl_gaussian(const Gaussian& p, const Gaussian& q) {
    check_gaussian(p, "p");
    check_gaussian(q, "q");
    const double gap = p.mean - q.mean;
    return 0.5 * (p.variance / q.variance + gap * gap / q.variance - 1.0 +
                  std::log(q.variance / p.variance));
}

double perception_sup(Alpha alpha) {
    const double a = alpha.value();
    if (a > 0.0 && a < 1.0) {
        return 1.0 / (a * (1.0 - a));
    }
    return std::numeric_limits<double>::infinity();
}

}  // namespace rdpf
