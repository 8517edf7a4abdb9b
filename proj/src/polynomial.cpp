#include "polynomial.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace rdpf {

namespace {

int sign(double x) {
    return (x > 0.0) - (x < 0.0);
}

void check_perception(double perception) {
    if (!(perception >= 0.0) || !std::isfinite(perception)) {
        throw InvalidArgument("perception budget must be finite and >= 0");
    }
}

}  // namespace

double coefficient_c(double perception, Alpha alpha) {
    check_perception(perception);
    const double a = alpha.value();
    if (alpha.in_unit_interval() && perception > perception_sup(alpha)) {
        throw RangeError("perception budget exceeds the attainable supremum "
                         "1/(alpha(1-alpha)) for alpha in (0,1)");
    }
    const double t = 1.0 - a * (1.0 - a) * perception;
    return t * t;
}

PerceptionPolynomial::PerceptionPolynomial(Alpha alpha, double c)
    : alpha_(alpha), c_(c) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
        throw InvalidArgument("polynomial coefficient C must be finite and >= 0");
    }
}

PerceptionPolynomial PerceptionPolynomial::for_perception(Alpha alpha,
                                                          double perception) {
    return PerceptionPolynomial(alpha, coefficient_c(perception, alpha));
}

double PerceptionPolynomial::operator()(double x) const {
    if (!(x >= 0.0)) {
        throw DomainError("f is defined on x >= 0");
    }
    const double a = alpha_.value();
    if (x == 0.0 && a < 0.0) {
        throw DomainError("f(0) is undefined for alpha < 0");
    }
    return std::pow(x, a) - a * c_ * x - (1.0 - a) * c_;
}

double PerceptionPolynomial::derivative(double x) const {
    if (!(x >= 0.0)) {
        throw DomainError("f' is defined on x >= 0");
    }
    const double a = alpha_.value();
    if (x == 0.0 && a < 1.0) {
        throw DomainError("f'(0) is undefined for alpha < 1");
    }
    return a * (std::pow(x, a - 1.0) - c_);
}

double PerceptionPolynomial::second_derivative(double x) const {
    if (!(x > 0.0) && alpha_.value() < 2.0) {
        throw DomainError("f'' requires x > 0 for alpha < 2");
    }
    if (!(x >= 0.0)) {
        throw DomainError("f'' is defined on x >= 0");
    }
    const double a = alpha_.value();
    return a * (a - 1.0) * std::pow(x, a - 2.0);
}

double PerceptionPolynomial::stationary_point() const {
    if (c_ == 0.0) {
        throw DegenerateError("C = 0: no stationary point, x = 0 is the only root");
    }
    return std::pow(c_, 1.0 / (alpha_.value() - 1.0));
}

std::pair<Bracket, Bracket> PerceptionPolynomial::brackets(double eps) const {
    if (eps < 0.0 || !std::isfinite(eps)) {
        throw InvalidArgument("eps must be >= 0");
    }
    const double a = alpha_.value();
    const double x0 = stationary_point();
    const double f_x0 = (*this)(x0);

    // Cancellation scale of the three terms of f at x0.
    const double scale = std::abs(std::pow(x0, a)) + std::abs(a * c_ * x0) +
                         std::abs((1.0 - a) * c_);
    if (std::abs(f_x0) <= 1e-15 * scale) {
        throw TangentError("f vanishes at its stationary point: double root, "
                           "no sign change to bracket");
    }

    // Lower bracket [lo, x0]. f(0) = -(1-alpha)C has the opposite sign of
    // f(x0) except for alpha < 0, where f is undefined at 0 but diverges to
    // +infinity as x -> 0+; there a positive floor is shrunk until the sign
    // flips.
    double lo = 0.0;
    if (a < 0.0) {
        lo = x0 / 10.0;
        int shrink = 0;
        while (sign((*this)(lo)) == sign(f_x0)) {
            lo /= 10.0;
            if (++shrink > 100) {
                throw NoSignChangeError("no sign change found approaching x = 0");
            }
        }
    } else if (sign((*this)(lo)) == sign(f_x0)) {
        throw NoSignChangeError("f(0) and f(x0) have the same sign");
    }
    const Bracket lower{lo, x0};

    // Upper bracket [x0, y0] with y0 the tangent zero at x0 + eps. Convexity
    // (concavity for alpha in (0,1)) puts the larger root at or below y0, so
    // only numerical degeneracies require widening eps.
    double e = (eps > 0.0) ? eps : std::max(1e-6, 1e-6 * x0);
    for (int attempt = 0; attempt < 60; ++attempt, e *= 2.0) {
        const double xe = x0 + e;
        const double fe = (*this)(xe);
        const double fpe = derivative(xe);
        if (fpe == 0.0 || !std::isfinite(fe) || !std::isfinite(fpe)) {
            continue;
        }
        const double y0 = xe - fe / fpe;
        if (!(y0 > x0) || !std::isfinite(y0)) {
            continue;
        }
        const double f_y0 = (*this)(y0);
        if (std::isfinite(f_y0) && sign(f_y0) != sign(f_x0)) {
            return {lower, Bracket{x0, y0}};
        }
    }
    throw NoSignChangeError("tangent bound produced no verified sign change "
                            "after widening eps 60 times");
}

double bisect(const PerceptionPolynomial& f, Bracket bracket, double tol) {
    if (!(tol > 0.0)) {
        throw InvalidArgument("bisection tolerance must be > 0");
    }
    if (!(bracket.lo < bracket.hi)) {
        throw InvalidArgument("bracket must satisfy lo < hi");
    }
    double lo = bracket.lo;
    double hi = bracket.hi;
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if (sign(f_lo) == sign(f_hi)) {
        throw InvalidArgument("bracket does not straddle a sign change");
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;  // interval no longer splittable in doubles
        }
        const double f_mid = f(mid);
        if (f_mid == 0.0) {
            return mid;
        }
        if (sign(f_mid) == sign(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

namespace {

// Re-derive the divergence at variance ratio r and compare with the target.
// Roots of f outside the divergence validity domain are algebraic artifacts
// of the squaring step and must be rejected.
void validate_root(double r, double perception, Alpha alpha, double backsub_tol) {
    const double a = alpha.value();
    if (!(r > 0.0) || a * r + (1.0 - a) <= 0.0) {
        throw SpuriousRootError("root " + std::to_string(r) +
                                " lies outside the divergence validity domain");
    }
    const double d = alpha_divergence({0.0, 1.0}, {0.0, r}, alpha).value;
    if (!(std::abs(d - perception) <= backsub_tol)) {
        throw SpuriousRootError("root " + std::to_string(r) +
                                " reproduces divergence " + std::to_string(d) +
                                " instead of " + std::to_string(perception));
    }
}

double refined_root(const PerceptionPolynomial& f, const Bracket& b, double tol) {
    double r = bisect(f, b, tol);
    if (std::abs(f(r)) > 1e-9) {
        // Steep |f'| near the root, or a root far below tol in magnitude
        // (budgets near the supremum push r0 toward 0). Rerun to the floating
        // point fixed point; the bisection loop stops by itself once the
        // bracket can no longer be split.
        r = bisect(f, b, std::numeric_limits<double>::denorm_min());
    }
    return r;
}

}  // namespace

RootPair solve_roots(double perception, Alpha alpha, double tol, double backsub_tol) {
    check_perception(perception);
    if (!(tol > 0.0) || !(backsub_tol > 0.0)) {
        throw InvalidArgument("tolerances must be > 0");
    }
    if (perception == 0.0) {
        return {1.0, 1.0, 0.0, 0.0};  // rho = sigma is the only perfect-perception ratio
    }
    const double c = coefficient_c(perception, alpha);
    if (c == 0.0) {
        return {0.0, 0.0, 0.0, 0.0};
    }
    const PerceptionPolynomial f(alpha, c);
    const auto [lower, upper] = f.brackets();
    const double r0 = refined_root(f, lower, tol);
    const double r1 = refined_root(f, upper, tol);
    validate_root(r0, perception, alpha, backsub_tol);
    validate_root(r1, perception, alpha, backsub_tol);
    return {r0, r1, std::abs(f(r0)), std::abs(f(r1))};
}

RootPair pearson_roots(double perception) {
    check_perception(perception);
    if (perception == 0.0) {
        return {1.0, 1.0, 0.0, 0.0};
    }
    const double s = 1.0 + 2.0 * perception;  // sqrt(C)
    const double r1 = s * (s + 2.0 * std::sqrt(perception * (1.0 + perception)));
    const double r0 = (s * s) / r1;  // product of the quadratic's roots is C
    const PerceptionPolynomial f(Alpha(2.0), s * s);
    return {r0, r1, std::abs(f(r0)), std::abs(f(r1))};
}

RootPair hellinger_roots(double perception) {
    check_perception(perception);
    if (perception > 4.0) {
        throw RangeError("Hellinger perception budget is capped at 4");
    }
    if (perception == 0.0) {
        return {1.0, 1.0, 0.0, 0.0};
    }
    const double s = 1.0 - perception / 4.0;  // sqrt(C)
    if (s == 0.0) {
        return {0.0, 0.0, 0.0, 0.0};
    }
    const double c = s * s;
    // In u = sqrt(x): u^2 - (2/C) u + 1 = 0, unit product of roots.
    const double u1 = (1.0 + std::sqrt((1.0 - c) * (1.0 + c))) / c;
    const double u0 = 1.0 / u1;
    const PerceptionPolynomial f(Alpha(0.5), c);
    const double r0 = u0 * u0;
    const double r1 = u1 * u1;
    return {r0, r1, std::abs(f(r0)), std::abs(f(r1))};
}

}  // namespace rdpf
