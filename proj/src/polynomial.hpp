#pragma once

#include <utility>

#include "divergence.hpp"
#include "errors.hpp"

namespace rdpf {

// A sign-change interval: lo < hi and f(lo)*f(hi) <= 0.
struct Bracket {
    double lo;
    double hi;
};

// The two variance-ratio roots r0 <= r1 with the |f| residual at each.
struct RootPair {
    double r0;
    double r1;
    double residual0;
    double residual1;
};

// C = (1 - alpha(1-alpha)P)^2 for a perception budget P >= 0.
// RangeError when alpha lies in (0,1) and P exceeds perception_sup(alpha).
double coefficient_c(double perception, Alpha alpha);

// f(x) = x^alpha - alpha*C*x - (1-alpha)*C on x >= 0. Its roots are the
// reconstruction-to-source variance ratios rho^2/sigma^2 that meet the
// perception budget with equality.
class PerceptionPolynomial {
  public:
    PerceptionPolynomial(Alpha alpha, double c);
    static PerceptionPolynomial for_perception(Alpha alpha, double perception);

    double alpha() const noexcept { return alpha_.value(); }
    double c() const noexcept { return c_; }

    double operator()(double x) const;         // f
    double derivative(double x) const;         // f'  = alpha (x^(alpha-1) - C)
    double second_derivative(double x) const;  // f'' = alpha (alpha-1) x^(alpha-2)

    // x0 = C^(1/(alpha-1)), the unique stationary point: global minimum of f
    // for alpha outside [0,1], global maximum for alpha in (0,1).
    // DegenerateError when C = 0 (x = 0 is then the only root).
    double stationary_point() const;

    // Verified sign-change intervals [lo, x0] and [x0, y0], where y0 is the
    // zero of the tangent at x0 + eps. Pass eps = 0 for the default policy
    // max(1e-6, 1e-6*x0); eps doubles until the upper bracket verifies.
    // TangentError when f(x0) = 0 within tolerance (double root);
    // NoSignChangeError when verification fails after adaptive widening.
    std::pair<Bracket, Bracket> brackets(double eps = 0.0) const;

  private:
    Alpha alpha_;
    double c_;
};

// Midpoint bisection inside a sign-change bracket; runs until the bracket
// width is at most tol and returns the midpoint.
double bisect(const PerceptionPolynomial& f, Bracket bracket, double tol);

// Both roots for (alpha, P): P = 0 short-circuits to the double root at 1,
// C = 0 to the double root at 0; otherwise brackets + bisection. Each root
// is validated by reconstructing the divergence at variance ratio r and
// checking |D_alpha - P| <= backsub_tol (SpuriousRootError otherwise).
RootPair solve_roots(double perception, Alpha alpha, double tol = 1e-10,
                     double backsub_tol = 1e-6);

// Closed-form root pairs used as oracles for solve_roots:
// alpha = 2, where f is a quadratic in x, and alpha = 1/2, where f is a
// quadratic in sqrt(x) with unit product of roots. hellinger_roots throws
// RangeError for P > 4.
RootPair pearson_roots(double perception);
RootPair hellinger_roots(double perception);

}  // namespace rdpf
