#include <cmath>
#include <vector>

#include "doctest.h"
#include "polynomial.hpp"
#include "support.hpp"

using namespace rdpf;

TEST_CASE("coefficient_c") {
    CHECK(coefficient_c(0.0, Alpha(2)) == 1.0);
    CHECK(coefficient_c(0.0, Alpha(-1.2)) == 1.0);
    CHECK(coefficient_c(0.2, Alpha(2)) == doctest::Approx(1.96).epsilon(1e-14));
    CHECK(coefficient_c(0.5, Alpha(0.5)) == doctest::Approx(0.765625).epsilon(1e-15));
    CHECK_THROWS_AS(coefficient_c(-0.1, Alpha(2)), InvalidArgument);
    CHECK_THROWS_AS(coefficient_c(4.1, Alpha(0.5)), RangeError);
    // P at the supremum is admissible and collapses C to zero
    CHECK(coefficient_c(4.0, Alpha(0.5)) == doctest::Approx(0.0));
}

TEST_CASE("polynomial evaluation") {
    SUBCASE("x = 1 is a root whenever C = 1") {
        for (double a : {-1.2, 0.1, 0.5, 2.0, 3.0}) {
            const PerceptionPolynomial f(Alpha(a), 1.0);
            CHECK(f(1.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
        }
    }
    SUBCASE("quadratic case values") {
        const PerceptionPolynomial f(Alpha(2), 1.96);
        CHECK(f(2.0) == doctest::Approx(4.0 - 7.84 + 1.96).epsilon(1e-14));
        CHECK(f.derivative(1.96) == doctest::Approx(0.0));
        CHECK(f.second_derivative(1.0) == doctest::Approx(2.0));
    }
    SUBCASE("domain restrictions at x = 0") {
        const PerceptionPolynomial fneg(Alpha(-1.0), 2.0);
        CHECK_THROWS_AS(fneg(0.0), DomainError);
        const PerceptionPolynomial fpos(Alpha(0.5), 0.9);
        CHECK(fpos(0.0) == doctest::Approx(-0.5 * 0.9));
        CHECK_THROWS_AS(fpos.derivative(0.0), DomainError);
        CHECK_THROWS_AS(fpos.second_derivative(0.0), DomainError);
        CHECK_THROWS_AS(fpos(-1.0), DomainError);
    }
}

TEST_CASE("stationary_point") {
    CHECK(PerceptionPolynomial(Alpha(2), 1.96).stationary_point() ==
          doctest::Approx(1.96).epsilon(1e-15));
    CHECK(PerceptionPolynomial(Alpha(0.5), 0.765625).stationary_point() ==
          doctest::Approx(std::pow(0.765625, -2.0)).epsilon(1e-15));
    for (double a : {-2.0, 0.3, 1.7}) {
        CHECK(PerceptionPolynomial(Alpha(a), 1.0).stationary_point() == 1.0);
    }
    CHECK_THROWS_AS(PerceptionPolynomial(Alpha(2), 0.0).stationary_point(),
                    DegenerateError);
}

TEST_CASE("brackets") {
    SUBCASE("quadratic case straddles both roots") {
        const PerceptionPolynomial f(Alpha(2), 1.96);
        const auto [lower, upper] = f.brackets();
        CHECK(lower.lo == 0.0);
        CHECK(lower.hi == doctest::Approx(1.96));
        CHECK(f(lower.lo) * f(lower.hi) < 0.0);
        CHECK(f(upper.lo) * f(upper.hi) < 0.0);
        const auto oracle = pearson_roots(0.2);
        CHECK(oracle.r0 >= lower.lo);
        CHECK(oracle.r0 <= lower.hi);
        CHECK(oracle.r1 >= upper.lo);
        CHECK(oracle.r1 <= upper.hi);
    }
    SUBCASE("C = 1 is a tangent contact") {
        CHECK_THROWS_AS(PerceptionPolynomial(Alpha(2), 1.0).brackets(), TangentError);
        CHECK_THROWS_AS(PerceptionPolynomial(Alpha(0.5), 1.0).brackets(), TangentError);
    }
    SUBCASE("negative alpha uses a positive floor") {
        const PerceptionPolynomial f(Alpha(-1.2), coefficient_c(0.2, Alpha(-1.2)));
        const auto [lower, upper] = f.brackets();
        CHECK(lower.lo > 0.0);
        CHECK(f(lower.lo) * f(lower.hi) < 0.0);
        CHECK(f(upper.lo) * f(upper.hi) < 0.0);
    }
}

TEST_CASE("bisect") {
    const PerceptionPolynomial f(Alpha(2), 1.96);
    const auto [lower, upper] = f.brackets();
    const auto oracle = pearson_roots(0.2);
    CHECK(std::abs(bisect(f, lower, 1e-10) - oracle.r0) <= 1e-9);
    CHECK(std::abs(bisect(f, upper, 1e-10) - oracle.r1) <= 1e-9);
    CHECK_THROWS_AS(bisect(f, Bracket{2.0, 3.0}, 1e-10), InvalidArgument);
    CHECK_THROWS_AS(bisect(f, Bracket{1.0, 0.5}, 1e-10), InvalidArgument);
    CHECK_THROWS_AS(bisect(f, lower, -1.0), InvalidArgument);
}

TEST_CASE("solve_roots") {
    SUBCASE("perfect perception is the double root at 1") {
        for (double a : {-2.0, 0.3, 2.0}) {
            const auto roots = solve_roots(0.0, Alpha(a));
            CHECK(roots.r0 == 1.0);
            CHECK(roots.r1 == 1.0);
            CHECK(roots.residual0 == 0.0);
        }
    }
    SUBCASE("C = 0 is the double root at 0") {
        const auto roots = solve_roots(4.0, Alpha(0.5));
        CHECK(roots.r0 == 0.0);
        CHECK(roots.r1 == 0.0);
    }
    SUBCASE("matches the quadratic closed form") {
        const auto solved = solve_roots(0.2, Alpha(2));
        const auto oracle = pearson_roots(0.2);
        CHECK(std::abs(solved.r0 - oracle.r0) <= 1e-9);
        CHECK(std::abs(solved.r1 - oracle.r1) <= 1e-9);
    }
    SUBCASE("matches the sqrt-quadratic closed form") {
        const auto solved = solve_roots(0.5, Alpha(0.5));
        const auto oracle = hellinger_roots(0.5);
        CHECK(std::abs(solved.r0 - oracle.r0) <= 1e-9);
        CHECK(std::abs(solved.r1 - oracle.r1) <= 1e-9);
    }
    SUBCASE("rejects invalid budgets") {
        CHECK_THROWS_AS(solve_roots(-0.5, Alpha(2)), InvalidArgument);
        CHECK_THROWS_AS(solve_roots(5.0, Alpha(0.5)), RangeError);
    }
}

TEST_CASE("closed-form root oracles") {
    CHECK(pearson_roots(0.0).r0 == 1.0);
    CHECK(pearson_roots(0.0).r1 == 1.0);
    SUBCASE("pearson matches the direct quadratic formula") {
        for (double p : {0.01, 0.05, 0.1, 0.2, 0.5, 1.0, 2.0}) {
            const auto roots = pearson_roots(p);
            const double s = 1.0 + 2.0 * p;
            const double t = 2.0 * std::sqrt(p + p * p);
            CHECK(roots.r1 == doctest::Approx(s * (s + t)).epsilon(1e-14));
            CHECK(roots.r0 == doctest::Approx(s * (s - t)).epsilon(1e-11));
        }
    }
    SUBCASE("hellinger caps at 4") {
        CHECK_THROWS_AS(hellinger_roots(4.5), RangeError);
        const auto at_cap = hellinger_roots(4.0);
        CHECK(at_cap.r0 == 0.0);
        CHECK(at_cap.r1 == 0.0);
    }
}

TEST_CASE("root properties over sampled (alpha, P)") {
    testutil::Rng rng(555);
    for (int i = 0; i < 200; ++i) {
        const double alpha = testutil::sample_alpha(rng, -3.0, 3.0);
        const Alpha a(alpha);
        const double sup = perception_sup(a);
        const double perception =
            rng.uniform(0.01, std::isinf(sup) ? 1.0 : std::min(1.0, 0.95 * sup));
        const PerceptionPolynomial f =
            PerceptionPolynomial::for_perception(a, perception);
        const auto [lower, upper] = f.brackets();
        const double x0 = f.stationary_point();
        const auto roots = solve_roots(perception, a);

        // containment in the bracketing sets
        CHECK(roots.r0 >= 0.0);
        CHECK(roots.r0 <= x0 + 1e-12);
        CHECK(roots.r1 >= x0 - 1e-12);
        CHECK(roots.r1 <= upper.hi + 1e-12);

        // the pair straddles 1 for any positive budget
        CHECK(roots.r0 < 1.0);
        CHECK(roots.r1 > 1.0);

        // bisection residuals
        CHECK(roots.residual0 <= 1e-8);
        CHECK(roots.residual1 <= 1e-8);

        // back-substitution into the divergence
        for (double r : {roots.r0, roots.r1}) {
            const double d = alpha_divergence({0, 1}, {0, r}, a).value;
            CHECK(std::abs(d - perception) <= 1e-6);
        }
    }
}

TEST_CASE("oracle agreement across a perception grid") {
    for (double p : {0.01, 0.05, 0.1, 0.2, 0.5, 1.0}) {
        const auto s2 = solve_roots(p, Alpha(2));
        const auto o2 = pearson_roots(p);
        CHECK(std::abs(s2.r0 - o2.r0) <= 1e-9);
        CHECK(std::abs(s2.r1 - o2.r1) <= 1e-9);
        const auto sh = solve_roots(p, Alpha(0.5));
        const auto oh = hellinger_roots(p);
        CHECK(std::abs(sh.r0 - oh.r0) <= 1e-9);
        CHECK(std::abs(sh.r1 - oh.r1) <= 1e-9);
        // reciprocal product at alpha = 1/2
        CHECK(std::abs(sh.r0 * sh.r1 - 1.0) <= 1e-9);
    }
}

TEST_CASE("roots survive budgets near the supremum and far beyond 1") {
    SUBCASE("alpha in (0,1): r0 collapses toward zero near the supremum") {
        for (double alpha : {0.5, 0.1}) {
            const double sup = perception_sup(Alpha(alpha));
            for (double shortfall : {1e-2, 1e-4}) {
                const double p = sup * (1.0 - shortfall);
                const auto solved = solve_roots(p, Alpha(alpha));
                CHECK(solved.r0 > 0.0);
                CHECK(solved.r0 < 1e-3);
                for (double r : {solved.r0, solved.r1}) {
                    const double d = alpha_divergence({0, 1}, {0, r}, Alpha(alpha)).value;
                    CHECK(std::abs(d - p) <= 1e-6);
                }
                if (alpha == 0.5) {
                    const auto oracle = hellinger_roots(p);
                    CHECK(std::abs(solved.r0 - oracle.r0) <= 1e-9 * oracle.r0);
                    CHECK(std::abs(solved.r1 - oracle.r1) <= 1e-9 * oracle.r1);
                    CHECK(solved.r0 * solved.r1 == doctest::Approx(1.0).epsilon(1e-9));
                }
            }
        }
    }
    SUBCASE("large budgets outside (0,1)") {
        const auto big = solve_roots(100.0, Alpha(2));
        const auto oracle = pearson_roots(100.0);
        CHECK(std::abs(big.r0 - oracle.r0) <= 1e-9 * oracle.r0);
        CHECK(std::abs(big.r1 - oracle.r1) <= 1e-9 * oracle.r1);
        const auto negative_alpha = solve_roots(5.0, Alpha(-4.0));
        CHECK(negative_alpha.r0 < 1.0);
        CHECK(negative_alpha.r1 > 1.0);
        // roots stay inside the validity domain x < 1 + 1/|alpha|
        CHECK(negative_alpha.r1 < 1.25);
    }
}

TEST_CASE("two sign changes over the valid domain, P = 0.2") {
    for (double alpha : {-1.2, 0.1, 0.5, 2.0}) {
        const Alpha a(alpha);
        const auto f = PerceptionPolynomial::for_perception(a, 0.2);
        const auto roots = solve_roots(0.2, a);
        double lo = roots.r0 / 4.0;
        double hi = roots.r1 * 1.5 + 0.5;
        if (alpha > 1.0) {
            lo = std::max(lo, (1.0 - 1.0 / alpha) * (1.0 + 1e-9));
        }
        if (alpha < 0.0) {
            hi = std::min(hi, (1.0 - 1.0 / alpha) * (1.0 - 1e-9));
        }
        int sign_changes = 0;
        double prev = f(lo);
        const int n = 2000;
        for (int i = 1; i <= n; ++i) {
            const double x = lo + (hi - lo) * i / n;
            const double fx = f(x);
            if ((prev < 0.0) != (fx < 0.0)) {
                ++sign_changes;
            }
            prev = fx;
        }
        CHECK(sign_changes == 2);
    }
}
