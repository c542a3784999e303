#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "semichaos/quadrature.hpp"

using namespace semichaos;
using Catch::Matchers::WithinRel;

TEST_CASE("gauss_legendre integrates polynomials and smooth functions") {
    auto rule = gauss_legendre(12);
    double s0 = 0.0, s2 = 0.0, s10 = 0.0, se = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        s0 += rule.w[i];
        s2 += rule.w[i] * rule.x[i] * rule.x[i];
        s10 += rule.w[i] * std::pow(rule.x[i], 10);
        se += rule.w[i] * std::exp(rule.x[i]);
    }
    CHECK_THAT(s0, WithinRel(2.0, 1e-14));
    CHECK_THAT(s2, WithinRel(2.0 / 3.0, 1e-14));
    CHECK_THAT(s10, WithinRel(2.0 / 11.0, 1e-13));
    CHECK_THAT(se, WithinRel(std::exp(1.0) - std::exp(-1.0), 1e-13));
}

TEST_CASE("gauss_jacobi reproduces beta moments") {
    // Int_{-1}^{1} (1-x)^a (1+x)^b x^k dx against closed forms
    double a = 0.75, b = -0.25;
    auto rule = gauss_jacobi(20, a, b);
    double m0 = 0.0, m1 = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        m0 += rule.w[i];
        m1 += rule.w[i] * rule.x[i];
        m2 += rule.w[i] * rule.x[i] * rule.x[i];
    }
    double zemu = std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                           std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
    CHECK_THAT(m0, WithinRel(zemu, 1e-13));
    // first moment: zemu * (b - a)/(a + b + 2)
    CHECK_THAT(m1, WithinRel(zemu * (b - a) / (a + b + 2.0), 1e-12));
    CHECK(m2 > 0.0);
    CHECK(m2 < m0);

    // Legendre special case matches dedicated rule
    auto gj = gauss_jacobi(8, 0.0, 0.0);
    auto gl = gauss_legendre(8);
    for (int i = 0; i < 8; ++i) {
        CHECK_THAT(gj.x[i], Catch::Matchers::WithinAbs(gl.x[i], 1e-12));
        CHECK_THAT(gj.w[i], WithinRel(gl.w[i], 1e-11));
    }
}

TEST_CASE("map_rule rescales an interval") {
    auto rule = map_rule(gauss_legendre(10), 2.0, 5.0);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) s += rule.w[i] * rule.x[i];
    CHECK_THAT(s, WithinRel(0.5 * (25.0 - 4.0), 1e-13));
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_jacobi(4, -1.5, 0.0), std::invalid_argument);
}
