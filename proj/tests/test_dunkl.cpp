#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "semichaos/dunkl.hpp"

using namespace semichaos;
using namespace semichaos::dunkl;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("multiplicity setup invariants") {
    MultiplicitySetup s(2, {0.5, 1.0});
    CHECK(s.gamma == 1.5);
    CHECK(s.big_n == 5.0);
    CHECK_FALSE(s.trivial());
    CHECK(MultiplicitySetup(3, {0.0, 0.0, 0.0}).trivial());
    CHECK_THROWS_AS(MultiplicitySetup(2, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(MultiplicitySetup(2, {-0.1, 0.0}), std::invalid_argument);
}

TEST_CASE("weight function values and homogeneity") {
    MultiplicitySetup zero(2, {0.0, 0.0});
    CHECK(weight_h2(zero, {3.0, -7.0}) == 1.0);
    MultiplicitySetup ones(2, {1.0, 1.0});
    CHECK_THAT(weight_h2(ones, {2.0, 3.0}), WithinRel(36.0, 1e-14));
    MultiplicitySetup s(2, {0.5, 1.0});
    double w1 = weight_h2(s, {2.0, 2.0});
    double w2 = weight_h2(s, {4.0, 4.0});
    CHECK_THAT(w2 / w1, WithinRel(std::pow(2.0, 2.0 * s.gamma), 1e-13));  // = 8
    // exact degree-2gamma scaling at random points and scales
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-3.0, 3.0), us(0.1, 5.0);
    for (int it = 0; it < 50; ++it) {
        PointR x = {u(rng), u(rng)};
        double c = us(rng);
        PointR cx = {c * x[0], c * x[1]};
        CHECK_THAT(weight_h2(s, cx),
                   WithinRel(std::pow(c, 2.0 * s.gamma) * weight_h2(s, x), 1e-12));
    }
}

TEST_CASE("reflections") {
    MultiplicitySetup s(2, {0.5, 1.0});
    CHECK(reflect(s, 0, {1.0, 2.0}) == PointR{-1.0, 2.0});
    CHECK(reflect(s, 1, reflect(s, 1, {1.3, -0.4})) == PointR{1.3, -0.4});
    CHECK(reflect(s, 1, {0.0, 0.0}) == PointR{0.0, 0.0});
    CHECK_THROWS_AS(reflect(s, 2, {1.0, 2.0}), std::out_of_range);
}

TEST_CASE("dunkl operator on low-degree polynomials") {
    MultiplicitySetup s(2, {0.5, 0.0});
    ScalarField x1 = [](const PointR& x) { return complex_t(x[0], 0.0); };
    ScalarField x2 = [](const PointR& x) { return complex_t(x[1], 0.0); };
    // T_1 x_1 = 1 + 2 kappa_1 = 2
    CHECK_THAT(dunkl_apply(s, 0, x1, {1.0, 1.0}).real(), WithinAbs(2.0, 1e-10));
    // T_1 x_2 = 0
    CHECK_THAT(std::abs(dunkl_apply(s, 0, x2, {1.0, 1.0})), WithinAbs(0.0, 1e-10));
    // kappa = 0 reduces to the plain partial derivative
    MultiplicitySetup z(2, {0.0, 0.0});
    ScalarField g = [](const PointR& x) {
        return complex_t(std::sin(x[0]) * std::exp(0.3 * x[1]), 0.0);
    };
    double want = std::cos(0.7) * std::exp(0.3 * 0.2);
    CHECK_THAT(dunkl_apply(z, 0, g, {0.7, 0.2}).real(), WithinAbs(want, 1e-10));
    // pole handling
    MultiplicitySetup sp(1, {0.8});
    ScalarField even = [](const PointR& x) { return complex_t(std::cos(x[0]), 0.0); };
    CHECK_THROWS_AS(dunkl_apply(sp, 0, even, {0.0}), std::domain_error);
    CHECK_THAT(std::abs(dunkl_apply(sp, 0, even, {0.0}, -1.0, true)), WithinAbs(0.0, 1e-9));
}

TEST_CASE("dunkl laplacian: harmonics, eigenfunctions, classical limit") {
    MultiplicitySetup s(2, {0.5, 1.0});
    // coordinate functions are h-harmonics of degree 1
    for (int j = 0; j < 2; ++j) {
        ScalarField xj = [j](const PointR& x) { return complex_t(x[j], 0.0); };
        CHECK_THAT(std::abs(dunkl_laplacian_apply(s, xj, {0.8, -1.1})), WithinAbs(0.0, 1e-8));
    }
    // classical limit: -(sum d^2) |x|^2 = -2n
    MultiplicitySetup z(2, {0.0, 0.0});
    ScalarField r2 = [](const PointR& x) {
        return complex_t(x[0] * x[0] + x[1] * x[1], 0.0);
    };
    CHECK_THAT(dunkl_laplacian_apply(z, r2, {0.4, 1.7}).real(), WithinAbs(-4.0, 1e-7));

    // spherical function phi_{lambda,kappa}(x) = jn_{N/2-1}(lambda |x|) satisfies
    // Delta_kappa phi = lambda^2 phi
    double lam = 1.3;
    ScalarField phi = [&](const PointR& x) {
        return specfun::jn(s.big_n / 2.0 - 1.0, lam * norm2(x));
    };
    for (PointR x : {PointR{0.9, 0.7}, PointR{1.4, -0.5}, PointR{0.3, 0.8}}) {
        complex_t lhs = dunkl_laplacian_apply(s, phi, x);
        complex_t rhs = lam * lam * phi(x);
        INFO("x=(" << x[0] << "," << x[1] << ")");
        CHECK(std::abs(lhs - rhs) <= 1e-4 * std::abs(rhs));
    }
}

TEST_CASE("dunkl kernel: classical limit, normalization, symmetry, bound") {
    MultiplicitySetup z(2, {0.0, 0.0});
    PointR x = {0.7, -1.2};
    std::vector<complex_t> w = {complex_t(0.5, 0.3), complex_t(-0.2, 1.0)};
    complex_t dot = x[0] * w[0] + x[1] * w[1];
    CHECK(std::abs(dunkl_kernel(z, x, w) - std::exp(dot)) < 1e-13 * std::abs(std::exp(dot)));

    MultiplicitySetup s(2, {0.5, 1.0});
    CHECK(dunkl_kernel(s, {0.0, 0.0}, w) == complex_t(1.0));

    // symmetry in x <-> z for real arguments
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int it = 0; it < 40; ++it) {
        PointR a = {u(rng), u(rng)}, b = {u(rng), u(rng)};
        std::vector<complex_t> bc = {b[0], b[1]}, ac = {a[0], a[1]};
        complex_t eab = dunkl_kernel(s, a, bc), eba = dunkl_kernel(s, b, ac);
        CHECK(std::abs(eab - eba) <= 1e-10 * std::max(1.0, std::abs(eab)));
    }

    // |E(ix, xi)| <= e^{|x||xi|} on real samples
    for (int it = 0; it < 60; ++it) {
        PointR a = {u(rng), u(rng)}, xi = {u(rng), u(rng)};
        std::vector<complex_t> iz = {complex_t(0.0, a[0]), complex_t(0.0, a[1])};
        // E(ix, xi) = prod e_k(i x_j xi_j)
        std::vector<complex_t> arg = {complex_t(0.0, a[0]) * xi[0], complex_t(0.0, a[1]) * xi[1]};
        complex_t val = rank1_kernel(s.kappa[0], arg[0]) * rank1_kernel(s.kappa[1], arg[1]);
        double bound = std::exp(norm2(a) * norm2(xi)) * (1.0 + 1e-9);
        CHECK(std::abs(val) <= bound);
    }
}

TEST_CASE("kernel eigenrelation through the dunkl operator") {
    // T e_k(. z)|_x = z e_k(x z) for the rank-one kernel
    MultiplicitySetup s1(1, {0.7});
    complex_t z(0.9, 0.0);
    ScalarField f = [&](const PointR& y) { return rank1_kernel(0.7, y[0] * z); };
    complex_t lhs = dunkl_apply(s1, 0, f, {1.3});
    complex_t rhs = z * rank1_kernel(0.7, 1.3 * z);
    CHECK(std::abs(lhs - rhs) <= 1e-6 * std::abs(rhs));

    // grid of (x, z) pairs with |x||z| <= 6, including complex z, in n = 2
    MultiplicitySetup s(2, {0.5, 1.0});
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.2, 1.7);
    for (int it = 0; it < 25; ++it) {
        PointR x = {u(rng), u(rng)};
        std::vector<complex_t> zz = {complex_t(u(rng), 0.4 * u(rng)),
                                     complex_t(u(rng), -0.3 * u(rng))};
        for (int j = 0; j < 2; ++j) {
            ScalarField ez = [&](const PointR& y) { return dunkl_kernel(s, y, zz); };
            complex_t l = dunkl_apply(s, j, ez, x);
            complex_t r = zz[j] * dunkl_kernel(s, x, zz);
            INFO("j=" << j);
            CHECK(std::abs(l - r) <= 1e-6 * std::max(1.0, std::abs(r)));
        }
    }
}

TEST_CASE("kernel homogeneity E(lambda x, z) = E(x, lambda z)") {
    MultiplicitySetup s(2, {0.5, 1.0});
    complex_t lam(0.7, 0.2);
    PointR x = {1.1, -0.6};
    std::vector<complex_t> z = {complex_t(0.4, 0.1), complex_t(1.2, -0.5)};
    // scale x by a real factor c (x must stay real) and z by the complex one
    double c = 1.8;
    PointR cx = {c * x[0], c * x[1]};
    std::vector<complex_t> cz = {c * z[0], c * z[1]};
    CHECK(std::abs(dunkl_kernel(s, cx, z) - dunkl_kernel(s, x, cz)) < 1e-12);
    (void)lam;
}

TEST_CASE("scaled kernel factor matches the plain one") {
    for (double k : {0.0, 0.5, 1.0, 2.3}) {
        for (double w : {-30.0, -4.0, -0.5, 0.0, 0.5, 4.0, 30.0, 200.0}) {
            double plain = rank1_kernel(k, complex_t(w, 0.0)).real();
            double scaled = rank1_kernel_scaled(k, w);
            INFO("k=" << k << " w=" << w);
            CHECK_THAT(scaled, WithinRel(plain * std::exp(-std::abs(w)), 1e-11));
        }
    }
}
