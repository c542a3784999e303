#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "semichaos/chaos.hpp"

using namespace semichaos;
using namespace semichaos::chaos;
using dunkl::MultiplicitySetup;
using dunkl::PointR;
using spaces::GridFunction;
using spaces::NormKind;
using spaces::WeightedSpaceSpec;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("spectral region membership") {
    CHECK(region_contains(2.0, 1.0, complex_t(2.0, 0.0)));
    CHECK_FALSE(region_contains(2.0, 1.0, complex_t(0.5, 0.0)));
    CHECK_FALSE(region_contains(2.0, 1.0, complex_t(2.0, 0.1)));
    // p = 4, rho = 1: vertex at c_p = 3/4
    CHECK(region_contains(4.0, 1.0, complex_t(0.75, 0.0)));
    CHECK_FALSE(region_contains(4.0, 1.0, complex_t(0.0, 1.0)));
    // boundary parametrization: z = (a+ib)^2 + rho^2 with b = gamma rho
    SpectralRegion reg{4.0, 1.0};
    for (double a : {0.0, 0.3, 1.7}) {
        complex_t lam(a, 0.5);
        complex_t z = lam * lam + 1.0;
        CHECK_THAT(reg.boundary_u(z.imag()), WithinAbs(z.real(), 1e-13));
    }
    CHECK_THROWS_AS(region_contains(0.3, 1.0, complex_t(0, 0)), std::invalid_argument);
}

TEST_CASE("region against the brute-force strip image") {
    std::mt19937_64 rng(2024);
    for (double p : {4.0 / 3.0, 4.0}) {
        double rho = 1.0, g = gamma_p_of(p) * rho;
        std::uniform_real_distribution<double> ua(-4.0, 4.0), ub(-g, g), ubo(1.0, 3.0);
        for (int it = 0; it < 20000; ++it) {
            complex_t lam(ua(rng), ub(rng));  // inside the strip
            complex_t z = lam * lam + rho * rho;
            INFO("p=" << p << " lam=" << lam);
            CHECK(region_contains(p, rho, z));
        }
        SpectralRegion reg{p, rho};
        for (int it = 0; it < 20000; ++it) {
            double sgn = (it % 2 == 0) ? 1.0 : -1.0;
            complex_t lam(ua(rng), sgn * g * ubo(rng));  // strictly outside
            complex_t z = lam * lam + rho * rho;
            // strictly outside maps strictly outside, up to boundary fuzz
            bool inside = region_contains(p, rho, z);
            double dist = z.real() - reg.boundary_u(z.imag());
            INFO("p=" << p << " lam=" << lam);
            CHECK((!inside || std::abs(dist) <= 1e-3));
        }
    }
}

TEST_CASE("imaginary-axis intersection of the shifted region") {
    auto r1 = ir_axis_intersection(4.0, 1.0, 0.5);
    CHECK(r1.count == IrAxisIntersection::Count::empty);
    auto r2 = ir_axis_intersection(4.0, 1.0, 0.75);
    CHECK(r2.count == IrAxisIntersection::Count::single);
    auto r3 = ir_axis_intersection(4.0, 1.0, 1.0);
    CHECK(r3.count == IrAxisIntersection::Count::infinite);
    CHECK_THAT(r3.v_max, WithinRel(0.5, 1e-14));
    // brute-force check of the segment half-length: scan the boundary
    SpectralRegion reg{4.0, 1.0};
    double vmax_brute = 0.0;
    for (double v = 0.0; v <= 2.0; v += 1e-4)
        if (reg.boundary_u(v) - 1.0 <= 0.0) vmax_brute = v;
    CHECK_THAT(vmax_brute, WithinAbs(r3.v_max, 2e-4));
}

TEST_CASE("classification of eigenvalue parameters") {
    CHECK(classify_lambda(complex_t(0, 0), 4.0, 1.0, 0.0) == Role::A1);
    CHECK(classify_lambda(complex_t(0.0, 0.4), 4.0, 1.0, 1.0) == Role::A2);
    CHECK(classify_lambda(complex_t(0.3, 0.3), 4.0, 1.0, 1.0) == Role::A3);
    CHECK_FALSE(classify_lambda(complex_t(0.0, 0.6), 4.0, 1.0, 1.0).has_value());

    // partition of the open strip plus openness of A1/A2
    std::mt19937_64 rng(99);
    double p = 4.0, rho = 1.0, c = 1.0, g = gamma_p_of(p) * rho;
    std::uniform_real_distribution<double> ua(-3.0, 3.0), ub(-g * 0.999, g * 0.999);
    int counts[3] = {0, 0, 0};
    for (int it = 0; it < 10000; ++it) {
        complex_t lam(ua(rng), ub(rng));
        auto role = classify_lambda(lam, p, rho, c);
        REQUIRE(role.has_value());
        counts[static_cast<int>(*role)]++;
        complex_t w = ComplexFrequency{lam, rho}.omega_c(c);
        if (std::abs(w.real()) > 1e-6 && std::abs(lam.imag()) < g - 1e-6) {
            for (complex_t dz : {complex_t(1e-7, 0.0), complex_t(0.0, 1e-7)}) {
                CHECK(classify_lambda(lam + dz, p, rho, c) == *role);
            }
        }
    }
    CHECK(counts[0] > 0);
    CHECK(counts[1] > 0);
}

TEST_CASE("translated spherical functions") {
    MultiplicitySetup s0(2, {0.0, 0.0});
    WeightedSpaceSpec space(s0, 4.0, 1.0, NormKind::weighted_lp);
    auto grid = spaces::make_grid(s0, 10.0, 64, 32);
    // x = 0 is the spherical function itself
    GridFunction f0 = translated_sphfn(space, {0.0, 0.0}, complex_t(1.2, 0.2), grid);
    for (std::size_t i = 0; i < grid->n_radial(); i += 15) {
        complex_t want = specfun::jn(0.0, complex_t(1.2, 0.2) * grid->radial.r[i]);
        CHECK(std::abs(f0.at(i, 1) - want) < 1e-12 * std::max(1.0, std::abs(want)));
    }
    // closed form at x = (1,0), y = (0,1), lambda = 1: jn_0(sqrt(2))
    GridFunction f1 = translated_sphfn(space, {1.0, 0.0}, 1.0, grid);
    std::size_t ia = 0;
    while (grid->radial.r[ia] < 1.0) ++ia;
    // find the angular node closest to (0,1)
    std::size_t best = 0;
    double bestd = 1e9;
    for (std::size_t a = 0; a < grid->n_angular(); ++a) {
        double d = std::hypot(grid->sphere.nodes[a][0], grid->sphere.nodes[a][1] - 1.0);
        if (d < bestd) {
            bestd = d;
            best = a;
        }
    }
    PointR y = grid->point(ia, best);
    PointR xy = {1.0 + y[0], y[1]};
    complex_t want = specfun::jn(0.0, dunkl::norm2(xy));
    CHECK(std::abs(f1.at(ia, best) - want) < 1e-10);

    // Dunkl translate via the double-kernel quadrature: radial limit x = 0
    MultiplicitySetup sd(2, {0.5, 1.0});
    WeightedSpaceSpec spaced(sd, 4.0, 1.0, NormKind::weighted_lp);
    auto gridd = spaces::make_grid(sd, 8.0, 48, 48);
    GridFunction fd = translated_sphfn(spaced, {0.0, 0.0}, complex_t(1.0, 0.1), gridd);
    for (std::size_t i = 0; i < gridd->n_radial(); i += 11) {
        complex_t want2 =
            specfun::jn(sd.big_n / 2.0 - 1.0, complex_t(1.0, 0.1) * gridd->radial.r[i]);
        CHECK(std::abs(fd.at(i, 3) - want2) < 1e-6 * std::max(1.0, std::abs(want2)));
    }
}

TEST_CASE("eigenvector transport under the dense semigroup route") {
    // kappa = 0, x != 0: T_t^c tau_x phi_lambda = e^{-t omega_c} tau_x phi_lambda
    MultiplicitySetup s0(2, {0.0, 0.0});
    WeightedSpaceSpec space(s0, 4.0, 1.0, NormKind::weighted_lp);
    auto grid_out = spaces::make_grid(s0, 6.0, 48, 64);
    auto grid_in = spaces::make_grid(s0, 18.0, 144, 64);
    complex_t lam(0.3, 0.25);
    PointR x = {0.7, -0.4};
    GridFunction fin = translated_sphfn(space, x, lam, grid_in);
    GridFunction fout = translated_sphfn(space, x, lam, grid_out);
    double c = 0.6, t = 0.4;
    heat::DunklHeatKernel kern(s0);
    GridFunction ev = heat::apply_Ttc(kern, {t, c, 1.0}, fin, grid_out);
    complex_t scale = std::exp(-t * ComplexFrequency{lam, 1.0}.omega_c(c));
    GridFunction resid = ev;
    for (std::size_t k = 0; k < resid.values().size(); ++k)
        resid.values()[k] -= scale * fout.values()[k];
    double rel = spaces::lp_norm(space, resid) / (std::abs(scale) * spaces::lp_norm(space, fout));
    CHECK(rel < 1e-5);

    // Dunkl case with x != 0 through the quadrature translate
    MultiplicitySetup sd(2, {0.5, 1.0});
    WeightedSpaceSpec spaced(sd, 4.0, 1.0, NormKind::weighted_lp);
    auto gd_out = spaces::make_grid(sd, 6.0, 48, 64);
    auto gd_in = spaces::make_grid(sd, 18.0, 144, 64);
    GridFunction fdin = translated_sphfn(spaced, x, lam, gd_in);
    GridFunction fdout = translated_sphfn(spaced, x, lam, gd_out);
    heat::DunklHeatKernel kernd(sd);
    GridFunction evd = heat::apply_Ttc(kernd, {t, c, 1.0}, fdin, gd_out);
    GridFunction residd = evd;
    for (std::size_t k = 0; k < residd.values().size(); ++k)
        residd.values()[k] -= scale * fdout.values()[k];
    double reld =
        spaces::lp_norm(spaced, residd) / (std::abs(scale) * spaces::lp_norm(spaced, fdout));
    CHECK(reld < 1e-5);
}

TEST_CASE("periodic witness: construction and measured return residual") {
    MultiplicitySetup s0(2, {0.0, 0.0});
    WeightedSpaceSpec space(s0, 4.0, 1.0, NormKind::weighted_lp);
    ChaosWitness w = make_periodic_witness(space, 1.0);
    CHECK(w.role == Role::A3);
    // deterministic strip parameter: quadratic-mean midpoint, b ~ 0.353
    CHECK_THAT(w.lambda.imag(), WithinAbs(0.3532, 5e-4));
    CHECK_THAT(w.lambda.real(), WithinAbs(w.lambda.imag(), 1e-12));  // c = rho^2
    complex_t wc = ComplexFrequency{w.lambda, 1.0}.omega_c(1.0);
    CHECK(std::abs(wc.real()) < 1e-14);
    CHECK_THAT(w.period, WithinRel(2.0 * kPi / std::abs(wc.imag()), 1e-12));
    CHECK(w.residuals.at("return_residual") <= 1e-6);
    CHECK(w.theorem_tag == "Prop2.9");

    // Dunkl variant
    MultiplicitySetup sd(2, {0.5, 1.0});
    WeightedSpaceSpec spaced(sd, 4.0, 1.0, NormKind::weighted_lp);
    ChaosWitness wd = make_periodic_witness(spaced, 1.0);
    CHECK(wd.residuals.at("return_residual") <= 1e-6);
    CHECK(wd.theorem_tag == "Prop3.11");

    // refusal at and below the critical shift
    CHECK_THROWS_AS(make_periodic_witness(space, 0.75), std::invalid_argument);
    CHECK_THROWS_AS(make_periodic_witness(space, 0.2), std::invalid_argument);
    WeightedSpaceSpec s2(s0, 2.0, 1.0, NormKind::weighted_lp);
    CHECK_THROWS_AS(make_periodic_witness(s2, 5.0), std::invalid_argument);
}

TEST_CASE("decaying-orbit witness certifies the decay ratio") {
    MultiplicitySetup s0(2, {0.0, 0.0});
    WeightedSpaceSpec space(s0, 4.0, 1.0, NormKind::weighted_lp);
    ChaosWitness w = make_b0_witness(space, 1.0);
    CHECK(w.role == Role::A1);
    CHECK(w.residuals.at("re_omega_c") > 0.0);
    CHECK(w.residuals.at("monotone_decrease") == 0.0);
    CHECK(w.residuals.at("ratio_error_t1_t2") <= 1e-4);
    CHECK(w.residuals.at("ratio_error_t2_t4") <= 1e-4);
}

TEST_CASE("backward-reachability witness reaches the target from a small preimage") {
    MultiplicitySetup s0(2, {0.0, 0.0});
    WeightedSpaceSpec space(s0, 4.0, 1.0, NormKind::weighted_lp);
    BinfWitness bw = make_binf_witness(space, 1.0, 1e-3);
    CHECK(bw.witness.role == Role::A2);
    CHECK(bw.f_t_norm <= 1e-3);
    CHECK(bw.witness.residuals.at("return_residual") <= 1e-5);
    CHECK(bw.witness.residuals.at("re_omega_c") < 0.0);
    // norm shrinks like e^{t Re omega_c}
    double predicted = std::exp(bw.t * bw.witness.residuals.at("re_omega_c"));
    CHECK(bw.f_t_norm / predicted > 0.1);
    CHECK(bw.f_t_norm / predicted < 10.0);
}

TEST_CASE("membership dichotomy of the spherical function") {
    MultiplicitySetup s0(2, {0.0, 0.0});
    WeightedSpaceSpec space(s0, 4.0, 1.0, NormKind::weighted_lp);
    double g = space.gamma_p() * space.rho;
    std::vector<double> cutoffs = {12.0, 24.0, 36.0};
    auto conv = truncated_sphfn_norms(space, complex_t(0.4, 0.9 * g), cutoffs);
    CHECK(std::abs(conv[2] / conv[1] - 1.0) < 1e-3);
    auto div = truncated_sphfn_norms(space, complex_t(0.4, 1.1 * g), cutoffs);
    CHECK(div[1] > div[0]);
    CHECK(div[2] > div[1]);
    CHECK(div[2] / div[0] >= 1.5);
}

TEST_CASE("point spectrum: strict interior") {
    CHECK_FALSE(point_spectrum_contains(4.0, 1.0, complex_t(0.75, 0.0)));  // vertex excluded
    CHECK(point_spectrum_contains(4.0, 1.0, complex_t(1.0, 0.0)));
    CHECK_FALSE(point_spectrum_contains(2.0, 1.0, complex_t(2.0, 0.0)));  // empty interior
    CHECK_FALSE(point_spectrum_contains(2.0, 1.0, complex_t(0.0, 0.0)));
}

TEST_CASE("verdict table") {
    MultiplicitySetup e(2, {0.0, 0.0});
    MultiplicitySetup d(2, {0.5, 1.0});
    auto v = chaos_verdict(SpaceKind::weighted, e, 4.0, 1.0, 1.0);
    CHECK(v.verdict == Verdict::Chaotic);
    CHECK(v.theorem_tag == "Thm1.4(1)");
    CHECK(chaos_verdict(SpaceKind::weighted, e, 4.0, 0.75, 1.0).verdict == Verdict::NotChaotic);
    CHECK(chaos_verdict(SpaceKind::weighted, e, 4.0, 0.5, 1.0).verdict == Verdict::NotHypercyclic);
    auto vd = chaos_verdict(SpaceKind::weighted, d, 4.0, 0.4, 1.0);
    CHECK(vd.verdict == Verdict::NotHypercyclic);
    CHECK(vd.theorem_tag == "Thm1.6(2)");
    auto vu = chaos_verdict(SpaceKind::weighted, d, 4.0, 0.6, 1.0);
    CHECK(vu.verdict == Verdict::Unknown);
    CHECK(vu.theorem_tag == "Remark1.7");
    CHECK(chaos_verdict(SpaceKind::weighted, d, 4.0, 1.0, 1.0).verdict == Verdict::Chaotic);
    CHECK(chaos_verdict(SpaceKind::weighted, d, 2.0, 0.3, 1.0).verdict == Verdict::NotChaotic);
    CHECK(chaos_verdict(SpaceKind::conjugated, e, 4.0, 1.0, 1.0).theorem_tag == "Thm1.3a");
    CHECK(chaos_verdict(SpaceKind::conjugated, e, 1.5, 7.0, 1.0).verdict ==
          Verdict::NoPeriodicPoints);
    CHECK(chaos_verdict(SpaceKind::l_infinity, e, 4.0, 3.0, 1.0).verdict == Verdict::NotChaotic);
    CHECK(chaos_verdict(SpaceKind::l_infinity, d, 4.0, 3.0, 1.0).theorem_tag == "Thm1.5(2)");
    CHECK(chaos_verdict(SpaceKind::mixed, d, 4.0, 1.0, 1.0).theorem_tag == "Thm1.8(1)");
    CHECK(chaos_verdict(SpaceKind::mixed, d, 4.0, 0.5, 1.0).verdict == Verdict::NotHypercyclic);
    CHECK(chaos_verdict(SpaceKind::mixed, d, 4.0, 0.75, 1.0).verdict == Verdict::Unknown);
    // mixed-norm table requires 2 gamma integer
    MultiplicitySetup frac(2, {0.3, 0.3});
    CHECK_THROWS_AS(chaos_verdict(SpaceKind::mixed, frac, 4.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(chaos_verdict(SpaceKind::conjugated, d, 4.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("region, axis intersection and verdicts cohere") {
    MultiplicitySetup e(2, {0.0, 0.0});
    for (double p : {1.0, 4.0 / 3.0, 4.0, 8.0}) {
        double rho = 1.0, cp = c_p_of(p, rho);
        for (double c : {0.5 * cp, cp, 1.5 * cp, cp + 0.3}) {
            auto axis = ir_axis_intersection(p, rho, c);
            auto verdict = chaos_verdict(SpaceKind::weighted, e, p, c, rho);
            INFO("p=" << p << " c=" << c);
            CHECK((verdict.verdict == Verdict::Chaotic) ==
                  (axis.count == IrAxisIntersection::Count::infinite));
        }
    }
}

TEST_CASE("witness JSON serialization") {
    MultiplicitySetup s0(2, {0.0, 0.0});
    WeightedSpaceSpec space(s0, 4.0, 1.0, NormKind::weighted_lp);
    ChaosWitness w = make_b0_witness(space, 1.0);
    auto j = to_json(w, "weighted_lp");
    CHECK(j["role"] == "A1");
    CHECK(j["p"] == 4.0);
    CHECK(j["theorem_tag"] == "Prop2.9");
    CHECK(j["residuals"].contains("ratio_error_t1_t2"));
    auto vj = to_json(chaos_verdict(SpaceKind::weighted, s0, 4.0, 1.0, 1.0), SpaceKind::weighted,
                      s0, 4.0, 1.0, 1.0);
    CHECK(vj["verdict"] == "Chaotic");
    CHECK(vj["theorem_tag"] == "Thm1.4(1)");
}
