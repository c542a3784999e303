// Spectral-region geometry of the shifted generator, classification of
// eigenvalue parameters, constructive dynamics witnesses (decaying orbits,
// small backward-reachable preimages, periodic points) verified by actual
// semigroup runs, and the theorem-backed verdict table.
#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "semichaos/common.hpp"
#include "semichaos/dunkl.hpp"
#include "semichaos/heat.hpp"
#include "semichaos/spaces.hpp"
#include "semichaos/specfun.hpp"

namespace semichaos::chaos {

using dunkl::MultiplicitySetup;
using dunkl::PointR;
using heat::RadialProfile;
using spaces::GridFunction;
using spaces::WeightedSpaceSpec;

/// Spectral parameter lambda with its eigenvalue lambda^2 + rho^2 and the
/// shifted symbol omega_c = lambda^2 + rho^2 - c.
struct ComplexFrequency {
    complex_t lambda;
    double rho;
    complex_t eigenvalue() const { return lambda * lambda + rho * rho; }
    complex_t omega_c(double c) const { return eigenvalue() - c; }
};

inline double gamma_p_of(double p) { return std::isinf(p) ? 1.0 : std::abs(2.0 / p - 1.0); }
inline double c_p_of(double p, double rho) {
    double g = gamma_p_of(p);
    return rho * rho * (1.0 - g * g);
}

/// Parabolic region {lambda^2 + rho^2 : |Im lambda| <= gamma_p rho}; for
/// p = 2 it degenerates to the ray [rho^2, inf) on the real axis.
struct SpectralRegion {
    double p;
    double rho;

    double gamma() const { return gamma_p_of(p); }
    double vertex() const { return c_p_of(p, rho); }

    /// boundary abscissa u(v) = v^2 / (4 gamma_p^2 rho^2) + c_p
    double boundary_u(double v) const {
        double g = gamma();
        if (g == 0.0)
            throw std::domain_error("SpectralRegion: degenerate ray at p = 2 has no parabola");
        return v * v / (4.0 * g * g * rho * rho) + vertex();
    }

    bool contains(complex_t z) const {
        double g = gamma();
        if (g == 0.0) return z.imag() == 0.0 && z.real() >= rho * rho;
        return z.real() >= boundary_u(z.imag());
    }

    bool interior_contains(complex_t z) const {
        double g = gamma();
        if (g == 0.0) return false;  // empty interior in the strip sense
        return z.real() > boundary_u(z.imag());
    }
};

inline bool region_contains(double p, double rho, complex_t z) {
    if (!(p >= 1.0) || std::isinf(p)) throw std::invalid_argument("region_contains: need 1 <= p < inf");
    return SpectralRegion{p, rho}.contains(z);
}

/// Strict-interior membership: the point spectrum of the shifted generator.
inline bool point_spectrum_contains(double p, double rho, complex_t z) {
    if (!(p >= 1.0) || std::isinf(p)) throw std::invalid_argument("point_spectrum_contains: need 1 <= p < inf");
    return SpectralRegion{p, rho}.interior_contains(z);
}

/// Intersection of (region - c) with the imaginary axis.
struct IrAxisIntersection {
    enum class Count { empty, single, infinite } count;
    double v_max;  // half-length of the segment when infinite
};

inline IrAxisIntersection ir_axis_intersection(double p, double rho, double c) {
    if (!(p >= 1.0) || std::isinf(p))
        throw std::invalid_argument("ir_axis_intersection: need 1 <= p < inf");
    double cp = c_p_of(p, rho), g = gamma_p_of(p);
    if (c < cp) return {IrAxisIntersection::Count::empty, 0.0};
    if (c == cp || g == 0.0) return {IrAxisIntersection::Count::single, 0.0};
    return {IrAxisIntersection::Count::infinite, 2.0 * g * rho * std::sqrt(c - cp)};
}

/// Role of an eigenvalue parameter in the dynamics: decaying (A1), growing
/// backward (A2) or rotating (A3, Re omega_c = 0 within 1e-12; rationality of
/// Im omega_c is deliberately not tested).
enum class Role { A1, A2, A3 };

inline const char* to_string(Role r) {
    switch (r) {
        case Role::A1: return "A1";
        case Role::A2: return "A2";
        case Role::A3: return "A3";
    }
    return "?";
}

inline std::optional<Role> classify_lambda(complex_t lambda, double p, double rho, double c) {
    if (std::abs(lambda.imag()) >= gamma_p_of(p) * rho) return std::nullopt;  // open strip only
    complex_t w = ComplexFrequency{lambda, rho}.omega_c(c);
    if (std::abs(w.real()) <= 1e-12) return Role::A3;
    return (w.real() > 0.0) ? Role::A1 : Role::A2;
}

/// Translate of the spherical function. Euclidean case: phi_lambda(x + y)
/// pointwise; Dunkl case: sphere quadrature of the two-kernel integrand
/// Int E(ix, lambda w) E(iy, lambda w) h^2(w) dsigma(w).
inline GridFunction translated_sphfn(const WeightedSpaceSpec& space, const PointR& x,
                                     complex_t lambda,
                                     std::shared_ptr<const spaces::PolarGrid> grid) {
    const MultiplicitySetup& s = space.setup;
    if (s.trivial()) {
        double nu = s.n / 2.0 - 1.0;
        return GridFunction::sample(grid, [&](const PointR& y) {
            PointR sum = y;
            for (int j = 0; j < s.n; ++j) sum[j] += x[j];
            return specfun::jn(nu, lambda * dunkl::norm2(sum));
        });
    }
    const spaces::SphereQuadrature& sq = grid->sphere;
    std::vector<complex_t> ex(sq.size());
    for (std::size_t a = 0; a < sq.size(); ++a)
        ex[a] = dunkl::dunkl_kernel_i(s, x, lambda, sq.nodes[a]);
    GridFunction out = GridFunction::zeros(grid);
    parallel_for(grid->n_radial(), [&](std::size_t i) {
        PointR y(s.n, 0.0);
        for (std::size_t b = 0; b < grid->n_angular(); ++b) {
            const PointR& yb = grid->sphere.nodes[b];
            for (int j = 0; j < s.n; ++j) y[j] = grid->radial.r[i] * yb[j];
            complex_t acc = 0.0;
            for (std::size_t a = 0; a < sq.size(); ++a)
                acc += ex[a] * dunkl::dunkl_kernel_i(s, y, lambda, sq.nodes[a]) * sq.wnorm[a];
            out.at(i, b) = acc;
        }
    });
    return out;
}

// ---------------------------------------------------------------------------
// radial norm machinery for witness verification
// ---------------------------------------------------------------------------

namespace detail {

/// Weighted L^p norm of a radial function from its profile (matches the
/// full polar-grid norm of the corresponding radial GridFunction).
inline double radial_lp_norm(const WeightedSpaceSpec& space, const RadialProfile& f,
                             double sphere_mass) {
    double acc = 0.0;
    for (std::size_t i = 0; i < f.grid->size(); ++i) {
        double w = spaces::macdonald_weight(space, f.grid->r[i]);
        acc += std::pow(std::abs(f.v[i]), space.p) * w * f.grid->wvol[i];
    }
    return std::pow(acc * sphere_mass, 1.0 / space.p);
}

inline double sphere_mass_of(const MultiplicitySetup& setup) {
    return spaces::sphere_quadrature(setup, 16).total_mass;
}

/// Evaluation grid capturing the norm bulk of e^{b r}-growing eigenfunctions.
inline std::shared_ptr<const spaces::RadialGrid> witness_eval_grid(const WeightedSpaceSpec& space,
                                                                   double growth_b) {
    double margin = space.p * (space.gamma_p() * space.rho - growth_b);
    double r_eval = std::max(12.0 / space.rho, 26.0 / std::max(margin, 1e-3));
    int nodes = std::min(640, std::max(96, static_cast<int>(r_eval * 3.0)));
    return heat::make_radial_grid(space.setup.big_n, r_eval, nodes);
}

/// Integration grid wide enough that the evolution is accurate on r_eval.
inline std::shared_ptr<const spaces::RadialGrid> witness_int_grid(const WeightedSpaceSpec& space,
                                                                  double r_eval, double t,
                                                                  double growth_b) {
    double r_int = heat::radial_extent(r_eval, t, growth_b, 72.0);
    int nodes = std::min(1400, std::max(128, static_cast<int>(r_int * 3.0)));
    return heat::make_radial_grid(space.setup.big_n, r_int, nodes);
}

inline RadialProfile sample_sphfn(const MultiplicitySetup& setup, complex_t lambda,
                                  std::shared_ptr<const spaces::RadialGrid> grid) {
    double nu = setup.big_n / 2.0 - 1.0;
    return RadialProfile::sample(std::move(grid),
                                 [&](double r) { return specfun::jn(nu, lambda * r); });
}

}  // namespace detail

/// A constructed eigenfunction package with the residuals actually measured
/// by running the semigroup.
struct ChaosWitness {
    complex_t lambda;
    PointR translate;
    Role role;
    double period = 0.0;  // A3 only
    double p, c, rho;
    std::vector<double> kappa;
    std::string theorem_tag;
    std::map<std::string, double> residuals;
};

namespace detail {

inline void require_witness_params(const WeightedSpaceSpec& space, double c) {
    if (std::isinf(space.p) || space.p == 2.0)
        throw std::invalid_argument("witness: requires p != 2, p < inf");
    if (!(c > c_p_of(space.p, space.rho)))
        throw std::invalid_argument("witness: construction impossible for c <= c_p");
}

/// Deterministic strip parameter: the quadratic-mean midpoint of the
/// admissible interval for Im(lambda).
inline double witness_b(const WeightedSpaceSpec& space, double c) {
    double rho = space.rho;
    double b_lo = std::sqrt(std::max(0.0, rho * rho - c)) * (1.0 + 1e-3);
    double b_hi = space.gamma_p() * rho * (1.0 - 1e-3);
    if (!(b_lo < b_hi)) throw std::invalid_argument("witness: admissible interval empty");
    return std::sqrt(0.5 * (b_lo * b_lo + b_hi * b_hi));
}

}  // namespace detail

/// Periodic point: lambda = a + ib with a^2 = b^2 + c - rho^2, so omega_c is
/// purely imaginary and T^c_{t0} f = f at t0 = 2 pi / |Im omega_c|. The
/// return residual is measured by evolving the profile for the full period.
inline ChaosWitness make_periodic_witness(const WeightedSpaceSpec& space, double c) {
    detail::require_witness_params(space, c);
    const double rho = space.rho;
    double b = detail::witness_b(space, c);
    double a = std::sqrt(b * b + c - rho * rho);
    complex_t lambda(a, b);
    complex_t w = ComplexFrequency{lambda, rho}.omega_c(c);
    double t0 = 2.0 * kPi / std::abs(w.imag());

    auto eval = detail::witness_eval_grid(space, b);
    auto integ = detail::witness_int_grid(space, eval->r_max, t0, b);
    RadialProfile f_int = detail::sample_sphfn(space.setup, lambda, integ);
    RadialProfile f_eval = detail::sample_sphfn(space.setup, lambda, eval);
    RadialProfile out = heat::radial_Ttc_apply(space.setup, {t0, c, rho}, f_int, eval);
    double mass = detail::sphere_mass_of(space.setup);
    RadialProfile diff = out;
    for (std::size_t i = 0; i < diff.v.size(); ++i) diff.v[i] -= f_eval.v[i];
    double resid = detail::radial_lp_norm(space, diff, mass) /
                   detail::radial_lp_norm(space, f_eval, mass);

    ChaosWitness wit;
    wit.lambda = lambda;
    wit.translate = PointR(space.setup.n, 0.0);
    wit.role = Role::A3;
    wit.period = t0;
    wit.p = space.p;
    wit.c = c;
    wit.rho = rho;
    wit.kappa = space.setup.kappa;
    wit.theorem_tag = space.setup.trivial() ? "Prop2.9" : "Prop3.11";
    wit.residuals["return_residual"] = resid;
    wit.residuals["re_omega_c"] = w.real();
    return wit;
}

/// Decaying-orbit witness: real lambda with Re omega_c > 0; certifies the
/// norm ratios ||T^c_{2t} f|| / ||T^c_t f|| = e^{-Re(omega_c) t} over t in {1, 2, 4}.
inline ChaosWitness make_b0_witness(const WeightedSpaceSpec& space, double c) {
    detail::require_witness_params(space, c);
    const double rho = space.rho;
    double g = space.gamma_p() * rho;
    double a = std::sqrt(std::max(0.0, c - rho * rho) + 0.5 * g * g);
    complex_t lambda(a, 0.0);
    complex_t w = ComplexFrequency{lambda, rho}.omega_c(c);

    auto eval = detail::witness_eval_grid(space, 0.0);
    double mass = detail::sphere_mass_of(space.setup);
    RadialProfile f_eval = detail::sample_sphfn(space.setup, lambda, eval);
    double norms[3];
    const double times[3] = {1.0, 2.0, 4.0};
    for (int k = 0; k < 3; ++k) {
        auto integ = detail::witness_int_grid(space, eval->r_max, times[k], 0.0);
        RadialProfile f_int = detail::sample_sphfn(space.setup, lambda, integ);
        RadialProfile out = heat::radial_Ttc_apply(space.setup, {times[k], c, rho}, f_int, eval);
        norms[k] = detail::radial_lp_norm(space, out, mass);
    }
    double r21 = norms[1] / norms[0], r42 = norms[2] / norms[1];
    double want21 = std::exp(-w.real() * 1.0), want42 = std::exp(-w.real() * 2.0);

    ChaosWitness wit;
    wit.lambda = lambda;
    wit.translate = PointR(space.setup.n, 0.0);
    wit.role = Role::A1;
    wit.p = space.p;
    wit.c = c;
    wit.rho = rho;
    wit.kappa = space.setup.kappa;
    wit.theorem_tag = space.setup.trivial() ? "Prop2.9" : "Prop3.11";
    wit.residuals["ratio_error_t1_t2"] = std::abs(r21 - want21) / want21;
    wit.residuals["ratio_error_t2_t4"] = std::abs(r42 - want42) / want42;
    wit.residuals["re_omega_c"] = w.real();
    wit.residuals["monotone_decrease"] = (norms[1] < norms[0] && norms[2] < norms[1]) ? 0.0 : 1.0;
    return wit;
}

/// Backward-reachability witness: lambda = ib in A2; f_t = e^{t omega_c} g
/// has norm <= eps for the constructed t while T^c_t f_t returns g.
struct BinfWitness {
    ChaosWitness witness;
    double t;
    double f_t_norm;
};

inline BinfWitness make_binf_witness(const WeightedSpaceSpec& space, double c, double eps) {
    detail::require_witness_params(space, c);
    if (!(eps > 0.0)) throw std::invalid_argument("witness: eps must be > 0");
    const double rho = space.rho;
    double b = detail::witness_b(space, c);
    complex_t lambda(0.0, b);
    complex_t w = ComplexFrequency{lambda, rho}.omega_c(c);  // real and negative here

    auto eval = detail::witness_eval_grid(space, b);
    double mass = detail::sphere_mass_of(space.setup);
    RadialProfile g_eval = detail::sample_sphfn(space.setup, lambda, eval);
    double gnorm = detail::radial_lp_norm(space, g_eval, mass);
    double t = std::log(gnorm / eps) / (-w.real()) * 1.02 + 0.25;

    auto integ = detail::witness_int_grid(space, eval->r_max, t, b);
    RadialProfile f_int = detail::sample_sphfn(space.setup, lambda, integ);
    const complex_t shrink = std::exp(t * w);
    for (complex_t& z : f_int.v) z *= shrink;
    double ftnorm = std::abs(shrink) * gnorm;
    RadialProfile out = heat::radial_Ttc_apply(space.setup, {t, c, rho}, f_int, eval);
    RadialProfile diff = out;
    for (std::size_t i = 0; i < diff.v.size(); ++i) diff.v[i] -= g_eval.v[i];
    double resid = detail::radial_lp_norm(space, diff, mass) / gnorm;

    ChaosWitness wit;
    wit.lambda = lambda;
    wit.translate = PointR(space.setup.n, 0.0);
    wit.role = Role::A2;
    wit.p = space.p;
    wit.c = c;
    wit.rho = rho;
    wit.kappa = space.setup.kappa;
    wit.theorem_tag = space.setup.trivial() ? "Prop2.9" : "Prop3.11";
    wit.residuals["return_residual"] = resid;
    wit.residuals["f_t_norm"] = ftnorm;
    wit.residuals["re_omega_c"] = w.real();
    return {wit, t, ftnorm};
}

/// Truncated weighted norms of the spherical function over nested radial
/// cutoffs; the membership dichotomy reads convergence or growth off these.
inline std::vector<double> truncated_sphfn_norms(const WeightedSpaceSpec& space, complex_t lambda,
                                                 const std::vector<double>& cutoffs,
                                                 int nodes_per_unit = 4) {
    double mass = detail::sphere_mass_of(space.setup);
    std::vector<double> out;
    for (double R : cutoffs) {
        auto rg = heat::make_radial_grid(space.setup.big_n, R,
                                         std::max(64, static_cast<int>(R * nodes_per_unit)));
        RadialProfile f = detail::sample_sphfn(space.setup, lambda, rg);
        out.push_back(detail::radial_lp_norm(space, f, mass));
    }
    return out;
}

// ---------------------------------------------------------------------------
// verdict table
// ---------------------------------------------------------------------------

enum class Verdict { Chaotic, NotChaotic, NotHypercyclic, NoPeriodicPoints, Unknown };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Chaotic: return "Chaotic";
        case Verdict::NotChaotic: return "NotChaotic";
        case Verdict::NotHypercyclic: return "NotHypercyclic";
        case Verdict::NoPeriodicPoints: return "NoPeriodicPoints";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

enum class SpaceKind { weighted, conjugated, mixed, l_infinity };

inline const char* to_string(SpaceKind k) {
    switch (k) {
        case SpaceKind::weighted: return "weighted_lp";
        case SpaceKind::conjugated: return "conjugated_lp";
        case SpaceKind::mixed: return "mixed_p2";
        case SpaceKind::l_infinity: return "l_infinity";
    }
    return "?";
}

struct VerdictResult {
    Verdict verdict;
    std::string theorem_tag;
};

/// The decision table across every space family covered by the theorems.
inline VerdictResult chaos_verdict(SpaceKind kind, const MultiplicitySetup& setup, double p,
                                   double c, double rho) {
    if (!(rho > 0.0)) throw std::invalid_argument("chaos_verdict: rho must be > 0");
    const bool euclid = setup.trivial();
    const double cp = c_p_of(p, rho);

    if (kind == SpaceKind::l_infinity || std::isinf(p)) {
        if (kind == SpaceKind::conjugated) return {Verdict::NotChaotic, "Thm1.3b"};
        return euclid ? VerdictResult{Verdict::NotChaotic, "Thm1.4(2)"}
                      : VerdictResult{Verdict::NotChaotic, "Thm1.5(2)"};
    }
    if (!(p >= 1.0)) throw std::invalid_argument("chaos_verdict: p must be >= 1");

    switch (kind) {
        case SpaceKind::weighted: {
            if (p == 2.0) return {Verdict::NotChaotic, "Thm1.5(3)"};
            if (euclid) {
                if (c > cp) return {Verdict::Chaotic, "Thm1.4(1)"};
                if (c == cp) return {Verdict::NotChaotic, "Thm1.4(3)"};
                return {Verdict::NotHypercyclic, "Thm1.4(3)"};
            }
            if (c > cp) return {Verdict::Chaotic, "Thm1.5(1)"};
            double ap = (p < 2.0) ? 2.0 * rho * rho * (1.0 - 1.0 / p)  // 2 rho^2 / p'
                                  : 2.0 * rho * rho / p;
            if (c < ap)
                return {Verdict::NotHypercyclic, (p < 2.0) ? "Thm1.6(1)" : "Thm1.6(2)"};
            return {Verdict::Unknown, "Remark1.7"};
        }
        case SpaceKind::conjugated: {
            if (!euclid)
                throw std::invalid_argument("chaos_verdict: conjugated space needs kappa = 0");
            if (p <= 2.0) return {Verdict::NoPeriodicPoints, "Thm1.3c"};
            if (c > cp) return {Verdict::Chaotic, "Thm1.3a"};
            if (c == cp) return {Verdict::NotChaotic, "Thm1.3a"};
            return {Verdict::NotHypercyclic, "Thm1.3a"};
        }
        case SpaceKind::mixed: {
            double two_gamma = 2.0 * setup.gamma;
            if (std::abs(two_gamma - std::round(two_gamma)) > 1e-12)
                throw std::invalid_argument("chaos_verdict: mixed norm table needs 2 gamma integer");
            if (p == 2.0) return {Verdict::NotChaotic, "Thm1.5(3)"};
            if (c > cp) return {Verdict::Chaotic, "Thm1.8(1)"};
            if (c < cp) return {Verdict::NotHypercyclic, "Thm1.8(2)"};
            return {Verdict::Unknown, "Thm1.8"};
        }
        default: break;
    }
    throw std::invalid_argument("chaos_verdict: unsupported combination");
}

// ---------------------------------------------------------------------------
// JSON serialization
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const ChaosWitness& w, const std::string& space_kind) {
    nlohmann::json j;
    j["space"] = space_kind;
    j["p"] = w.p;
    j["c"] = w.c;
    j["rho"] = w.rho;
    j["kappa"] = w.kappa;
    j["role"] = to_string(w.role);
    j["lambda_re"] = w.lambda.real();
    j["lambda_im"] = w.lambda.imag();
    if (w.role == Role::A3) j["period"] = w.period;
    j["residuals"] = w.residuals;
    j["theorem_tag"] = w.theorem_tag;
    return j;
}

inline nlohmann::json to_json(const VerdictResult& v, SpaceKind kind,
                              const MultiplicitySetup& setup, double p, double c, double rho) {
    nlohmann::json j;
    j["space"] = to_string(kind);
    j["p"] = p;
    j["c"] = c;
    j["rho"] = rho;
    j["kappa"] = setup.kappa;
    j["verdict"] = to_string(v.verdict);
    j["theorem_tag"] = v.theorem_tag;
    return j;
}

}  // namespace semichaos::chaos
