// Polar product grids for Z_2^n weights, the weighted space descriptors
// L^p(Ktilde_{N/2}(rho|x|)^{gamma_p p} h^2 dx), mixed L^{p,2} norms,
// conjugated norms, and degree <= 1 h-harmonic analysis.
//
// Measure conventions. Sphere nodes carry normalized weights wnorm with
// sum_a h^2-folded wnorm_a = 1, so spherical averages reproduce the
// phi(0) = 1 normalization of spherical functions; the unnormalized mass
// S_kappa = Int_{S^{n-1}} h^2 dsigma is kept alongside, and every volume
// integral uses S_kappa * wnorm * (radial weight including r^{N-1}), i.e.
// genuine Lebesgue h^2(x) dx.
#pragma once

#include <array>
#include <cmath>
#include <istream>
#include <limits>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "semichaos/common.hpp"
#include "semichaos/dunkl.hpp"
#include "semichaos/quadrature.hpp"
#include "semichaos/specfun.hpp"

namespace semichaos::spaces {

using dunkl::MultiplicitySetup;
using dunkl::PointR;

enum class NormKind { weighted_lp, mixed_p2, conjugated_lp, plain_l2, l_infinity };

inline const char* to_string(NormKind k) {
    switch (k) {
        case NormKind::weighted_lp: return "weighted_lp";
        case NormKind::mixed_p2: return "mixed_p2";
        case NormKind::conjugated_lp: return "conjugated_lp";
        case NormKind::plain_l2: return "plain_l2";
        case NormKind::l_infinity: return "l_infinity";
    }
    return "?";
}

/// Parameters of a weighted space: (setup, p, rho, norm kind) with the
/// derived exponents gamma_p = |2/p - 1| and c_p = rho^2 (1 - gamma_p^2).
struct WeightedSpaceSpec {
    MultiplicitySetup setup;
    double p;
    double rho;
    NormKind kind;

    WeightedSpaceSpec(MultiplicitySetup s, double p_, double rho_, NormKind k)
        : setup(std::move(s)), p(p_), rho(rho_), kind(k) {
        if (!(rho > 0.0)) throw std::invalid_argument("WeightedSpaceSpec: rho must be > 0");
        bool pinf = std::isinf(p);
        if (!pinf && !(p >= 1.0)) throw std::invalid_argument("WeightedSpaceSpec: p must be in [1, inf]");
        if (kind == NormKind::conjugated_lp && (!setup.trivial() || !(p > 2.0)))
            throw std::invalid_argument("WeightedSpaceSpec: conjugated norm needs kappa = 0 and p > 2");
        if (kind == NormKind::mixed_p2 && pinf)
            throw std::invalid_argument("WeightedSpaceSpec: mixed norm undefined at p = inf");
    }

    double gamma_p() const { return std::isinf(p) ? 1.0 : std::abs(2.0 / p - 1.0); }
    double c_p() const { return rho * rho * (1.0 - gamma_p() * gamma_p()); }
    double p_conj() const {
        if (std::isinf(p)) return 1.0;
        if (p == 1.0) return std::numeric_limits<double>::infinity();
        return p / (p - 1.0);
    }
};

/// Sphere nodes with h^2-folded weights; wnorm sums to 1, total_mass is
/// S_kappa (so true surface integrals use total_mass * wnorm).
struct SphereQuadrature {
    int n = 0;
    std::vector<PointR> nodes;
    std::vector<std::array<double, 2>> angles;  // theta [, phi]; phi unused for n = 2
    std::vector<double> wnorm;
    double total_mass = 0.0;
    std::size_t size() const { return nodes.size(); }
};

/// Radial nodes with weights that already include the r^{N-1} factor of the
/// polar volume element (the first panel uses a Jacobi rule so fractional
/// N-1 is integrated exactly).
struct RadialGrid {
    std::vector<double> r;
    std::vector<double> wvol;
    double r_max = 0.0;
    double measure_power = 0.0;  // the power of r folded into wvol
    std::size_t size() const { return r.size(); }
};

/// Quadrature for int_{S^1} f(w) h^2(w) dsigma(w) with Z_2^2 weight,
/// exact for trigonometric polynomials against the weight.
inline SphereQuadrature sphere_quadrature_2d(const MultiplicitySetup& setup, int resolution) {
    const double k1 = setup.kappa[0], k2 = setup.kappa[1];
    const int m = std::max(4, resolution / 4);
    QuadRule gj = gauss_jacobi(m, k2 - 0.5, k1 - 0.5);
    const double cpw = std::pow(2.0, -k1 - k2 - 1.0);
    SphereQuadrature sq;
    sq.n = 2;
    sq.nodes.reserve(4 * m);
    double total = 0.0;
    std::vector<double> wq(m);
    std::vector<double> th(m);
    for (int q = 0; q < m; ++q) {
        double u = gj.x[q];
        double c = std::sqrt(0.5 * (1.0 + u));
        double s = std::sqrt(std::max(0.0, 0.5 * (1.0 - u)));
        th[q] = std::atan2(s, c);
        wq[q] = cpw * gj.w[q];
        total += 4.0 * wq[q];
    }
    const double quadrant_sign[4][2] = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
    const double quadrant_base[4] = {0.0, kPi, kPi, 2.0 * kPi};
    const double quadrant_dir[4] = {1.0, -1.0, 1.0, -1.0};
    for (int quad = 0; quad < 4; ++quad) {
        for (int q = 0; q < m; ++q) {
            double c = std::cos(th[q]) * quadrant_sign[quad][0];
            double s = std::sin(th[q]) * quadrant_sign[quad][1];
            sq.nodes.push_back({c, s});
            sq.angles.push_back({quadrant_base[quad] + quadrant_dir[quad] * th[q], 0.0});
            sq.wnorm.push_back(wq[q] / total);
        }
    }
    sq.total_mass = total;
    return sq;
}

/// Product rule on S^2 for the Z_2^3 weight.
inline SphereQuadrature sphere_quadrature_3d(const MultiplicitySetup& setup, int resolution) {
    const double k1 = setup.kappa[0], k2 = setup.kappa[1], k3 = setup.kappa[2];
    const int mt = std::max(4, resolution / 4);
    const int mp = std::max(3, resolution / 8);
    QuadRule gj_t = gauss_jacobi(mt, k2 - 0.5, k1 - 0.5);
    QuadRule gj_p = gauss_jacobi(mp, k1 + k2, k3 - 0.5);
    const double ct = std::pow(2.0, -k1 - k2 - 1.0);
    const double cp = std::pow(2.0, -k1 - k2 - k3 - 1.5);
    SphereQuadrature sq;
    sq.n = 3;
    double total_t = 0.0, total_p = 0.0;
    std::vector<double> th(mt), wt(mt), ph(mp), wp(mp), vq(mp);
    for (int q = 0; q < mt; ++q) {
        double u = gj_t.x[q];
        th[q] = std::atan2(std::sqrt(std::max(0.0, 0.5 * (1.0 - u))), std::sqrt(0.5 * (1.0 + u)));
        wt[q] = ct * gj_t.w[q];
        total_t += 4.0 * wt[q];
    }
    for (int q = 0; q < mp; ++q) {
        double u = gj_p.x[q];
        vq[q] = std::sqrt(0.5 * (1.0 + u));
        ph[q] = std::acos(vq[q]);
        wp[q] = cp * gj_p.w[q];
        total_p += 2.0 * wp[q];
    }
    const double qs[4][2] = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
    for (int pq = 0; pq < mp; ++pq) {
        for (int sgn = 0; sgn < 2; ++sgn) {
            double v = (sgn == 0) ? vq[pq] : -vq[pq];
            double phi = std::acos(v);
            double sphi = std::sin(phi);
            for (int quad = 0; quad < 4; ++quad) {
                for (int tq = 0; tq < mt; ++tq) {
                    double c = std::cos(th[tq]) * qs[quad][0];
                    double s = std::sin(th[tq]) * qs[quad][1];
                    sq.nodes.push_back({sphi * c, sphi * s, v});
                    sq.angles.push_back({std::atan2(s, c), phi});
                    sq.wnorm.push_back(wt[tq] * wp[pq]);
                }
            }
        }
    }
    double total = total_t * total_p;
    for (double& w : sq.wnorm) w /= total;
    sq.total_mass = total;
    return sq;
}

inline SphereQuadrature sphere_quadrature(const MultiplicitySetup& setup, int resolution) {
    if (resolution < 16) throw std::invalid_argument("sphere_quadrature: resolution >= 16 required");
    if (setup.n == 2) return sphere_quadrature_2d(setup, resolution);
    if (setup.n == 3) return sphere_quadrature_3d(setup, resolution);
    throw std::invalid_argument("sphere_quadrature: only n in {2, 3} supported");
}

/// Composite radial rule on [0, r_max] whose weights carry r^{measure_power}.
inline RadialGrid radial_grid(double measure_power, double r_max, int total_nodes,
                              int per_panel = 16) {
    if (!(r_max > 0.0) || total_nodes < per_panel)
        throw std::invalid_argument("radial_grid: bad extent or node count");
    RadialGrid g;
    g.r_max = r_max;
    g.measure_power = measure_power;
    int panels = std::max(1, total_nodes / per_panel);
    double width = r_max / panels;
    // first panel: Jacobi rule integrating r^{measure_power} exactly
    QuadRule first = gauss_jacobi(per_panel, 0.0, measure_power);
    double half = 0.5 * width;
    for (int q = 0; q < per_panel; ++q) {
        double r = half * (1.0 + first.x[q]);
        g.r.push_back(r);
        g.wvol.push_back(std::pow(half, measure_power + 1.0) * first.w[q]);
    }
    QuadRule gl = gauss_legendre(per_panel);
    for (int pan = 1; pan < panels; ++pan) {
        QuadRule mapped = map_rule(gl, pan * width, (pan + 1) * width);
        for (int q = 0; q < per_panel; ++q) {
            g.r.push_back(mapped.x[q]);
            g.wvol.push_back(mapped.w[q] * std::pow(mapped.x[q], measure_power));
        }
    }
    return g;
}

/// Polar product grid; the unit of discretization for all heat evolutions.
struct PolarGrid {
    MultiplicitySetup setup;
    RadialGrid radial;
    SphereQuadrature sphere;

    std::size_t n_radial() const { return radial.size(); }
    std::size_t n_angular() const { return sphere.size(); }
    std::size_t size() const { return n_radial() * n_angular(); }

    PointR point(std::size_t i, std::size_t a) const {
        PointR x = sphere.nodes[a];
        for (double& c : x) c *= radial.r[i];
        return x;
    }
    /// weight of the true measure h^2(x) dx at node (i, a)
    double vol_weight(std::size_t i, std::size_t a) const {
        return radial.wvol[i] * sphere.wnorm[a] * sphere.total_mass;
    }
};

inline std::shared_ptr<const PolarGrid> make_grid(const MultiplicitySetup& setup, double r_max,
                                                  int n_radial = 128, int angular_resolution = 48) {
    auto g = std::make_shared<PolarGrid>(PolarGrid{
        setup, radial_grid(setup.big_n - 1.0, r_max, n_radial), sphere_quadrature(setup, angular_resolution)});
    return g;
}

inline std::shared_ptr<const PolarGrid> default_grid(const WeightedSpaceSpec& space) {
    return make_grid(space.setup, 12.0 / space.rho);
}

/// Complex samples on a polar grid, stored radial-major.
class GridFunction {
public:
    GridFunction(std::shared_ptr<const PolarGrid> grid, std::vector<complex_t> values)
        : grid_(std::move(grid)), v_(std::move(values)) {
        if (v_.size() != grid_->size()) throw std::invalid_argument("GridFunction: size mismatch");
    }
    static GridFunction zeros(std::shared_ptr<const PolarGrid> grid) {
        std::vector<complex_t> v(grid->size(), complex_t(0.0));
        return GridFunction(std::move(grid), std::move(v));
    }
    template <class F>
    static GridFunction sample(std::shared_ptr<const PolarGrid> grid, F&& f) {
        std::vector<complex_t> v;
        v.reserve(grid->size());
        for (std::size_t i = 0; i < grid->n_radial(); ++i)
            for (std::size_t a = 0; a < grid->n_angular(); ++a) v.push_back(f(grid->point(i, a)));
        return GridFunction(std::move(grid), std::move(v));
    }

    const PolarGrid& grid() const { return *grid_; }
    std::shared_ptr<const PolarGrid> grid_ptr() const { return grid_; }
    complex_t& at(std::size_t i, std::size_t a) { return v_[i * grid_->n_angular() + a]; }
    const complex_t& at(std::size_t i, std::size_t a) const { return v_[i * grid_->n_angular() + a]; }
    const std::vector<complex_t>& values() const { return v_; }
    std::vector<complex_t>& values() { return v_; }

private:
    std::shared_ptr<const PolarGrid> grid_;
    std::vector<complex_t> v_;
};

/// phi_{i rho, kappa}(r) = jni_{N/2-1}(rho r): the positive spherical
/// function entering conjugated and dual weights.
inline double phi_irho(const MultiplicitySetup& setup, double rho, double r) {
    return specfun::jni_real(setup.big_n / 2.0 - 1.0, rho * r);
}

/// Macdonald weight (Ktilde_{N/2}(rho r))^{gamma_p p}; for p = 2 this is 1.
inline double macdonald_weight(const WeightedSpaceSpec& space, double r) {
    if (!(r > 0.0)) throw std::domain_error("macdonald_weight: r must be > 0");
    double gpp = space.gamma_p() * (std::isinf(space.p) ? 1.0 : space.p);
    if (gpp == 0.0) return 1.0;
    double kt = specfun::tilde_k(specfun::Order(space.setup.big_n / 2.0), space.rho * r).value.real();
    return std::pow(kt, gpp);
}

/// Surrogate weight ((1+r)^{(N-1)/2} e^{-rho r})^{gamma_p p}.
inline double surrogate_weight(const WeightedSpaceSpec& space, double r) {
    if (!(r > 0.0)) throw std::domain_error("surrogate_weight: r must be > 0");
    double gpp = space.gamma_p() * (std::isinf(space.p) ? 1.0 : space.p);
    double w = std::pow(1.0 + r, 0.5 * (space.setup.big_n - 1.0)) * std::exp(-space.rho * r);
    return std::pow(w, gpp);
}

namespace detail {

inline double norm_weight(const WeightedSpaceSpec& space, double r) {
    switch (space.kind) {
        case NormKind::weighted_lp:
        case NormKind::mixed_p2: return macdonald_weight(space, r);
        case NormKind::conjugated_lp: {
            double ph = phi_irho(space.setup, space.rho, r);
            return ph * ph;
        }
        case NormKind::plain_l2: return 1.0;
        case NormKind::l_infinity: return 1.0;
    }
    return 1.0;
}

}  // namespace detail

/// Weighted L^p norm on the grid (grid max for p = inf / l_infinity, which
/// is a lower bound of the true sup norm).
inline double lp_norm(const WeightedSpaceSpec& space, const GridFunction& f) {
    const PolarGrid& g = f.grid();
    if (space.kind == NormKind::l_infinity || std::isinf(space.p)) {
        double mx = 0.0;
        for (const complex_t& z : f.values()) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw std::domain_error("lp_norm: non-finite sample");
            mx = std::max(mx, std::abs(z));
        }
        return mx;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < g.n_radial(); ++i) {
        double wr = detail::norm_weight(space, g.radial.r[i]);
        double ring = 0.0;
        for (std::size_t a = 0; a < g.n_angular(); ++a) {
            double av = std::abs(f.at(i, a));
            if (!std::isfinite(av)) throw std::domain_error("lp_norm: non-finite sample");
            ring += std::pow(av, space.p) * g.sphere.wnorm[a];
        }
        acc += ring * g.sphere.total_mass * wr * g.radial.wvol[i];
    }
    return std::pow(acc, 1.0 / space.p);
}

/// Mixed norm: radial L^p (with the Macdonald weight) of the angular
/// L^2(h^2 dsigma) norm. Coincides with lp_norm at p = 2.
inline double mixed_norm(const WeightedSpaceSpec& space, const GridFunction& f) {
    if (space.kind != NormKind::mixed_p2)
        throw std::invalid_argument("mixed_norm: space is not of mixed kind");
    const PolarGrid& g = f.grid();
    double acc = 0.0;
    for (std::size_t i = 0; i < g.n_radial(); ++i) {
        double inner = 0.0;
        for (std::size_t a = 0; a < g.n_angular(); ++a)
            inner += std::norm(f.at(i, a)) * g.sphere.wnorm[a];
        inner *= g.sphere.total_mass;
        acc += std::pow(inner, 0.5 * space.p) * macdonald_weight(space, g.radial.r[i]) *
               g.radial.wvol[i];
    }
    return std::pow(acc, 1.0 / space.p);
}

/// Restriction of a degree <= 1 solid h-harmonic to the sphere nodes,
/// orthonormal in L^2(S^{n-1}, h^2 dsigma).
struct HarmonicBasisElement {
    int degree = 0;
    int index = 0;
    std::vector<double> values;
};

inline std::vector<HarmonicBasisElement> h_harmonic_basis(const SphereQuadrature& sq) {
    std::vector<HarmonicBasisElement> basis;
    double inv_sqrt_mass = 1.0 / std::sqrt(sq.total_mass);
    basis.push_back({0, 0, std::vector<double>(sq.size(), inv_sqrt_mass)});
    for (int j = 0; j < sq.n; ++j) {
        std::vector<double> vals(sq.size());
        double nrm2 = 0.0;
        for (std::size_t a = 0; a < sq.size(); ++a) {
            vals[a] = sq.nodes[a][j];
            nrm2 += vals[a] * vals[a] * sq.wnorm[a];
        }
        nrm2 *= sq.total_mass;
        double inv = 1.0 / std::sqrt(nrm2);
        for (double& v : vals) v *= inv;
        basis.push_back({1, j + 1, std::move(vals)});
    }
    return basis;
}

/// Radial coefficient profiles f_{m,j}(r) = Int f(r w) Y_{m,j}(w) h^2 dsigma(w)
/// for all basis elements of the requested degree.
inline std::vector<std::vector<complex_t>> h_coefficients(const GridFunction& f, int degree) {
    if (degree < 0 || degree > 1)
        throw std::invalid_argument("h_coefficients: only degrees 0 and 1 are built in");
    const PolarGrid& g = f.grid();
    auto basis = h_harmonic_basis(g.sphere);
    std::vector<std::vector<complex_t>> out;
    for (const auto& Y : basis) {
        if (Y.degree != degree) continue;
        std::vector<complex_t> prof(g.n_radial(), complex_t(0.0));
        for (std::size_t i = 0; i < g.n_radial(); ++i) {
            complex_t acc = 0.0;
            for (std::size_t a = 0; a < g.n_angular(); ++a)
                acc += f.at(i, a) * Y.values[a] * g.sphere.wnorm[a];
            prof[i] = acc * g.sphere.total_mass;
        }
        out.push_back(std::move(prof));
    }
    return out;
}

// ---------------------------------------------------------------------------
// CSV serialization: header r,theta[,phi],re,im ; radial-major rows
// ---------------------------------------------------------------------------

inline void to_csv(const GridFunction& f, std::ostream& os) {
    const PolarGrid& g = f.grid();
    os << (g.setup.n == 3 ? "r,theta,phi,re,im\n" : "r,theta,re,im\n");
    char buf[160];
    for (std::size_t i = 0; i < g.n_radial(); ++i) {
        for (std::size_t a = 0; a < g.n_angular(); ++a) {
            const complex_t& z = f.at(i, a);
            if (g.setup.n == 3)
                std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", g.radial.r[i],
                              g.sphere.angles[a][0], g.sphere.angles[a][1], z.real(), z.imag());
            else
                std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", g.radial.r[i],
                              g.sphere.angles[a][0], z.real(), z.imag());
            os << buf;
        }
    }
}

/// Reads values written by to_csv back onto a congruent grid.
inline GridFunction from_csv(std::istream& is, std::shared_ptr<const PolarGrid> grid) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("from_csv: empty stream");
    const int ncol = grid->setup.n == 3 ? 5 : 4;
    std::vector<complex_t> vals;
    vals.reserve(grid->size());
    std::size_t idx = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> cols;
        while (std::getline(ss, cell, ',')) cols.push_back(std::stod(cell));
        if (static_cast<int>(cols.size()) != ncol)
            throw std::runtime_error("from_csv: malformed row");
        std::size_t i = idx / grid->n_angular(), a = idx % grid->n_angular();
        if (i >= grid->n_radial()) throw std::runtime_error("from_csv: too many rows for grid");
        if (!nearly_equal(cols[0], grid->radial.r[i], 1e-10) ||
            !nearly_equal(cols[1], grid->sphere.angles[a][0], 1e-10))
            throw std::runtime_error("from_csv: node mismatch with target grid");
        vals.emplace_back(cols[ncol - 2], cols[ncol - 1]);
        ++idx;
    }
    if (vals.size() != grid->size()) throw std::runtime_error("from_csv: row count mismatch");
    return GridFunction(std::move(grid), std::move(vals));
}

}  // namespace semichaos::spaces
