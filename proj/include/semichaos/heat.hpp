// Heat kernels and semigroups: the Euclidean Gaussian, the Dunkl kernel
// Gamma_kappa with its numerically calibrated mass constant, the weighted
// semigroups T_t and T_t^c on polar grids, the conjugated semigroup and its
// modified generator (kappa = 0), the radial Bessel semigroups B_t^alpha,
// and the degree <= 1 spherical-coefficient transfer to Bessel form.
//
// Stability: kernels are assembled from exponentially scaled Bessel factors,
//   Gamma(t,x,y) = M t^{-N/2} exp(-sum_j (|x_j|-|y_j|)^2 / 4t) prod_j ehat(x_j y_j / 2t),
// so no intermediate overflows for desk-scale arguments.
#pragma once

#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "semichaos/common.hpp"
#include "semichaos/dunkl.hpp"
#include "semichaos/spaces.hpp"
#include "semichaos/specfun.hpp"

namespace semichaos::heat {

using dunkl::MultiplicitySetup;
using dunkl::PointR;
using spaces::GridFunction;
using spaces::PolarGrid;
using spaces::RadialGrid;
using spaces::WeightedSpaceSpec;

/// Time, spectral shift and rho for T_t^c = e^{ct} e^{-t(Delta_kappa + rho^2)}.
struct SemigroupParams {
    double t;
    double c = 0.0;
    double rho = 1.0;
    SemigroupParams(double t_, double c_, double rho_) : t(t_), c(c_), rho(rho_) {
        if (!(t > 0.0)) throw std::invalid_argument("SemigroupParams: t must be > 0");
        if (!(rho > 0.0)) throw std::invalid_argument("SemigroupParams: rho must be > 0");
    }
};

/// Euclidean heat kernel h_t(x - y) = (4 pi t)^{-n/2} e^{-|x-y|^2/(4t)}.
inline double gaussian_kernel(double t, const PointR& x, const PointR& y) {
    if (!(t > 0.0)) throw std::invalid_argument("gaussian_kernel: t must be > 0");
    if (x.size() != y.size()) throw std::invalid_argument("gaussian_kernel: dimension mismatch");
    double q = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) q += (x[j] - y[j]) * (x[j] - y[j]);
    double n = static_cast<double>(x.size());
    return std::pow(4.0 * kPi * t, -0.5 * n) * std::exp(-0.25 * q / t);
}

/// Extent heuristic: integrating against the heat kernel at time t, an
/// integrand growing like e^{b s} is negligible past
/// r_eval + 2 b t + sqrt(4 t log_tail).
inline double radial_extent(double r_eval, double t, double growth_b, double log_tail = 64.0) {
    return r_eval + 2.0 * std::max(0.0, growth_b) * t + std::sqrt(4.0 * t * log_tail);
}

/// Dunkl heat kernel with the mass constant fixed by enforcing
/// Int Gamma(t, x, y) h^2(y) dy = 1 numerically at a reference point, and the
/// spectral-side constant fixed at x = y = 0. Immutable once constructed.
class DunklHeatKernel {
public:
    explicit DunklHeatKernel(const MultiplicitySetup& setup) : setup_(setup) {
        mass_const_ = 1.0;
        const double t0 = 1.0;
        PointR xref(setup.n, 0.0);
        xref[0] = 0.7;
        if (setup.n > 1) xref[1] = 0.4;
        if (setup.n > 2) xref[2] = 0.3;
        auto grid = spaces::make_grid(setup_, radial_extent(dunkl::norm2(xref), t0, 0.0), 192, 48);
        double integral = 0.0;
        for (std::size_t i = 0; i < grid->n_radial(); ++i)
            for (std::size_t a = 0; a < grid->n_angular(); ++a)
                integral += (*this)(t0, xref, grid->point(i, a)) * grid->vol_weight(i, a);
        mass_const_ = 1.0 / integral;

        // spectral constant: Gamma(t,0,0) = C Int e^{-t|xi|^2} h^2(xi) dxi
        PointR zero(setup.n, 0.0);
        double gauss_int = 0.0;
        auto xi_grid = spaces::radial_grid(setup_.big_n - 1.0, std::sqrt(64.0 / t0), 160);
        for (std::size_t i = 0; i < xi_grid.size(); ++i)
            gauss_int += std::exp(-t0 * xi_grid.r[i] * xi_grid.r[i]) * xi_grid.wvol[i];
        gauss_int *= grid->sphere.total_mass;
        spectral_const_ = (*this)(t0, zero, zero) / gauss_int;
    }

    const MultiplicitySetup& setup() const { return setup_; }
    double mass_constant() const { return mass_const_; }
    double spectral_constant() const { return spectral_const_; }

    /// Copy with a replaced mass constant (sensitivity probes in the
    /// verification suite).
    DunklHeatKernel with_mass_constant(double m) const {
        DunklHeatKernel k = *this;
        k.mass_const_ = m;
        return k;
    }

    /// kernel without the M t^{-N/2} prefactor (hot loops hoist it)
    double unnormalized(double t, const PointR& x, const PointR& y) const {
        double expo = 0.0;
        double prod = 1.0;
        for (int j = 0; j < setup_.n; ++j) {
            double dj = std::abs(x[j]) - std::abs(y[j]);
            expo -= 0.25 * dj * dj / t;
            prod *= dunkl::rank1_kernel_scaled(setup_.kappa[j], 0.5 * x[j] * y[j] / t);
        }
        return std::exp(expo) * prod;
    }

    double prefactor(double t) const {
        if (!(t > 0.0)) throw std::invalid_argument("DunklHeatKernel: t must be > 0");
        return mass_const_ * std::pow(t, -0.5 * setup_.big_n);
    }

    double operator()(double t, const PointR& x, const PointR& y) const {
        return prefactor(t) * unnormalized(t, x, y);
    }

private:
    MultiplicitySetup setup_;
    double mass_const_;
    double spectral_const_;
};

/// Free-function form; calibrates a kernel on the fly (tests, CLI one-offs).
inline double dunkl_heat_kernel(const MultiplicitySetup& setup, double t, const PointR& x,
                                const PointR& y) {
    return DunklHeatKernel(setup)(t, x, y);
}

/// Relative residual of the spectral representation
/// Gamma(t,x,y) = C Int e^{-t |xi|^2} E(ix, xi) E(-iy, xi) h^2(xi) dxi
/// evaluated by polar quadrature in xi.
inline double spectral_kernel_check(const DunklHeatKernel& kernel, double t, const PointR& x,
                                    const PointR& y, int n_radial = 160, int angular_res = 48) {
    const MultiplicitySetup& s = kernel.setup();
    auto sph = spaces::sphere_quadrature(s, angular_res);
    auto rad = spaces::radial_grid(s.big_n - 1.0, std::sqrt(80.0 / t), n_radial);
    complex_t acc = 0.0;
    const complex_t iu(0.0, 1.0);
    for (std::size_t i = 0; i < rad.size(); ++i) {
        double xi_r = rad.r[i];
        double damp = std::exp(-t * xi_r * xi_r);
        complex_t ring = 0.0;
        for (std::size_t a = 0; a < sph.size(); ++a) {
            complex_t ex = 1.0, ey = 1.0;
            for (int j = 0; j < s.n; ++j) {
                double xij = xi_r * sph.nodes[a][j];
                ex *= dunkl::rank1_kernel(s.kappa[j], iu * x[j] * xij);
                ey *= dunkl::rank1_kernel(s.kappa[j], -iu * y[j] * xij);
            }
            ring += ex * ey * sph.wnorm[a];
        }
        acc += damp * ring * rad.wvol[i];
    }
    double rhs = (acc * sph.total_mass).real() * kernel.spectral_constant();
    double lhs = kernel(t, x, y);
    if (!(std::abs(acc.imag() / (std::abs(acc) + 1e-300)) < 1e-6))
        throw std::runtime_error("spectral_kernel_check: quadrature failed to converge");
    return std::abs(rhs - lhs) / std::abs(lhs);
}

// ---------------------------------------------------------------------------
// radial profiles and Bessel semigroups
// ---------------------------------------------------------------------------

/// Complex samples on a radial quadrature grid (weights live in the grid;
/// the grid records which r-power its weights carry).
struct RadialProfile {
    std::shared_ptr<const RadialGrid> grid;
    std::vector<complex_t> v;

    template <class F>
    static RadialProfile sample(std::shared_ptr<const RadialGrid> g, F&& f) {
        std::vector<complex_t> vals;
        vals.reserve(g->size());
        for (double r : g->r) vals.push_back(f(r));
        return {std::move(g), std::move(vals)};
    }
};

inline std::shared_ptr<const RadialGrid> make_radial_grid(double big_n, double r_max,
                                                          int nodes = 256) {
    return std::make_shared<RadialGrid>(spaces::radial_grid(big_n - 1.0, r_max, nodes));
}

/// Bessel semigroup kernel b_t^alpha(r, s), positive and mass-conserving
/// against the measure s^{2 alpha + 1} ds.
inline double bessel_semigroup_kernel(double alpha, double t, double r, double s) {
    double z = 0.5 * r * s / t;
    double itld = specfun::jni_real(alpha, z, true) *
                  std::exp(-(specfun::detail::lg(alpha + 1.0) + alpha * std::log(2.0)));
    double d = r - s;
    return std::pow(2.0 * t, -(alpha + 1.0)) * std::exp(-0.25 * d * d / t) * itld;
}

/// B_t^alpha f(r) = Int_0^inf f(s) b_t^alpha(r, s) s^{2 alpha + 1} ds on the
/// output grid (defaults to the input grid).
inline RadialProfile bessel_semigroup_apply(double alpha, double t, const RadialProfile& f,
                                            std::shared_ptr<const RadialGrid> out_grid = nullptr) {
    if (!(t > 0.0)) throw std::invalid_argument("bessel_semigroup_apply: t must be > 0");
    if (alpha < -0.5) throw std::domain_error("bessel_semigroup_apply: order below -1/2");
    const RadialGrid& in = *f.grid;
    std::shared_ptr<const RadialGrid> og = out_grid ? out_grid : f.grid;
    // measure correction: grid weights carry s^{measure_power}
    const double extra = 2.0 * alpha + 1.0 - in.measure_power;
    std::vector<double> wm(in.size());
    for (std::size_t j = 0; j < in.size(); ++j)
        wm[j] = in.wvol[j] * ((extra == 0.0) ? 1.0 : std::pow(in.r[j], extra));
    std::vector<complex_t> out(og->size());
    parallel_for(og->size(), [&](std::size_t i) {
        double r = og->r[i];
        complex_t acc = 0.0;
        for (std::size_t j = 0; j < in.size(); ++j)
            acc += bessel_semigroup_kernel(alpha, t, r, in.r[j]) * f.v[j] * wm[j];
        out[i] = acc;
    });
    return {og, std::move(out)};
}

/// Radial route for T_t^c on radial functions: the spherical average of the
/// Dunkl heat kernel is the Bessel kernel of order N/2 - 1, so
/// T_t^c f = e^{(c - rho^2) t} B_t^{N/2-1} f. Cross-validated against the
/// dense polar route in the tests.
inline RadialProfile radial_Ttc_apply(const MultiplicitySetup& setup, const SemigroupParams& par,
                                      const RadialProfile& f,
                                      std::shared_ptr<const RadialGrid> out_grid = nullptr) {
    RadialProfile out = bessel_semigroup_apply(setup.big_n / 2.0 - 1.0, par.t, f, out_grid);
    const double factor = std::exp((par.c - par.rho * par.rho) * par.t);
    for (complex_t& z : out.v) z *= factor;
    return out;
}

// ---------------------------------------------------------------------------
// dense polar-grid semigroup application
// ---------------------------------------------------------------------------

/// T_t f(x) = e^{-t rho^2} Int Gamma_kappa(t, x, y) f(y) h^2(y) dy by dense
/// quadrature over f's grid; output on out_grid (defaults to f's grid).
/// Summation order over input nodes is fixed, so results do not depend on
/// the number of worker threads.
inline GridFunction apply_Tt(const DunklHeatKernel& kernel, const SemigroupParams& par,
                             const GridFunction& f,
                             std::shared_ptr<const PolarGrid> out_grid = nullptr) {
    std::shared_ptr<const PolarGrid> og = out_grid ? out_grid : f.grid_ptr();
    const PolarGrid& in = f.grid();
    const std::size_t ni = in.n_radial(), na = in.n_angular();
    std::vector<PointR> ypts;
    ypts.reserve(ni * na);
    std::vector<double> volw(ni * na);
    for (std::size_t j = 0; j < ni; ++j)
        for (std::size_t b = 0; b < na; ++b) {
            ypts.push_back(in.point(j, b));
            volw[j * na + b] = in.vol_weight(j, b);
        }
    GridFunction out = GridFunction::zeros(og);
    const double damp = std::exp(-par.t * par.rho * par.rho) * kernel.prefactor(par.t);
    const std::vector<complex_t>& fv = f.values();
    parallel_for(og->size(), [&](std::size_t idx) {
        std::size_t i = idx / og->n_angular(), a = idx % og->n_angular();
        PointR x = og->point(i, a);
        complex_t acc = 0.0;
        for (std::size_t jb = 0; jb < ni * na; ++jb)
            acc += kernel.unnormalized(par.t, x, ypts[jb]) * fv[jb] * volw[jb];
        out.values()[idx] = damp * acc;
    });
    return out;
}

/// T_t^c = e^{ct} T_t.
inline GridFunction apply_Ttc(const DunklHeatKernel& kernel, const SemigroupParams& par,
                              const GridFunction& f,
                              std::shared_ptr<const PolarGrid> out_grid = nullptr) {
    GridFunction out = apply_Tt(kernel, par, f, out_grid);
    const double boost = std::exp(par.c * par.t);
    for (complex_t& z : out.values()) z *= boost;
    return out;
}

/// Convenience overloads that calibrate a kernel on the fly.
inline GridFunction apply_Tt(const WeightedSpaceSpec& space, const SemigroupParams& par,
                             const GridFunction& f,
                             std::shared_ptr<const PolarGrid> out_grid = nullptr) {
    DunklHeatKernel kernel(space.setup);
    return apply_Tt(kernel, par, f, out_grid);
}
inline GridFunction apply_Ttc(const WeightedSpaceSpec& space, const SemigroupParams& par,
                              const GridFunction& f,
                              std::shared_ptr<const PolarGrid> out_grid = nullptr) {
    DunklHeatKernel kernel(space.setup);
    return apply_Ttc(kernel, par, f, out_grid);
}

// ---------------------------------------------------------------------------
// conjugated semigroup and modified generator (kappa = 0 only)
// ---------------------------------------------------------------------------

/// Ttilde_t f = phi_{i rho}^{-1} T_t(f phi_{i rho}).
inline GridFunction conjugated_apply(const WeightedSpaceSpec& space, const SemigroupParams& par,
                                     const GridFunction& f,
                                     std::shared_ptr<const PolarGrid> out_grid = nullptr) {
    if (!space.setup.trivial())
        throw std::invalid_argument("conjugated_apply: requires kappa = 0");
    const PolarGrid& g = f.grid();
    GridFunction fw = f;
    for (std::size_t i = 0; i < g.n_radial(); ++i) {
        double ph = spaces::phi_irho(space.setup, par.rho, g.radial.r[i]);
        for (std::size_t a = 0; a < g.n_angular(); ++a) fw.at(i, a) *= ph;
    }
    DunklHeatKernel kernel(space.setup);
    GridFunction out = apply_Tt(kernel, par, fw, out_grid);
    const PolarGrid& go = out.grid();
    for (std::size_t i = 0; i < go.n_radial(); ++i) {
        double ph = spaces::phi_irho(space.setup, par.rho, go.radial.r[i]);
        for (std::size_t a = 0; a < go.n_angular(); ++a) out.at(i, a) /= ph;
    }
    return out;
}

/// Modified generator by conjugation, Delta~ f = phi_{i rho}^{-1} Delta(f phi_{i rho})
/// with Delta = -sum d^2, evaluated by 4th-order differences. With the
/// eigenfunction normalization used here this satisfies
/// Delta~ (phi_lambda / phi_{i rho}) = lambda^2 (phi_lambda / phi_{i rho});
/// the zeroth-order part is (Delta - rho^2), see the regression test.
inline complex_t modified_laplacian_apply(const WeightedSpaceSpec& space,
                                          const dunkl::ScalarField& f, const PointR& x,
                                          double h_step = -1.0) {
    if (!space.setup.trivial())
        throw std::invalid_argument("modified_laplacian_apply: requires kappa = 0");
    const double rho = space.rho;
    const double nu = space.setup.n / 2.0 - 1.0;
    auto g = [&](const PointR& y) {
        return f(y) * specfun::jni_real(nu, rho * dunkl::norm2(y));
    };
    complex_t lap = 0.0;
    for (int j = 0; j < space.setup.n; ++j) {
        const double h = (h_step > 0.0) ? h_step : 1e-3 * (1.0 + std::abs(x[j]));
        if (h < 1e-12) throw std::underflow_error("modified_laplacian_apply: step underflow");
        PointR y = x;
        auto at = [&](double s) {
            y[j] = s;
            return g(y);
        };
        double xj = x[j];
        lap += (-at(xj + 2 * h) + 16.0 * at(xj + h) - 30.0 * at(xj) + 16.0 * at(xj - h) -
                at(xj - 2 * h)) /
               (12.0 * h * h);
        y[j] = xj;
    }
    // Delta = -sum d^2
    return -lap / specfun::jni_real(nu, rho * dunkl::norm2(x));
}

// ---------------------------------------------------------------------------
// spherical-coefficient transfer (degree <= 1)
// ---------------------------------------------------------------------------

/// Right-hand side of the coefficient transfer: for f with h-harmonic
/// coefficient f_{m,j}, returns e^{-t rho^2} r^m B_t^{N/2+m-1}(s^{-m} f_{m,j})(r)
/// on the radial nodes of f's grid. The verify suite compares this against
/// the directly computed coefficient of T_t f.
inline std::vector<complex_t> coeff_via_bessel(const MultiplicitySetup& setup, double t,
                                               double rho, int m, int j, const GridFunction& f) {
    if (m < 0 || m > 1) throw std::invalid_argument("coeff_via_bessel: degree must be 0 or 1");
    auto profs = spaces::h_coefficients(f, m);
    if (j < 0 || j >= static_cast<int>(profs.size()))
        throw std::invalid_argument("coeff_via_bessel: basis index out of range");
    const PolarGrid& g = f.grid();
    auto rg = std::make_shared<RadialGrid>(g.radial);
    RadialProfile ft{rg, profs[j]};
    if (m == 1)
        for (std::size_t i = 0; i < rg->size(); ++i) ft.v[i] /= rg->r[i];
    RadialProfile evolved = bessel_semigroup_apply(setup.big_n / 2.0 + m - 1.0, t, ft);
    const double damp = std::exp(-t * rho * rho);
    std::vector<complex_t> out(rg->size());
    for (std::size_t i = 0; i < rg->size(); ++i)
        out[i] = damp * std::pow(rg->r[i], m) * evolved.v[i];
    return out;
}

}  // namespace semichaos::heat
