// The reflection group Z_2^n with a nonnegative multiplicity vector kappa:
// weight h_kappa^2, difference-differential operators T_j, their Laplacian,
// the product-form kernel E_kappa, and the spherical average of E_kappa.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "semichaos/common.hpp"
#include "semichaos/specfun.hpp"

namespace semichaos::dunkl {

using PointR = std::vector<double>;
using ScalarField = std::function<complex_t(const PointR&)>;

/// Z_2^n multiplicity data: one kappa_j >= 0 per coordinate reflection,
/// gamma = sum kappa_j, N = n + 2 gamma. Immutable after construction.
struct MultiplicitySetup {
    int n;
    std::vector<double> kappa;
    double gamma;
    double big_n;

    MultiplicitySetup(int dim, std::vector<double> k) : n(dim), kappa(std::move(k)) {
        if (n < 1) throw std::invalid_argument("MultiplicitySetup: dimension must be >= 1");
        if (static_cast<int>(kappa.size()) != n)
            throw std::invalid_argument("MultiplicitySetup: kappa needs one entry per coordinate");
        gamma = 0.0;
        for (double kj : kappa) {
            if (!(kj >= 0.0) || !std::isfinite(kj))
                throw std::invalid_argument("MultiplicitySetup: kappa entries must be >= 0");
            gamma += kj;
        }
        big_n = n + 2.0 * gamma;
    }

    bool trivial() const {
        for (double kj : kappa)
            if (kj != 0.0) return false;
        return true;
    }
};

inline double norm2(const PointR& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

/// h_kappa^2(x) = prod_j |x_j|^{2 kappa_j}; 0^0 := 1 where kappa_j = 0.
inline double weight_h2(const MultiplicitySetup& setup, const PointR& x) {
    if (static_cast<int>(x.size()) != setup.n)
        throw std::invalid_argument("weight_h2: point dimension mismatch");
    double w = 1.0;
    for (int j = 0; j < setup.n; ++j) {
        if (setup.kappa[j] == 0.0) continue;
        w *= std::pow(std::abs(x[j]), 2.0 * setup.kappa[j]);
    }
    return w;
}

/// Coordinate reflection sigma_j (0-based index).
inline PointR reflect(const MultiplicitySetup& setup, int j, PointR x) {
    if (j < 0 || j >= setup.n) throw std::out_of_range("reflect: coordinate index");
    x[j] = -x[j];
    return x;
}

namespace detail {

/// Fourth-order central difference of f along coordinate j.
inline complex_t partial4(const ScalarField& f, PointR x, int j, double h) {
    const double xj = x[j];
    auto at = [&](double s) {
        x[j] = s;
        return f(x);
    };
    complex_t v =
        (-at(xj + 2 * h) + 8.0 * at(xj + h) - 8.0 * at(xj - h) + at(xj - 2 * h)) / (12.0 * h);
    x[j] = xj;
    return v;
}

inline double default_step(double xj) { return 1e-3 * (1.0 + std::abs(xj)); }

}  // namespace detail

/// Dunkl operator T_j f(x) = d_j f(x) + kappa_j (f(x) - f(sigma_j x)) / x_j.
/// The derivative is a 4th-order central difference; the reflection part is
/// exact. With even_in_xj set, x_j = 0 is treated by the removable limit
/// T_j f = (1 + 2 kappa_j) d_j f.
inline complex_t dunkl_apply(const MultiplicitySetup& setup, int j, const ScalarField& f,
                             const PointR& x, double h_step = -1.0, bool even_in_xj = false) {
    if (j < 0 || j >= setup.n) throw std::out_of_range("dunkl_apply: coordinate index");
    if (static_cast<int>(x.size()) != setup.n)
        throw std::invalid_argument("dunkl_apply: point dimension mismatch");
    const double h = (h_step > 0.0) ? h_step : detail::default_step(x[j]);
    const double kj = setup.kappa[j];
    complex_t deriv = detail::partial4(f, x, j, h);
    if (kj == 0.0) return deriv;
    if (x[j] == 0.0) {
        if (!even_in_xj)
            throw std::domain_error("dunkl_apply: difference-quotient pole at x_j = 0");
        return (1.0 + 2.0 * kj) * deriv;  // removable limit for f even in x_j
    }
    PointR xr = reflect(setup, j, x);
    return deriv + kj * (f(x) - f(xr)) / x[j];
}

/// Dunkl Laplacian -sum_j T_j^2 f(x) by composed application. The outer
/// operator uses a coarser step so the inner difference noise stays benign.
inline complex_t dunkl_laplacian_apply(const MultiplicitySetup& setup, const ScalarField& f,
                                       const PointR& x, double h_step = -1.0) {
    complex_t acc = 0.0;
    for (int j = 0; j < setup.n; ++j) {
        const double h_in = (h_step > 0.0) ? h_step : detail::default_step(x[j]);
        const double h_out = 4.0 * h_in;
        ScalarField tjf = [&](const PointR& y) { return dunkl_apply(setup, j, f, y, h_in); };
        acc += dunkl_apply(setup, j, tjf, x, h_out);
    }
    return -acc;
}

/// Rank-one Dunkl kernel factor for Z_2 with multiplicity k:
/// e_k(w) = jn_{k-1/2}(iw) + w/(2k+1) jn_{k+1/2}(iw), so e_0(w) = e^w.
/// Validated in the tests only through the defining eigenrelation
/// T e_k(. z)|_x = z e_k(xz) and the bound |e_k(iw)| <= e^{|w|}.
inline complex_t rank1_kernel(double k, complex_t w) {
    if (k == 0.0) return std::exp(w);
    return specfun::jni(k - 0.5, w) + w / (2.0 * k + 1.0) * specfun::jni(k + 0.5, w);
}

/// e^{-|w|} e_k(w) for real w; the stable building block of heat kernels.
inline double rank1_kernel_scaled(double k, double w) {
    if (k == 0.0) return (w >= 0.0) ? 1.0 : std::exp(2.0 * w);
    double even = specfun::jni_real(k - 0.5, w, true);
    double odd = specfun::jni_real(k + 0.5, w, true) * w / (2.0 * k + 1.0);
    return even + odd;
}

/// E_kappa(x, z) = prod_j e_{kappa_j}(x_j z_j) for x real and z complex.
inline complex_t dunkl_kernel(const MultiplicitySetup& setup,
                              const PointR& x,
                              const std::vector<complex_t>& z) {
    if (static_cast<int>(x.size()) != setup.n || static_cast<int>(z.size()) != setup.n)
        throw std::invalid_argument("dunkl_kernel: dimension mismatch");
    complex_t prod = 1.0;
    for (int j = 0; j < setup.n; ++j) prod *= rank1_kernel(setup.kappa[j], x[j] * z[j]);
    return prod;
}

/// E_kappa(i x, lambda omega) for real x, omega and complex lambda; the form
/// entering spherical averages and the spectral-side integrals.
inline complex_t dunkl_kernel_i(const MultiplicitySetup& setup, const PointR& x,
                                complex_t lambda, const PointR& omega) {
    complex_t prod = 1.0;
    const complex_t iu(0.0, 1.0);
    for (int j = 0; j < setup.n; ++j)
        prod *= rank1_kernel(setup.kappa[j], iu * x[j] * lambda * omega[j]);
    return prod;
}

/// Spherical function phi_{lambda,kappa}(x) as the quadrature average of
/// E_kappa(ix, lambda omega) h^2(omega) over given (normalized) sphere nodes.
inline complex_t dunkl_sphfn(const MultiplicitySetup& setup, complex_t lambda, const PointR& x,
                             std::span<const PointR> nodes, std::span<const double> wnorm) {
    complex_t acc = 0.0;
    for (std::size_t a = 0; a < nodes.size(); ++a)
        acc += wnorm[a] * dunkl_kernel_i(setup, x, lambda, nodes[a]);
    return acc;
}

}  // namespace semichaos::dunkl
