// Bessel-family evaluation engine: J_nu for complex argument, the modified
// pair I_nu/K_nu on the real half line (with exponentially scaled variants),
// the normalized forms Itilde = I/x^nu and Ktilde = x^nu K, and the
// spherical function j_nu(z) = 2^nu Gamma(nu+1) J_nu(z)/z^nu normalized to 1
// at the origin.
//
// Method selection per region:
//   * 0F1 power series where it is cancellation-safe,
//   * Poisson-integral Gauss-Jacobi quadrature in the midrange,
//   * Hankel large-argument expansion plus forward recurrence in the
//     oscillatory regime,
//   * backward (Miller) recurrence anchored at fractional order otherwise,
//   * K_nu: Temme's small-x series and a Steed-type continued fraction
//     beyond, climbed by the stable upward recurrence.
#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "semichaos/common.hpp"
#include "semichaos/quadrature.hpp"

namespace semichaos::specfun {

/// Bessel order; the library is restricted to nu >= -1/2.
struct Order {
    double nu;
    explicit Order(double v) : nu(v) {
        if (!std::isfinite(v) || v < -0.5)
            throw std::domain_error("Order: nu must be finite and >= -1/2");
    }
};

/// Value plus an estimate of the absolute error committed by the evaluation.
struct EvalResult {
    complex_t value;
    double abs_error_est = 0.0;
};

namespace detail {

inline double lg(double x) { return std::lgamma(x); }

/// 0F1(b; w) = sum_k w^k / (k! (b)_k), with crude error bookkeeping.
inline complex_t hyp0f1(double b, complex_t w, double* err) {
    complex_t term = 1.0, sum = 1.0;
    double asum = 1.0;
    int k = 0;
    for (; k < 600; ++k) {
        term *= w / ((k + 1.0) * (b + k));
        sum += term;
        asum += std::abs(term);
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300) && k > 2) break;
    }
    if (err) *err = std::abs(term) + kEps * asum;
    return sum;
}

/// Large-argument (Hankel) expansion of J_a(z); intended for a in [0, 2.5)
/// and |z| >= 13 with Re z >= 0.
inline complex_t hankel_j(double a, complex_t z, double* err) {
    const double mu = 4.0 * a * a;
    complex_t zinv = 1.0 / z;
    complex_t t = 1.0;
    complex_t p = 1.0, q = 0.0;
    double tmin = 1.0;
    for (int k = 1; k <= 40; ++k) {
        t *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k) * zinv;
        double at = std::abs(t);
        if (at > tmin) break;  // divergence onset: stop at the smallest term
        tmin = at;
        int m = (k - 1) / 2;
        double sgn = (m % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 1)
            q += sgn * t;
        else
            p += -sgn * t;  // (-1)^{k/2} with k even: k=2 -> -, k=4 -> +
        if (at < 1e-18) break;
    }
    complex_t omega = z - (0.5 * a + 0.25) * kPi;
    complex_t val = std::sqrt(2.0 / (kPi * z)) * (std::cos(omega) * p - std::sin(omega) * q);
    if (err) *err = tmin * std::abs(std::sqrt(2.0 / (kPi * z))) * std::exp(std::abs(z.imag()));
    return val;
}

/// Thread-local cache of Gauss-Jacobi rules keyed by (points, quantized nu).
inline const QuadRule& poisson_rule(int m, double nu) {
    thread_local std::map<std::pair<int, long long>, QuadRule> cache;
    long long key = static_cast<long long>(std::llround(nu * 65536.0));
    auto it = cache.find({m, key});
    if (it == cache.end())
        it = cache.emplace(std::make_pair(m, key), gauss_jacobi(m, nu - 0.5, nu - 0.5)).first;
    return it->second;
}

/// Poisson-integral evaluation of the normalized Bessel function
/// jn_nu(z) = Gamma(nu+1)/(sqrt(pi) Gamma(nu+1/2)) Int_{-1}^{1} e^{iuz}(1-u^2)^{nu-1/2} du.
inline complex_t poisson_jn(double nu, complex_t z, int m, double* err) {
    const QuadRule& rule = poisson_rule(m, nu);
    complex_t sum = 0.0;
    double asum = 0.0;
    const complex_t iz = complex_t(0.0, 1.0) * z;
    for (std::size_t q = 0; q < rule.size(); ++q) {
        complex_t term = rule.w[q] * std::exp(rule.x[q] * iz);
        sum += term;
        asum += std::abs(term);
    }
    double pref = std::exp(lg(nu + 1.0) - lg(nu + 0.5) - 0.5 * std::log(kPi));
    if (err) {
        // Gauss rules integrate cos(zu) with error ~ (|z|/2)^{2m} (m!)^2/(2m)!^2-ish;
        // a geometric proxy in |z|e/(4m) is enough for reporting purposes.
        double rho = std::abs(z) * 2.718281828 / (4.0 * m);
        double trunc = (rho < 1.0) ? std::pow(rho, 2.0 * m) : 1.0;
        *err = pref * (kEps * asum + trunc * asum);
    }
    return pref * sum;
}

inline int poisson_points(double az) { return 24 + static_cast<int>(az); }

/// Backward-recurrence (Miller) evaluation of J_nu(z) normalized against two
/// fractional-order anchor values j_mu = J_mu(z), j_mu1 = J_{mu+1}(z).
inline complex_t miller_j(double nu, complex_t z, complex_t j_mu, complex_t j_mu1, double* err) {
    const int m = static_cast<int>(std::floor(nu));
    const double mu = nu - m;
    const double az = std::abs(z);
    int k0 = std::max(m, static_cast<int>(std::ceil(az)));
    int kstart = k0 + 20 + static_cast<int>(1.5 * std::sqrt(k0 + 1.0));
    if (kstart > 30000) throw std::overflow_error("bessel_j: recurrence depth exceeds envelope");
    std::vector<complex_t> f(kstart + 2);
    f[kstart + 1] = 0.0;
    f[kstart] = 1e-160;
    for (int k = kstart; k >= 1; --k) {
        f[k - 1] = (2.0 * (k + mu) / z) * f[k] - f[k + 1];
        if (std::abs(f[k - 1]) > 1e250) {
            for (int j = k - 1; j <= kstart + 1; ++j) f[j] *= 1e-250;
        }
    }
    int idx = (std::abs(j_mu) >= std::abs(j_mu1)) ? 0 : 1;
    complex_t anchor = (idx == 0) ? j_mu : j_mu1;
    if (f[idx] == complex_t(0.0)) throw std::runtime_error("bessel_j: backward recurrence degenerated");
    complex_t scale = anchor / f[idx];
    if (err) *err = 100.0 * kEps * std::abs(anchor) * (std::abs(f[m]) / std::abs(f[idx]) + 1.0);
    return f[m] * scale;
}

/// J at the fractional anchor orders (mu, mu+1), mu in [0,1).
inline void anchor_j(double mu, complex_t z, complex_t& j0, complex_t& j1, double* err) {
    double e0 = 0.0, e1 = 0.0;
    if (std::abs(z) >= 13.0) {
        j0 = hankel_j(mu, z, &e0);
        j1 = hankel_j(mu + 1.0, z, &e1);
    } else {
        int m = poisson_points(std::abs(z));
        double azi = std::abs(z.imag());
        double s0, s1;
        j0 = poisson_jn(mu, z, m, &s0);
        j1 = poisson_jn(mu + 1.0, z, m, &s1);
        // convert normalized jn anchors to plain J
        complex_t half_z_pow_mu = std::pow(0.5 * z, mu);
        j0 *= half_z_pow_mu / std::tgamma(mu + 1.0);
        j1 *= half_z_pow_mu * (0.5 * z) / std::tgamma(mu + 2.0);
        e0 = s0 * std::abs(half_z_pow_mu);
        e1 = s1 * std::abs(half_z_pow_mu) * 0.5 * std::abs(z);
        (void)azi;
    }
    if (err) *err = e0 + e1;
}

/// Core J_nu(z) for canonical Re z >= 0 (or z on the imaginary axis), nu >= -1/2.
inline complex_t bessel_j_core(double nu, complex_t z, double* err) {
    const double az = std::abs(z);
    if (az == 0.0) {
        if (err) *err = 0.0;
        return (nu == 0.0) ? 1.0 : 0.0;
    }
    // series-safe region: small argument, or order dominating the argument
    if (az <= 8.0 || 0.25 * az * az <= nu + 1.0) {
        double serr = 0.0;
        complex_t f = hyp0f1(nu + 1.0, -0.25 * z * z, &serr);
        complex_t pref = std::exp(nu * std::log(0.5 * z) - lg(nu + 1.0));
        if (err) *err = serr * std::abs(pref);
        return pref * f;
    }
    if (nu <= 0.55 * az) {
        if (az >= 13.0) {
            int m = static_cast<int>(std::floor(nu));
            double mu = nu - m;
            double e = 0.0;
            complex_t jm = hankel_j(mu, z, &e);
            if (m == 0) {
                if (err) *err = e;
                return jm;
            }
            complex_t jm1 = hankel_j(mu + 1.0, z, &e);
            for (int k = 1; k < m; ++k) {
                complex_t next = (2.0 * (k + mu) / z) * jm1 - jm;
                jm = jm1;
                jm1 = next;
            }
            if (err) *err = e * (m + 1.0);
            return jm1;
        }
        double perr = 0.0;
        complex_t v = poisson_jn(nu, z, poisson_points(az), &perr);
        complex_t pref = std::exp(nu * std::log(0.5 * z) - lg(nu + 1.0));
        if (err) *err = perr * std::abs(pref);
        return pref * v;
    }
    int m = static_cast<int>(std::floor(nu));
    double mu = nu - m;
    complex_t j0, j1;
    double aerr = 0.0;
    anchor_j(mu, z, j0, j1, &aerr);
    return miller_j(nu, z, j0, j1, err);
}

/// Scaled modified Bessel e^{-x} I_nu(x) by positive-term series (x moderate)
/// or the large-argument expansion. Returns the unscaled value when
/// scaled == false (may overflow past x ~ 700, guarded).
inline double bessel_i_core(double nu, double x, bool scaled, double* err) {
    if (x < 0.0) throw std::domain_error("bessel_i: x must be >= 0");
    if (x == 0.0) {
        if (err) *err = 0.0;
        return (nu == 0.0) ? 1.0 : 0.0;
    }
    const bool series_ok = (x <= 40.0) || (nu * nu >= 0.8 * x);
    if (series_ok) {
        if (x > 600.0) throw std::overflow_error("bessel_i: argument beyond series envelope");
        double lpref = nu * std::log(0.5 * x) - lg(nu + 1.0);
        double term = 1.0, sum = 1.0;
        const double q = 0.25 * x * x;
        for (int k = 0; k < 2000; ++k) {
            term *= q / ((k + 1.0) * (nu + k + 1.0));
            sum += term;
            if (term < 1e-18 * sum) break;
        }
        double lval = lpref + std::log(sum) - (scaled ? x : 0.0);
        if (!scaled && lval > 708.0) throw std::overflow_error("bessel_i: result overflows");
        double v = std::exp(lval);
        if (err) *err = v * 1e-15;
        return v;
    }
    // scaled asymptotic: e^{-x} I_nu(x) ~ (2 pi x)^{-1/2} sum (-1)^k a_k(nu)/x^k
    const double mu4 = 4.0 * nu * nu;
    double t = 1.0, sum = 1.0, tmin = 1.0;
    for (int k = 1; k <= 40; ++k) {
        t *= -(mu4 - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
        if (std::abs(t) > tmin) break;
        tmin = std::abs(t);
        sum += t;
        if (tmin < 1e-18) break;
    }
    double v = sum / std::sqrt(2.0 * kPi * x);
    if (!scaled) {
        if (x > 708.0) throw std::overflow_error("bessel_i: result overflows");
        v *= std::exp(x);
    }
    if (err) *err = std::abs(v) * (tmin + 1e-15);
    return v;
}

/// Temme's series for K_mu(x), K_{mu+1}(x) with |mu| <= 1/2, 0 < x <= 2.
inline void temme_k(double mu, double x, double& kmu, double& kmu1) {
    const double a1c = 0.5772156649015328606;   // coefficient of x in 1/Gamma(1+x)
    const double a3c = -0.0420026350340952355;  // coefficient of x^3
    double gam1;
    if (std::abs(mu) < 1e-5) {
        gam1 = -(a1c + a3c * mu * mu);
    } else {
        gam1 = (1.0 / std::tgamma(1.0 - mu) - 1.0 / std::tgamma(1.0 + mu)) / (2.0 * mu);
    }
    double gam2 = (1.0 / std::tgamma(1.0 - mu) + 1.0 / std::tgamma(1.0 + mu)) / 2.0;
    double gampl = 1.0 / std::tgamma(1.0 + mu);
    double gammi = 1.0 / std::tgamma(1.0 - mu);
    const double x2 = 0.5 * x;
    double pimu = kPi * mu;
    double fact = (std::abs(pimu) < 1e-12) ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    double fact2 = (std::abs(e) < 1e-12) ? 1.0 : std::sinh(e) / e;
    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    double ex = std::exp(e);
    double p = 0.5 * ex / gampl;
    double q = 0.5 / (ex * gammi);
    double c = 1.0;
    double dd = x2 * x2;
    double sum1 = p;
    for (int i = 1; i <= 500; ++i) {
        ff = (i * ff + p + q) / (i * i - mu * mu);
        c *= dd / i;
        p /= (i - mu);
        q /= (i + mu);
        double del = c * ff;
        sum += del;
        double del1 = c * (p - i * ff);
        sum1 += del1;
        if (std::abs(del) < kEps * std::abs(sum)) break;
    }
    kmu = sum;
    kmu1 = sum1 * (2.0 / x);
}

/// Steed continued fraction for e^{x} K_mu(x), e^{x} K_{mu+1}(x), x > 2.
inline void cf2_k_scaled(double mu, double x, double& kmu, double& kmu1) {
    const double mu2 = mu * mu;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25 - mu2;
    double q = a1, c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= 20000; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) break;
    }
    h = a1 * h;
    kmu = std::sqrt(kPi / (2.0 * x)) / s;
    kmu1 = kmu * (mu + x + 0.5 - h) / x;
}

/// e^{x} K_nu(x) for nu >= -1/2 via order reduction plus upward recurrence.
inline double bessel_k_scaled_core(double nu, double x, double* err) {
    if (x <= 0.0) throw std::domain_error("bessel_k: x must be > 0");
    nu = std::abs(nu);  // K is even in the order
    int m = static_cast<int>(std::floor(nu + 0.5));
    double mu = nu - m;
    double kmu, kmu1;
    if (x <= 2.0) {
        temme_k(mu, x, kmu, kmu1);
        double ex = std::exp(x);
        kmu *= ex;
        kmu1 *= ex;
    } else {
        cf2_k_scaled(mu, x, kmu, kmu1);
    }
    for (int k = 1; k <= m; ++k) {
        double knext = kmu + (2.0 * (mu + k)) / x * kmu1;
        if (!std::isfinite(knext)) throw std::overflow_error("bessel_k: recurrence overflow");
        kmu = kmu1;
        kmu1 = knext;
    }
    double v = kmu;  // after the climb this is order mu + m = nu
    if (err) *err = v * 1e-14 * (m + 1.0);
    return v;
}

}  // namespace detail

/// Normalized Bessel function jn_nu(z) = 2^nu Gamma(nu+1) J_nu(z) / z^nu,
/// entire and even in z, jn_nu(0) = 1.
inline complex_t jn(double nu, complex_t z, double* err = nullptr) {
    if (nu < -0.5) throw std::domain_error("jn: order below -1/2");
    if (z.real() < 0.0 || (z.real() == 0.0 && z.imag() < 0.0)) z = -z;
    const double az = std::abs(z);
    if (std::abs(z.imag()) > 690.0) throw std::overflow_error("jn: argument beyond exponential envelope");
    if (az == 0.0) {
        if (err) *err = 0.0;
        return 1.0;
    }
    if (az <= 8.0 || 0.25 * az * az <= nu + 1.0) {
        return detail::hyp0f1(nu + 1.0, -0.25 * z * z, err);
    }
    double jerr = 0.0;
    complex_t jv = detail::bessel_j_core(nu, z, &jerr);
    complex_t pref = std::exp(detail::lg(nu + 1.0) + nu * std::log(2.0) - nu * std::log(z));
    if (err) *err = jerr * std::abs(pref);
    return pref * jv;
}

/// Modified normalized form jni_nu(w) = jn_nu(iw) = 2^nu Gamma(nu+1) I_nu(w)/w^nu
/// for real w (even in w), optionally scaled by e^{-|w|}.
inline double jni_real(double nu, double w, bool scaled = false, double* err = nullptr) {
    const double x = std::abs(w);
    if (x == 0.0) {
        if (err) *err = 0.0;
        return 1.0;
    }
    if (x <= 40.0 || nu * nu >= 0.8 * x) {
        double serr = 0.0;
        double term = 1.0, sum = 1.0;
        const double q = 0.25 * x * x;
        for (int k = 0; k < 2000; ++k) {
            term *= q / ((k + 1.0) * (nu + k + 1.0));
            sum += term;
            if (term < 1e-18 * sum) break;
        }
        serr = sum * 1e-15;
        if (scaled) {
            sum *= std::exp(-x);
            serr *= std::exp(-x);
        }
        if (err) *err = serr;
        return sum;
    }
    double ierr = 0.0;
    double iv = detail::bessel_i_core(nu, x, true, &ierr);  // e^{-x} I_nu(x)
    double lpref = detail::lg(nu + 1.0) + nu * std::log(2.0) - nu * std::log(x);
    if (!scaled && lpref + x > 700.0) throw std::overflow_error("jni: result overflows");
    double v = std::exp(lpref + (scaled ? 0.0 : x)) * iv;
    if (err) *err = v * 1e-14;
    return v;
}

/// Complex-argument jni (used for the Dunkl kernel at complex spectral
/// parameters); falls back on the entire-function engine.
inline complex_t jni(double nu, complex_t w, double* err = nullptr) {
    if (w.imag() == 0.0) {
        complex_t v = jni_real(nu, w.real(), false, err);
        return v;
    }
    return jn(nu, complex_t(0.0, 1.0) * w, err);
}

// ---------------------------------------------------------------------------
// public operation surface
// ---------------------------------------------------------------------------

inline EvalResult bessel_j(Order nu, complex_t z) {
    if (std::abs(z) > 1e4) throw std::overflow_error("bessel_j: |z| beyond evaluation envelope");
    if (z.real() < 0.0)
        throw std::domain_error("bessel_j: Re z must be >= 0 (principal branch)");
    double e = 0.0;
    complex_t v = detail::bessel_j_core(nu.nu, z, &e);
    return {v, e};
}

inline EvalResult bessel_i(Order nu, double x) {
    double e = 0.0;
    double v = detail::bessel_i_core(nu.nu, x, false, &e);
    return {complex_t(v, 0.0), e};
}

/// e^{-x} I_nu(x)
inline EvalResult bessel_i_scaled(Order nu, double x) {
    double e = 0.0;
    double v = detail::bessel_i_core(nu.nu, x, true, &e);
    return {complex_t(v, 0.0), e};
}

inline EvalResult bessel_k(Order nu, double x) {
    double e = 0.0;
    double v = detail::bessel_k_scaled_core(nu.nu, x, &e);
    double lval = std::log(v) - x;
    if (lval > 708.0) throw std::overflow_error("bessel_k: result overflows");
    return {complex_t(v * std::exp(-x), 0.0), e * std::exp(-x)};
}

/// e^{x} K_nu(x)
inline EvalResult bessel_k_scaled(Order nu, double x) {
    double e = 0.0;
    double v = detail::bessel_k_scaled_core(nu.nu, x, &e);
    return {complex_t(v, 0.0), e};
}

/// Itilde_nu(x) = I_nu(x) / x^nu, with the series limit 1/(2^nu Gamma(nu+1)) at x = 0.
inline EvalResult tilde_i(Order nu, double x) {
    if (x < 0.0) throw std::domain_error("tilde_i: x must be >= 0");
    double norm = std::exp(-(detail::lg(nu.nu + 1.0) + nu.nu * std::log(2.0)));
    double e = 0.0;
    double v = jni_real(nu.nu, x, false, &e) * norm;
    return {complex_t(v, 0.0), e * norm};
}

/// e^{-x} Itilde_nu(x)
inline EvalResult tilde_i_scaled(Order nu, double x) {
    if (x < 0.0) throw std::domain_error("tilde_i: x must be >= 0");
    double norm = std::exp(-(detail::lg(nu.nu + 1.0) + nu.nu * std::log(2.0)));
    double e = 0.0;
    double v = jni_real(nu.nu, x, true, &e) * norm;
    return {complex_t(v, 0.0), e * norm};
}

/// Ktilde_nu(x) = x^nu K_nu(x); at x = 0 the limit 2^{nu-1} Gamma(nu) (nu > 0).
inline EvalResult tilde_k(Order nu, double x) {
    if (x < 0.0) throw std::domain_error("tilde_k: x must be >= 0");
    if (x == 0.0) {
        if (nu.nu <= 0.0) throw std::domain_error("tilde_k: Gamma pole at x = 0 for nu <= 0");
        double v = std::exp((nu.nu - 1.0) * std::log(2.0) + detail::lg(nu.nu));
        return {complex_t(v, 0.0), v * 1e-15};
    }
    double e = 0.0;
    double ks = detail::bessel_k_scaled_core(nu.nu, x, &e);
    double lval = nu.nu * std::log(x) - x + std::log(ks);
    if (lval > 708.0) throw std::overflow_error("tilde_k: result overflows");
    double v = std::exp(lval);
    return {complex_t(v, 0.0), v * 1e-13};
}

/// Spherical function phi_lambda at radius r for order nu: jn_nu(lambda r),
/// normalized to 1 at r = 0 and even in lambda.
inline EvalResult spherical_fn(complex_t lambda, double r, Order nu) {
    complex_t z = lambda * r;
    if (std::abs(z.imag()) > 690.0)
        throw std::overflow_error("spherical_fn: |Im lambda| * r beyond envelope");
    double e = 0.0;
    complex_t v = jn(nu.nu, z, &e);
    return {v, e};
}

/// Poisson-integral route to the same spherical function; serves as the
/// in-library oracle for spherical_fn on the shared envelope.
inline EvalResult poisson_sphfn(complex_t lambda, double r, Order nu, int quad_points) {
    if (quad_points < 8) throw std::invalid_argument("poisson_sphfn: need quad_points >= 8");
    if (nu.nu <= -0.5) throw std::domain_error("poisson_sphfn: order must exceed -1/2");
    complex_t z = lambda * r;
    if (std::abs(z.imag()) > 690.0)
        throw std::overflow_error("poisson_sphfn: argument beyond envelope");
    double e = 0.0;
    complex_t v = detail::poisson_jn(nu.nu, z, quad_points, &e);
    return {v, e};
}

}  // namespace semichaos::specfun
