// Gauss-Legendre and Gauss-Jacobi rules plus panel composition helpers.
// Jacobi rules go through the Golub-Welsch tridiagonal eigenproblem solved
// with an implicit-shift QL sweep; Legendre nodes come from Newton iteration
// on the three-term recurrence.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "semichaos/common.hpp"

namespace semichaos {

/// Nodes and weights of a one-dimensional rule on a reference interval.
struct QuadRule {
    std::vector<double> x;
    std::vector<double> w;
    std::size_t size() const { return x.size(); }
};

namespace detail {

/// Implicit-shift QL diagonalization of a symmetric tridiagonal matrix.
/// d = diagonal, e = subdiagonal (e[n-1] ignored), z = vector rotated along;
/// on return d holds ascending eigenvalues and z the first eigenvector rows.
inline void imtqlx(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    if (n == 1) return;
    const int max_iter = 60;
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        for (;;) {
            int m = l;
            for (; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= kEps * dd) break;
            }
            if (m == l) break;
            if (++iter > max_iter) throw std::runtime_error("imtqlx: QL sweep failed to converge");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    // straight insertion sort, carrying z along
    for (int i = 1; i < n; ++i) {
        double dk = d[i], zk = z[i];
        int j = i - 1;
        while (j >= 0 && d[j] > dk) {
            d[j + 1] = d[j];
            z[j + 1] = z[j];
            --j;
        }
        d[j + 1] = dk;
        z[j + 1] = zk;
    }
}

}  // namespace detail

/// n-point Gauss-Legendre rule on [-1, 1].
inline QuadRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
    QuadRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) {
                // one clean-up step
                p1 = 1.0;
                p2 = 0.0;
                for (int j = 0; j < n; ++j) {
                    double p3 = p2;
                    p2 = p1;
                    p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
                }
                pp = n * (z * p1 - p2) / (z * z - 1.0);
                break;
            }
        }
        rule.x[i] = -z;
        rule.x[n - 1 - i] = z;
        rule.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.w[n - 1 - i] = rule.w[i];
    }
    return rule;
}

/// n-point Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta on [-1, 1].
inline QuadRule gauss_jacobi(int n, double alpha, double beta) {
    if (n < 1) throw std::invalid_argument("gauss_jacobi: need n >= 1");
    if (alpha <= -1.0 || beta <= -1.0)
        throw std::invalid_argument("gauss_jacobi: exponents must exceed -1");
    const double ab = alpha + beta;
    std::vector<double> d(n), e(n, 0.0), z(n, 0.0);
    d[0] = (beta - alpha) / (ab + 2.0);
    if (n > 1) {
        double b1sq = 4.0 * (alpha + 1.0) * (beta + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
        e[0] = std::sqrt(b1sq);
    }
    for (int j = 2; j <= n; ++j) {
        double den = (2.0 * j + ab) * (2.0 * j + ab - 2.0);
        d[j - 1] = (beta * beta - alpha * alpha) / den;
        if (j < n) {
            double num = 4.0 * j * (j + alpha) * (j + beta) * (j + ab);
            double dd = (2.0 * j + ab - 1.0) * (2.0 * j + ab) * (2.0 * j + ab) * (2.0 * j + ab + 1.0);
            e[j - 1] = std::sqrt(num / dd);
        }
    }
    // zeroth moment 2^{ab+1} B(alpha+1, beta+1)
    double zemu = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                           std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
    z[0] = 1.0;
    detail::imtqlx(d, e, z);
    QuadRule rule;
    rule.x = std::move(d);
    rule.w.resize(n);
    for (int i = 0; i < n; ++i) rule.w[i] = zemu * z[i] * z[i];
    return rule;
}

/// Affine image of a reference rule on [a, b].
inline QuadRule map_rule(const QuadRule& ref, double a, double b) {
    QuadRule out;
    out.x.resize(ref.size());
    out.w.resize(ref.size());
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t i = 0; i < ref.size(); ++i) {
        out.x[i] = mid + half * ref.x[i];
        out.w[i] = half * ref.w[i];
    }
    return out;
}

}  // namespace semichaos
