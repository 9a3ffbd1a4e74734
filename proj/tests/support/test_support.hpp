#pragma once

// Shared test utilities: a deterministic PRNG and a tanh-sinh quadrature
// oracle. The oracle is independent of the library's AGM/series code paths
// and is the reference for every period assertion.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace testsupport {

struct SplitMix {
    unsigned long long s;
    explicit SplitMix(unsigned long long seed) : s(seed) {}
    unsigned long long next() {
        s += 0x9e3779b97f4a7c15ull;
        unsigned long long z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform() { return double(next() >> 11) * 0x1.0p-53; } // [0, 1)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    long long range(long long lo, long long hi) { // inclusive
        return lo + static_cast<long long>(next() % static_cast<unsigned long long>(hi - lo + 1));
    }
};

/// Tanh-sinh quadrature of f over (a, b). The integrand receives the point
/// and its distances to both endpoints, computed without cancellation, so
/// inverse-square-root endpoint singularities integrate cleanly.
/// F: double(double x, double from_a, double to_b).
template <class F>
double tanh_sinh(F f, double a, double b, double target = 1e-12, int max_level = 12) {
    const double half = 0.5 * (b - a);
    const double pi_half = 1.5707963267948966;
    const double cutoff = 5.0; // |u| <= 5 keeps every intermediate finite
    double prev = 0.0;
    for (int level = 3; level <= max_level; ++level) {
        double h = std::pow(2.0, -level + 1);
        double sum = 0.0;
        for (long k = -static_cast<long>(cutoff / h); k <= static_cast<long>(cutoff / h); ++k) {
            double u = k * h;
            double y = pi_half * std::sinh(u);
            // 1 -+ tanh(y) without cancellation on either tail
            double e = std::exp(-2.0 * std::abs(y));
            double small = 2.0 * e / (1.0 + e), big = 2.0 / (1.0 + e);
            double one_plus_t = (y >= 0) ? big : small;  // 1 + tanh(y)
            double one_minus_t = (y >= 0) ? small : big; // 1 - tanh(y)
            double from_a = half * one_plus_t;
            double to_b = half * one_minus_t;
            double x = a + from_a;
            double cosh_y = std::cosh(y);
            double w = half * pi_half * std::cosh(u) / (cosh_y * cosh_y);
            if (w < 1e-300) continue;
            double v = f(x, from_a, to_b);
            if (std::isfinite(v)) sum += w * v;
        }
        double cur = sum * h;
        if (level > 3 && std::abs(cur - prev) <= target * (1.0 + std::abs(cur))) return cur;
        prev = cur;
    }
    return prev;
}

/// Reference values for the Legendre cycle integrals, by quadrature only:
/// real_period(lambda)  = integral over [0, lambda] of dx / sqrt(x (1-x) (lambda-x))
/// imag_period(lambda)  = integral over [lambda, 1] of dx / sqrt(x (1-x) (x-lambda))
inline double legendre_real_period_quadrature(double lambda) {
    return tanh_sinh(
        [&](double x, double from0, double to_lambda) {
            return 1.0 / std::sqrt(from0 * (1.0 - x) * to_lambda);
        },
        0.0, lambda);
}

inline double legendre_imag_period_quadrature(double lambda) {
    return tanh_sinh(
        [&](double x, double from_lambda, double to1) {
            return 1.0 / std::sqrt(x * to1 * from_lambda);
        },
        lambda, 1.0);
}

/// Complete elliptic integral K(k) by direct quadrature of the angular form.
inline double elliptic_k_quadrature(double k) {
    const double pi_half = 1.5707963267948966;
    return tanh_sinh(
        [&](double theta, double, double) {
            double s = std::sin(theta);
            return 1.0 / std::sqrt(1.0 - k * k * s * s);
        },
        0.0, pi_half);
}

} // namespace testsupport
