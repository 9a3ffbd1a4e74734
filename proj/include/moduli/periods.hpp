#pragma once

#include <cmath>
#include <complex>

#include "elliptic.hpp"
#include "errors.hpp"
#include "qseries.hpp"

namespace moduli {

/// Arithmetic-geometric mean of two positive reals: the common limit of
/// a' = (a+b)/2, b' = sqrt(ab).
inline double agm(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw NonPositiveInput("agm: arguments must be positive");
    for (int i = 0; i < 64; ++i) {
        if (std::abs(a - b) < 1e-15 * a) return a;
        double am = 0.5 * (a + b);
        double gm = std::sqrt(a * b);
        a = am;
        b = gm;
    }
    return a;
}

namespace detail {

// complex AGM with the optimal square-root branch: pick the root with
// |am - gm| <= |am + gm|. Principal branches only; used by the
// best-effort mode for lambda outside (0,1).
inline std::complex<double> agm_complex(std::complex<double> a, std::complex<double> b) {
    for (int i = 0; i < 200; ++i) {
        if (std::abs(a - b) <= 1e-15 * std::abs(a)) return a;
        std::complex<double> am = 0.5 * (a + b);
        std::complex<double> gm = std::sqrt(a * b);
        if (std::abs(am - gm) > std::abs(am + gm)) gm = -gm;
        a = am;
        b = gm;
    }
    throw NonConvergence("agm: complex iteration did not converge");
}

} // namespace detail

/// Coordinate lambda of the Legendre curve y^2 = x(x-1)(x-lambda); any
/// value outside {0,1} is accepted, but results are guaranteed only for
/// real lambda in (0,1).
struct LegendreParameter {
    std::complex<double> lambda;

    explicit LegendreParameter(std::complex<double> l) : lambda(l) {
        if (std::abs(l) <= 1e-12 || std::abs(l - 1.0) <= 1e-12)
            throw BadModuliPoint("LegendreParameter: lambda in {0,1}");
    }
    explicit LegendreParameter(double l) : LegendreParameter(std::complex<double>(l, 0.0)) {}

    bool in_guaranteed_domain() const {
        return lambda.imag() == 0.0 && lambda.real() > 0.0 && lambda.real() < 1.0;
    }
};

/// Basis of the period lattice of the Legendre curve, positively framed:
/// Im(w2/w1) > 0.
struct PeriodPair {
    std::complex<double> w1, w2;
};

struct PeriodResult {
    PeriodPair periods;
    bool guaranteed; // false: best-effort principal-branch result
};

/// Period lattice basis via the AGM: w1 = pi / agm(1, sqrt(1-lambda)),
/// w2 = i pi / agm(1, sqrt(lambda)). For real lambda in (0,1) these equal
/// the cycle integrals of dx/y over [0, lambda] and [lambda, 1].
inline PeriodResult legendre_periods(const LegendreParameter& p) {
    if (p.in_guaranteed_domain()) {
        double l = p.lambda.real();
        double w1 = M_PI / agm(1.0, std::sqrt(1.0 - l));
        double w2 = M_PI / agm(1.0, std::sqrt(l));
        return {{{w1, 0.0}, {0.0, w2}}, true};
    }
    std::complex<double> one{1.0, 0.0};
    std::complex<double> w1 = M_PI / detail::agm_complex(one, std::sqrt(one - p.lambda));
    std::complex<double> w2 = std::complex<double>(0.0, M_PI) / detail::agm_complex(one, std::sqrt(p.lambda));
    if ((w2 / w1).imag() < 0.0) std::swap(w1, w2); // restore positive framing
    return {{w1, w2}, false};
}

/// tau(lambda) = w2/w1 in the upper half plane.
inline HalfPlanePoint tau_from_lambda(const LegendreParameter& p) {
    PeriodResult r = legendre_periods(p);
    return tau_from_basis(LatticeBasis(r.periods.w1, r.periods.w2));
}

/// The composite M_{0,4} -> M_{1,1} -> C: j of the Legendre curve.
inline std::complex<double> j_from_lambda(const LegendreParameter& p) {
    return j_invariant(tau_from_lambda(p));
}

} // namespace moduli
