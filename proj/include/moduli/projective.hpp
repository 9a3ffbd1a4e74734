#pragma once

#include <utility>

#include "complex_field.hpp"
#include "errors.hpp"

namespace moduli {

/// A point of the Riemann sphere P^1: a finite complex value or the
/// distinguished point at infinity. Infinity is a first-class value,
/// never encoded as a large float.
template <class C>
class ProjectivePoint {
public:
    ProjectivePoint() : inf_(false), v_{} {}

    static ProjectivePoint finite(C v) {
        ProjectivePoint p;
        p.v_ = std::move(v);
        return p;
    }
    static ProjectivePoint infinity() {
        ProjectivePoint p;
        p.inf_ = true;
        return p;
    }

    bool is_infinity() const { return inf_; }
    const C& value() const {
        if (inf_) throw error("ProjectivePoint: value() at infinity");
        return v_;
    }

    friend bool operator==(const ProjectivePoint& x, const ProjectivePoint& y) {
        if (x.inf_ || y.inf_) return x.inf_ && y.inf_;
        return FieldTraits<C>::equal(x.v_, y.v_);
    }
    friend bool operator!=(const ProjectivePoint& x, const ProjectivePoint& y) { return !(x == y); }

private:
    bool inf_;
    C v_;
};

/// z -> (az + b)/(cz + d), stored up to overall scale. Degenerate
/// coefficient matrices (ad - bc = 0) are rejected at construction.
template <class C>
struct MoebiusMap {
    C a, b, c, d;

    MoebiusMap(C a_, C b_, C c_, C d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        using FT = FieldTraits<C>;
        double scale = FT::magnitude(a) * FT::magnitude(d) + FT::magnitude(b) * FT::magnitude(c);
        if (FT::is_zero(a * d - b * c, scale))
            throw DegenerateMap("MoebiusMap: ad - bc = 0");
    }

    static MoebiusMap identity() {
        using FT = FieldTraits<C>;
        return MoebiusMap(FT::from_int(1), FT::from_int(0), FT::from_int(0), FT::from_int(1));
    }

    MoebiusMap inverse() const { return MoebiusMap(d, -b, -c, a); }

    friend MoebiusMap operator*(const MoebiusMap& m, const MoebiusMap& n) {
        return MoebiusMap(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
    }

    // equality of maps = proportional coefficient matrices
    friend bool operator==(const MoebiusMap& m, const MoebiusMap& n) {
        using FT = FieldTraits<C>;
        const C* u[4] = {&m.a, &m.b, &m.c, &m.d};
        const C* v[4] = {&n.a, &n.b, &n.c, &n.d};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (!FT::equal((*u[i]) * (*v[j]), (*u[j]) * (*v[i]))) return false;
        return true;
    }
    friend bool operator!=(const MoebiusMap& m, const MoebiusMap& n) { return !(m == n); }
};

/// Fractional linear action on P^1 with the standard conventions at
/// infinity: m(inf) = a/c, and a pole of the denominator maps to inf.
template <class C>
ProjectivePoint<C> apply_moebius(const MoebiusMap<C>& m, const ProjectivePoint<C>& p) {
    using FT = FieldTraits<C>;
    using P = ProjectivePoint<C>;
    if (p.is_infinity()) {
        double scale = std::max(FT::magnitude(m.a), FT::magnitude(m.c));
        if (FT::is_zero(m.c, scale)) return P::infinity();
        return P::finite(m.a / m.c);
    }
    const C& z = p.value();
    C den = m.c * z + m.d;
    double scale = FT::magnitude(m.c) * FT::magnitude(z) + FT::magnitude(m.d);
    if (FT::is_zero(den, scale)) return P::infinity();
    return P::finite((m.a * z + m.b) / den);
}

/// The unique map (up to scale) with f(p1) = 0, f(p2) = 1, f(p3) = inf.
template <class C>
MoebiusMap<C> moebius_sending_to_standard(const ProjectivePoint<C>& p1,
                                          const ProjectivePoint<C>& p2,
                                          const ProjectivePoint<C>& p3) {
    using FT = FieldTraits<C>;
    if (p1 == p2 || p1 == p3 || p2 == p3)
        throw CoincidentPoints("moebius_sending_to_standard: points must be pairwise distinct");
    C one = FT::from_int(1), zero = FT::from_int(0);
    if (p1.is_infinity()) {
        // f(z) = (p2 - p3)/(z - p3)
        return MoebiusMap<C>(zero, p2.value() - p3.value(), one, -p3.value());
    }
    if (p2.is_infinity()) {
        // f(z) = (z - p1)/(z - p3)
        return MoebiusMap<C>(one, -p1.value(), one, -p3.value());
    }
    if (p3.is_infinity()) {
        // f(z) = (z - p1)/(p2 - p1)
        return MoebiusMap<C>(one, -p1.value(), zero, p2.value() - p1.value());
    }
    const C &x1 = p1.value(), &x2 = p2.value(), &x3 = p3.value();
    // f(z) = (x2 - x3)(z - x1) / ((x2 - x1)(z - x3))
    C k = x2 - x3, l = x2 - x1;
    return MoebiusMap<C>(k, -(x1 * k), l, -(x3 * l));
}

/// Cross ratio (p1 : p2 : p3 : p4) = ((p1-p3)/(p2-p3)) / ((p1-p4)/(p2-p4)).
/// Equals the image of p1 under the map sending (p2, p3, p4) to (1, 0, inf);
/// it is computed that way so the infinity conventions are uniform.
template <class C>
C cross_ratio(const ProjectivePoint<C>& p1, const ProjectivePoint<C>& p2,
              const ProjectivePoint<C>& p3, const ProjectivePoint<C>& p4) {
    const ProjectivePoint<C>* ps[4] = {&p1, &p2, &p3, &p4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*ps[i] == *ps[j]) throw CoincidentPoints("cross_ratio: points must be pairwise distinct");
    auto m = moebius_sending_to_standard(p3, p2, p4); // p3 -> 0, p2 -> 1, p4 -> inf
    auto img = apply_moebius(m, p1);
    if (img.is_infinity()) throw CoincidentPoints("cross_ratio: degenerate configuration");
    return img.value();
}

} // namespace moduli
