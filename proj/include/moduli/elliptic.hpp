#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "projective.hpp"

namespace moduli {

/// tau in the upper half plane, Im tau > 0 strictly.
class HalfPlanePoint {
public:
    explicit HalfPlanePoint(std::complex<double> tau) : t_(tau) {
        if (!(tau.imag() > 0.0))
            throw NotInUpperHalfPlane("HalfPlanePoint: Im tau must be positive");
    }
    HalfPlanePoint(double re, double im) : HalfPlanePoint(std::complex<double>(re, im)) {}

    std::complex<double> value() const { return t_; }
    double re() const { return t_.real(); }
    double im() const { return t_.imag(); }

private:
    std::complex<double> t_;
};

/// Element of SL2(Z). Determinant is checked exactly at construction.
struct IntegerMatrix2 {
    long long a, b, c, d;

    IntegerMatrix2(long long a_, long long b_, long long c_, long long d_)
        : a(a_), b(b_), c(c_), d(d_) {
        if (a * d - b * c != 1)
            throw NotUnimodular("IntegerMatrix2: ad - bc must be 1");
    }

    static IntegerMatrix2 identity() { return {1, 0, 0, 1}; }
    static IntegerMatrix2 S() { return {0, -1, 1, 0}; }        // tau -> -1/tau
    static IntegerMatrix2 T() { return {1, 1, 0, 1}; }         // tau -> tau + 1
    static IntegerMatrix2 T_inverse() { return {1, -1, 0, 1}; }
    static IntegerMatrix2 translation(long long n) { return {1, n, 0, 1}; }

    long long trace() const { return a + d; }
    IntegerMatrix2 inverse() const { return {d, -b, -c, a}; }

    friend IntegerMatrix2 operator*(const IntegerMatrix2& m, const IntegerMatrix2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend bool operator==(const IntegerMatrix2& m, const IntegerMatrix2& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
    friend bool operator!=(const IntegerMatrix2& m, const IntegerMatrix2& n) { return !(m == n); }

    bool is_scalar() const { return b == 0 && c == 0 && a == d; }

    // canonical representative of {m, -m}: c > 0, or c = 0 and a > 0
    IntegerMatrix2 sign_normalized() const {
        if (c < 0 || (c == 0 && a < 0)) return {-a, -b, -c, -d};
        return *this;
    }

    // Moebius action on the upper half plane. Evaluated in extended
    // precision: the witness check |gamma.tau - tau*| <= 1e-9 must survive
    // the cancellation in c*tau + d for large-entry matrices.
    std::complex<double> apply(std::complex<double> z) const {
        std::complex<long double> zz(z.real(), z.imag());
        std::complex<long double> num = static_cast<long double>(a) * zz + static_cast<long double>(b);
        std::complex<long double> den = static_cast<long double>(c) * zz + static_cast<long double>(d);
        std::complex<long double> w = num / den;
        return {static_cast<double>(w.real()), static_cast<double>(w.imag())};
    }

private:
    IntegerMatrix2() : a(1), b(0), c(0), d(1) {}
};

/// Word in the generators S: tau -> -1/tau and T: tau -> tau + 1.
/// Tokens are listed in the order they are applied to tau, so the word
/// "S T" means: first S, then T. The associated matrix is therefore the
/// product of the token matrices in reverse list order, and it reproduces
/// the reduction witness up to overall sign.
struct GeneratorWord {
    enum class Token { S, T, T_inv };
    std::vector<Token> tokens;

    static IntegerMatrix2 token_matrix(Token t) {
        switch (t) {
            case Token::S: return IntegerMatrix2::S();
            case Token::T: return IntegerMatrix2::T();
            default: return IntegerMatrix2::T_inverse();
        }
    }

    IntegerMatrix2 as_matrix() const {
        IntegerMatrix2 m = IntegerMatrix2::identity();
        for (auto t : tokens) m = token_matrix(t) * m;
        return m;
    }

    std::complex<double> apply(std::complex<double> z) const { return as_matrix().apply(z); }

    std::string str() const {
        std::string out;
        for (auto t : tokens) {
            if (!out.empty()) out += ' ';
            out += (t == Token::S) ? "S" : (t == Token::T) ? "T" : "T^-1";
        }
        return out;
    }
};

/// Basis (w1, w2) of a lattice in C; the two vectors must be R-linearly
/// independent.
struct LatticeBasis {
    std::complex<double> w1, w2;

    LatticeBasis(std::complex<double> w1_, std::complex<double> w2_) : w1(w1_), w2(w2_) {
        std::complex<double> r = w2 / w1;
        if (!(std::abs(r.imag()) > 1e-12 * std::abs(r)))
            throw DegenerateBasis("LatticeBasis: w2/w1 is real");
    }

    // basis with the same lattice and Im(u2/u1) > 0
    LatticeBasis oriented() const {
        if ((w2 / w1).imag() > 0) return *this;
        return LatticeBasis(w2, w1);
    }
};

/// tau = w2/w1 after swapping the basis vectors, if needed, so the ratio
/// lands in the upper half plane.
inline HalfPlanePoint tau_from_basis(const LatticeBasis& basis) {
    LatticeBasis o = basis.oriented();
    return HalfPlanePoint(o.w2 / o.w1);
}

namespace detail {
constexpr double kBoundaryTol = 1e-9; // |tau| = 1 detection and F tie-breaks
}

/// Strict fundamental set convention: Re tau in [-1/2, 1/2), and on the
/// unit circle (within 1e-9) the left arc Re tau <= 0 is the representative.
inline bool in_fundamental_domain(const HalfPlanePoint& tau) {
    const double tol = detail::kBoundaryTol;
    double r = tau.re(), m = std::abs(tau.value());
    if (std::abs(r - 0.5) <= tol) return false; // right edge
    if (std::abs(r + 0.5) > tol && (r < -0.5 || r > 0.5)) return false;
    if (std::abs(m - 1.0) <= tol) return r <= tol; // circle: left arc only
    return m > 1.0;
}

struct ReduceResult {
    HalfPlanePoint tau;    // reduced representative in F
    IntegerMatrix2 gamma;  // gamma . input = tau, sign-normalized
    GeneratorWord word;    // evaluates to gamma up to sign
};

/// Reduce tau into the fundamental domain {|Re| <= 1/2, |tau| >= 1} by
/// alternating integer translations and inversions, recording the witness.
inline ReduceResult reduce_tau(const HalfPlanePoint& tau, int max_iter = 10000) {
    std::complex<double> t = tau.value();
    IntegerMatrix2 g = IntegerMatrix2::identity();
    GeneratorWord word;
    bool settled = false;
    for (int iter = 0; iter < max_iter; ++iter) {
        if (!(t.imag() > 0.0))
            throw NonConvergence("reduce_tau: imaginary part collapsed (input too close to the real axis)");
        double n = std::floor(t.real() + 0.5); // Re lands in [-1/2, 1/2)
        if (n != 0.0) {
            t -= n;
            long long ni = static_cast<long long>(n);
            g = IntegerMatrix2::translation(-ni) * g;
            auto tok = ni > 0 ? GeneratorWord::Token::T_inv : GeneratorWord::Token::T;
            for (long long k = 0; k < std::llabs(ni); ++k) word.tokens.push_back(tok);
        }
        if (std::abs(t) < 1.0 - detail::kBoundaryTol) {
            t = -1.0 / t;
            g = IntegerMatrix2::S() * g;
            word.tokens.push_back(GeneratorWord::Token::S);
        } else {
            settled = true;
            break;
        }
    }
    if (!settled)
        throw NonConvergence("reduce_tau: iteration bound exceeded");
    // boundary tie-break: prefer the left arc of |tau| = 1
    if (std::abs(std::abs(t) - 1.0) <= detail::kBoundaryTol && t.real() > detail::kBoundaryTol) {
        t = -1.0 / t;
        g = IntegerMatrix2::S() * g;
        word.tokens.push_back(GeneratorWord::Token::S);
    }
    return {HalfPlanePoint(t), g.sign_normalized(), std::move(word)};
}

/// If the two bases span homothetic lattices, return lambda with
/// lattice(b1) = lambda * lattice(b2); recover lambda from the framed
/// bases transported along the reduction words (no search).
inline std::optional<std::complex<double>> lattices_homothetic(const LatticeBasis& b1,
                                                               const LatticeBasis& b2) {
    LatticeBasis o1 = b1.oriented(), o2 = b2.oriented();
    ReduceResult r1 = reduce_tau(HalfPlanePoint(o1.w2 / o1.w1));
    ReduceResult r2 = reduce_tau(HalfPlanePoint(o2.w2 / o2.w1));
    if (std::abs(r1.tau.value() - r2.tau.value()) > detail::kBoundaryTol) return std::nullopt;
    // gamma = (a b; c d) acting on tau = w2/w1 transports the frame to
    // (c*w2 + d*w1, a*w2 + b*w1), which spans the same lattice.
    auto frame1 = static_cast<double>(r1.gamma.c) * o1.w2 + static_cast<double>(r1.gamma.d) * o1.w1;
    auto frame2 = static_cast<double>(r2.gamma.c) * o2.w2 + static_cast<double>(r2.gamma.d) * o2.w1;
    return frame1 / frame2;
}

/// gamma with gamma . tau1 = tau2 when the two points lie in the same
/// SL2(Z) orbit, composed from the two reduction witnesses.
inline std::optional<IntegerMatrix2> elliptic_isomorphic(const HalfPlanePoint& tau1,
                                                         const HalfPlanePoint& tau2) {
    ReduceResult r1 = reduce_tau(tau1);
    ReduceResult r2 = reduce_tau(tau2);
    if (std::abs(r1.tau.value() - r2.tau.value()) > detail::kBoundaryTol) return std::nullopt;
    return (r2.gamma.inverse() * r1.gamma).sign_normalized();
}

namespace detail {
inline const std::complex<double> kCornerI{0.0, 1.0};
inline const std::complex<double> kCornerRho{-0.5, 0.8660254037844386}; // (-1 + i sqrt 3)/2
}

/// Order of the SL2(Z) stabilizer of tau: 4 on the orbit of i, 6 on the
/// orbit of the rho corner, 2 otherwise (the generic {+-1}).
inline int stabilizer_order(const HalfPlanePoint& tau) {
    std::complex<double> t = reduce_tau(tau).tau.value();
    if (std::abs(t - detail::kCornerI) <= detail::kBoundaryTol) return 4;
    if (std::abs(t - detail::kCornerRho) <= detail::kBoundaryTol) return 6;
    return 2;
}

/// Aut(C; x0) of the elliptic curve C/(Z + Z tau) is isomorphic to the
/// stabilizer of tau.
inline int aut_group_order(const HalfPlanePoint& tau) { return stabilizer_order(tau); }

enum class Sl2Type { Elliptic, Parabolic, Hyperbolic };

struct Sl2Classification {
    Sl2Type type;
    // Elliptic: the unique fixed point in H.
    std::complex<double> fixed_in_h{0.0, 0.0};
    // Parabolic: fixed_real_1 only; Hyperbolic: both. Points of P^1(R).
    ProjectivePoint<std::complex<double>> fixed_real_1, fixed_real_2;
};

/// Trace classification of a non-scalar SL2(Z) element: |tr| < 2 elliptic
/// (one fixed point in H, finite order), |tr| = 2 parabolic (one real
/// fixed point), |tr| > 2 hyperbolic (two real fixed points).
inline Sl2Classification classify_sl2(const IntegerMatrix2& m) {
    using P = ProjectivePoint<std::complex<double>>;
    if (m.is_scalar()) throw ScalarMatrix("classify_sl2: scalar matrix has no classification");
    long long tr = m.trace();
    double a = double(m.a), b = double(m.b), c = double(m.c), d = double(m.d);
    Sl2Classification out{};
    if (std::llabs(tr) < 2) {
        // fixed points solve c t^2 + (d - a) t - b = 0; c != 0 for integer
        // matrices with |tr| < 2
        out.type = Sl2Type::Elliptic;
        double disc = 4.0 - double(tr) * double(tr);
        out.fixed_in_h = {(a - d) / (2.0 * c), std::sqrt(disc) / (2.0 * std::abs(c))};
        return out;
    }
    if (std::llabs(tr) == 2) {
        out.type = Sl2Type::Parabolic;
        out.fixed_real_1 = (m.c == 0) ? P::infinity() : P::finite({(a - d) / (2.0 * c), 0.0});
        return out;
    }
    out.type = Sl2Type::Hyperbolic;
    if (m.c == 0) {
        out.fixed_real_1 = P::infinity();
        out.fixed_real_2 = P::finite({b / (d - a), 0.0});
    } else {
        double s = std::sqrt(double(tr) * double(tr) - 4.0);
        out.fixed_real_1 = P::finite({(a - d + s) / (2.0 * c), 0.0});
        out.fixed_real_2 = P::finite({(a - d - s) / (2.0 * c), 0.0});
    }
    return out;
}

/// Order of m in SL2(Z) if finite (it then divides 12), or 0 if infinite.
inline int sl2_element_order(const IntegerMatrix2& m) {
    IntegerMatrix2 p = m;
    for (int k = 1; k <= 12; ++k) {
        if (p == IntegerMatrix2::identity()) return k;
        if (std::llabs(p.trace()) > 2) return 0; // hyperbolic powers never return
        p = p * m;
    }
    return 0;
}

} // namespace moduli
