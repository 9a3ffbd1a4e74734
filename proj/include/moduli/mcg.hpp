#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace moduli {

using McgInt = boost::multiprecision::cpp_int;

/// Element of H_1 of the closed genus-g surface in the symplectic basis
/// a_1..a_g, b_1..b_g, with intersection pairing <a_i, b_i> = +1.
struct HomologyClass {
    int genus;
    std::vector<McgInt> v; // length 2g

    HomologyClass(int g, std::vector<McgInt> vv) : genus(g), v(std::move(vv)) {
        if (g < 1 || v.size() != static_cast<std::size_t>(2 * g))
            throw BadGenus("HomologyClass: vector length must be 2g");
    }
    HomologyClass(int g, std::initializer_list<long long> vv) : genus(g), v(vv.begin(), vv.end()) {
        if (g < 1 || v.size() != static_cast<std::size_t>(2 * g))
            throw BadGenus("HomologyClass: vector length must be 2g");
    }

    bool is_zero() const {
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }

    friend HomologyClass operator+(const HomologyClass& x, const HomologyClass& y) {
        HomologyClass r = x;
        for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] += y.v[i];
        return r;
    }
    friend HomologyClass operator-(const HomologyClass& x, const HomologyClass& y) {
        HomologyClass r = x;
        for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] -= y.v[i];
        return r;
    }
    friend bool operator==(const HomologyClass& x, const HomologyClass& y) {
        return x.genus == y.genus && x.v == y.v;
    }

    static HomologyClass basis_a(int g, int i) { // a_i, 1-based
        std::vector<McgInt> v(2 * g, 0);
        v[static_cast<std::size_t>(i - 1)] = 1;
        return {g, std::move(v)};
    }
    static HomologyClass basis_b(int g, int i) { // b_i, 1-based
        std::vector<McgInt> v(2 * g, 0);
        v[static_cast<std::size_t>(g + i - 1)] = 1;
        return {g, std::move(v)};
    }
};

/// <x, y> = x^T J y with J the standard skew form.
inline McgInt intersection(const HomologyClass& x, const HomologyClass& y) {
    if (x.genus != y.genus) throw BadGenus("intersection: genus mismatch");
    int g = x.genus;
    McgInt s = 0;
    for (int i = 0; i < g; ++i) {
        s += x.v[static_cast<std::size_t>(i)] * y.v[static_cast<std::size_t>(g + i)];
        s -= x.v[static_cast<std::size_t>(g + i)] * y.v[static_cast<std::size_t>(i)];
    }
    return s;
}

/// 2g x 2g integer matrix preserving the intersection form exactly.
class SymplecticMatrix {
public:
    static SymplecticMatrix identity(int g) {
        SymplecticMatrix m(g);
        for (int i = 0; i < 2 * g; ++i) m.at(i, i) = 1;
        return m;
    }

    int genus() const { return g_; }
    int dim() const { return 2 * g_; }
    McgInt& at(int i, int j) { return m_[static_cast<std::size_t>(i * dim() + j)]; }
    const McgInt& at(int i, int j) const { return m_[static_cast<std::size_t>(i * dim() + j)]; }

    friend SymplecticMatrix operator*(const SymplecticMatrix& x, const SymplecticMatrix& y) {
        if (x.g_ != y.g_) throw BadGenus("SymplecticMatrix: genus mismatch");
        SymplecticMatrix r(x.g_);
        int n = x.dim();
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const McgInt& xik = x.at(i, k);
                if (xik == 0) continue;
                for (int j = 0; j < n; ++j) r.at(i, j) += xik * y.at(k, j);
            }
        return r;
    }
    friend bool operator==(const SymplecticMatrix& x, const SymplecticMatrix& y) {
        return x.g_ == y.g_ && x.m_ == y.m_;
    }
    friend bool operator!=(const SymplecticMatrix& x, const SymplecticMatrix& y) { return !(x == y); }

    HomologyClass apply(const HomologyClass& x) const {
        if (x.genus != g_) throw BadGenus("SymplecticMatrix: genus mismatch");
        std::vector<McgInt> r(static_cast<std::size_t>(dim()), 0);
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j) r[static_cast<std::size_t>(i)] += at(i, j) * x.v[static_cast<std::size_t>(j)];
        return {g_, std::move(r)};
    }

    SymplecticMatrix transpose() const {
        SymplecticMatrix r(g_);
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j) r.at(j, i) = at(i, j);
        return r;
    }

    // M^T J M = J, checked exactly
    bool is_symplectic() const {
        int g = g_, n = dim();
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                McgInt s = 0; // (M^T J M)_{pq} = sum_i M_{ip} (J M)_{iq}
                for (int i = 0; i < g; ++i)
                    s += at(i, p) * at(g + i, q) - at(g + i, p) * at(i, q);
                McgInt want = 0;
                if (q == p + g) want = 1;
                if (p == q + g) want = -1;
                if (s != want) return false;
            }
        return true;
    }

    // for symplectic M the inverse is -J M^T J, integral and exact
    SymplecticMatrix inverse() const {
        int g = g_, n = dim();
        SymplecticMatrix t = transpose();
        // jt = J t: row i is row g+i of t for i < g, minus row i-g for i >= g
        SymplecticMatrix jt(g_);
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < n; ++j) jt.at(i, j) = t.at(g + i, j);
        for (int i = g; i < n; ++i)
            for (int j = 0; j < n; ++j) jt.at(i, j) = -t.at(i - g, j);
        // r = -(jt J): column j is jt column j+g for j < g, minus column j-g after
        SymplecticMatrix r(g_);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < g; ++j) r.at(i, j) = jt.at(i, j + g);
            for (int j = g; j < n; ++j) r.at(i, j) = -jt.at(i, j - g);
        }
        return r;
    }

private:
    explicit SymplecticMatrix(int g) : g_(g), m_(static_cast<std::size_t>(4 * g * g), 0) {
        if (g < 1) throw BadGenus("SymplecticMatrix: genus must be >= 1");
    }

    friend SymplecticMatrix transvection(const HomologyClass&);

    int g_;
    std::vector<McgInt> m_;
};

/// Homological action of the Dehn twist about a curve with class a:
/// the symplectic transvection x -> x + <x, a> a.
inline SymplecticMatrix transvection(const HomologyClass& a) {
    if (a.is_zero()) throw ZeroClass("transvection: zero class");
    int g = a.genus, n = 2 * g;
    SymplecticMatrix m = SymplecticMatrix::identity(g);
    // M = I + a (J a)^T; (J a)_j = a_{j+g} for j < g, -a_{j-g} otherwise
    std::vector<McgInt> ja(static_cast<std::size_t>(n));
    for (int j = 0; j < g; ++j) ja[static_cast<std::size_t>(j)] = a.v[static_cast<std::size_t>(j + g)];
    for (int j = g; j < n; ++j) ja[static_cast<std::size_t>(j)] = -a.v[static_cast<std::size_t>(j - g)];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) += a.v[static_cast<std::size_t>(i)] * ja[static_cast<std::size_t>(j)];
    return m;
}

/// Braid relation T_a T_b T_a = T_b T_a T_b for classes meeting once.
inline bool verify_braid(const HomologyClass& a, const HomologyClass& b) {
    McgInt p = intersection(a, b);
    if (p != 1 && p != -1)
        throw BadIntersection("verify_braid: requires |<a,b>| = 1");
    SymplecticMatrix ta = transvection(a), tb = transvection(b);
    return ta * tb * ta == tb * ta * tb;
}

/// Genus-1, one boundary component, capped: (T_a T_b)^6 = identity in
/// Sp_1(Z) = SL_2(Z), since the boundary twist dies in the closed surface.
inline bool verify_chain_one_boundary() {
    auto a = HomologyClass::basis_a(1, 1), b = HomologyClass::basis_b(1, 1);
    SymplecticMatrix p = transvection(a) * transvection(b);
    SymplecticMatrix acc = SymplecticMatrix::identity(1);
    for (int k = 0; k < 6; ++k) acc = acc * p;
    return acc == SymplecticMatrix::identity(1);
}

/// Chain classes of the two-boundary relation in the capped genus-2
/// surface: c1 = a1, c2 = b1 + b2, c3 = a2. Both boundary twists act as
/// the transvection along t = a1 - a2 (the class the exact matrix
/// computation certifies; see the fixture test).
inline bool verify_chain_two_boundary() {
    auto a1 = HomologyClass::basis_a(2, 1), a2 = HomologyClass::basis_a(2, 2);
    auto b1 = HomologyClass::basis_b(2, 1), b2 = HomologyClass::basis_b(2, 2);
    HomologyClass c1 = a1, c2 = b1 + b2, c3 = a2;
    HomologyClass t = a1 - a2;
    SymplecticMatrix p = transvection(c1) * transvection(c2) * transvection(c3);
    SymplecticMatrix lhs = SymplecticMatrix::identity(2);
    for (int k = 0; k < 4; ++k) lhs = lhs * p;
    SymplecticMatrix tt = transvection(t);
    return lhs == tt * tt;
}

/// Lantern relation on the seven classes of an embedded lantern in the
/// genus-3 surface: x0 x1 x2 x3 = x12 x23 x31 with x0 = a1+a2+a3,
/// x_i = a_i, x_ij = a_i + a_j (all pairwise pairings vanish).
inline bool verify_lantern() {
    auto a1 = HomologyClass::basis_a(3, 1), a2 = HomologyClass::basis_a(3, 2),
         a3 = HomologyClass::basis_a(3, 3);
    HomologyClass x0 = a1 + a2 + a3;
    HomologyClass x12 = a1 + a2, x23 = a2 + a3, x31 = a3 + a1;
    SymplecticMatrix lhs = transvection(x0) * transvection(a1) * transvection(a2) * transvection(a3);
    SymplecticMatrix rhs = transvection(x12) * transvection(x23) * transvection(x31);
    return lhs == rhs;
}

/// t_{phi(A)} = phi t_A phi^{-1} in the symplectic image.
inline bool dehn_conjugation_check(const HomologyClass& a, const SymplecticMatrix& phi) {
    return transvection(phi.apply(a)) == phi * transvection(a) * phi.inverse();
}

struct RelationStep {
    std::string relation; // chain1 | chain2 | lantern
    std::string equation; // the induced equation on the generator class L
};

/// H_1 of the mapping class group as a relation ledger: all twists on
/// non-separating curves share one homology class L; each relation pins an
/// integer multiple of L, and the order is the gcd of those integers.
struct CyclicGroupReport {
    long long order; // 0 encodes the trivial group
    bool trivial;
    std::vector<RelationStep> derivation;
    std::string description;
};

inline CyclicGroupReport h1_mapping_class_group(int g) {
    if (g < 1) throw BadGenus("h1_mapping_class_group: genus must be >= 1");
    if (g == 1)
        return {12, false, {{"chain1", "12L = 0"}},
                "Z/12Z: the boundary twist of (ab)^6 = t is trivial in the closed torus"};
    if (g == 2)
        return {10, false, {{"chain2", "12L = 2L"}},
                "Z/10Z: gluing the two boundary components of (abc)^4 = t1 t2"};
    return {0, true, {{"chain2", "12L = 2L"}, {"lantern", "3L = 4L"}},
            "trivial: the embedded lantern forces L = 0"};
}

struct CitedValue {
    std::string value;
    std::string source;
};

/// Cohomology and Picard constants, pure lookup.
struct CitedTables {
    int g;
    CitedValue h2;       // H^2(MCG_g, Z)
    CitedValue pic_orb;  // orbifold Picard group of M_g
    CitedValue h2_rank;  // rank of H_2(MCG_g, Q)
    std::string generator_note;
};

inline CitedTables cited_tables(int g) {
    if (g < 1) throw BadGenus("cited_tables: genus must be >= 1");
    std::string cyc = g == 1 ? "Z/12Z" : g == 2 ? "Z/10Z" : "Z";
    int rank = g <= 2 ? 0 : 1;
    return {g,
            {cyc, "universal coefficients over the H_1 ledger + Harer's H_2 rank"},
            {cyc, "first Chern class embeds Pic_orb into H^2; generated by the Hodge class L"},
            {std::to_string(rank), "Harer (1983)"},
            g == 1 ? "Pic_orb M_1 = Z/12Z, generated by the Hodge class L"
                   : "cyclic, generated by the Hodge class L"};
}

/// A pants decomposition of the closed genus-g surface uses 3g-3 curves
/// and cuts it into 2g-2 pairs of pants.
inline std::pair<long long, long long> pants_counts(int g) {
    if (g < 2) throw BadGenus("pants_counts: genus must be >= 2");
    return {3LL * g - 3, 2LL * g - 2};
}

struct DimensionTable {
    bool stable;              // 2g - 2 + n > 0
    long long euler;          // 2 - 2g - n
    long long teich_dim_real; // 6g - 6 + 2n
    std::optional<long long> rep_dim; // 6g - 3, for n = 0 and g >= 2
};

inline DimensionTable dimension_table(int g, int n) {
    if (g < 0 || n < 0) throw BadGenus("dimension_table: g, n must be >= 0");
    DimensionTable t{};
    t.stable = 2 * g - 2 + n > 0;
    t.euler = 2LL - 2 * g - n;
    t.teich_dim_real = 6LL * g - 6 + 2LL * n;
    if (n == 0 && g >= 2) t.rep_dim = 6LL * g - 3;
    return t;
}

/// g(X) - 1 = d(g(Y) - 1) + sum over non-free orbits of (d - |O|)/2, for a
/// degree-d quotient X -> Y = G\X.
inline long long riemann_hurwitz(long long d, long long g_quotient,
                                 const std::vector<long long>& orbit_sizes) {
    if (d < 1) throw BadOrbitSize("riemann_hurwitz: group order must be >= 1");
    long long twice = 2 * d * (g_quotient - 1);
    for (long long o : orbit_sizes) {
        if (o < 1 || d % o != 0)
            throw BadOrbitSize("riemann_hurwitz: orbit size must divide the group order");
        twice += d - o;
    }
    if (twice % 2 != 0) throw NonIntegralGenus("riemann_hurwitz: genus is not integral");
    long long gx = twice / 2 + 1;
    if (gx < 0) throw NonIntegralGenus("riemann_hurwitz: genus is negative");
    return gx;
}

} // namespace moduli
