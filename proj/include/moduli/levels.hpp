#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "elliptic.hpp"
#include "errors.hpp"

namespace moduli {

enum class OrderMethod { enumerate, formula };

namespace detail {

inline void check_enumeration_modulus(int ell, int limit) {
    if (ell < 2) throw BadModulus("modulus must be >= 2");
    if (ell > limit) throw ModulusTooLarge("modulus beyond the enumeration range");
}

using Mat2Mod = std::array<int, 4>; // (a, b, c, d) mod ell

inline Mat2Mod mul_mod(const Mat2Mod& x, const Mat2Mod& y, int ell) {
    auto m = [ell](int v) { return ((v % ell) + ell) % ell; };
    return {m(x[0] * y[0] + x[1] * y[2]), m(x[0] * y[1] + x[1] * y[3]),
            m(x[2] * y[0] + x[3] * y[2]), m(x[2] * y[1] + x[3] * y[3])};
}

} // namespace detail

/// |SL_2(Z/ell)|. Enumeration counts all ell^4 matrices (supported for
/// ell <= 16); the formula ell^3 prod_{p | ell} (1 - p^-2) is a labeled
/// extrapolation that the tests pin against enumeration on the shared
/// range before it is trusted beyond it.
inline long long sl2_mod_order(int ell, OrderMethod method = OrderMethod::enumerate) {
    if (method == OrderMethod::formula) {
        if (ell < 2) throw BadModulus("sl2_mod_order: modulus must be >= 2");
        long long num = 1LL * ell * ell * ell, den = 1;
        int m = ell;
        for (int p = 2; p * p <= m; ++p) {
            if (m % p) continue;
            num *= 1LL * p * p - 1;
            den *= 1LL * p * p;
            while (m % p == 0) m /= p;
        }
        if (m > 1) {
            num *= 1LL * m * m - 1;
            den *= 1LL * m * m;
        }
        return num / den;
    }
    detail::check_enumeration_modulus(ell, 16);
    long long count = 0;
    for (int a = 0; a < ell; ++a)
        for (int b = 0; b < ell; ++b)
            for (int c = 0; c < ell; ++c)
                for (int d = 0; d < ell; ++d)
                    if (((a * d - b * c) % ell + ell) % ell == 1 % ell) ++count;
    return count;
}

/// |Sp_g(Z/ell)| by exhaustive enumeration of form-preserving matrices.
/// Feasible range: g = 1 with ell <= 16, and g = 2 with ell in {2, 3}.
inline long long sp_mod_order(int g, int ell) {
    if (g == 1) return sl2_mod_order(ell, OrderMethod::enumerate);
    if (g != 2 || (ell != 2 && ell != 3))
        throw ModulusTooLarge("sp_mod_order: enumeration supported for g=1 (ell<=16), g=2 (ell in {2,3})");
    // columns are the images of a1, a2, b1, b2; pairings must reproduce J
    const int n = ell * ell * ell * ell;
    auto vec = [ell](int code, int i) { // i-th coordinate of the coded vector
        for (int k = 0; k < i; ++k) code /= ell;
        return code % ell;
    };
    auto pr = [&](int u, int v) { // symplectic pairing mod ell
        int s = vec(u, 0) * vec(v, 2) + vec(u, 1) * vec(v, 3) - vec(u, 2) * vec(v, 0) -
                vec(u, 3) * vec(v, 1);
        return ((s % ell) + ell) % ell;
    };
    long long count = 0;
    for (int c1 = 0; c1 < n; ++c1)
        for (int c3 = 0; c3 < n; ++c3) {
            if (pr(c1, c3) != 1) continue;
            for (int c2 = 0; c2 < n; ++c2) {
                if (pr(c1, c2) != 0 || pr(c2, c3) != 0) continue;
                for (int c4 = 0; c4 < n; ++c4)
                    if (pr(c1, c4) == 0 && pr(c2, c4) == 1 && pr(c3, c4) == 0) ++count;
            }
        }
    return count;
}

/// Degree of the level cover M_1[ell] -> M_1: half the order of
/// SL_2(Z/ell), for ell > 2.
inline long long level_cover_degree(int ell) {
    if (ell <= 2) throw BadModulus("level_cover_degree: the half-order statement needs ell > 2");
    return sl2_mod_order(ell, OrderMethod::enumerate) / 2;
}

/// Do the reductions of S and T generate all of SL_2(Z/ell)? Computed by
/// closure; compared against the enumerated order.
inline bool reduction_surjectivity_check(int ell) {
    detail::check_enumeration_modulus(ell, 12);
    using detail::Mat2Mod;
    auto m = [ell](long long v) { return static_cast<int>(((v % ell) + ell) % ell); };
    Mat2Mod s{m(0), m(-1), m(1), m(0)}, t{m(1), m(1), m(0), m(1)};
    std::set<Mat2Mod> seen{ {m(1), m(0), m(0), m(1)} };
    std::vector<Mat2Mod> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
        Mat2Mod cur = queue.back();
        queue.pop_back();
        for (const Mat2Mod& gen : {s, t}) {
            Mat2Mod nxt = detail::mul_mod(cur, gen, ell);
            if (seen.insert(nxt).second) queue.push_back(nxt);
        }
    }
    return static_cast<long long>(seen.size()) == sl2_mod_order(ell, OrderMethod::enumerate);
}

/// Search SL_2(Z) for finite-order elements congruent to the identity
/// mod ell, with entries in [-bound, bound]. Minkowski's theorem says the
/// list is empty for ell >= 3; for ell = 2 it contains -I.
inline std::vector<IntegerMatrix2> torsion_search(int ell, int bound) {
    if (ell < 2) throw BadModulus("torsion_search: modulus must be >= 2");
    if (bound < 1 || bound > 100) throw BoundTooLarge("torsion_search: bound must be in [1, 100]");
    std::vector<IntegerMatrix2> found;
    auto congruent = [&](long long x, long long r) { return ((x - r) % ell) == 0; };
    for (long long a = -bound; a <= bound; ++a) {
        if (a == 0 || !congruent(a, 1)) continue;
        for (long long b = -bound; b <= bound; ++b) {
            if (!congruent(b, 0)) continue;
            for (long long c = -bound; c <= bound; ++c) {
                if (!congruent(c, 0)) continue;
                long long num = 1 + b * c;
                if (num % a != 0) continue;
                long long d = num / a;
                if (d < -bound || d > bound || !congruent(d, 1)) continue;
                IntegerMatrix2 m{a, b, c, d};
                if (m == IntegerMatrix2::identity()) continue;
                if (sl2_element_order(m) > 0) found.push_back(m);
            }
        }
    }
    return found;
}

} // namespace moduli
