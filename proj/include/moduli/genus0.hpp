#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "projective.hpp"

namespace moduli {

/// Ordered n-tuple of pairwise-distinct points of P^1.
template <class C>
struct PointedConfig {
    std::vector<ProjectivePoint<C>> points;

    explicit PointedConfig(std::vector<ProjectivePoint<C>> pts) : points(std::move(pts)) {
        if (points.empty()) throw error("PointedConfig: n must be >= 1");
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (points[i] == points[j])
                    throw CoincidentPoints("PointedConfig: marked points must be pairwise distinct");
    }

    std::size_t n() const { return points.size(); }
};

/// The normalized representative (P^1; 0, 1, inf, y_1, ..., y_{n-3}) of an
/// isomorphism class of n-pointed genus-0 curves. Coordinates lie in
/// (C - {0,1})^{n-3} minus the diagonals.
template <class C>
struct NormalizedConfig {
    std::size_t n;
    std::vector<C> coords; // y_1 ... y_{n-3}

    NormalizedConfig(std::size_t n_, std::vector<C> ys) : n(n_), coords(std::move(ys)) {
        using FT = FieldTraits<C>;
        if (n < 3 || coords.size() != n - 3)
            throw error("NormalizedConfig: need n >= 3 and n-3 coordinates");
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (FT::equal(coords[i], FT::from_int(0)) || FT::equal(coords[i], FT::from_int(1)))
                throw BadModuliPoint("NormalizedConfig: coordinate in {0,1}");
            for (std::size_t j = i + 1; j < coords.size(); ++j)
                if (FT::equal(coords[i], coords[j]))
                    throw BadModuliPoint("NormalizedConfig: coordinates on a diagonal");
        }
    }

    friend bool operator==(const NormalizedConfig& x, const NormalizedConfig& y) {
        if (x.n != y.n) return false;
        for (std::size_t i = 0; i < x.coords.size(); ++i)
            if (!FieldTraits<C>::equal(x.coords[i], y.coords[i])) return false;
        return true;
    }
    friend bool operator!=(const NormalizedConfig& x, const NormalizedConfig& y) { return !(x == y); }
};

/// Move the first three marked points to (0, 1, inf) and return the images
/// of the rest. This is the unique normalized representative of the
/// isomorphism class of the configuration.
template <class C>
NormalizedConfig<C> normalize(const PointedConfig<C>& config) {
    if (config.n() < 3) throw error("normalize: need n >= 3");
    auto m = moebius_sending_to_standard(config.points[0], config.points[1], config.points[2]);
    std::vector<C> ys;
    ys.reserve(config.n() - 3);
    for (std::size_t i = 3; i < config.n(); ++i) {
        auto img = apply_moebius(m, config.points[i]);
        if (img.is_infinity())
            throw CoincidentPoints("normalize: marked point collides with the third");
        ys.push_back(img.value());
    }
    return NormalizedConfig<C>(config.n(), std::move(ys));
}

template <class C>
bool configs_isomorphic(const PointedConfig<C>& c1, const PointedConfig<C>& c2) {
    if (c1.n() != c2.n()) return false;
    return normalize(c1) == normalize(c2);
}

/// Permutation of {0, ..., n-1} given by its images: sigma maps slot i to
/// perm[i]. Composition convention: compose(s, t)[i] = t[s[i]], so that
/// sigma_action(compose(s, t), c) == sigma_action(s, sigma_action(t, c)).
using Permutation = std::vector<std::size_t>;

inline bool is_permutation(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    for (auto v : p) {
        if (v >= p.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

inline Permutation compose(const Permutation& s, const Permutation& t) {
    Permutation r(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) r[i] = t[s[i]];
    return r;
}

/// Relabel the marked points of the normalized configuration by sigma and
/// renormalize: (x_1,...,x_n) -> (x_sigma(1),...,x_sigma(n)).
template <class C>
NormalizedConfig<C> sigma_action(const Permutation& perm, const NormalizedConfig<C>& config) {
    using FT = FieldTraits<C>;
    using P = ProjectivePoint<C>;
    if (perm.size() != config.n || !is_permutation(perm))
        throw error("sigma_action: not a permutation of the marked points");
    std::vector<P> pts;
    pts.reserve(config.n);
    pts.push_back(P::finite(FT::from_int(0)));
    pts.push_back(P::finite(FT::from_int(1)));
    pts.push_back(P::infinity());
    for (const auto& y : config.coords) pts.push_back(P::finite(y));
    std::vector<P> permuted(config.n);
    for (std::size_t i = 0; i < config.n; ++i) permuted[i] = pts[perm[i]];
    return normalize(PointedConfig<C>(std::move(permuted)));
}

/// Orbit of the M_{0,4} coordinate under all 24 relabelings; the result is
/// the classical cross-ratio orbit {l, 1/l, 1-l, 1/(1-l), l/(l-1), (l-1)/l}
/// after deduplication, so its size is 6, 3, 2 or 1.
template <class C>
std::vector<C> cross_ratio_orbit(const C& lambda) {
    using FT = FieldTraits<C>;
    if (FT::equal(lambda, FT::from_int(0)) || FT::equal(lambda, FT::from_int(1)))
        throw BadModuliPoint("cross_ratio_orbit: lambda in {0,1}");
    NormalizedConfig<C> base(4, {lambda});
    std::vector<C> orbit;
    Permutation perm{0, 1, 2, 3};
    do {
        C y = sigma_action(perm, base).coords[0];
        bool fresh = true;
        for (const auto& seen : orbit)
            if (FT::equal(seen, y)) { fresh = false; break; }
        if (fresh) orbit.push_back(y);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return orbit;
}

} // namespace moduli
