#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <limits>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "elliptic.hpp"
#include "errors.hpp"

namespace moduli {

using BigInt = boost::multiprecision::cpp_int;

/// Truncated Laurent series in q with exact integer coefficients.
/// Coefficients are stored for the exponents first() ... last(); the series
/// is known exactly through last() and unknown beyond it, and every ring
/// operation tracks that truncation boundary.
class QSeries {
public:
    QSeries(long first_exponent, std::vector<BigInt> coeffs)
        : first_(first_exponent), c_(std::move(coeffs)) {
        if (c_.empty()) throw error("QSeries: empty coefficient range");
    }

    long first() const { return first_; }
    long last() const { return first_ + static_cast<long>(c_.size()) - 1; }
    long truncation() const { return static_cast<long>(c_.size()) - 1; } // the spec's N

    const BigInt& coeff(long e) const {
        static const BigInt zero{0};
        if (e < first_) return zero;
        if (e > last()) throw error("QSeries: coefficient beyond truncation order");
        return c_[static_cast<std::size_t>(e - first_)];
    }

    // lowest exponent with nonzero coefficient, or last()+1 for the zero series
    long lowest_nonzero() const {
        for (long e = first_; e <= last(); ++e)
            if (coeff(e) != 0) return e;
        return last() + 1;
    }

    friend QSeries operator+(const QSeries& x, const QSeries& y) {
        long first = std::min(x.first_, y.first_);
        long last = std::min(x.last(), y.last());
        if (last < first) throw error("QSeries: sum has empty known range");
        std::vector<BigInt> c(static_cast<std::size_t>(last - first + 1));
        for (long e = first; e <= last; ++e)
            c[static_cast<std::size_t>(e - first)] = x.safe_coeff(e) + y.safe_coeff(e);
        return QSeries(first, std::move(c));
    }
    friend QSeries operator-(const QSeries& x, const QSeries& y) { return x + (-y); }
    friend QSeries operator-(const QSeries& x) {
        std::vector<BigInt> c(x.c_);
        for (auto& v : c) v = -v;
        return QSeries(x.first_, std::move(c));
    }

    friend QSeries operator*(const QSeries& x, const QSeries& y) {
        long first = x.first_ + y.first_;
        long last = std::min(x.last() + y.first_, y.last() + x.first_);
        std::vector<BigInt> c(static_cast<std::size_t>(last - first + 1));
        for (long i = x.first_; i <= x.last(); ++i) {
            if (x.coeff(i) == 0) continue;
            long jmax = std::min(y.last(), last - i);
            for (long j = y.first_; j <= jmax; ++j)
                c[static_cast<std::size_t>(i + j - first)] += x.coeff(i) * y.coeff(j);
        }
        return QSeries(first, std::move(c));
    }

    QSeries pow(unsigned n) const {
        if (n == 0) return QSeries(0, std::vector<BigInt>{BigInt(1)});
        // binary powering; truncation shrinks exactly as repeated * would
        QSeries r = *this;
        QSeries b = *this;
        bool started = false;
        unsigned e = n;
        while (true) {
            if (e & 1u) {
                r = started ? r * b : b;
                started = true;
            }
            e >>= 1u;
            if (e == 0) break;
            b = b * b;
        }
        return r;
    }

    /// Division by a series whose lowest nonzero coefficient is a unit
    /// (+-1); the quotient has exact integer coefficients.
    friend QSeries operator/(const QSeries& x, const QSeries& y) {
        long e0 = y.lowest_nonzero();
        if (e0 > y.last()) throw NotAUnit("QSeries: division by zero series");
        const BigInt& u0 = y.coeff(e0);
        if (u0 != 1 && u0 != -1)
            throw NotAUnit("QSeries: divisor leading coefficient must be a unit");
        // u = y shifted to start at exponent 0, known through order ord_u
        long ord_u = y.last() - e0;
        long q_first = x.first_ - e0;
        long q_last = std::min(x.last() - e0, q_first + ord_u);
        if (q_last < q_first) throw error("QSeries: quotient has empty known range");
        // invert the unit u: v with u*v = 1, v_k = -u0 * sum_{j>=1} u_j v_{k-j}
        long ord = q_last - q_first;
        std::vector<BigInt> v(static_cast<std::size_t>(ord + 1));
        v[0] = u0; // u0 is its own inverse
        for (long k = 1; k <= ord; ++k) {
            BigInt s = 0;
            for (long j = 1; j <= k; ++j) s += y.coeff(e0 + j) * v[static_cast<std::size_t>(k - j)];
            v[static_cast<std::size_t>(k)] = -u0 * s;
        }
        QSeries vson(0, std::move(v));
        QSeries shifted_x(x.first_ - e0, x.c_);
        return shifted_x * vson;
    }

    friend bool operator==(const QSeries& x, const QSeries& y) {
        long lo = std::min(x.first_, y.first_), hi = std::max(x.last(), y.last());
        if (x.last() != y.last()) return false;
        for (long e = lo; e <= hi; ++e)
            if (x.safe_coeff(e) != y.safe_coeff(e)) return false;
        return true;
    }

private:
    BigInt safe_coeff(long e) const { return (e < first_ || e > last()) ? BigInt(0) : coeff(e); }

    static QSeries one_like(const QSeries& s, unsigned) {
        return QSeries(0, std::vector<BigInt>{BigInt(1)});
    }

    long first_;
    std::vector<BigInt> c_;
};

namespace detail {

inline BigInt sigma_divisor_power(long n, int k) {
    BigInt s = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) {
            BigInt p = 1;
            for (int i = 0; i < k; ++i) p *= d;
            s += p;
        }
    return s;
}

template <class Key, class Maker>
const QSeries& memo_series(std::map<Key, QSeries>& cache, std::mutex& mu, const Key& key,
                           Maker make) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make()).first;
    return it->second;
}

} // namespace detail

/// Eisenstein series E4 = 1 + 240 sum sigma_3(n) q^n or
/// E6 = 1 - 504 sum sigma_5(n) q^n, through exponent N.
inline QSeries eisenstein(int k, long N) {
    if (k != 4 && k != 6) throw error("eisenstein: weight must be 4 or 6");
    static std::map<std::pair<int, long>, QSeries> cache;
    static std::mutex mu;
    return detail::memo_series(cache, mu, std::make_pair(k, N), [&] {
        std::vector<BigInt> c(static_cast<std::size_t>(N + 1));
        c[0] = 1;
        long mult = (k == 4) ? 240 : -504;
        int power = (k == 4) ? 3 : 5;
        for (long n = 1; n <= N; ++n)
            c[static_cast<std::size_t>(n)] = mult * detail::sigma_divisor_power(n, power);
        return QSeries(0, std::move(c));
    });
}

enum class DeltaNormalization { arithmetic, paper };

struct DeltaSeries {
    QSeries series; // exact integer coefficients q - 24 q^2 + ...
    DeltaNormalization normalization;
    // In paper normalization the series is multiplied by the symbolic
    // prefactor (2 pi)^12, which is never folded into the coefficients.
    bool symbolic_two_pi_12() const { return normalization == DeltaNormalization::paper; }
};

/// The discriminant cusp form q prod (1 - q^n)^24 through exponent N.
inline DeltaSeries delta_series(long N, DeltaNormalization normalization = DeltaNormalization::arithmetic) {
    if (N < 1) throw error("delta_series: N must be >= 1");
    static std::map<long, QSeries> cache;
    static std::mutex mu;
    const QSeries& s = detail::memo_series(cache, mu, N, [&] {
        // eta-like product prod_{n <= N-1} (1 - q^n) through exponent N - 1
        long M = N - 1;
        std::vector<BigInt> p(static_cast<std::size_t>(M + 1));
        p[0] = 1;
        QSeries prod(0, std::move(p));
        for (long n = 1; n <= M; ++n) {
            std::vector<BigInt> f(static_cast<std::size_t>(M + 1));
            f[0] = 1;
            if (n <= M) f[static_cast<std::size_t>(n)] = -1;
            prod = prod * QSeries(0, std::move(f));
        }
        QSeries p24 = prod.pow(24);
        // shift by q
        std::vector<BigInt> c;
        c.reserve(static_cast<std::size_t>(p24.last() + 2));
        for (long e = 0; e <= p24.last(); ++e) c.push_back(p24.coeff(e));
        return QSeries(1, std::move(c));
    });
    return DeltaSeries{s, normalization};
}

/// j = E4^3 / Delta, a Laurent series with lead -1:
/// 1/q + 744 + 196884 q + 21493760 q^2 + ...
inline QSeries j_series(long N) {
    if (N < 0) throw error("j_series: N must be >= 0");
    static std::map<long, QSeries> cache;
    static std::mutex mu;
    return detail::memo_series(cache, mu, N, [&] {
        long M = N + 1;
        QSeries e4 = eisenstein(4, M);
        QSeries num = e4.pow(3);                 // known through M
        QSeries den = delta_series(M + 1).series; // known through M + 1
        QSeries q = num / den;                   // known through N, lead -1
        // trim to exactly [-1, N]
        std::vector<BigInt> c;
        c.reserve(static_cast<std::size_t>(N + 2));
        for (long e = -1; e <= N; ++e) c.push_back(q.coeff(e));
        return QSeries(-1, std::move(c));
    });
}

struct EvalResult {
    std::complex<double> value;
    // Tail estimate: the last retained term extended geometrically at the
    // locally observed coefficient growth rate. When the coefficients stop
    // growing this is |last retained term| * |q| / (1 - |q|); the growth
    // correction keeps the estimate an upper bound for series like j whose
    // coefficients still grow at the truncation (their growth ratios
    // decrease in n, so the last observed ratio dominates the tail).
    double error_bound;
};

/// Numeric evaluation of the series at q = e^{2 pi i tau}.
inline EvalResult evaluate(const QSeries& series, const HalfPlanePoint& tau) {
    std::complex<double> q = std::exp(std::complex<double>(0.0, 2.0 * M_PI) * tau.value());
    double aq = std::abs(q);
    if (aq >= 1.0) throw DivergentTail("evaluate: |q| >= 1");
    // Horner from the top exponent down to first()
    std::complex<double> acc{0.0, 0.0};
    for (long e = series.last(); e >= series.first(); --e)
        acc = acc * q + series.coeff(e).convert_to<double>();
    std::complex<double> value = acc * std::pow(q, static_cast<double>(series.first()));
    double last_term = 0.0, peak_term = 0.0;
    {
        double p = std::pow(aq, static_cast<double>(series.first()));
        for (long e = series.first(); e <= series.last(); ++e) {
            double t = std::abs(series.coeff(e).convert_to<double>()) * p;
            peak_term = std::max(peak_term, t);
            if (e == series.last()) last_term = t;
            p *= aq;
        }
    }
    double growth = 1.0;
    int window = 0;
    for (long e = series.last(); e > series.first() && window < 8; --e) {
        double hi = std::abs(series.coeff(e).convert_to<double>());
        double lo = std::abs(series.coeff(e - 1).convert_to<double>());
        if (hi > 0.0 && lo > 0.0) {
            growth = std::max(growth, hi / lo);
            ++window;
        }
    }
    double r = aq * growth;
    double tail = r < 1.0 ? last_term * r / (1.0 - r) : std::numeric_limits<double>::infinity();
    // summation rounding: the cancellation floor is set by the largest term
    double rounding = 4.0 * peak_term * static_cast<double>(series.truncation() + 2) *
                      std::numeric_limits<double>::epsilon();
    return {value, tail + rounding};
}

/// j(tau): reduce into the fundamental domain first, then evaluate the
/// q-expansion with adaptive truncation until the tail estimate is below
/// 1e-9.
inline std::complex<double> j_invariant(const HalfPlanePoint& tau) {
    ReduceResult red = reduce_tau(tau);
    EvalResult ev{};
    for (long N = 32; N <= 256; N *= 2) {
        ev = evaluate(j_series(N), red.tau);
        if (ev.error_bound < 1e-9) return ev.value;
    }
    return ev.value; // after reduction |q| <= e^{-pi sqrt 3}; this is unreachable
}

enum class FormName { E4, E6, Delta, J };

namespace detail {

inline QSeries form_series(FormName f, long N) {
    switch (f) {
        case FormName::E4: return eisenstein(4, N);
        case FormName::E6: return eisenstein(6, N);
        case FormName::Delta: return delta_series(N).series;
        default: return j_series(N);
    }
}

inline int form_weight(FormName f) {
    switch (f) {
        case FormName::E4: return 4;
        case FormName::E6: return 6;
        case FormName::Delta: return 12;
        default: return 0;
    }
}

// evaluate the form's q-expansion directly at tau, doubling the truncation
// until the tail bound certifies `target`; DivergentTail if 256 terms are
// not enough (Im tau too small for a certified direct evaluation)
inline EvalResult evaluate_certified(FormName f, const HalfPlanePoint& tau, double target) {
    EvalResult ev{};
    for (long N = 32; N <= 256; N *= 2) {
        ev = evaluate(form_series(f, N), tau);
        if (ev.error_bound <= target) return ev;
    }
    throw DivergentTail("weight_check: tail bound not certifiable at truncation 256");
}

} // namespace detail

/// Residual |f(gamma tau) - (c tau + d)^k f(tau)| of the weight-k
/// functional equation, with both values taken directly from the
/// q-expansions (no reduction), so a small residual is an independent
/// numeric certificate.
inline double weight_check(FormName form, int k, const IntegerMatrix2& gamma,
                           const HalfPlanePoint& tau) {
    if (k != detail::form_weight(form))
        throw error("weight_check: weight does not match the form");
    std::complex<double> gt = gamma.apply(tau.value());
    if (!(gt.imag() > 0.0)) throw DivergentTail("weight_check: gamma tau left the upper half plane");
    const double target = 1e-7;
    EvalResult lhs = detail::evaluate_certified(form, HalfPlanePoint(gt), target);
    EvalResult rhs = detail::evaluate_certified(form, tau, target);
    std::complex<double> cz = static_cast<double>(gamma.c) * tau.value() + static_cast<double>(gamma.d);
    std::complex<double> factor = std::pow(cz, k);
    if (std::abs(factor) * rhs.error_bound > target)
        throw DivergentTail("weight_check: automorphy factor amplifies the tail bound past certification");
    return std::abs(lhs.value - factor * rhs.value);
}

} // namespace moduli
