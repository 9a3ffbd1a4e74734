#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace moduli {

using Rational = boost::multiprecision::cpp_rational;

/// Complex number with exact rational real and imaginary parts.
/// Arithmetic is exact; equality is exact. Used for the rational
/// ("--exact") mode of the genus-0 operations.
struct RationalComplex {
    Rational re{0};
    Rational im{0};

    RationalComplex() = default;
    RationalComplex(Rational r) : re(std::move(r)) {}
    RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    RationalComplex(int r) : re(r) {}
    RationalComplex(int r, int i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend RationalComplex operator+(const RationalComplex& x, const RationalComplex& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend RationalComplex operator-(const RationalComplex& x, const RationalComplex& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend RationalComplex operator-(const RationalComplex& x) { return {-x.re, -x.im}; }
    friend RationalComplex operator*(const RationalComplex& x, const RationalComplex& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend RationalComplex operator/(const RationalComplex& x, const RationalComplex& y) {
        Rational n = y.re * y.re + y.im * y.im;
        if (n == 0) throw error("RationalComplex: division by zero");
        return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
    }
    friend bool operator==(const RationalComplex& x, const RationalComplex& y) {
        return x.re == y.re && x.im == y.im;
    }
    friend bool operator!=(const RationalComplex& x, const RationalComplex& y) { return !(x == y); }

    std::string str() const {
        std::ostringstream os;
        os << re;
        if (im != 0) os << (im > 0 ? "+" : "") << im << "i";
        return os.str();
    }
};

// Field traits abstract the two arithmetic modes: exact rationals compare
// exactly, doubles compare with relative tolerance 1e-9.
template <class C>
struct FieldTraits;

template <>
struct FieldTraits<std::complex<double>> {
    using C = std::complex<double>;
    static constexpr bool exact = false;
    static constexpr double rel_tol = 1e-9;

    static bool equal(const C& x, const C& y) {
        double scale = std::max({1.0, std::abs(x), std::abs(y)});
        return std::abs(x - y) <= rel_tol * scale;
    }
    // zero test for a derived quantity whose natural magnitude is `scale`
    static bool is_zero(const C& x, double scale = 1.0) {
        return std::abs(x) <= rel_tol * std::max(1.0, scale);
    }
    static double magnitude(const C& x) { return std::abs(x); }
    static C from_int(int v) { return C(double(v), 0.0); }
};

template <>
struct FieldTraits<RationalComplex> {
    using C = RationalComplex;
    static constexpr bool exact = true;

    static bool equal(const C& x, const C& y) { return x == y; }
    static bool is_zero(const C& x, double = 1.0) { return x.is_zero(); }
    static double magnitude(const C& x) {
        double r = x.re.convert_to<double>(), i = x.im.convert_to<double>();
        return std::sqrt(r * r + i * i);
    }
    static C from_int(int v) { return C(v); }
};

} // namespace moduli
