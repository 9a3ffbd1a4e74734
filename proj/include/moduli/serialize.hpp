#pragma once

#include <complex>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "complex_field.hpp"
#include "projective.hpp"
#include "qseries.hpp"

namespace moduli {

/// Fixed-format float rendering: 17 significant digits, so that emitted
/// records are byte-identical across runs and round-trip exactly.
inline std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline std::string fmt_complex(const std::complex<double>& z) {
    return "[" + fmt_double(z.real()) + "," + fmt_double(z.imag()) + "]";
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += ch;
        }
    }
    return out;
}

// JSON forms of projective points: finite float points as [re, im],
// finite exact points as rational strings ["p/q", "r/s"], infinity as "inf".
inline std::string point_json(const ProjectivePoint<std::complex<double>>& p) {
    if (p.is_infinity()) return "\"inf\"";
    return fmt_complex(p.value());
}

inline std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline std::string point_json(const ProjectivePoint<RationalComplex>& p) {
    if (p.is_infinity()) return "\"inf\"";
    return "[\"" + rational_str(p.value().re) + "\",\"" + rational_str(p.value().im) + "\"]";
}

inline std::string value_json(const std::complex<double>& v) { return fmt_complex(v); }
inline std::string value_json(const RationalComplex& v) {
    return "[\"" + rational_str(v.re) + "\",\"" + rational_str(v.im) + "\"]";
}

/// Plain-text q-series exchange format: one line per retained term,
/// "exponent coefficient" in decimal, from the lowest exponent up.
/// Zero coefficients are written too; they carry the truncation order.
inline void write_series(std::ostream& os, const QSeries& s) {
    for (long e = s.first(); e <= s.last(); ++e) os << e << ' ' << s.coeff(e) << '\n';
}

inline QSeries read_series(std::istream& is) {
    long first = 0;
    bool started = false;
    long expect = 0;
    std::vector<BigInt> coeffs;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        long e;
        std::string c;
        if (!(ls >> e >> c)) throw error("read_series: malformed term line");
        if (!started) {
            first = e;
            started = true;
        } else if (e != expect) {
            throw error("read_series: exponents must be consecutive");
        }
        expect = e + 1;
        coeffs.emplace_back(c);
    }
    if (!started) throw error("read_series: empty input");
    return QSeries(first, std::move(coeffs));
}

} // namespace moduli
