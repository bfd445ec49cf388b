#ifndef LIESPEC_SCALAR_HPP
#define LIESPEC_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace liespec {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/*
 * Exact scalar: an element of Q(i), kept as two reduced rationals.
 * cpp_rational maintains lowest terms with positive denominator, which is
 * exactly the normal form the text format below expects.
 */
struct GaussianRational {
    BigRat re;
    BigRat im;

    GaussianRational() = default;
    GaussianRational(long v) : re(v) {}
    GaussianRational(BigRat r) : re(std::move(r)) {}
    GaussianRational(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {BigRat(0), BigRat(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussianRational conj() const { return {re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        BigRat n = b.re * b.re + b.im * b.im;
        if (n.is_zero()) throw error(errc::internal, "division by zero Gaussian rational");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Total order (real part, then imaginary part); used only to make
    // reported point sets and pivots deterministic.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

namespace detail {

inline std::string format_rat(const BigRat& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += "/";
        s += denominator(q).str();
    }
    return s;
}

// Parses "a" or "a/b" starting at pos; advances pos. Sign must already be
// consumed by the caller.
inline std::optional<BigRat> parse_uint_rat(std::string_view s, size_t& pos) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return std::nullopt;
    BigInt num(std::string(s.substr(start, pos - start)));
    BigInt den = 1;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) return std::nullopt;
        den = BigInt(std::string(s.substr(dstart, pos - dstart)));
        if (den.is_zero()) throw parse_error("zero denominator in scalar '" + std::string(s) + "'");
    }
    return BigRat(num, den);
}

} // namespace detail

/*
 * Text format, used verbatim in input documents and reports:
 *   "a/b"            real
 *   "c/d*i"          purely imaginary
 *   "a/b+c/d*i"      general (also with '-')
 * Denominators equal to 1 are omitted.  "i" and "-i" are accepted on input
 * as shorthand for "1*i" and "-1*i".
 */
inline std::string to_string(const GaussianRational& z) {
    if (z.im.is_zero()) return detail::format_rat(z.re);
    std::string imag = detail::format_rat(abs(z.im)) + "*i";
    if (z.re.is_zero()) return (z.im < 0 ? "-" : "") + imag;
    return detail::format_rat(z.re) + (z.im < 0 ? "-" : "+") + imag;
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

inline GaussianRational parse_gaussian_rational(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    std::string compact(s.substr(b, e - b));
    for (char c : compact)
        if (std::isspace(static_cast<unsigned char>(c)))
            throw parse_error("malformed scalar '" + std::string(s) + "'");
    std::string_view v(compact);
    if (v.empty()) throw parse_error("empty scalar");

    GaussianRational out;
    size_t pos = 0;
    bool seen_term = false;
    while (pos < v.size()) {
        int sign = 1;
        if (v[pos] == '+' || v[pos] == '-') {
            if (v[pos] == '-') sign = -1;
            ++pos;
        } else if (seen_term) {
            throw parse_error("malformed scalar '" + std::string(s) + "'");
        }
        if (pos < v.size() && v[pos] == 'i' && pos + 1 == v.size()) {
            out.im += BigRat(sign);
            ++pos;
            seen_term = true;
            continue;
        }
        auto q = detail::parse_uint_rat(v, pos);
        if (!q) throw parse_error("malformed scalar '" + std::string(s) + "'");
        BigRat val = sign < 0 ? BigRat(-*q) : *q;
        if (pos + 1 < v.size() && v[pos] == '*' && v[pos + 1] == 'i') {
            out.im += val;
            pos += 2;
        } else if (pos < v.size() && v[pos] == 'i') {
            out.im += val;
            pos += 1;
        } else {
            out.re += val;
        }
        seen_term = true;
    }
    if (!seen_term) throw parse_error("malformed scalar '" + std::string(s) + "'");
    return out;
}

using Complex = std::complex<double>;

// Backend traits.  All library code is templated on the scalar type; the two
// instantiations never mix, so backend mismatches are compile errors.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<GaussianRational> {
    static constexpr bool exact = true;
    static GaussianRational zero() { return {}; }
    static GaussianRational one() { return GaussianRational(1); }
    static bool is_zero(const GaussianRational& v, double = 0.0) { return v.is_zero(); }
    static GaussianRational conj(const GaussianRational& v) { return v.conj(); }
    static GaussianRational parse(std::string_view s) { return parse_gaussian_rational(s); }
    static std::string format(const GaussianRational& v) { return to_string(v); }
    static Complex to_complex(const GaussianRational& v) { return v.to_complex(); }
};

template <>
struct scalar_traits<Complex> {
    static constexpr bool exact = false;
    static Complex zero() { return {0.0, 0.0}; }
    static Complex one() { return {1.0, 0.0}; }
    static bool is_zero(const Complex& v, double tol = 1e-9) { return std::abs(v) <= tol; }
    static Complex conj(const Complex& v) { return std::conj(v); }
    static Complex parse(std::string_view s);
    static std::string format(const Complex& v);
    static Complex to_complex(const Complex& v) { return v; }
};

inline std::string format_complex(const Complex& v) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.17g%+.17g*i", v.real(), v.imag());
    return buf;
}

// Accepts the exact grammar and additionally plain floating literals such as
// "1.5e-3" or "2.5-0.5*i".
inline Complex parse_complex(std::string_view s) {
    std::string compact;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact.empty()) throw parse_error("empty scalar");
    if (compact.find('.') == std::string::npos && compact.find('e') == std::string::npos &&
        compact.find('E') == std::string::npos) {
        return parse_gaussian_rational(compact).to_complex();
    }
    double re = 0.0, im = 0.0;
    size_t pos = 0;
    bool seen = false;
    while (pos < compact.size()) {
        size_t start = pos;
        if (compact[pos] == '+' || compact[pos] == '-') ++pos;
        while (pos < compact.size() && (std::isdigit(static_cast<unsigned char>(compact[pos])) ||
                                        compact[pos] == '.'))
            ++pos;
        if (pos < compact.size() && (compact[pos] == 'e' || compact[pos] == 'E')) {
            ++pos;
            if (pos < compact.size() && (compact[pos] == '+' || compact[pos] == '-')) ++pos;
            while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos]))) ++pos;
        }
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(compact[start]))))
            throw parse_error("malformed scalar '" + std::string(s) + "'");
        double val = std::stod(std::string(compact.substr(start, pos - start)));
        if (pos < compact.size() && compact[pos] == '*' && pos + 1 < compact.size() && compact[pos + 1] == 'i') {
            im += val;
            pos += 2;
        } else if (pos < compact.size() && compact[pos] == 'i') {
            im += val;
            ++pos;
        } else {
            re += val;
        }
        seen = true;
    }
    if (!seen) throw parse_error("malformed scalar '" + std::string(s) + "'");
    return {re, im};
}

inline Complex scalar_traits<Complex>::parse(std::string_view s) { return parse_complex(s); }
inline std::string scalar_traits<Complex>::format(const Complex& v) { return format_complex(v); }

} // namespace liespec

#endif
