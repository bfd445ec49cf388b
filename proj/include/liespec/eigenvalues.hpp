#ifndef LIESPEC_EIGENVALUES_HPP
#define LIESPEC_EIGENVALUES_HPP

#include <algorithm>
#include <set>

#include "exact_linalg.hpp"
#include "float_linalg.hpp"

namespace liespec {

struct ExactEigenvalues {
    std::vector<GaussianRational> roots; // with multiplicity, sorted
    bool complete = true;                // linear factors account for the full degree
};

namespace exact {

inline GaussianRational poly_eval(const std::vector<GaussianRational>& coeffs, const GaussianRational& x) {
    GaussianRational acc;
    for (const auto& c : coeffs) acc = acc * x + c;
    return acc;
}

// Divides by (t - r); the remainder is discarded (caller checks r is a root).
inline std::vector<GaussianRational> poly_deflate(const std::vector<GaussianRational>& coeffs,
                                                  const GaussianRational& r) {
    std::vector<GaussianRational> q(coeffs.size() - 1);
    GaussianRational acc;
    for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) {
        acc = acc * r + coeffs[k];
        q[k] = acc;
    }
    return q;
}

/*
 * All Gaussian-rational roots of a polynomial with Gaussian-rational
 * coefficients (descending powers), with multiplicity.  Candidate roots are
 * u/v with u dividing the trailing and v the leading coefficient of the
 * integerized polynomial, times a unit; this is the rational root theorem in
 * Z[i], which is a UFD.
 */
inline ExactEigenvalues poly_roots(std::vector<GaussianRational> p) {
    ExactEigenvalues out;
    while (p.size() > 1 && p.front().is_zero()) p.erase(p.begin());
    if (p.size() <= 1) return out;

    // zero roots
    while (p.size() > 1 && p.back().is_zero()) {
        out.roots.emplace_back();
        p.pop_back();
    }
    if (p.size() > 1) {
        BigInt l = 1;
        for (const auto& c : p) {
            l = boost::multiprecision::lcm(l, denominator(c.re));
            l = boost::multiprecision::lcm(l, denominator(c.im));
        }
        std::vector<GaussianInt> ip;
        ip.reserve(p.size());
        for (const auto& c : p) {
            GaussianRational scaled = GaussianRational{BigRat(l), BigRat(0)} * c;
            ip.push_back({numerator(scaled.re), numerator(scaled.im)});
        }
        GaussianInt content;
        for (const auto& c : ip)
            if (!c.is_zero()) content = content.is_zero() ? c : gint::gcd(content, c);
        content = gint::canonical(content);

        auto nums = gint::divisors_up_to_units(gint::div_nearest(ip.back(), content));
        auto dens = gint::divisors_up_to_units(gint::div_nearest(ip.front(), content));
        const GaussianRational units[4] = {GaussianRational(1), GaussianRational::i(),
                                           GaussianRational(-1), -GaussianRational::i()};
        std::set<std::pair<BigRat, BigRat>> seen;
        std::vector<GaussianRational> candidates;
        for (const auto& u : nums)
            for (const auto& v : dens)
                for (const auto& unit : units) {
                    GaussianRational r = unit * (GaussianRational{BigRat(u.re), BigRat(u.im)} /
                                                 GaussianRational{BigRat(v.re), BigRat(v.im)});
                    if (seen.insert({r.re, r.im}).second) candidates.push_back(r);
                }
        for (const auto& r : candidates) {
            while (p.size() > 1 && poly_eval(p, r).is_zero()) {
                out.roots.push_back(r);
                p = poly_deflate(p, r);
            }
        }
    }
    out.complete = p.size() <= 1;
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

} // namespace exact

// Gaussian-rational eigenvalues of a square exact matrix, with multiplicity,
// plus a flag telling whether they exhaust the characteristic polynomial.
inline ExactEigenvalues try_eigenvalues(const ExactMatrix& m) {
    return exact::poly_roots(exact::charpoly(m));
}

// Throwing variant: the full spectrum or nothing.
inline std::vector<GaussianRational> eigenvalues_exact(const ExactMatrix& m) {
    ExactEigenvalues e = try_eigenvalues(m);
    if (!e.complete) throw irrational_spectrum();
    return e.roots;
}

} // namespace liespec

#endif
