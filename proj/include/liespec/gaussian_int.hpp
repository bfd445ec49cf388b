#ifndef LIESPEC_GAUSSIAN_INT_HPP
#define LIESPEC_GAUSSIAN_INT_HPP

#include <boost/multiprecision/miller_rabin.hpp>
#include <map>
#include <random>
#include <vector>

#include "scalar.hpp"

namespace liespec {

// Z[i] arithmetic.  Only what the rational-root search needs: Euclidean
// division, gcd, factorization into Gaussian primes and divisor enumeration.
struct GaussianInt {
    BigInt re;
    BigInt im;

    GaussianInt() = default;
    GaussianInt(long v) : re(v) {}
    GaussianInt(BigInt r, BigInt i = 0) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussianInt operator-(const GaussianInt& a) { return {-a.re, -a.im}; }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianInt& a, const GaussianInt& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator<(const GaussianInt& a, const GaussianInt& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    BigInt norm() const { return re * re + im * im; }
};

namespace gint {

inline BigInt round_div(const BigInt& a, const BigInt& b) {
    // nearest integer, ties toward +inf; any consistent rounding works
    BigInt two_a = 2 * a;
    BigInt q = (two_a + b) / (2 * b);
    if ((b > 0) != (two_a + b > 0) && (two_a + b) % (2 * b) != 0) --q;
    return q;
}

// Euclidean division: returns q with norm(a - q*b) < norm(b).
inline GaussianInt div_nearest(const GaussianInt& a, const GaussianInt& b) {
    BigInt n = b.norm();
    GaussianInt num = a * GaussianInt(b.re, -b.im);
    return {round_div(num.re, n), round_div(num.im, n)};
}

inline GaussianInt mod(const GaussianInt& a, const GaussianInt& b) { return a - div_nearest(a, b) * b; }

inline GaussianInt gcd(GaussianInt a, GaussianInt b) {
    while (!b.is_zero()) {
        GaussianInt r = mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

// Canonical associate: multiply by a unit so that re > 0 and im >= 0
// (first quadrant, positive real axis included).  Zero stays zero.
inline GaussianInt canonical(GaussianInt z) {
    if (z.is_zero()) return z;
    for (int k = 0; k < 3 && !(z.re > 0 && z.im >= 0); ++k) z = z * GaussianInt(0, 1);
    return z;
}

inline bool divides(const GaussianInt& d, const GaussianInt& a) { return mod(a, d).is_zero(); }

// ---- rational integer factorization -------------------------------------

inline BigInt pollard_brent(const BigInt& n, std::mt19937_64& rng) {
    if (n % 2 == 0) return 2;
    std::uniform_int_distribution<unsigned long long> dist(1, 1ull << 62);
    while (true) {
        BigInt y = BigInt(dist(rng)) % n, c = BigInt(dist(rng)) % n, m = 128;
        BigInt g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (BigInt i = 0; i < r; ++i) y = (y * y + c) % n;
            BigInt k = 0;
            while (k < r && g == 1) {
                ys = y;
                BigInt lim = m < r - k ? m : r - k;
                for (BigInt i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = boost::multiprecision::gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = boost::multiprecision::gcd(abs(x - ys), n);
            }
        }
        if (g != n) return g;
    }
}

inline void factor_into(BigInt n, std::map<BigInt, unsigned>& out) {
    if (n < 0) n = -n;
    if (n <= 1) return;
    for (BigInt p : {BigInt(2), BigInt(3), BigInt(5)}) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    BigInt d = 7;
    const BigInt trial_limit = 1 << 16;
    static const int wheel[] = {4, 2, 4, 2, 4, 6, 2, 6};
    int wi = 0;
    while (d <= trial_limit && d * d <= n) {
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
        d += wheel[wi];
        wi = (wi + 1) & 7;
    }
    if (n == 1) return;
    if (d * d > n || boost::multiprecision::miller_rabin_test(n, 32)) {
        ++out[n];
        return;
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    BigInt f = pollard_brent(n, rng);
    factor_into(f, out);
    factor_into(n / f, out);
}

inline std::map<BigInt, unsigned> factor(const BigInt& n) {
    std::map<BigInt, unsigned> out;
    factor_into(n, out);
    return out;
}

// Square root of -1 mod p for p = 1 (mod 4).
inline BigInt sqrt_minus_one(const BigInt& p) {
    using boost::multiprecision::powm;
    BigInt e = (p - 1) / 4;
    for (BigInt a = 2; a < p; ++a) {
        BigInt x = powm(a, e, p);
        if ((x * x) % p == p - 1) return x;
    }
    throw error(errc::internal, "no sqrt(-1) mod p");
}

// Gaussian prime factorization of a nonzero z, as canonical associates.
inline std::map<GaussianInt, unsigned> gaussian_factor(const GaussianInt& z) {
    std::map<GaussianInt, unsigned> out;
    if (z.is_zero()) throw error(errc::internal, "factoring zero");
    auto nf = factor(z.norm());
    GaussianInt rest = z;
    for (const auto& [p, e] : nf) {
        std::vector<GaussianInt> primes;
        if (p == 2) {
            primes = {GaussianInt(1, 1)};
        } else if (p % 4 == 3) {
            primes = {GaussianInt(p)};
        } else {
            GaussianInt pi = canonical(gcd(GaussianInt(p), GaussianInt(sqrt_minus_one(p), 1)));
            primes = {pi, canonical(GaussianInt(pi.re, -pi.im))};
        }
        for (const auto& pi : primes) {
            while (divides(pi, rest)) {
                rest = div_nearest(rest, pi);
                ++out[canonical(pi)];
            }
        }
    }
    if (rest.norm() != 1) throw error(errc::internal, "gaussian factorization incomplete");
    return out;
}

// All divisors of z up to unit multiples, as canonical associates.
inline std::vector<GaussianInt> divisors_up_to_units(const GaussianInt& z) {
    auto fac = gaussian_factor(z);
    std::vector<GaussianInt> out{GaussianInt(1)};
    for (const auto& [p, e] : fac) {
        std::vector<GaussianInt> next;
        next.reserve(out.size() * (e + 1));
        for (const auto& d : out) {
            GaussianInt cur = d;
            next.push_back(canonical(cur));
            for (unsigned t = 0; t < e; ++t) {
                cur = cur * p;
                next.push_back(canonical(cur));
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace gint
} // namespace liespec

#endif
