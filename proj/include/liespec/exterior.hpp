#ifndef LIESPEC_EXTERIOR_HPP
#define LIESPEC_EXTERIOR_HPP

#include <cstdint>

#include "lie_algebra.hpp"

namespace liespec {

// Strictly increasing sequence of 0-based basis indices; a basis word of
// wedge degree p.
using MultiIndex = std::vector<std::size_t>;

inline std::size_t binomial(std::size_t n, std::size_t p) {
    if (p > n) return 0;
    p = std::min(p, n - p);
    std::size_t r = 1;
    for (std::size_t k = 1; k <= p; ++k) r = r * (n - p + k) / k;
    return r;
}

// All C(n, p) words in lexicographic order.
inline std::vector<MultiIndex> wedge_basis(std::size_t n, std::size_t p) {
    if (p > n) throw error(errc::bad_input, "wedge degree out of range");
    std::vector<MultiIndex> out;
    MultiIndex cur(p);
    for (std::size_t i = 0; i < p; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        if (p == 0) break;
        std::size_t t = p;
        while (t > 0 && cur[t - 1] == n - p + t - 1) --t;
        if (t == 0) break;
        ++cur[t - 1];
        for (std::size_t i = t; i < p; ++i) cur[i] = cur[i - 1] + 1;
    }
    return out;
}

// Lexicographic rank of a sorted word among the C(n, p) words.
inline std::size_t wedge_rank(const MultiIndex& idx, std::size_t n) {
    std::size_t p = idx.size(), r = 0;
    std::size_t prev = 0;
    for (std::size_t t = 0; t < p; ++t) {
        for (std::size_t j = prev; j < idx[t]; ++j) r += binomial(n - 1 - j, p - 1 - t);
        prev = idx[t] + 1;
    }
    return r;
}

// Sorts an arbitrary word; returns the permutation parity, or 0 on repeats.
inline int sort_word(MultiIndex& w) {
    int sign = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && w[j - 1] > w[j]) {
            std::swap(w[j - 1], w[j]);
            sign = -sign;
            --j;
        }
        if (j > 0 && w[j - 1] == w[j]) return 0;
    }
    return sign;
}

// Sign of the shuffle (a, b) -> sorted(a ++ b); 0 if not disjoint.
inline int merge_sign(const MultiIndex& a, const MultiIndex& b, MultiIndex& merged) {
    merged = a;
    merged.insert(merged.end(), b.begin(), b.end());
    return sort_word(merged);
}

// ---- elements of a fixed degree, as coordinate columns ----------------------

// u wedge v for coordinate columns in degrees p and q.
template <class S>
Matrix<S> wedge_product(std::size_t n, std::size_t p, std::size_t q, const Matrix<S>& u, const Matrix<S>& v) {
    auto bp = wedge_basis(n, p), bq = wedge_basis(n, q);
    Matrix<S> out(binomial(n, p + q), 1);
    for (std::size_t a = 0; a < bp.size(); ++a) {
        if (scalar_traits<S>::is_zero(u(a, 0))) continue;
        for (std::size_t b = 0; b < bq.size(); ++b) {
            if (scalar_traits<S>::is_zero(v(b, 0))) continue;
            MultiIndex merged;
            int s = merge_sign(bp[a], bq[b], merged);
            if (s == 0) continue;
            S coeff = u(a, 0) * v(b, 0);
            out(wedge_rank(merged, n), 0) += s > 0 ? coeff : -coeff;
        }
    }
    return out;
}

// ---- operators in the canonical wedge bases ---------------------------------

/*
 * theta(x_i) in degree p: the derivation of the exterior algebra extending
 * ad(x_i), i.e. the sum over word positions of substituting the bracket and
 * re-sorting.
 */
template <class S>
Matrix<S> theta_matrix(const LieAlgebra<S>& L, std::size_t i, std::size_t p) {
    auto basis = wedge_basis(L.n, p);
    Matrix<S> m(basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const MultiIndex& w = basis[col];
        for (std::size_t t = 0; t < w.size(); ++t) {
            for (std::size_t h = 0; h < L.n; ++h) {
                const S& coeff = L.c_at(i, w[t], h);
                if (scalar_traits<S>::is_zero(coeff)) continue;
                MultiIndex sub = w;
                sub[t] = h;
                int s = sort_word(sub);
                if (s == 0) continue;
                S val = s > 0 ? coeff : -coeff;
                m(wedge_rank(sub, L.n), col) += val;
            }
        }
    }
    return m;
}

// epsilon(u): v -> u wedge v, from degree q to q + |u|, for a basis word u.
template <class S>
Matrix<S> epsilon_matrix(std::size_t n, const MultiIndex& u, std::size_t q) {
    auto bq = wedge_basis(n, q);
    Matrix<S> m(binomial(n, q + u.size()), bq.size());
    for (std::size_t col = 0; col < bq.size(); ++col) {
        MultiIndex merged;
        int s = merge_sign(u, bq[col], merged);
        if (s == 0) continue;
        m(wedge_rank(merged, n), col) = s > 0 ? scalar_traits<S>::one() : -scalar_traits<S>::one();
    }
    return m;
}

/*
 * iota(u) for u a basis word of L-degree r: the dual map of epsilon(u),
 * lowering dual-basis degree from q to q - r.  In the determinant pairing of
 * dual bases its matrix is the transpose of epsilon(u): degree q-r -> q.
 */
template <class S>
Matrix<S> iota_matrix(std::size_t n, const MultiIndex& u, std::size_t q) {
    if (u.size() > q) return Matrix<S>(0, binomial(n, q));
    return epsilon_matrix<S>(n, u, q - u.size()).transpose();
}

/*
 * rho in degree p: contraction of the top form, an isomorphism from dual
 * words of degree p onto words of degree n - p.  On a basis word y_A it gives
 * sgn(A, A^c) x_{A^c}, the shuffle sign of (A, complement).
 */
template <class S>
Matrix<S> rho_matrix(std::size_t n, std::size_t p) {
    auto bp = wedge_basis(n, p);
    Matrix<S> m(binomial(n, n - p), bp.size());
    for (std::size_t col = 0; col < bp.size(); ++col) {
        const MultiIndex& a = bp[col];
        MultiIndex comp;
        std::size_t t = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (t < a.size() && a[t] == j) {
                ++t;
                continue;
            }
            comp.push_back(j);
        }
        MultiIndex merged;
        int s = merge_sign(a, comp, merged);
        m(wedge_rank(comp, n), col) = s > 0 ? scalar_traits<S>::one() : -scalar_traits<S>::one();
    }
    return m;
}

// w in degree p: multiplication by (-1)^p.
template <class S>
Matrix<S> parity_matrix(std::size_t n, std::size_t p) {
    Matrix<S> m = Matrix<S>::identity(binomial(n, p));
    if (p % 2 == 1) m = -m;
    return m;
}

// theta^*(x_i) in dual degree p: the dual map of -theta(x_i).
template <class S>
Matrix<S> theta_dual_matrix(const LieAlgebra<S>& L, std::size_t i, std::size_t p) {
    return -theta_matrix(L, i, p).transpose();
}

// ---- identity checks --------------------------------------------------------

struct ExteriorIdentityReport {
    // (identity label, degree) of every failure
    std::vector<std::pair<std::string, std::size_t>> failures;
    bool ok() const { return failures.empty(); }
};

/*
 * Checks, as exact matrix identities in every applicable degree:
 *   leibniz    theta(ab) = theta(a)b + a theta(b) on basis words
 *   parity     theta w = w theta
 *   rho-dual   rho theta^* = theta rho - trace(ad) rho
 *   rho-opp    rho theta^* = -(theta' + trace(ad)) rho
 */
template <class S>
ExteriorIdentityReport verify_identities(const LieAlgebra<S>& L, std::size_t i, double tol = 0.0) {
    ExteriorIdentityReport rep;
    const std::size_t n = L.n;
    S tr = L.ad_matrix(i).trace();
    LieAlgebra<S> opp = opposite(L);

    for (std::size_t p = 0; p + 1 <= n; ++p) {
        for (std::size_t q = 0; p + q <= n; ++q) {
            auto bp = wedge_basis(n, p), bq = wedge_basis(n, q);
            Matrix<S> th_p = theta_matrix(L, i, p);
            Matrix<S> th_q = theta_matrix(L, i, q);
            Matrix<S> th_pq = theta_matrix(L, i, p + q);
            bool bad = false;
            for (std::size_t a = 0; a < bp.size() && !bad; ++a)
                for (std::size_t b = 0; b < bq.size() && !bad; ++b) {
                    Matrix<S> ea = unit_column<S>(bp.size(), a);
                    Matrix<S> eb = unit_column<S>(bq.size(), b);
                    Matrix<S> lhs = th_pq * wedge_product(n, p, q, ea, eb);
                    Matrix<S> rhs = wedge_product(n, p, q, th_p * ea, eb) +
                                    wedge_product(n, p, q, ea, th_q * eb);
                    if (!(lhs - rhs).is_zero(tol)) bad = true;
                }
            if (bad) rep.failures.push_back({"leibniz", p * 16 + q});
        }
    }

    for (std::size_t p = 0; p <= n; ++p) {
        Matrix<S> th = theta_matrix(L, i, p);
        Matrix<S> w = parity_matrix<S>(n, p);
        if (!(th * w - w * th).is_zero(tol)) rep.failures.push_back({"parity", p});

        Matrix<S> rho = rho_matrix<S>(n, p);
        Matrix<S> lhs = rho * theta_dual_matrix(L, i, p);
        Matrix<S> rhs = theta_matrix(L, i, n - p) * rho - tr * rho;
        if (!(lhs - rhs).is_zero(tol)) rep.failures.push_back({"rho-dual", p});

        Matrix<S> rhs_opp = -(theta_matrix(opp, i, n - p) * rho + tr * rho);
        if (!(lhs - rhs_opp).is_zero(tol)) rep.failures.push_back({"rho-opp", p});
    }
    return rep;
}

} // namespace liespec

#endif
