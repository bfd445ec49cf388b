#ifndef LIESPEC_KOSZUL_HPP
#define LIESPEC_KOSZUL_HPP

#include "exterior.hpp"
#include "representation.hpp"

namespace liespec {

/*
 * Twisted chain complex (E tensor wedge L, d(f)).
 *
 * Convention note.  Representations are validated as homomorphisms,
 * [M_x, M_y] = M_[x,y], with operators acting on column vectors.  The
 * differential realizes the module structure of the chain complex through the
 * transposed operators: the degree-lowering action block for x_k is
 * M_{x_k}^T - f(x_k).  This is the matrix form of letting E carry a right
 * action (chains hold row coefficients), and it is the unique realization
 * under which d.d = 0 holds together with the worked translation identity
 * Sp(L,E) + trace vector = Sp(L',E*); the mirrored alternative flips the
 * translation direction.  See README, "Action convention".
 */

inline std::size_t chain_dim(std::size_t n, std::size_t m, std::size_t p) {
    return m * binomial(n, p);
}

// Ordered basis of E tensor wedge^p L: multi-index major, vector index minor.
inline std::vector<std::pair<std::size_t, MultiIndex>> chain_basis(std::size_t n, std::size_t m,
                                                                   std::size_t p) {
    std::vector<std::pair<std::size_t, MultiIndex>> out;
    for (const auto& w : wedge_basis(n, p))
        for (std::size_t a = 0; a < m; ++a) out.push_back({a, w});
    return out;
}

// The operator entering the action blocks of the differential.
template <class S>
Matrix<S> chain_action(const Representation<S>& r, std::size_t i) {
    return r.mats[i].transpose();
}

template <class S>
Matrix<S> differential(const LieAlgebra<S>& L, const Representation<S>& r, const Character<S>& f,
                       std::size_t p, double tol = 1e-9) {
    const std::size_t n = L.n, m = r.dim_e;
    if (p < 1 || p > n) throw error(errc::bad_input, "differential degree out of range");
    if (!is_character(L, f, scalar_traits<S>::exact ? 0.0 : tol)) throw not_a_character();

    auto cols_basis = wedge_basis(n, p);
    Matrix<S> d(chain_dim(n, m, p - 1), chain_dim(n, m, p));
    Matrix<S> eye = Matrix<S>::identity(m);

    for (std::size_t cj = 0; cj < cols_basis.size(); ++cj) {
        const MultiIndex& w = cols_basis[cj];
        // twisted action terms, sign (-1)^{k+1} (1-based position k)
        for (std::size_t k = 0; k < p; ++k) {
            MultiIndex sub;
            for (std::size_t t = 0; t < p; ++t)
                if (t != k) sub.push_back(w[t]);
            Matrix<S> blk = chain_action(r, w[k]) - f[w[k]] * eye;
            if (k % 2 == 1) blk = -blk;
            std::size_t r0 = wedge_rank(sub, n) * m, c0 = cj * m;
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) d(r0 + a, c0 + b) += blk(a, b);
        }
        // bracket insertion terms, sign (-1)^{k+l} (1-based positions)
        for (std::size_t k = 0; k < p; ++k)
            for (std::size_t l = k + 1; l < p; ++l) {
                int sign = ((k + l) % 2 == 0) ? 1 : -1;
                for (std::size_t h = 0; h < n; ++h) {
                    const S& coeff = L.c_at(w[k], w[l], h);
                    if (scalar_traits<S>::is_zero(coeff)) continue;
                    MultiIndex word{h};
                    for (std::size_t t = 0; t < p; ++t)
                        if (t != k && t != l) word.push_back(w[t]);
                    int s2 = sort_word(word);
                    if (s2 == 0) continue;
                    S val = coeff;
                    if (sign * s2 < 0) val = -val;
                    std::size_t r0 = wedge_rank(word, n) * m, c0 = cj * m;
                    for (std::size_t a = 0; a < m; ++a) d(r0 + a, c0 + a) += val;
                }
            }
    }
    return d;
}

template <class S>
struct ChainComplex {
    std::size_t n = 0, m = 0;
    Character<S> f;
    std::vector<Matrix<S>> diffs; // diffs[p-1] = d_p, p = 1..n
    double tol = 1e-9;

    const Matrix<S>& d(std::size_t p) const { return diffs.at(p - 1); }

    // d_p with the boundary convention d_p = 0 outside 1..n, shaped correctly.
    Matrix<S> d_or_zero(long p) const {
        if (p >= 1 && p <= static_cast<long>(n)) return diffs[static_cast<std::size_t>(p - 1)];
        auto dim = [&](long q) {
            return (q < 0 || q > static_cast<long>(n)) ? 0 : chain_dim(n, m, static_cast<std::size_t>(q));
        };
        return Matrix<S>(dim(p - 1), dim(p));
    }
};

// Euler characteristic of the rank bookkeeping: sum (-1)^p dim H_p must be 0
// for n >= 1 (it is the alternating sum of the chain dimensions).
struct HomologyProfile {
    std::vector<std::size_t> dims; // dim H_p, p = 0..n
    bool nonzero() const {
        for (auto d : dims)
            if (d) return true;
        return false;
    }
};

template <class S>
ChainComplex<S> build_complex(const LieAlgebra<S>& L, const Representation<S>& r, const Character<S>& f,
                              double tol = 1e-9) {
    ChainComplex<S> c;
    c.n = L.n;
    c.m = r.dim_e;
    c.f = f;
    c.tol = tol;
    for (std::size_t p = 1; p <= L.n; ++p) c.diffs.push_back(differential(L, r, f, p, tol));
    for (std::size_t p = 2; p <= L.n; ++p) {
        Matrix<S> dd = c.d(p - 1) * c.d(p);
        double scale = 1.0;
        if constexpr (!scalar_traits<S>::exact) {
            for (const auto& v : c.d(p).data()) scale = std::max(scale, std::abs(v));
            for (const auto& v : c.d(p - 1).data()) scale = std::max(scale, std::abs(v));
        }
        if (!dd.is_zero(scalar_traits<S>::exact ? 0.0 : tol * scale * scale * 100)) throw chain_condition_failed();
    }
    return c;
}

template <class S>
HomologyProfile homology_dims(const ChainComplex<S>& c) {
    HomologyProfile out;
    std::vector<std::size_t> ranks(c.n + 2, 0); // ranks[p] = rank d_p, p = 1..n
    for (std::size_t p = 1; p <= c.n; ++p) ranks[p] = rank(c.d(p), c.tol);
    for (std::size_t p = 0; p <= c.n; ++p)
        out.dims.push_back(chain_dim(c.n, c.m, p) - ranks[p] - ranks[p + 1]);
    return out;
}

// ---- codimension-1 split along the prefix ideal ------------------------------

// The working-basis prefix span(x_1..x_{n-1}) must be an ideal.
template <class S>
void require_prefix_ideal(const LieAlgebra<S>& L, double tol = 0.0) {
    for (std::size_t i = 0; i < L.n; ++i)
        for (std::size_t j = 0; j + 1 < L.n; ++j)
            if (!scalar_traits<S>::is_zero(L.c_at(i, j, L.n - 1), tol)) throw not_an_ideal();
}

/*
 * The endomorphism L_p of E tensor wedge^{p-1} L_{n-1}:
 *   L_p(e<J>) = -(x_n - f(x_n)) e<J> + sum_k (-1)^{k+1} e<[x_{J_k}, x_n] ^ J\k>.
 * Recomposes the full differential through
 *   d_p(a ^ x_n) = (-1)^p L_p(a) + (d~_{p-1}(f~) a) ^ x_n.
 */
template <class S>
Matrix<S> split_operator(const LieAlgebra<S>& L, const Representation<S>& r, const Character<S>& f,
                         std::size_t p, double tol = 1e-9) {
    require_prefix_ideal(L, scalar_traits<S>::exact ? 0.0 : tol);
    const std::size_t n = L.n, m = r.dim_e;
    if (p < 1 || p > n) throw error(errc::bad_input, "split operator degree out of range");
    auto basis = wedge_basis(n - 1, p - 1);
    Matrix<S> out(m * basis.size(), m * basis.size());
    Matrix<S> eye = Matrix<S>::identity(m);
    Matrix<S> axn = chain_action(r, n - 1) - f[n - 1] * eye;

    for (std::size_t cj = 0; cj < basis.size(); ++cj) {
        const MultiIndex& w = basis[cj];
        std::size_t c0 = cj * m;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) out(c0 + a, c0 + b) -= axn(a, b);
        for (std::size_t k = 0; k < w.size(); ++k) {
            int sign = (k % 2 == 0) ? 1 : -1;
            for (std::size_t h = 0; h + 1 < n; ++h) {
                const S& coeff = L.c_at(w[k], n - 1, h);
                if (scalar_traits<S>::is_zero(coeff)) continue;
                MultiIndex word{h};
                for (std::size_t t = 0; t < w.size(); ++t)
                    if (t != k) word.push_back(w[t]);
                int s2 = sort_word(word);
                if (s2 == 0) continue;
                S val = coeff;
                if (sign * s2 < 0) val = -val;
                std::size_t r0 = wedge_rank(word, n - 1) * m;
                for (std::size_t a = 0; a < m; ++a) out(r0 + a, c0 + a) += val;
            }
        }
    }
    return out;
}

// Flattened chain indices of basis elements whose word omits x_n, in the
// order of the (n-1)-algebra chain basis of the same degree.
inline std::vector<std::size_t> chain_indices_without_top(std::size_t n, std::size_t m, std::size_t p) {
    std::vector<std::size_t> out;
    for (const auto& w : wedge_basis(n - 1, p)) {
        std::size_t base = wedge_rank(w, n) * m;
        for (std::size_t a = 0; a < m; ++a) out.push_back(base + a);
    }
    return out;
}

// Flattened chain indices of elements J ^ x_n, ordered like the degree-(p-1)
// chain basis of the (n-1)-algebra.
inline std::vector<std::size_t> chain_indices_with_top(std::size_t n, std::size_t m, std::size_t p) {
    std::vector<std::size_t> out;
    for (auto w : wedge_basis(n - 1, p - 1)) {
        w.push_back(n - 1);
        std::size_t base = wedge_rank(w, n) * m;
        for (std::size_t a = 0; a < m; ++a) out.push_back(base + a);
    }
    return out;
}

template <class S>
Matrix<S> select(const Matrix<S>& m, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols) {
    Matrix<S> out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
    return out;
}

// ---- adjoint complex ----------------------------------------------------------

// Cochain matrices d*_{p+1} = transpose of d_{p+1}; consecutive composites
// vanish because the originals do.
template <class S>
std::vector<Matrix<S>> adjoint_complex(const ChainComplex<S>& c) {
    std::vector<Matrix<S>> out;
    for (const auto& d : c.diffs) out.push_back(d.transpose());
    return out;
}

// ---- short exact sequence 0 -> C(L_{n-1}) -> C(L) -> C(L_{n-1})[-1] -> 0 ----

template <class S>
struct SesMaps {
    std::vector<Matrix<S>> incl; // degree p: chain(n-1, p) -> chain(n, p), p = 0..n
    std::vector<Matrix<S>> proj; // degree p: chain(n, p) -> chain(n-1, p-1)
};

template <class S>
SesMaps<S> ses_maps(const LieAlgebra<S>& L, const Representation<S>& r, double tol = 1e-9) {
    require_prefix_ideal(L, scalar_traits<S>::exact ? 0.0 : tol);
    const std::size_t n = L.n, m = r.dim_e;
    SesMaps<S> out;
    for (std::size_t p = 0; p <= n; ++p) {
        std::size_t sub_dim = p <= n - 1 ? chain_dim(n - 1, m, p) : 0;
        Matrix<S> i(chain_dim(n, m, p), sub_dim);
        if (sub_dim) {
            auto idx = chain_indices_without_top(n, m, p);
            for (std::size_t j = 0; j < idx.size(); ++j) i(idx[j], j) = scalar_traits<S>::one();
        }
        out.incl.push_back(std::move(i));

        std::size_t q_dim = p >= 1 ? chain_dim(n - 1, m, p - 1) : 0;
        Matrix<S> q(q_dim, chain_dim(n, m, p));
        if (q_dim) {
            auto idx = chain_indices_with_top(n, m, p);
            // sign (-1)^{p-1} on a degree-p word ending in x_n
            S s = (p % 2 == 1) ? scalar_traits<S>::one() : -scalar_traits<S>::one();
            for (std::size_t j = 0; j < idx.size(); ++j) q(j, idx[j]) = s;
        }
        out.proj.push_back(std::move(q));
    }
    return out;
}

struct SesReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/*
 * Degreewise exactness, p.i = 0, and the chain-map identities.  The inclusion
 * commutes on the nose; the projection lands in the shifted complex and
 * anticommutes, d~_{p-1} proj_p = - proj_{p-1} d_p, which is the standard sign
 * for a degree -1 map of complexes.
 */
template <class S>
SesReport ses_check(const LieAlgebra<S>& L, const Representation<S>& r, const Character<S>& f,
                    double tol = 1e-9) {
    SesReport rep;
    const std::size_t n = L.n, m = r.dim_e;
    if (n < 2) throw error(errc::bad_input, "short exact sequence needs dim L >= 2");
    double zt = scalar_traits<S>::exact ? 0.0 : tol;
    SesMaps<S> maps = ses_maps(L, r, tol);
    LieAlgebra<S> sub = subalgebra(L, Matrix<S>::identity(n).block(0, 0, n, n - 1), tol);
    Representation<S> rsub = restrict_rep(r, Matrix<S>::identity(n).block(0, 0, n, n - 1), tol);
    Character<S> fsub(f.begin(), f.end() - 1);

    ChainComplex<S> big = build_complex(L, r, f, tol);
    ChainComplex<S> small = build_complex(sub, rsub, fsub, tol);

    for (std::size_t p = 0; p <= n; ++p) {
        std::size_t ri = rank(maps.incl[p], tol), rq = rank(maps.proj[p], tol);
        if (ri + rq != chain_dim(n, m, p)) rep.failures.push_back("exactness at degree " + std::to_string(p));
        if (p >= 1 && maps.proj[p].cols() == maps.incl[p].rows()) {
            if (!(maps.proj[p] * maps.incl[p]).is_zero(zt))
                rep.failures.push_back("p.i != 0 at degree " + std::to_string(p));
        }
    }
    for (std::size_t p = 1; p <= n; ++p) {
        if (p <= n - 1) {
            Matrix<S> lhs = big.d(p) * maps.incl[p];
            Matrix<S> rhs = maps.incl[p - 1] * small.d_or_zero(static_cast<long>(p));
            if (!(lhs - rhs).is_zero(zt)) rep.failures.push_back("i chain map at degree " + std::to_string(p));
        }
        Matrix<S> lhs = small.d_or_zero(static_cast<long>(p) - 1) * maps.proj[p];
        Matrix<S> rhs = -(maps.proj[p - 1] * big.d(p));
        if (!(lhs - rhs).is_zero(zt))
            rep.failures.push_back("shifted p chain map at degree " + std::to_string(p));
    }
    return rep;
}

// ---- the rho diagram ------------------------------------------------------------

struct DiagramReport {
    std::vector<std::size_t> failing_degrees;
    bool ok() const { return failing_degrees.empty(); }
};

/*
 * Intertwining of the adjoint complex with the opposite-algebra complex on
 * the dual module:  d'_{n-p}(g) . (1 tensor rho w) = (1 tensor rho) . d_{p+1}(f)^T
 * for every p, where g = f + trace vector.
 */
template <class S>
DiagramReport rho_diagram_check(const LieAlgebra<S>& L, const Representation<S>& r, const Character<S>& f,
                                double tol = 1e-9) {
    DiagramReport rep;
    const std::size_t n = L.n, m = r.dim_e;
    double zt = scalar_traits<S>::exact ? 0.0 : tol * 100;
    Character<S> tau = trace_vector(L, scalar_traits<S>::exact ? 0.0 : tol);
    Character<S> g(f);
    for (std::size_t i = 0; i < n; ++i) g[i] += tau[i];

    ChainComplex<S> primal = build_complex(L, r, f, tol);
    ChainComplex<S> dual = build_complex(opposite(L), dual_rep(r), g, tol);
    Matrix<S> eye = Matrix<S>::identity(m);

    for (std::size_t p = 0; p < n; ++p) {
        Matrix<S> rho_p = rho_matrix<S>(n, p);
        if (p % 2 == 1) rho_p = -rho_p; // compose with w in degree p
        Matrix<S> lhs = dual.d(n - p) * kron(rho_p, eye);
        Matrix<S> rhs = kron(rho_matrix<S>(n, p + 1), eye) * primal.d(p + 1).transpose();
        if (!(lhs - rhs).is_zero(zt)) rep.failing_degrees.push_back(p);
    }
    return rep;
}

} // namespace liespec

#endif
