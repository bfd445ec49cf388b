#ifndef LIESPEC_LIE_ALGEBRA_HPP
#define LIESPEC_LIE_ALGEBRA_HPP

#include <array>
#include <string>
#include <vector>

#include "float_linalg.hpp"

namespace liespec {

/*
 * A finite-dimensional Lie algebra presented by structure constants on a
 * working basis:  [x_i, x_j] = sum_h c(i,j,h) x_h.   Indices are 0-based in
 * code, 1-based in all I/O.
 */
template <class S>
struct LieAlgebra {
    std::size_t n = 0;
    std::vector<std::string> basis_names;
    std::vector<S> c; // flattened (i, j, h)

    LieAlgebra() = default;
    explicit LieAlgebra(std::size_t dim, std::vector<std::string> names = {})
        : n(dim), basis_names(std::move(names)), c(dim * dim * dim, scalar_traits<S>::zero()) {
        if (dim == 0) throw error(errc::bad_input, "Lie algebra dimension must be >= 1");
        if (basis_names.empty()) {
            for (std::size_t i = 1; i <= n; ++i) basis_names.push_back("x" + std::to_string(i));
        }
    }

    S& c_at(std::size_t i, std::size_t j, std::size_t h) { return c[(i * n + j) * n + h]; }
    const S& c_at(std::size_t i, std::size_t j, std::size_t h) const { return c[(i * n + j) * n + h]; }

    // Sets [x_i, x_j] = sum coeffs_h x_h together with the opposite entry.
    void set_bracket(std::size_t i, std::size_t j, const std::vector<S>& coeffs) {
        for (std::size_t h = 0; h < n; ++h) {
            c_at(i, j, h) = coeffs[h];
            c_at(j, i, h) = -coeffs[h];
        }
    }

    // Coordinates of [x_i, x_j] as a column.
    Matrix<S> bracket_coords(std::size_t i, std::size_t j) const {
        Matrix<S> v(n, 1);
        for (std::size_t h = 0; h < n; ++h) v(h, 0) = c_at(i, j, h);
        return v;
    }

    // Bilinear extension to coordinate columns.
    Matrix<S> bracket(const Matrix<S>& u, const Matrix<S>& v) const {
        Matrix<S> out(n, 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (scalar_traits<S>::is_zero(u(i, 0))) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (scalar_traits<S>::is_zero(v(j, 0))) continue;
                S f = u(i, 0) * v(j, 0);
                for (std::size_t h = 0; h < n; ++h) out(h, 0) += f * c_at(i, j, h);
            }
        }
        return out;
    }

    // Matrix of ad(x_i): y -> [x_i, y] in the working basis.
    Matrix<S> ad_matrix(std::size_t i) const {
        if (i >= n) throw error(errc::bad_input, "ad index out of range");
        Matrix<S> m(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t h = 0; h < n; ++h) m(h, j) = c_at(i, j, h);
        return m;
    }

    // Matrix of ad(u) for a coordinate column u.
    Matrix<S> ad_of(const Matrix<S>& u) const {
        Matrix<S> m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (scalar_traits<S>::is_zero(u(i, 0))) continue;
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t h = 0; h < n; ++h) m(h, j) += u(i, 0) * c_at(i, j, h);
        }
        return m;
    }
};

using ExactLieAlgebra = LieAlgebra<GaussianRational>;

template <class S>
Matrix<S> unit_column(std::size_t n, std::size_t i) {
    Matrix<S> v(n, 1);
    v(i, 0) = scalar_traits<S>::one();
    return v;
}

struct AlgebraValidity {
    std::vector<std::array<std::size_t, 2>> antisymmetry_violations; // (i, j)
    std::vector<std::array<std::size_t, 3>> jacobi_failures;         // (i, j, k)
    bool ok() const { return antisymmetry_violations.empty() && jacobi_failures.empty(); }
};

template <class S>
AlgebraValidity validate(const LieAlgebra<S>& L, double tol = 0.0) {
    AlgebraValidity rep;
    for (std::size_t i = 0; i < L.n; ++i)
        for (std::size_t j = i; j < L.n; ++j) {
            bool bad = false;
            for (std::size_t h = 0; h < L.n && !bad; ++h)
                if (!scalar_traits<S>::is_zero(L.c_at(i, j, h) + L.c_at(j, i, h), tol)) bad = true;
            if (bad) rep.antisymmetry_violations.push_back({i, j});
        }
    for (std::size_t i = 0; i < L.n; ++i)
        for (std::size_t j = i + 1; j < L.n; ++j)
            for (std::size_t k = j + 1; k < L.n; ++k) {
                Matrix<S> s = L.bracket(L.bracket_coords(i, j), unit_column<S>(L.n, k)) +
                              L.bracket(L.bracket_coords(j, k), unit_column<S>(L.n, i)) +
                              L.bracket(L.bracket_coords(k, i), unit_column<S>(L.n, j));
                if (!s.is_zero(tol)) rep.jacobi_failures.push_back({i, j, k});
            }
    return rep;
}

// Span of all brackets [u_a, v_b] between two subspaces (columns = bases).
template <class S>
Matrix<S> bracket_span(const LieAlgebra<S>& L, const Matrix<S>& u, const Matrix<S>& v);

// Subspace utilities (columns of the argument span the subspace).
template <class S>
std::size_t subspace_dim(const Matrix<S>& basis, double tol = 1e-9) {
    return rank(basis, tol);
}

template <class S>
struct SubspaceFlag {
    std::vector<Matrix<S>> members; // descending chain, each n x dim
    bool terminates_at_zero = false;
};

template <class S>
struct SeriesResult {
    SubspaceFlag<S> flag;
    bool reached_zero = false;
};

// L >= L^2 >= (L^2)^2 >= ... ; solvable iff it reaches zero.
template <class S>
SeriesResult<S> derived_series(const LieAlgebra<S>& L, double tol = 1e-9) {
    SeriesResult<S> out;
    Matrix<S> cur = Matrix<S>::identity(L.n);
    out.flag.members.push_back(cur);
    while (true) {
        Matrix<S> next = bracket_span(L, cur, cur);
        std::size_t d = next.cols();
        if (d == cur.cols()) break;
        out.flag.members.push_back(next);
        cur = next;
        if (d == 0) break;
    }
    out.reached_zero = out.flag.members.back().cols() == 0;
    out.flag.terminates_at_zero = out.reached_zero;
    (void)tol;
    return out;
}

// L >= [L,L] >= [L,[L,L]] >= ... ; nilpotent iff it reaches zero.
template <class S>
SeriesResult<S> lower_central_series(const LieAlgebra<S>& L, double tol = 1e-9) {
    SeriesResult<S> out;
    Matrix<S> full = Matrix<S>::identity(L.n);
    Matrix<S> cur = full;
    out.flag.members.push_back(cur);
    while (true) {
        Matrix<S> next = bracket_span(L, full, cur);
        std::size_t d = next.cols();
        if (d == cur.cols()) break;
        out.flag.members.push_back(next);
        cur = next;
        if (d == 0) break;
    }
    out.reached_zero = out.flag.members.back().cols() == 0;
    out.flag.terminates_at_zero = out.reached_zero;
    (void)tol;
    return out;
}

template <class S>
bool is_solvable(const LieAlgebra<S>& L) {
    return derived_series(L).reached_zero;
}

template <class S>
bool is_nilpotent(const LieAlgebra<S>& L) {
    return lower_central_series(L).reached_zero;
}

// Derived subalgebra L^2 as a column basis.
template <class S>
Matrix<S> derived_subalgebra(const LieAlgebra<S>& L) {
    Matrix<S> id = Matrix<S>::identity(L.n);
    return bracket_span(L, id, id);
}

// Same vector space, negated bracket.
template <class S>
LieAlgebra<S> opposite(const LieAlgebra<S>& L) {
    LieAlgebra<S> out = L;
    for (auto& v : out.c) v = -v;
    return out;
}

// Re-expresses the algebra in the basis given by the columns of B
// (new basis vectors in old coordinates).
template <class S>
LieAlgebra<S> change_basis(const LieAlgebra<S>& L, const Matrix<S>& B) {
    if (B.rows() != L.n || B.cols() != L.n) throw error(errc::bad_input, "basis matrix shape mismatch");
    Matrix<S> binv = inverse(B);
    LieAlgebra<S> out(L.n, L.basis_names);
    for (std::size_t i = 0; i < L.n; ++i)
        for (std::size_t j = 0; j < L.n; ++j) {
            Matrix<S> w = binv * L.bracket(B.col(i), B.col(j));
            for (std::size_t h = 0; h < L.n; ++h) out.c_at(i, j, h) = w(h, 0);
        }
    return out;
}

// [x_b, v] lies in span(v-columns) for every generator b.
template <class S>
bool is_ideal(const LieAlgebra<S>& L, const Matrix<S>& sub, double tol = 1e-9) {
    if (sub.cols() == 0) return true;
    std::size_t base = rank(sub, tol);
    Matrix<S> aug = sub;
    for (std::size_t b = 0; b < L.n; ++b)
        for (std::size_t j = 0; j < sub.cols(); ++j) aug = hstack(aug, L.bracket(unit_column<S>(L.n, b), sub.col(j)));
    return rank(aug, tol) == base;
}

// Structure constants of a subalgebra given by a column basis (the span must
// be closed under the bracket, e.g. an ideal).
template <class S>
LieAlgebra<S> subalgebra(const LieAlgebra<S>& L, const Matrix<S>& sub, double tol = 1e-9) {
    std::size_t r = sub.cols();
    if (r == 0) throw error(errc::bad_input, "zero subalgebra has no basis");
    LieAlgebra<S> out(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Matrix<S> w = solve(sub, L.bracket(sub.col(i), sub.col(j)));
            for (std::size_t h = 0; h < r; ++h) out.c_at(i, j, h) = w(h, 0);
        }
    (void)tol;
    return out;
}

// ---- characters -----------------------------------------------------------

// A character is a functional on L vanishing on L^2, stored as its value on
// each working-basis vector.
template <class S>
using Character = std::vector<S>;

template <class S>
bool is_character(const LieAlgebra<S>& L, const Character<S>& f, double tol = 1e-9) {
    if (f.size() != L.n) return false;
    for (std::size_t i = 0; i < L.n; ++i)
        for (std::size_t j = i + 1; j < L.n; ++j) {
            S s = scalar_traits<S>::zero();
            for (std::size_t h = 0; h < L.n; ++h) s += f[h] * L.c_at(i, j, h);
            if (!scalar_traits<S>::is_zero(s, tol)) return false;
        }
    return true;
}

// ---- adapted-basis shape ----------------------------------------------------

// Eq-(10) shape: [x_j, x_i] in span(x_1..x_i) whenever i < j, i.e. the
// working basis realizes a full flag of ideals.
template <class S>
bool has_flag_shape(const LieAlgebra<S>& L, double tol = 0.0) {
    for (std::size_t j = 0; j < L.n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            for (std::size_t h = i + 1; h < L.n; ++h)
                if (!scalar_traits<S>::is_zero(L.c_at(j, i, h), tol)) return false;
    return true;
}

/*
 * Trace vector: component i is the trace of ad(x_i) restricted to
 * span(x_1..x_i), i.e. sum_{h<=i} of the x_h coefficient in [x_i, x_h].
 * Requires the flag shape; the first dim L^2 components come out zero when
 * the leading vectors span L^2.
 */
template <class S>
Character<S> trace_vector(const LieAlgebra<S>& L, double tol = 0.0) {
    if (!has_flag_shape(L, tol)) throw basis_not_adapted();
    Character<S> tau(L.n, scalar_traits<S>::zero());
    for (std::size_t i = 0; i < L.n; ++i)
        for (std::size_t h = 0; h <= i; ++h) tau[i] += L.c_at(i, h, h);
    return tau;
}

template <class S>
Matrix<S> bracket_span(const LieAlgebra<S>& L, const Matrix<S>& u, const Matrix<S>& v) {
    if (u.cols() == 0 || v.cols() == 0) return Matrix<S>(L.n, 0);
    Matrix<S> all(L.n, u.cols() * v.cols());
    std::size_t k = 0;
    for (std::size_t a = 0; a < u.cols(); ++a)
        for (std::size_t b = 0; b < v.cols(); ++b) all.set_col(k++, L.bracket(u.col(a), v.col(b)));
    if constexpr (scalar_traits<S>::exact) {
        return exact::column_space_basis(all);
    } else {
        // orthonormal basis of the column space via SVD
        Eigen::MatrixXcd e = fl::to_eigen(all);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e, Eigen::ComputeThinU);
        const auto& sv = svd.singularValues();
        double cut = sv.size() && sv(0) > 0.0
                         ? 1e-9 * sv(0) * static_cast<double>(std::max(all.rows(), all.cols()))
                         : 0.0;
        std::size_t r = 0;
        for (Eigen::Index t = 0; t < sv.size(); ++t)
            if (sv(t) > cut) ++r;
        return fl::from_eigen(svd.matrixU().leftCols(r));
    }
}

} // namespace liespec

#endif
