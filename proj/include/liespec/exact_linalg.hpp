#ifndef LIESPEC_EXACT_LINALG_HPP
#define LIESPEC_EXACT_LINALG_HPP

#include <vector>

#include "gaussian_int.hpp"
#include "matrix.hpp"

namespace liespec {

using ExactMatrix = Matrix<GaussianRational>;

namespace exact {

struct Echelon {
    ExactMatrix mat;                    // row echelon form, Gaussian-integer rows
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

namespace detail {

// Clears denominators of one row in place.
inline void integerize_row(ExactMatrix& m, std::size_t i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        l = boost::multiprecision::lcm(l, denominator(m(i, j).re));
        l = boost::multiprecision::lcm(l, denominator(m(i, j).im));
    }
    if (l == 1) return;
    GaussianRational f{BigRat(l), BigRat(0)};
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f * m(i, j);
}

inline GaussianInt to_gint(const GaussianRational& v) {
    return {numerator(v.re), numerator(v.im)};
}

inline GaussianRational from_gint(const GaussianInt& v) {
    return {BigRat(v.re), BigRat(v.im)};
}

// Divides a Gaussian-integer row by the gcd of its entries.
inline void remove_content(ExactMatrix& m, std::size_t i) {
    GaussianInt g;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j).is_zero()) continue;
        g = g.is_zero() ? to_gint(m(i, j)) : gint::gcd(g, to_gint(m(i, j)));
    }
    g = gint::canonical(g);
    if (g.is_zero() || (g.re == 1 && g.im == 0)) return;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j).is_zero()) continue;
        m(i, j) = from_gint(gint::div_nearest(to_gint(m(i, j)), g));
    }
}

} // namespace detail

/*
 * Fraction-free Gaussian elimination.  Rows are cleared of denominators up
 * front; each update row_i <- pivot*row_i - m(i,k)*row_pivot stays in Z[i],
 * and the row content is divided out after every step to bound growth.
 */
inline Echelon echelon_form(ExactMatrix m) {
    Echelon e;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        detail::integerize_row(m, i);
        detail::remove_content(m, i);
    }
    std::size_t row = 0;
    for (std::size_t colk = 0; colk < m.cols() && row < m.rows(); ++colk) {
        std::size_t pr = row;
        while (pr < m.rows() && m(pr, colk).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pr, j));
        const GaussianRational pivot = m(row, colk);
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            if (m(i, colk).is_zero()) continue;
            const GaussianRational f = m(i, colk);
            for (std::size_t j = colk; j < m.cols(); ++j) m(i, j) = pivot * m(i, j) - f * m(row, j);
            detail::remove_content(m, i);
        }
        e.pivot_cols.push_back(colk);
        ++row;
    }
    e.rank = row;
    e.mat = std::move(m);
    return e;
}

inline std::size_t rank(const ExactMatrix& m) { return echelon_form(m).rank; }

// Kernel basis from back substitution over the field: one vector per free
// column, with a 1 in that coordinate and 0 in the other free coordinates.
inline std::vector<ExactMatrix> kernel_basis(const ExactMatrix& m) {
    Echelon e = echelon_form(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;

    std::vector<ExactMatrix> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        ExactMatrix v(m.cols(), 1);
        v(free, 0) = GaussianRational(1);
        for (std::size_t ri = e.rank; ri-- > 0;) {
            std::size_t pc = e.pivot_cols[ri];
            GaussianRational s;
            for (std::size_t j = pc + 1; j < m.cols(); ++j)
                if (!v(j, 0).is_zero()) s += e.mat(ri, j) * v(j, 0);
            v(pc, 0) = -(s / e.mat(ri, pc));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Reduced row echelon form over the field (pivots normalized to 1).
inline Echelon rref(const ExactMatrix& m) {
    Echelon e = echelon_form(m);
    for (std::size_t ri = e.rank; ri-- > 0;) {
        std::size_t pc = e.pivot_cols[ri];
        GaussianRational inv = GaussianRational(1) / e.mat(ri, pc);
        for (std::size_t j = pc; j < e.mat.cols(); ++j) e.mat(ri, j) = inv * e.mat(ri, j);
        for (std::size_t i = 0; i < ri; ++i) {
            if (e.mat(i, pc).is_zero()) continue;
            GaussianRational f = e.mat(i, pc);
            for (std::size_t j = pc; j < e.mat.cols(); ++j)
                e.mat(i, j) = e.mat(i, j) - f * e.mat(ri, j);
        }
    }
    return e;
}

// Solves A X = B exactly; throws if inconsistent.
inline ExactMatrix solve(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) throw error(errc::internal, "solve shape mismatch");
    Echelon e = rref(hstack(a, b));
    for (auto c : e.pivot_cols)
        if (c >= a.cols()) throw error(errc::internal, "inconsistent linear system");
    ExactMatrix x(a.cols(), b.cols());
    for (std::size_t ri = 0; ri < e.rank; ++ri)
        for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivot_cols[ri], j) = e.mat(ri, a.cols() + j);
    return x;
}

inline ExactMatrix inverse(const ExactMatrix& a) {
    if (!a.is_square()) throw error(errc::internal, "inverse of non-square matrix");
    ExactMatrix x = solve(a, ExactMatrix::identity(a.rows()));
    if (rank(a) != a.rows()) throw error(errc::internal, "inverse of singular matrix");
    return x;
}

// Basis of the column space, as a matrix whose columns are the pivot
// columns of the input (deterministic).
inline ExactMatrix column_space_basis(const ExactMatrix& m) {
    Echelon em = echelon_form(m);
    ExactMatrix b(m.rows(), em.rank);
    for (std::size_t k = 0; k < em.rank; ++k) b.set_block(0, k, m.col(em.pivot_cols[k]));
    return b;
}

// Monic characteristic polynomial coefficients, descending powers:
// [1, c1, ..., cm] with p(x) = x^m + c1 x^{m-1} + ... + cm.
inline std::vector<GaussianRational> charpoly(const ExactMatrix& a) {
    if (!a.is_square()) throw error(errc::internal, "charpoly of non-square matrix");
    const std::size_t m = a.rows();
    std::vector<GaussianRational> power_sums(m + 1);
    ExactMatrix p = ExactMatrix::identity(m);
    for (std::size_t k = 1; k <= m; ++k) {
        p = p * a;
        power_sums[k] = p.trace();
    }
    std::vector<GaussianRational> c(m + 1);
    c[0] = GaussianRational(1);
    for (std::size_t k = 1; k <= m; ++k) {
        GaussianRational s = power_sums[k];
        for (std::size_t i = 1; i < k; ++i) s += c[i] * power_sums[k - i];
        c[k] = -(s / GaussianRational(static_cast<long>(k)));
    }
    return c;
}

} // namespace exact
} // namespace liespec

#endif
