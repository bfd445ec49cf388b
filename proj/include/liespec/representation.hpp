#ifndef LIESPEC_REPRESENTATION_HPP
#define LIESPEC_REPRESENTATION_HPP

#include "adapted.hpp"

namespace liespec {

/*
 * A matrix representation of L on E: one m x m operator per working-basis
 * vector, subject to [M_i, M_j] = sum_h c(i,j,h) M_h.
 */
template <class S>
struct Representation {
    LieAlgebra<S> algebra;
    std::size_t dim_e = 0;
    std::vector<Matrix<S>> mats;

    Representation() = default;
    Representation(LieAlgebra<S> alg, std::vector<Matrix<S>> ms) : algebra(std::move(alg)), mats(std::move(ms)) {
        dim_e = mats.empty() ? 0 : mats.front().rows();
    }
};

using ExactRepresentation = Representation<GaussianRational>;

struct RepValidity {
    std::vector<std::array<std::size_t, 2>> violations; // bracket-compatibility failures (i, j)
    bool ok() const { return violations.empty(); }
};

template <class S>
RepValidity validate_rep(const Representation<S>& r, double tol = 0.0) {
    const auto& L = r.algebra;
    if (r.mats.size() != L.n)
        throw error(errc::bad_input, "representation has " + std::to_string(r.mats.size()) +
                                         " matrices for a dimension-" + std::to_string(L.n) + " algebra");
    for (const auto& m : r.mats)
        if (m.rows() != r.dim_e || m.cols() != r.dim_e)
            throw error(errc::bad_input, "representation matrices must be square of equal size");
    RepValidity rep;
    for (std::size_t i = 0; i < L.n; ++i)
        for (std::size_t j = i + 1; j < L.n; ++j) {
            Matrix<S> lhs = r.mats[i] * r.mats[j] - r.mats[j] * r.mats[i];
            for (std::size_t h = 0; h < L.n; ++h)
                if (!scalar_traits<S>::is_zero(L.c_at(i, j, h), tol)) lhs -= L.c_at(i, j, h) * r.mats[h];
            if (!lhs.is_zero(tol)) rep.violations.push_back({i, j});
        }
    return rep;
}

// Opposite algebra acting on E* through the transposed operators.
template <class S>
Representation<S> dual_rep(const Representation<S>& r) {
    Representation<S> out;
    out.algebra = opposite(r.algebra);
    out.dim_e = r.dim_e;
    for (const auto& m : r.mats) out.mats.push_back(m.transpose());
    return out;
}

template <class S>
Representation<S> change_basis(const Representation<S>& r, const Matrix<S>& b) {
    Representation<S> out;
    out.algebra = change_basis(r.algebra, b);
    out.dim_e = r.dim_e;
    for (std::size_t i = 0; i < r.algebra.n; ++i) {
        Matrix<S> m(r.dim_e, r.dim_e);
        for (std::size_t j = 0; j < r.algebra.n; ++j)
            if (!scalar_traits<S>::is_zero(b(j, i))) m += b(j, i) * r.mats[j];
        out.mats.push_back(std::move(m));
    }
    return out;
}

// Restriction to a subalgebra given by a column basis closed under brackets.
template <class S>
Representation<S> restrict_rep(const Representation<S>& r, const Matrix<S>& sub, double tol = 1e-9) {
    Representation<S> out;
    out.algebra = subalgebra(r.algebra, sub, tol);
    out.dim_e = r.dim_e;
    for (std::size_t a = 0; a < sub.cols(); ++a) {
        Matrix<S> m(r.dim_e, r.dim_e);
        for (std::size_t j = 0; j < r.algebra.n; ++j)
            if (!scalar_traits<S>::is_zero(sub(j, a), tol)) m += sub(j, a) * r.mats[j];
        out.mats.push_back(std::move(m));
    }
    return out;
}

template <class From, class To>
To convert_scalar(const From& v);
template <>
inline Complex convert_scalar<GaussianRational, Complex>(const GaussianRational& v) {
    return v.to_complex();
}

inline Matrix<Complex> to_float(const ExactMatrix& m) {
    Matrix<Complex> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_complex();
    return out;
}

inline LieAlgebra<Complex> to_float(const ExactLieAlgebra& L) {
    LieAlgebra<Complex> out(L.n, L.basis_names);
    for (std::size_t k = 0; k < L.c.size(); ++k) out.c[k] = L.c[k].to_complex();
    return out;
}

inline Representation<Complex> to_float(const ExactRepresentation& r) {
    Representation<Complex> out;
    out.algebra = to_float(r.algebra);
    out.dim_e = r.dim_e;
    for (const auto& m : r.mats) out.mats.push_back(to_float(m));
    return out;
}

inline Character<Complex> to_float(const Character<GaussianRational>& f) {
    Character<Complex> out;
    for (const auto& v : f) out.push_back(v.to_complex());
    return out;
}

/*
 * Weights of the module: the diagonal functionals of a simultaneous
 * triangularization, obtained by repeatedly extracting a joint eigenvector of
 * the action induced on the quotient by the invariant subspace built so far.
 * Returns dim E weights, with multiplicity.
 */
template <class S, class Policy = default_policy_t<S>>
std::vector<Character<S>> module_weights(const Representation<S>& r, const Policy& pol = Policy{}) {
    const std::size_t m = r.dim_e;
    std::vector<Character<S>> out;
    Matrix<S> u(m, 0);
    while (u.cols() < m) {
        Matrix<S> comp = extend_basis(u, Matrix<S>::identity(m), pol.tol);
        Matrix<S> uc = hstack(u, comp);
        std::vector<Matrix<S>> qops;
        for (std::size_t b = 0; b < r.algebra.n; ++b) {
            Matrix<S> x = solve(uc, r.mats[b] * comp);
            qops.push_back(x.block(u.cols(), 0, comp.cols(), comp.cols()));
        }
        CommonEigenvector<S> ce = common_eigenvector(r.algebra, qops, pol);
        out.push_back(ce.weight);
        u = hstack(u, comp * ce.vec);
    }
    return out;
}

// Float triangularization oracle; every returned weight annihilates L^2
// within tolerance for a valid solvable representation.
inline std::vector<Character<Complex>> weights_float_oracle(const Representation<Complex>& r,
                                                            double tol = 1e-9) {
    FloatEigenPolicy pol{tol};
    return module_weights(r, pol);
}

inline std::vector<Character<Complex>> weights_float_oracle(const ExactRepresentation& r,
                                                            double tol = 1e-9) {
    return weights_float_oracle(to_float(r), tol);
}

} // namespace liespec

#endif
