#ifndef LIESPEC_ADAPTED_HPP
#define LIESPEC_ADAPTED_HPP

#include "eigenvalues.hpp"
#include "lie_algebra.hpp"

namespace liespec {

/*
 * Eigenvalue/kernel policies.  The flag refinement and all triangularization
 * searches are written once and instantiated with either backend; the exact
 * policy only ever sees Gaussian-rational eigenvalues and reports failure
 * otherwise.
 */
struct ExactEigenPolicy {
    using Scalar = GaussianRational;
    double tol = 0.0;

    // Distinct eigenvalues, sorted; silently omits irrational ones.
    std::vector<GaussianRational> distinct_eigenvalues(const ExactMatrix& m) const {
        ExactEigenvalues e = try_eigenvalues(m);
        auto& r = e.roots;
        r.erase(std::unique(r.begin(), r.end()), r.end());
        return r;
    }

    std::vector<ExactMatrix> kernel(const ExactMatrix& m) const { return exact::kernel_basis(m); }

    // Tie-break: the kernel vector whose first nonzero coordinate has the
    // smallest index, normalized so that coordinate is 1.
    ExactMatrix pick(const std::vector<ExactMatrix>& basis) const {
        if (basis.empty()) throw adaptation_failed("empty eigenspace in flag refinement");
        std::size_t best = 0, best_lead = basis[0].rows();
        for (std::size_t v = 0; v < basis.size(); ++v) {
            std::size_t lead = 0;
            while (lead < basis[v].rows() && basis[v](lead, 0).is_zero()) ++lead;
            if (lead < best_lead) {
                best_lead = lead;
                best = v;
            }
        }
        ExactMatrix v = basis[best];
        GaussianRational inv = GaussianRational(1) / v(best_lead, 0);
        for (std::size_t i = 0; i < v.rows(); ++i) v(i, 0) = inv * v(i, 0);
        return v;
    }

    [[noreturn]] void fail_no_eigenvalue() const { throw adaptation_failed(); }
};

struct FloatEigenPolicy {
    using Scalar = Complex;
    double tol = 1e-9;

    std::vector<Complex> distinct_eigenvalues(const FloatMatrix& m) const {
        std::vector<Complex> all = fl::eigenvalues(m);
        std::vector<Complex> out;
        double scale = 1.0;
        for (const auto& v : all) scale = std::max(scale, std::abs(v));
        for (const auto& v : all) {
            bool dup = false;
            for (const auto& w : out)
                if (std::abs(v - w) <= tol * scale * 100) dup = true;
            if (!dup) out.push_back(v);
        }
        return out;
    }

    std::vector<FloatMatrix> kernel(const FloatMatrix& m) const { return fl::kernel_basis(m, tol); }

    FloatMatrix pick(const std::vector<FloatMatrix>& basis) const {
        if (basis.empty()) throw no_common_eigenvector();
        FloatMatrix v = basis.front();
        std::size_t lead = 0;
        for (std::size_t i = 1; i < v.rows(); ++i)
            if (std::abs(v(i, 0)) > std::abs(v(lead, 0))) lead = i;
        Complex inv = 1.0 / v(lead, 0);
        for (std::size_t i = 0; i < v.rows(); ++i) v(i, 0) = inv * v(i, 0);
        return v;
    }

    [[noreturn]] void fail_no_eigenvalue() const { throw no_common_eigenvector(); }
};

template <class S>
struct default_policy;
template <>
struct default_policy<GaussianRational> {
    using type = ExactEigenPolicy;
};
template <>
struct default_policy<Complex> {
    using type = FloatEigenPolicy;
};
template <class S>
using default_policy_t = typename default_policy<S>::type;

// ---- subspace helpers -------------------------------------------------------

// Columns of cand that greedily extend span(base); deterministic.
template <class S>
Matrix<S> extend_basis(const Matrix<S>& base, const Matrix<S>& cand, double tol = 1e-9) {
    Matrix<S> acc = base;
    Matrix<S> out(cand.rows(), 0);
    std::size_t r = acc.cols() ? rank(acc, tol) : 0;
    for (std::size_t j = 0; j < cand.cols(); ++j) {
        Matrix<S> aug = hstack(acc, cand.col(j));
        std::size_t r2 = rank(aug, tol);
        if (r2 > r) {
            acc = aug;
            out = hstack(out, cand.col(j));
            r = r2;
        }
    }
    return out;
}

// Matrices of the maps induced on span(sub|comp)/span(sub) in comp-coordinates,
// for operators given by their action columns.
template <class S>
Matrix<S> quotient_action(const Matrix<S>& sub, const Matrix<S>& comp, const Matrix<S>& images) {
    Matrix<S> x = solve(hstack(sub, comp), images);
    return x.block(sub.cols(), 0, comp.cols(), images.cols());
}

// ---- common eigenvector (Lie's theorem, constructive) -----------------------

template <class S>
struct CommonEigenvector {
    Matrix<S> vec;       // nonzero column in the module coordinates
    Character<S> weight; // weight[b]: ops[b] vec = weight[b] vec
};

/*
 * Finds a joint eigenvector of a solvable Lie algebra of operators.  alg gives
 * the structure constants of the acting algebra; ops[b] is the action of its
 * b-th basis vector on the module.  Recurses through a codimension-1 ideal
 * containing the derived subalgebra; the joint weight space of the ideal is
 * invariant under the leftover generator, whose eigenvector inside it is a
 * joint eigenvector for the whole algebra.
 */
template <class S, class Policy>
CommonEigenvector<S> common_eigenvector(const LieAlgebra<S>& alg, const std::vector<Matrix<S>>& ops,
                                        const Policy& pol) {
    const std::size_t dim_v = ops.at(0).rows();
    if (dim_v == 0) throw error(errc::internal, "common eigenvector of a zero module");

    Matrix<S> v;
    if (alg.n == 1) {
        const Matrix<S>& a = ops[0];
        bool found = false;
        for (const auto& lam : pol.distinct_eigenvalues(a)) {
            Matrix<S> shifted = a;
            for (std::size_t i = 0; i < dim_v; ++i) shifted(i, i) = shifted(i, i) - lam;
            auto kb = pol.kernel(shifted);
            if (!kb.empty()) {
                v = pol.pick(kb);
                found = true;
                break;
            }
        }
        if (!found) pol.fail_no_eigenvalue();
    } else {
        // codim-1 ideal containing the derived subalgebra
        Matrix<S> der = derived_subalgebra(alg);
        Matrix<S> ext = extend_basis(der, Matrix<S>::identity(alg.n), pol.tol);
        Matrix<S> kbasis(alg.n, alg.n - 1);
        std::size_t col = 0;
        for (std::size_t j = 0; j < der.cols(); ++j) kbasis.set_col(col++, der.col(j));
        for (std::size_t j = 0; j + 1 < ext.cols(); ++j) kbasis.set_col(col++, ext.col(j));
        Matrix<S> z = ext.col(ext.cols() - 1);

        LieAlgebra<S> kalg = subalgebra(alg, kbasis, pol.tol);
        std::vector<Matrix<S>> kops;
        for (std::size_t a = 0; a < alg.n - 1; ++a) {
            Matrix<S> op(dim_v, dim_v);
            for (std::size_t c = 0; c < alg.n; ++c)
                if (!scalar_traits<S>::is_zero(kbasis(c, a), pol.tol)) op += kbasis(c, a) * ops[c];
            kops.push_back(std::move(op));
        }
        CommonEigenvector<S> sub = common_eigenvector(kalg, kops, pol);

        // joint weight space of the ideal
        Matrix<S> stacked(0, dim_v);
        for (std::size_t a = 0; a < kops.size(); ++a) {
            Matrix<S> shifted = kops[a];
            for (std::size_t i = 0; i < dim_v; ++i) shifted(i, i) = shifted(i, i) - sub.weight[a];
            stacked = stacked.rows() == 0 ? shifted : vstack(stacked, shifted);
        }
        auto wb = pol.kernel(stacked);
        if (wb.empty()) pol.fail_no_eigenvalue();
        Matrix<S> w(dim_v, wb.size());
        for (std::size_t j = 0; j < wb.size(); ++j) w.set_col(j, wb[j]);

        // leftover generator restricted to the weight space
        Matrix<S> zop(dim_v, dim_v);
        for (std::size_t c = 0; c < alg.n; ++c)
            if (!scalar_traits<S>::is_zero(z(c, 0), pol.tol)) zop += z(c, 0) * ops[c];
        Matrix<S> r = solve(w, zop * w);

        bool found = false;
        for (const auto& lam : pol.distinct_eigenvalues(r)) {
            Matrix<S> shifted = r;
            for (std::size_t i = 0; i < r.rows(); ++i) shifted(i, i) = shifted(i, i) - lam;
            auto kb = pol.kernel(shifted);
            if (!kb.empty()) {
                v = w * pol.pick(kb);
                found = true;
                break;
            }
        }
        if (!found) pol.fail_no_eigenvalue();
        std::vector<Matrix<S>> vv{v};
        v = pol.pick(vv); // renormalize in module coordinates
    }

    // read the weight off the eigenvector
    CommonEigenvector<S> out;
    out.vec = v;
    std::size_t lead = 0;
    if constexpr (scalar_traits<S>::exact) {
        while (lead < dim_v && v(lead, 0).is_zero()) ++lead;
    } else {
        for (std::size_t i = 1; i < dim_v; ++i)
            if (std::abs(v(i, 0)) > std::abs(v(lead, 0))) lead = i;
    }
    for (std::size_t b = 0; b < alg.n; ++b) {
        Matrix<S> img = ops[b] * v;
        S lam = img(lead, 0) / v(lead, 0);
        Matrix<S> residual = img - lam * v;
        if constexpr (scalar_traits<S>::exact) {
            if (!residual.is_zero()) throw error(errc::internal, "joint eigenvector readback failed");
        } else {
            double scale = 0.0;
            for (std::size_t i = 0; i < dim_v; ++i) scale = std::max(scale, std::abs(img(i, 0)));
            if (!residual.is_zero(std::max(1.0, scale) * pol.tol * 1e3)) throw no_common_eigenvector();
        }
        out.weight.push_back(lam);
    }
    return out;
}

// ---- adapted basis ----------------------------------------------------------

template <class S>
struct AdaptedBasis {
    Matrix<S> B;                 // columns: new basis in old coordinates
    std::size_t derived_dim = 0; // the first derived_dim vectors span L^2
};

// The working basis already realizes a flag of ideals whose first
// derived_dim vectors span L^2.
template <class S>
bool is_adapted(const LieAlgebra<S>& L, double tol = 1e-9) {
    if (!has_flag_shape(L, scalar_traits<S>::exact ? 0.0 : tol)) return false;
    Matrix<S> der = derived_subalgebra(L);
    std::size_t k = der.cols();
    if (k == 0) return true;
    Matrix<S> prefix = Matrix<S>::identity(L.n).block(0, 0, L.n, k);
    return rank(hstack(der, prefix), tol) == k;
}

/*
 * Refines the chain L >= L^2 >= [L, L^2] >= ... to a full flag of ideals by
 * repeated joint-eigenvector extraction for the induced adjoint action on
 * each quotient layer.  Deepest layers are exhausted first, so the leading
 * dim L^2 vectors of the result span L^2.
 */
template <class S, class Policy = default_policy_t<S>>
AdaptedBasis<S> adapted_basis(const LieAlgebra<S>& L, const Policy& pol = Policy{}) {
    if (!is_solvable(L)) throw not_solvable();
    const std::size_t n = L.n;

    std::vector<Matrix<S>> chain{Matrix<S>::identity(n)};
    Matrix<S> cur = derived_subalgebra(L);
    while (cur.cols() > 0 && cur.cols() < chain.back().cols()) {
        chain.push_back(cur);
        Matrix<S> next = bracket_span(L, Matrix<S>::identity(n), cur);
        if (next.cols() == cur.cols()) break;
        cur = next;
    }

    Matrix<S> acc(n, 0);
    for (auto t = chain.rbegin(); t != chain.rend(); ++t) {
        const Matrix<S>& target = *t;
        while (acc.cols() < target.cols()) {
            Matrix<S> comp = extend_basis(acc, target, pol.tol);
            Matrix<S> images(n, 0);
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t j = 0; j < comp.cols(); ++j)
                    images = hstack(images, L.bracket(unit_column<S>(n, b), comp.col(j)));
            Matrix<S> sub_comp = hstack(acc, comp);
            std::vector<Matrix<S>> qops(n);
            Matrix<S> x = solve(sub_comp, images);
            for (std::size_t b = 0; b < n; ++b) {
                Matrix<S> q(comp.cols(), comp.cols());
                for (std::size_t i = 0; i < comp.cols(); ++i)
                    for (std::size_t j = 0; j < comp.cols(); ++j)
                        q(i, j) = x(acc.cols() + i, b * comp.cols() + j);
                qops[b] = std::move(q);
            }
            CommonEigenvector<S> ce = common_eigenvector(L, qops, pol);
            Matrix<S> v = comp * ce.vec;
            std::vector<Matrix<S>> vv{v};
            acc = hstack(acc, pol.pick(vv));
        }
    }

    AdaptedBasis<S> out;
    out.B = acc;
    out.derived_dim = derived_subalgebra(L).cols();
    return out;
}

} // namespace liespec

#endif
