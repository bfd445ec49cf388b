#ifndef LIESPEC_SPECTRA_HPP
#define LIESPEC_SPECTRA_HPP

#include <functional>
#include <set>

#include "koszul.hpp"

namespace liespec {

// ---- character ordering and set comparison ----------------------------------

template <class S>
bool scalar_less(const S& a, const S& b) {
    if constexpr (scalar_traits<S>::exact) {
        return a < b;
    } else {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    }
}

template <class S>
bool character_less(const Character<S>& a, const Character<S>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (scalar_less(a[i], b[i])) return true;
        if (scalar_less(b[i], a[i])) return false;
    }
    return a.size() < b.size();
}

template <class S>
bool character_close(const Character<S>& a, const Character<S>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!scalar_traits<S>::is_zero(a[i] - b[i], tol)) return false;
    return true;
}

// Set equality with exact matching or greedy tolerance pairing.
template <class S>
bool same_point_set(std::vector<Character<S>> a, std::vector<Character<S>> b, double tol = 1e-9) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end(), character_less<S>);
    std::sort(b.begin(), b.end(), character_less<S>);
    if constexpr (scalar_traits<S>::exact) {
        return a == b;
    } else {
        std::vector<bool> used(b.size(), false);
        for (const auto& p : a) {
            bool found = false;
            for (std::size_t j = 0; j < b.size() && !found; ++j)
                if (!used[j] && character_close(p, b[j], tol)) {
                    used[j] = true;
                    found = true;
                }
            if (!found) return false;
        }
        return true;
    }
}

template <class S>
std::vector<Character<S>> sorted_unique(std::vector<Character<S>> v, double tol = 1e-9) {
    std::sort(v.begin(), v.end(), character_less<S>);
    if constexpr (scalar_traits<S>::exact) {
        v.erase(std::unique(v.begin(), v.end()), v.end());
    } else {
        std::vector<Character<S>> out;
        for (const auto& p : v) {
            bool dup = false;
            for (const auto& q : out)
                if (character_close(p, q, tol)) dup = true;
            if (!dup) out.push_back(p);
        }
        v = std::move(out);
    }
    return v;
}

// ---- candidate characters -----------------------------------------------------

/*
 * Finite candidate grid that provably contains every character with nonzero
 * twisted homology.  On the adapted basis, peeling the flag one ideal at a
 * time shows that a homology point f must satisfy, coordinate by coordinate,
 *
 *   f(x_i) in { eigenvalue of M(x_i) } - { subset sums of the root values
 *               alpha_j(x_i) = coefficient of x_j in [x_i, x_j], j < i },
 *
 * and f vanishes on the leading dim L^2 coordinates.  The bare eigenvalue
 * grid is not enough: the connecting operator of the codimension-1 long
 * exact sequence shifts eigenvalues by the theta-weights of the wedge
 * factor, so top-degree homology lives at eigenvalue-minus-root-sum points.
 */
template <class S, class Policy = default_policy_t<S>>
std::vector<Character<S>> candidate_characters(const LieAlgebra<S>& L, const Representation<S>& r,
                                               const Policy& pol = Policy{}) {
    const std::size_t n = L.n;
    if (!is_adapted(L, pol.tol > 0 ? pol.tol : 1e-9))
        throw basis_not_adapted("candidate grid requires the adapted working basis");
    std::size_t k = derived_subalgebra(L).cols();

    std::vector<std::vector<S>> axis(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < k) {
            axis[i] = {scalar_traits<S>::zero()};
            continue;
        }
        std::vector<S> eigs;
        if constexpr (scalar_traits<S>::exact) {
            eigs = eigenvalues_exact(r.mats[i]); // throws irrational_spectrum if incomplete
        } else {
            eigs = fl::eigenvalues(r.mats[i]);
        }
        // subset sums of the roots visible at x_i
        std::vector<S> sums{scalar_traits<S>::zero()};
        for (std::size_t j = 0; j < i; ++j) {
            const S& root = L.c_at(i, j, j);
            if (scalar_traits<S>::is_zero(root, pol.tol)) continue;
            std::size_t cur = sums.size();
            for (std::size_t t = 0; t < cur; ++t) sums.push_back(sums[t] + root);
        }
        std::vector<S> vals;
        for (const auto& e : eigs)
            for (const auto& s : sums) vals.push_back(e - s);
        std::sort(vals.begin(), vals.end(), scalar_less<S>);
        std::vector<S> dedup;
        for (const auto& v : vals) {
            if (!dedup.empty() && scalar_traits<S>::is_zero(v - dedup.back(), pol.tol)) continue;
            dedup.push_back(v);
        }
        axis[i] = std::move(dedup);
    }

    std::vector<Character<S>> grid{Character<S>{}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Character<S>> next;
        next.reserve(grid.size() * axis[i].size());
        for (const auto& g : grid)
            for (const auto& v : axis[i]) {
                Character<S> e = g;
                e.push_back(v);
                next.push_back(std::move(e));
            }
        grid = std::move(next);
    }
    std::sort(grid.begin(), grid.end(), character_less<S>);
    return grid;
}

// ---- spectra -------------------------------------------------------------------

template <class S>
struct SpectrumResult {
    std::vector<Character<S>> points;           // sorted
    std::vector<HomologyProfile> profiles;      // parallel to points
    std::vector<Character<S>> candidates;       // grid examined
};

struct SlodkowskiQuery {
    enum class Family { delta, pi } family = Family::delta;
    std::size_t k = 0;
};

template <class S>
bool sigma_p_member(const LieAlgebra<S>& L, const Representation<S>& r, const Character<S>& f,
                    std::size_t p, double tol = 1e-9) {
    HomologyProfile prof = homology_dims(build_complex(L, r, f, tol));
    return p < prof.dims.size() && prof.dims[p] > 0;
}

namespace detail {

// Full scan of the candidate grid; the common engine behind sp and the
// Slodkowski families.
template <class S, class Policy = default_policy_t<S>>
SpectrumResult<S> scan_spectrum(const LieAlgebra<S>& L, const Representation<S>& r,
                                const std::function<bool(const HomologyProfile&)>& keep,
                                const Policy& pol = Policy{}) {
    SpectrumResult<S> out;
    out.candidates = candidate_characters(L, r, pol);
    for (const auto& f : out.candidates) {
        HomologyProfile prof = homology_dims(build_complex(L, r, f, pol.tol > 0 ? pol.tol : 1e-9));
        if (keep(prof)) {
            out.points.push_back(f);
            out.profiles.push_back(std::move(prof));
        }
    }
    return out;
}

// Monitors grid completeness against the float triangularization weights.
template <class S>
void cross_check_weights(const Representation<S>& r, const std::vector<Character<S>>& grid) {
    std::vector<Character<Complex>> weights;
    try {
        weights = weights_float_oracle(r, 1e-9);
    } catch (const no_common_eigenvector&) {
        return; // the monitor is best-effort; the grid derivation stands on its own
    }
    for (const auto& w : weights) {
        bool found = false;
        for (const auto& g : grid) {
            bool close = w.size() == g.size();
            for (std::size_t i = 0; close && i < w.size(); ++i) {
                Complex gv;
                if constexpr (scalar_traits<S>::exact) {
                    gv = g[i].to_complex();
                } else {
                    gv = g[i];
                }
                if (std::abs(w[i] - gv) > 1e-6) close = false;
            }
            if (close) found = true;
        }
        if (!found) throw empty_spectrum("triangularization weight escapes the candidate grid");
    }
}

} // namespace detail

// Sp(L, E): candidates with any nonzero homology.  Nonvoid by construction;
// an empty result signals a candidate-generation defect.
template <class S, class Policy = default_policy_t<S>>
SpectrumResult<S> sp(const LieAlgebra<S>& L, const Representation<S>& r, const Policy& pol = Policy{}) {
    SpectrumResult<S> out =
        detail::scan_spectrum<S>(L, r, [](const HomologyProfile& h) { return h.nonzero(); }, pol);
    detail::cross_check_weights(r, out.candidates);
    if (out.points.empty()) throw empty_spectrum();
    return out;
}

/*
 * Slodkowski families over the homology building blocks Sigma_p:
 *   sigma_{delta,k} = union of Sigma_p for 0 <= p <= k,
 *   sigma_{pi,k}    = union of Sigma_p for k <= p <= n.
 * The finite-dimensional closed-range clause is identically satisfied and is
 * surfaced as such in reports.  sigma_{delta,n} = sigma_{pi,0} = Sp.
 */
template <class S, class Policy = default_policy_t<S>>
SpectrumResult<S> slodkowski(const LieAlgebra<S>& L, const Representation<S>& r, SlodkowskiQuery q,
                             const Policy& pol = Policy{}) {
    const std::size_t n = L.n;
    if (q.k > n) throw error(errc::bad_input, "Slodkowski level k out of range 0..n");
    auto keep = [&](const HomologyProfile& h) {
        std::size_t lo = q.family == SlodkowskiQuery::Family::delta ? 0 : q.k;
        std::size_t hi = q.family == SlodkowskiQuery::Family::delta ? q.k : n;
        for (std::size_t p = lo; p <= hi && p < h.dims.size(); ++p)
            if (h.dims[p] > 0) return true;
        return false;
    };
    SpectrumResult<S> out = detail::scan_spectrum<S>(L, r, keep, pol);
    if (out.points.empty()) throw empty_spectrum("Slodkowski set is empty");
    return out;
}

// ---- projection ---------------------------------------------------------------

// Restriction of each point to the span of the ideal basis columns.
template <class S>
std::vector<Character<S>> project_points(const std::vector<Character<S>>& points, const Matrix<S>& ideal) {
    std::vector<Character<S>> out;
    for (const auto& f : points) {
        Character<S> g(ideal.cols(), scalar_traits<S>::zero());
        for (std::size_t j = 0; j < ideal.cols(); ++j)
            for (std::size_t a = 0; a < ideal.rows(); ++a)
                if (!scalar_traits<S>::is_zero(ideal(a, j))) g[j] += ideal(a, j) * f[a];
        out.push_back(std::move(g));
    }
    return sorted_unique(out);
}

template <class S>
std::vector<Character<S>> project_spectrum(const LieAlgebra<S>& L, const SpectrumResult<S>& s,
                                           const Matrix<S>& ideal, double tol = 1e-9) {
    if (!is_ideal(L, ideal, tol)) throw not_an_ideal();
    return project_points(s.points, ideal);
}

struct ProjectionReport {
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/*
 * Both sides of the projection property computed independently: the ideal is
 * re-adapted on its own and its spectra recomputed from scratch, then compared
 * against coordinate projections of the ambient spectra.  The delta family
 * projects at the same level k; the pi family's level shifts by the
 * codimension, pi_k(L) projecting onto pi_{max(0, k - (n-r))}(I).
 */
template <class S, class Policy = default_policy_t<S>>
ProjectionReport projection_check(const LieAlgebra<S>& L, const Representation<S>& r,
                                  const Matrix<S>& ideal, const Policy& pol = Policy{}) {
    double tol = pol.tol > 0 ? pol.tol : 1e-9;
    if (!is_ideal(L, ideal, tol)) throw not_an_ideal();
    ProjectionReport rep;
    const std::size_t n = L.n, rdim = ideal.cols();
    if (rdim == 0) return rep;

    LieAlgebra<S> isub = subalgebra(L, ideal, tol);
    Representation<S> irep = restrict_rep(r, ideal, tol);
    AdaptedBasis<S> iad = adapted_basis(isub, pol);
    LieAlgebra<S> ialg = change_basis(isub, iad.B);
    Representation<S> irep_ad = change_basis(irep, iad.B);
    Matrix<S> proj_basis = ideal * iad.B; // ideal's adapted vectors in ambient coordinates

    SpectrumResult<S> amb_sp = sp(L, r, pol);
    SpectrumResult<S> ideal_sp = sp(ialg, irep_ad, pol);
    if (!same_point_set(project_points(amb_sp.points, proj_basis), ideal_sp.points, tol))
        rep.mismatches.push_back("Sp");

    for (std::size_t k = 0; k <= n; ++k) {
        SpectrumResult<S> lhs = slodkowski(L, r, {SlodkowskiQuery::Family::delta, k}, pol);
        std::size_t ik = std::min(k, rdim);
        SpectrumResult<S> rhs = slodkowski(ialg, irep_ad, {SlodkowskiQuery::Family::delta, ik}, pol);
        if (!same_point_set(project_points(lhs.points, proj_basis), rhs.points, tol))
            rep.mismatches.push_back("sigma_delta k=" + std::to_string(k));
    }
    for (std::size_t k = 0; k <= n; ++k) {
        SpectrumResult<S> lhs = slodkowski(L, r, {SlodkowskiQuery::Family::pi, k}, pol);
        std::size_t shift = n - rdim;
        std::size_t ik = k > shift ? k - shift : 0;
        SpectrumResult<S> rhs = slodkowski(ialg, irep_ad, {SlodkowskiQuery::Family::pi, ik}, pol);
        if (!same_point_set(project_points(lhs.points, proj_basis), rhs.points, tol))
            rep.mismatches.push_back("sigma_pi k=" + std::to_string(k));
    }
    return rep;
}

// ---- commutative oracle ---------------------------------------------------------

/*
 * Taylor joint spectrum of a commuting family by simultaneous generalized
 * eigenspace splitting; independent of the chain-complex machinery.
 */
template <class S>
std::vector<Character<S>> taylor_oracle(const std::vector<Matrix<S>>& mats, double tol = 1e-9) {
    if (mats.empty()) throw error(errc::bad_input, "empty commuting family");
    const std::size_t m = mats.front().rows();
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j)
            if (!(mats[i] * mats[j] - mats[j] * mats[i]).is_zero(scalar_traits<S>::exact ? 0.0 : tol))
                throw not_commuting();

    struct Piece {
        Matrix<S> space;
        Character<S> tuple;
    };
    std::vector<Piece> pieces{{Matrix<S>::identity(m), {}}};
    for (const auto& a : mats) {
        std::vector<Piece> next;
        for (const auto& piece : pieces) {
            Matrix<S> restricted = solve(piece.space, a * piece.space);
            std::vector<S> eigs;
            if constexpr (scalar_traits<S>::exact) {
                eigs = eigenvalues_exact(restricted);
                eigs.erase(std::unique(eigs.begin(), eigs.end()), eigs.end());
            } else {
                FloatEigenPolicy pol{tol};
                eigs = pol.distinct_eigenvalues(restricted);
            }
            std::size_t found = 0;
            for (const auto& lam : eigs) {
                Matrix<S> shifted = restricted;
                for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) = shifted(i, i) - lam;
                auto kb = kernel_basis(matrix_power(shifted, shifted.rows()), tol);
                if (kb.empty()) continue;
                Matrix<S> gen(shifted.rows(), kb.size());
                for (std::size_t j = 0; j < kb.size(); ++j) gen.set_col(j, kb[j]);
                Piece p2{piece.space * gen, piece.tuple};
                p2.tuple.push_back(lam);
                found += kb.size();
                next.push_back(std::move(p2));
            }
            if constexpr (scalar_traits<S>::exact) {
                if (found != piece.space.cols())
                    throw error(errc::internal, "generalized eigenspaces do not fill the space");
            }
        }
        pieces = std::move(next);
    }
    std::vector<Character<S>> out;
    for (const auto& piece : pieces) out.push_back(piece.tuple);
    return sorted_unique(out, tol);
}

} // namespace liespec

#endif
