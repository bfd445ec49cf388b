#ifndef LIESPEC_DUALITY_HPP
#define LIESPEC_DUALITY_HPP

#include "spectra.hpp"

namespace liespec {

template <class S>
Character<S> translate(const Character<S>& f, const Character<S>& by, int sign = 1) {
    Character<S> out(f);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = sign > 0 ? out[i] + by[i] : out[i] - by[i];
    return out;
}

template <class S>
std::vector<Character<S>> translate_all(const std::vector<Character<S>>& pts, const Character<S>& by,
                                        int sign = 1) {
    std::vector<Character<S>> out;
    for (const auto& f : pts) out.push_back(translate(f, by, sign));
    return out;
}

template <class S>
struct DualityReport {
    Character<S> trace_vec;
    SpectrumResult<S> sp_primal;
    SpectrumResult<S> sp_dual;
    bool translation_verified = false;
    int calibration_sign = 0; // +1: Sp(L,E) + trace = Sp(L',E*); -1 would be the mirror
};

/*
 * Verifies the translation identity between the spectrum of (L, E) and that
 * of the opposite algebra on the dual module:
 *     Sp(L, E) + trace vector = Sp(L', E*).
 * Both sides are computed independently.  The sign is probed both ways and
 * reported; under the action convention fixed in this library it must come
 * out +1 on every instance.
 */
template <class S, class Policy = default_policy_t<S>>
DualityReport<S> dual_spectrum_check(const LieAlgebra<S>& L, const Representation<S>& r,
                                     const Policy& pol = Policy{}) {
    double tol = pol.tol > 0 ? pol.tol : 1e-9;
    DualityReport<S> rep;
    rep.trace_vec = trace_vector(L, scalar_traits<S>::exact ? 0.0 : tol);
    rep.sp_primal = sp(L, r, pol);
    rep.sp_dual = sp(opposite(L), dual_rep(r), pol);
    if (same_point_set(translate_all(rep.sp_primal.points, rep.trace_vec, 1), rep.sp_dual.points, tol)) {
        rep.translation_verified = true;
        rep.calibration_sign = 1;
    } else if (same_point_set(translate_all(rep.sp_primal.points, rep.trace_vec, -1), rep.sp_dual.points,
                              tol)) {
        rep.translation_verified = true;
        rep.calibration_sign = -1;
    }
    return rep;
}

// Nilpotent case: zero trace vector and on-the-nose equality of both spectra.
template <class S, class Policy = default_policy_t<S>>
bool nilpotent_check(const LieAlgebra<S>& L, const Representation<S>& r, const Policy& pol = Policy{}) {
    if (!is_nilpotent(L)) throw not_nilpotent();
    double tol = pol.tol > 0 ? pol.tol : 1e-9;
    Character<S> tau = trace_vector(L, scalar_traits<S>::exact ? 0.0 : tol);
    for (const auto& t : tau)
        if (!scalar_traits<S>::is_zero(t, tol)) return false;
    SpectrumResult<S> a = sp(L, r, pol);
    SpectrumResult<S> b = sp(opposite(L), dual_rep(r), pol);
    return same_point_set(a.points, b.points, tol);
}

struct SlodkowskiDualityReport {
    std::size_t k = 0;
    bool delta_to_pi = false; // sigma_{delta,k}(L,E) + trace = sigma_{pi,n-k}(L',E*)
    bool pi_to_delta = false; // sigma_{pi,k}(L,E) = sigma_{delta,n-k}(L',E*) - trace
    bool ok() const { return delta_to_pi && pi_to_delta; }
};

/*
 * Level-k duality.  The rho intertwining swaps homology degree p with n-p, so
 * the delta family at level k lands in the pi family at level n-k of the dual
 * instance, shifted by the trace vector, and symmetrically.
 */
template <class S, class Policy = default_policy_t<S>>
SlodkowskiDualityReport slodkowski_duality_check(const LieAlgebra<S>& L, const Representation<S>& r,
                                                 std::size_t k, const Policy& pol = Policy{}) {
    const std::size_t n = L.n;
    if (k > n) throw error(errc::bad_input, "Slodkowski level k out of range 0..n");
    double tol = pol.tol > 0 ? pol.tol : 1e-9;
    SlodkowskiDualityReport rep;
    rep.k = k;
    Character<S> tau = trace_vector(L, scalar_traits<S>::exact ? 0.0 : tol);
    LieAlgebra<S> lop = opposite(L);
    Representation<S> rdual = dual_rep(r);

    SpectrumResult<S> delta_primal = slodkowski(L, r, {SlodkowskiQuery::Family::delta, k}, pol);
    SpectrumResult<S> pi_dual = slodkowski(lop, rdual, {SlodkowskiQuery::Family::pi, n - k}, pol);
    rep.delta_to_pi = same_point_set(translate_all(delta_primal.points, tau, 1), pi_dual.points, tol);

    SpectrumResult<S> pi_primal = slodkowski(L, r, {SlodkowskiQuery::Family::pi, k}, pol);
    SpectrumResult<S> delta_dual = slodkowski(lop, rdual, {SlodkowskiQuery::Family::delta, n - k}, pol);
    rep.pi_to_delta = same_point_set(pi_primal.points, translate_all(delta_dual.points, tau, -1), tol);

    return rep;
}

} // namespace liespec

#endif
