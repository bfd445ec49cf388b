#ifndef LIESPEC_TEST_SUPPORT_HPP
#define LIESPEC_TEST_SUPPORT_HPP

#include <liespec/liespec.hpp>

#include <random>

// Shared corpus: pinned algebras and representations plus seeded random
// instances built from catalog presentations conjugated by unimodular
// integer matrices (so everything stays exact and nontrivially presented).
namespace corpus {

using namespace liespec;

inline GaussianRational gr(long rn, long rd = 1, long in = 0, long id = 1) {
    return {BigRat(rn, rd), BigRat(in, id)};
}

inline ExactMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows) {
    ExactMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m(i, j++) = gr(v);
        ++i;
    }
    return m;
}

// ---- pinned algebras ---------------------------------------------------------

// [x2, x1] = x1 (adapted order: L^2 = <x1> first)
inline ExactLieAlgebra a2() {
    ExactLieAlgebra L(2);
    L.set_bracket(1, 0, {gr(1), gr(0)});
    return L;
}

// Heisenberg: [x3, x2] = x1, x1 central
inline ExactLieAlgebra heisenberg() {
    ExactLieAlgebra L(3);
    L.set_bracket(2, 1, {gr(1), gr(0), gr(0)});
    return L;
}

inline ExactLieAlgebra abelian(std::size_t n) { return ExactLieAlgebra(n); }

// [x3, x1] = x1, [x3, x2] = lambda x2
inline ExactLieAlgebra r3(const GaussianRational& lambda) {
    ExactLieAlgebra L(3);
    L.set_bracket(2, 0, {gr(1), gr(0), gr(0)});
    L.set_bracket(2, 1, {gr(0), lambda, gr(0)});
    return L;
}

// filiform n4: [x4, x3] = x2, [x4, x2] = x1
inline ExactLieAlgebra n4() {
    ExactLieAlgebra L(4);
    L.set_bracket(3, 2, {gr(0), gr(1), gr(0), gr(0)});
    L.set_bracket(3, 1, {gr(1), gr(0), gr(0), gr(0)});
    return L;
}

// sl2 constants: [h,e] = 2e, [h,f] = -2f, [e,f] = h  (order e, f, h)
inline ExactLieAlgebra sl2_like() {
    ExactLieAlgebra L(3);
    L.set_bracket(2, 0, {gr(2), gr(0), gr(0)});   // [h, e] = 2e
    L.set_bracket(2, 1, {gr(0), gr(-2), gr(0)});  // [h, f] = -2f
    L.set_bracket(0, 1, {gr(0), gr(0), gr(1)});   // [e, f] = h
    return L;
}

// ---- pinned representations -----------------------------------------------------

// M_{x1} = [[0,1],[0,0]], M_{x2} = diag(1,0)
inline ExactRepresentation a2_r2() {
    return {a2(), {from_ints({{0, 1}, {0, 0}}), from_ints({{1, 0}, {0, 0}})}};
}

inline ExactRepresentation adjoint_rep(const ExactLieAlgebra& L) {
    std::vector<ExactMatrix> mats;
    for (std::size_t i = 0; i < L.n; ++i) mats.push_back(L.ad_matrix(i));
    return {L, std::move(mats)};
}

// strictly upper triangular 3x3: x1 -> E13, x2 -> E23, x3 -> E12
inline ExactRepresentation heisenberg_std() {
    return {heisenberg(),
            {from_ints({{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}),
             from_ints({{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}),
             from_ints({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}})}};
}

// direct sum of two representations of the same algebra
inline ExactRepresentation direct_sum(const ExactRepresentation& a, const ExactRepresentation& b) {
    ExactRepresentation out;
    out.algebra = a.algebra;
    out.dim_e = a.dim_e + b.dim_e;
    for (std::size_t i = 0; i < a.algebra.n; ++i) {
        ExactMatrix m(out.dim_e, out.dim_e);
        m.set_block(0, 0, a.mats[i]);
        m.set_block(a.dim_e, a.dim_e, b.mats[i]);
        out.mats.push_back(std::move(m));
    }
    return out;
}

// one-dimensional representation given by a character
inline ExactRepresentation character_rep(const ExactLieAlgebra& L, const Character<GaussianRational>& f) {
    std::vector<ExactMatrix> mats;
    for (std::size_t i = 0; i < L.n; ++i) {
        ExactMatrix m(1, 1);
        m(0, 0) = f[i];
        mats.push_back(std::move(m));
    }
    return {L, std::move(mats)};
}

inline ExactRepresentation zero_rep(const ExactLieAlgebra& L, std::size_t m) {
    return {L, std::vector<ExactMatrix>(L.n, ExactMatrix(m, m))};
}

// ---- randomization ---------------------------------------------------------------

// determinant +-1 integer matrix from random elementary operations
inline ExactMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = -1) {
    ExactMatrix u = ExactMatrix::identity(n);
    if (n == 1) return u;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<long> coeff(-2, 2);
    if (steps < 0) steps = static_cast<int>(3 * n);
    for (int s = 0; s < steps; ++s) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        long k = coeff(rng);
        if (k == 0) k = 1;
        for (std::size_t r = 0; r < n; ++r) u(r, i) += gr(k) * u(r, j);
    }
    return u;
}

// random functional annihilating L^2: a rational combination of a kernel
// basis of der^T
inline Character<GaussianRational> random_character(std::mt19937_64& rng, const ExactLieAlgebra& L) {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 2);
    Matrix<GaussianRational> der = derived_subalgebra(L);
    Character<GaussianRational> f(L.n, gr(0));
    if (der.cols() == 0) {
        for (std::size_t i = 0; i < L.n; ++i) f[i] = gr(num(rng), den(rng));
        return f;
    }
    for (const auto& v : exact::kernel_basis(der.transpose())) {
        GaussianRational coeff = gr(num(rng), den(rng));
        for (std::size_t i = 0; i < L.n; ++i) f[i] += coeff * v(i, 0);
    }
    return f;
}

struct RandomInstance {
    ExactLieAlgebra algebra;
    ExactRepresentation rep;
    bool nilpotent = false;
};

// catalog algebra + catalog representation, both conjugated
inline RandomInstance random_instance(std::mt19937_64& rng, bool nilpotent_only = false) {
    std::uniform_int_distribution<int> pick(0, nilpotent_only ? 2 : 5);
    ExactLieAlgebra L;
    bool nil = true;
    switch (pick(rng)) {
        case 0: L = heisenberg(); break;
        case 1: L = abelian(2 + pick(rng) % 2); break;
        case 2: L = n4(); break;
        case 3: L = a2(); nil = false; break;
        case 4: L = r3(gr(1 + pick(rng) % 3)); nil = false; break;
        default: L = r3(gr(-1)); nil = false; break;
    }
    std::uniform_int_distribution<int> rpick(0, 3);
    ExactRepresentation rep;
    switch (rpick(rng)) {
        case 0: rep = adjoint_rep(L); break;
        case 1: rep = zero_rep(L, 2); break;
        case 2: {
            Character<GaussianRational> f = random_character(rng, L);
            rep = direct_sum(character_rep(L, f), character_rep(L, random_character(rng, L)));
            break;
        }
        default: {
            Character<GaussianRational> f = random_character(rng, L);
            rep = direct_sum(character_rep(L, f), zero_rep(L, 1));
            break;
        }
    }
    // conjugate the module
    ExactMatrix q = random_unimodular(rng, rep.dim_e);
    ExactMatrix qi = exact::inverse(q);
    for (auto& m : rep.mats) m = qi * m * q;
    // shuffle the algebra basis
    ExactMatrix b = random_unimodular(rng, L.n);
    rep = change_basis(rep, b);
    return {rep.algebra, rep, nil};
}

// commuting family: polynomials in one upper-triangular seed, conjugated
inline std::vector<ExactMatrix> random_commuting_family(std::mt19937_64& rng, std::size_t count,
                                                        std::size_t dim) {
    std::uniform_int_distribution<long> d(-3, 3);
    ExactMatrix seed(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) seed(i, j) = gr(d(rng));
    ExactMatrix q = random_unimodular(rng, dim);
    ExactMatrix qi = exact::inverse(q);
    std::vector<ExactMatrix> out;
    for (std::size_t k = 0; k < count; ++k) {
        // degree-2 polynomial in the seed
        ExactMatrix p(dim, dim);
        GaussianRational c0 = gr(d(rng)), c1 = gr(d(rng)), c2 = gr(d(rng));
        ExactMatrix id = ExactMatrix::identity(dim);
        p = c0 * id + c1 * seed + c2 * (seed * seed);
        out.push_back(qi * p * q);
    }
    return out;
}

} // namespace corpus

#endif
