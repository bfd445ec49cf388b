#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace liespec;
using namespace corpus;

TEST_CASE("validate accepts genuine algebras") {
    CHECK(validate(abelian(3)).ok());
    CHECK(validate(a2()).ok());
    CHECK(validate(heisenberg()).ok());
    CHECK(validate(r3(gr(2))).ok());
    CHECK(validate(n4()).ok());
    CHECK(validate(sl2_like()).ok());
}

TEST_CASE("validate reports antisymmetry violations") {
    ExactLieAlgebra L(2);
    L.c_at(0, 1, 0) = gr(1);
    L.c_at(1, 0, 0) = gr(1); // should be -1
    auto rep = validate(L);
    REQUIRE(rep.antisymmetry_violations.size() == 1);
    CHECK(rep.antisymmetry_violations[0][0] == 0);
    CHECK(rep.antisymmetry_violations[0][1] == 1);
}

TEST_CASE("validate reports Jacobi failures") {
    // [x1,x2]=x3, [x1,x3]=x1 breaks Jacobi on (1,2,3)
    ExactLieAlgebra L(3);
    L.set_bracket(0, 1, {gr(0), gr(0), gr(1)});
    L.set_bracket(0, 2, {gr(1), gr(0), gr(0)});
    auto rep = validate(L);
    CHECK(rep.antisymmetry_violations.empty());
    REQUIRE_FALSE(rep.jacobi_failures.empty());
}

TEST_CASE("derived series and solvability") {
    auto a2s = derived_series(a2());
    REQUIRE(a2s.flag.members.size() == 3);
    CHECK(a2s.flag.members[1].cols() == 1);
    CHECK(a2s.reached_zero);

    auto ab = derived_series(abelian(3));
    CHECK(ab.flag.members.size() == 2);
    CHECK(ab.reached_zero);

    auto sl2 = derived_series(sl2_like());
    CHECK_FALSE(sl2.reached_zero);
    CHECK(sl2.flag.members.back().cols() == 3);
}

TEST_CASE("lower central series and nilpotency") {
    auto h = lower_central_series(heisenberg());
    REQUIRE(h.flag.members.size() == 3);
    CHECK(h.flag.members[1].cols() == 1);
    CHECK(h.reached_zero);

    auto a = lower_central_series(a2());
    CHECK_FALSE(a.reached_zero);
    CHECK(a.flag.members.back().cols() == 1);

    CHECK(lower_central_series(abelian(2)).reached_zero);
    CHECK(is_nilpotent(n4()));
    CHECK_FALSE(is_nilpotent(r3(gr(1))));
}

TEST_CASE("series lengths are bounded by the dimension") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 20; ++t) {
        auto inst = random_instance(rng);
        CHECK(derived_series(inst.algebra).flag.members.size() <= inst.algebra.n + 1);
        CHECK(lower_central_series(inst.algebra).flag.members.size() <= inst.algebra.n + 1);
    }
}

TEST_CASE("ad matrices on pinned examples") {
    CHECK(a2().ad_matrix(1) == from_ints({{1, 0}, {0, 0}}));
    CHECK(a2().ad_matrix(0) == from_ints({{0, -1}, {0, 0}}));
    CHECK(abelian(3).ad_matrix(1) == ExactMatrix(3, 3));
    CHECK_THROWS_AS(a2().ad_matrix(5), error);
}

TEST_CASE("opposite negates constants and stays a Lie algebra") {
    ExactLieAlgebra o = opposite(a2());
    CHECK(o.bracket_coords(1, 0)(0, 0) == gr(-1));
    CHECK(validate(o).ok());
    CHECK(opposite(o).c == a2().c);
    CHECK(opposite(abelian(2)).c == abelian(2).c);
    CHECK(opposite(heisenberg()).bracket_coords(2, 1)(0, 0) == gr(-1));

    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        auto inst = random_instance(rng);
        CHECK(validate(opposite(inst.algebra)).ok());
    }
}

TEST_CASE("trace vector on pinned examples") {
    auto tauerr = a2();
    CHECK(trace_vector(a2()) == Character<GaussianRational>{gr(0), gr(1)});
    CHECK(trace_vector(heisenberg()) == Character<GaussianRational>{gr(0), gr(0), gr(0)});
    CHECK(trace_vector(abelian(2)) == Character<GaussianRational>{gr(0), gr(0)});
    CHECK(trace_vector(r3(gr(2))) == Character<GaussianRational>{gr(0), gr(0), gr(3)});
}

TEST_CASE("trace vector requires the flag shape") {
    // swap the A2 basis so [x1', x2'] = x2' : c(0,1,1) = 1, not flag-shaped
    ExactLieAlgebra L(2);
    L.set_bracket(0, 1, {gr(0), gr(1)});
    CHECK_FALSE(has_flag_shape(L));
    CHECK_THROWS_AS(trace_vector(L), basis_not_adapted);
}

TEST_CASE("trace vector of nilpotent algebras is zero") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 15; ++t) {
        auto inst = random_instance(rng, true);
        auto ad = adapted_basis(inst.algebra);
        ExactLieAlgebra adapted = change_basis(inst.algebra, ad.B);
        for (const auto& v : trace_vector(adapted)) CHECK(v.is_zero());
    }
}

TEST_CASE("characters annihilate brackets") {
    CHECK(is_character(a2(), {gr(0), gr(7, 3)}));
    CHECK_FALSE(is_character(a2(), {gr(1), gr(0)}));
    CHECK(is_character(heisenberg(), {gr(0), gr(2), gr(-5)}));
    std::mt19937_64 rng(11);
    for (int t = 0; t < 25; ++t) {
        auto inst = random_instance(rng);
        CHECK(is_character(inst.algebra, random_character(rng, inst.algebra)));
    }
}

TEST_CASE("ideal predicate") {
    CHECK(is_ideal(a2(), from_ints({{1}, {0}})));      // L^2
    CHECK_FALSE(is_ideal(a2(), from_ints({{0}, {1}}))); // span(x2) is not an ideal
    CHECK(is_ideal(heisenberg(), from_ints({{1}, {0}, {0}})));
    CHECK(is_ideal(a2(), ExactMatrix::identity(2)));
    CHECK(is_ideal(a2(), ExactMatrix(2, 0)));
}

TEST_CASE("change of basis preserves validity and is invertible") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 15; ++t) {
        auto inst = random_instance(rng);
        ExactMatrix b = random_unimodular(rng, inst.algebra.n);
        ExactLieAlgebra moved = change_basis(inst.algebra, b);
        CHECK(validate(moved).ok());
        ExactLieAlgebra back = change_basis(moved, exact::inverse(b));
        CHECK(back.c == inst.algebra.c);
    }
}
