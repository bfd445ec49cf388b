#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace liespec;
using namespace corpus;

TEST_CASE("validate_rep accepts the pinned instances") {
    CHECK(validate_rep(a2_r2()).ok());
    CHECK(validate_rep(heisenberg_std()).ok());
    CHECK(validate_rep(zero_rep(a2(), 3)).ok());
    CHECK(validate_rep(adjoint_rep(r3(gr(2)))).ok());
    CHECK(validate_rep(adjoint_rep(n4())).ok());
}

TEST_CASE("non-commuting matrices over an abelian algebra are flagged") {
    ExactRepresentation r{abelian(2),
                          {from_ints({{0, 1}, {0, 0}}), from_ints({{0, 0}, {1, 0}})}};
    auto rep = validate_rep(r);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0][0] == 0);
    CHECK(rep.violations[0][1] == 1);
}

TEST_CASE("dimension mismatches throw") {
    ExactRepresentation r{a2(), {ExactMatrix(2, 2)}};
    CHECK_THROWS_AS(validate_rep(r), error);
    ExactRepresentation r2{a2(), {ExactMatrix(2, 2), ExactMatrix(3, 3)}};
    CHECK_THROWS_AS(validate_rep(r2), error);
}

TEST_CASE("dual representation transposes and negates brackets") {
    auto d = dual_rep(a2_r2());
    CHECK(d.mats[0] == from_ints({{0, 0}, {1, 0}}));
    CHECK(d.mats[1] == from_ints({{1, 0}, {0, 0}}));
    CHECK(d.algebra.bracket_coords(1, 0)(0, 0) == gr(-1));
    CHECK(validate_rep(d).ok());

    auto dd = dual_rep(d);
    CHECK(dd.mats[0] == a2_r2().mats[0]);
    CHECK(dd.algebra.c == a2().c);

    CHECK(validate_rep(dual_rep(zero_rep(a2(), 2))).ok());
}

TEST_CASE("dual of every valid random representation validates") {
    std::mt19937_64 rng(1234);
    for (int t = 0; t < 25; ++t) {
        auto inst = random_instance(rng);
        REQUIRE(validate_rep(inst.rep).ok());
        CHECK(validate_rep(dual_rep(inst.rep)).ok());
    }
}

TEST_CASE("float weights oracle reads the triangular diagonal") {
    auto ws = weights_float_oracle(a2_r2());
    REQUIRE(ws.size() == 2);
    std::vector<std::pair<double, double>> got;
    for (const auto& w : ws) got.push_back({w[0].real(), w[1].real()});
    std::sort(got.begin(), got.end());
    CHECK(got[0].first == Catch::Approx(0.0).margin(1e-9));
    CHECK(got[0].second == Catch::Approx(0.0).margin(1e-9));
    CHECK(got[1].second == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("weights of nilpotent standard representation collapse to zero") {
    auto ws = weights_float_oracle(heisenberg_std());
    REQUIRE(ws.size() == 3);
    for (const auto& w : ws)
        for (const auto& v : w) CHECK(std::abs(v) < 1e-8);
}

TEST_CASE("all-zero representation has only the zero weight") {
    auto ws = weights_float_oracle(zero_rep(a2(), 2));
    REQUIRE(ws.size() == 2);
    for (const auto& w : ws)
        for (const auto& v : w) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("every oracle weight annihilates the derived subalgebra") {
    std::mt19937_64 rng(555);
    for (int t = 0; t < 20; ++t) {
        auto inst = random_instance(rng);
        auto lf = to_float(inst.algebra);
        auto der = derived_subalgebra(lf);
        for (const auto& w : weights_float_oracle(inst.rep)) {
            for (std::size_t j = 0; j < der.cols(); ++j) {
                Complex s = 0.0;
                for (std::size_t a = 0; a < lf.n; ++a) s += w[a] * der(a, j);
                CHECK(std::abs(s) < 1e-7);
            }
        }
    }
}

TEST_CASE("restriction to an ideal is a representation of the ideal") {
    auto rep = heisenberg_std();
    ExactMatrix center = from_ints({{1}, {0}, {0}});
    auto restricted = restrict_rep(rep, center);
    CHECK(restricted.algebra.n == 1);
    CHECK(validate_rep(restricted).ok());
    ExactMatrix plane = from_ints({{1, 0}, {0, 1}, {0, 0}});
    auto r2 = restrict_rep(rep, plane);
    CHECK(r2.algebra.n == 2);
    CHECK(validate_rep(r2).ok());
}
