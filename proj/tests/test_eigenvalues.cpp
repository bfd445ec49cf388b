#include <catch2/catch_amalgamated.hpp>

#include <liespec/eigenvalues.hpp>

#include <random>

using namespace liespec;

namespace {

GaussianRational gr(long rn, long rd = 1, long in = 0, long id = 1) {
    return {BigRat(rn, rd), BigRat(in, id)};
}

ExactMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows) {
    ExactMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m(i, j++) = gr(v);
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("diagonal and nilpotent spectra") {
    auto e = try_eigenvalues(from_ints({{1, 0}, {0, 0}}));
    CHECK(e.complete);
    REQUIRE(e.roots.size() == 2);
    CHECK(e.roots[0] == gr(0));
    CHECK(e.roots[1] == gr(1));

    auto n = try_eigenvalues(from_ints({{0, 1}, {0, 0}}));
    CHECK(n.complete);
    REQUIRE(n.roots.size() == 2);
    CHECK(n.roots[0] == gr(0));
    CHECK(n.roots[1] == gr(0));
}

TEST_CASE("rotation matrix has spectrum {i, -i}") {
    auto e = try_eigenvalues(from_ints({{0, -1}, {1, 0}}));
    CHECK(e.complete);
    REQUIRE(e.roots.size() == 2);
    CHECK(e.roots[0] == -GaussianRational::i());
    CHECK(e.roots[1] == GaussianRational::i());
}

TEST_CASE("irrational spectrum is flagged, not fabricated") {
    // eigenvalues +-sqrt(2)
    auto e = try_eigenvalues(from_ints({{0, 2}, {1, 0}}));
    CHECK_FALSE(e.complete);
    CHECK(e.roots.empty());
    CHECK_THROWS_AS(eigenvalues_exact(from_ints({{0, 2}, {1, 0}})), irrational_spectrum);
    // mixed: one rational eigenvalue, one irreducible quadratic factor
    auto mixed = try_eigenvalues(from_ints({{3, 0, 0}, {0, 0, 2}, {0, 1, 0}}));
    CHECK_FALSE(mixed.complete);
    REQUIRE(mixed.roots.size() == 1);
    CHECK(mixed.roots[0] == gr(3));
}

TEST_CASE("triangular spectrum equals its diagonal multiset") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> d(-5, 5);
    for (int t = 0; t < 30; ++t) {
        std::size_t m = 2 + t % 4;
        ExactMatrix a(m, m);
        std::vector<GaussianRational> diag;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j) a(i, j) = gr(d(rng));
            diag.push_back(a(i, i));
        }
        std::sort(diag.begin(), diag.end());
        auto e = try_eigenvalues(a);
        CHECK(e.complete);
        CHECK(e.roots == diag);
    }
}

TEST_CASE("rational and Gaussian-rational eigenvalues with multiplicity") {
    // char poly (x - 1/2)^2 (x - i)
    ExactMatrix a(3, 3);
    a(0, 0) = gr(1, 2);
    a(0, 1) = gr(1);
    a(1, 1) = gr(1, 2);
    a(2, 2) = GaussianRational::i();
    auto e = try_eigenvalues(a);
    CHECK(e.complete);
    REQUIRE(e.roots.size() == 3);
    // sorted by (re, im): i before the double root 1/2
    CHECK(e.roots[0] == GaussianRational::i());
    CHECK(e.roots[1] == gr(1, 2));
    CHECK(e.roots[2] == gr(1, 2));
}

TEST_CASE("conjugation does not change the spectrum") {
    ExactMatrix a = from_ints({{2, 0, 0}, {0, -1, 0}, {0, 0, 3}});
    ExactMatrix p = from_ints({{1, 1, 0}, {0, 1, 2}, {1, 0, 1}});
    ExactMatrix b = exact::inverse(p) * a * p;
    auto e = try_eigenvalues(b);
    CHECK(e.complete);
    REQUIRE(e.roots.size() == 3);
    CHECK(e.roots[0] == gr(-1));
    CHECK(e.roots[1] == gr(2));
    CHECK(e.roots[2] == gr(3));
}
