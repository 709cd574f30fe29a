#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gssp/linalg.hpp"
#include "gssp/matrix.hpp"
#include "test_util.hpp"

using namespace gssp;

namespace {

RatMatrix seeded_matrix(std::uint64_t seed, int rows, int cols) {
    std::mt19937_64 rng(seed);
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            long num = static_cast<long>(rng() % 21) - 10;
            long den = 1 + static_cast<long>(rng() % 7);
            m.at(i, j) = Rat(num, den);
        }
    return m;
}

}  // namespace

TEST_CASE("rank of known matrices") {
    CHECK(rank_exact(RatMatrix::identity(5)) == 5);
    CHECK(rank_exact(RatMatrix::zero(3, 4)) == 0);
    CHECK(rank_exact(RatMatrix::ones(4, 4)) == 1);
    // rows 2 and 3 are multiples of row 1 plus row 0
    RatMatrix m = parse_matrix("3 3\n1 2 3\n0 1 1\n2 5 7");
    CHECK(rank_exact(m) == 2);
    CHECK(rank_exact_serial(m) == 2);
    CHECK(rank_exact_transposed(m) == 2);
}

TEST_CASE("rank agrees across elimination orders and kernels") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        RatMatrix m = seeded_matrix(seed, 4 + seed % 5, 3 + seed % 6);
        int r = rank_exact(m);
        CHECK(r == rank_exact_serial(m));
        CHECK(r == rank_exact_transposed(m));
    }
}

TEST_CASE("rank is invariant under scaling and transpose") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        RatMatrix m = seeded_matrix(seed, 5, 7);
        CHECK(rank_exact(m) == rank_exact(m.transpose()));
        CHECK(rank_exact(m) == rank_exact(m * Rat(-7, 3)));
    }
}

TEST_CASE("nullspace basis") {
    RatMatrix m = parse_matrix("1 2\n1 1");
    auto basis = nullspace_basis(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].at(0, 0) == -basis[0].at(1, 0));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        RatMatrix a = seeded_matrix(seed, 4, 6);
        auto ns = nullspace_basis(a);
        CHECK(static_cast<int>(ns.size()) == 6 - rank_exact(a));
        for (const auto& v : ns) CHECK((a * v).is_zero());
    }
    CHECK(nullspace_basis(RatMatrix::identity(3)).empty());
}

TEST_CASE("characteristic polynomial known values") {
    // P_3 adjacency: x^3 - 2x
    RatPoly p = char_poly(adjacency_matrix(path(3)));
    CHECK(p.coeff == std::vector<Rat>{0, -2, 0, 1});
    // C_4 adjacency: x^4 - 4x^2
    RatPoly c = char_poly(adjacency_matrix(cycle(4)));
    CHECK(c.coeff == std::vector<Rat>{0, 0, -4, 0, 1});
    CHECK(char_poly(RatMatrix::zero(2, 2)).coeff == std::vector<Rat>{0, 0, 1});
}

TEST_CASE("Cayley-Hamilton on seeded symmetric matrices") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        int n = 2 + static_cast<int>(seed % 5);
        RatMatrix a = seeded_matrix(seed, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) a.at(j, i) = a.at(i, j);
        CHECK(char_poly(a).eval(a).is_zero());
    }
}

TEST_CASE("poly gcd and q") {
    // gcd(x^2 - 1, (x - 1)^2) = x - 1
    RatPoly a{{-1, 0, 1}}, b{{1, -2, 1}};
    CHECK(poly_gcd(a, b).coeff == std::vector<Rat>{-1, 1});
    CHECK(q_of(RatMatrix::identity(4)) == 1);
    RatMatrix d = RatMatrix::zero(3, 3);
    d.at(0, 0) = 1;
    d.at(1, 1) = 2;
    d.at(2, 2) = 3;
    CHECK(q_of(d) == 3);
    CHECK(q_of(RatMatrix::ones(3, 3)) == 2);  // eigenvalues 3, 0
    // paths have all eigenvalues distinct
    for (int n = 2; n <= 7; ++n) CHECK(q_of(adjacency_matrix(path(n))) == n);
    RatMatrix ns = RatMatrix::zero(2, 2);
    ns.at(0, 1) = 1;
    CHECK_THROWS_AS(q_of(ns), std::invalid_argument);
}

TEST_CASE("sample_in_S membership and determinism") {
    Graph g = lollipop(3, 2);
    RatMatrix a = sample_in_S(g, 42);
    CHECK(in_S(a, g));
    CHECK(a == sample_in_S(g, 42));
    CHECK(a != sample_in_S(g, 43));
    for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(in_S(sample_in_S(cycle(6), seed), cycle(6)));
}

TEST_CASE("pattern predicates") {
    Graph p4 = path(4);
    CHECK(in_S(adjacency_matrix(p4), p4));
    CHECK(!in_S(adjacency_matrix(p4), cycle(4)));
    RatMatrix x = RatMatrix::zero(4, 4);
    x.at(0, 2) = 1;
    x.at(2, 0) = 1;
    CHECK(in_Sbar0(x, complement(p4)));
    CHECK(!in_Sbar0(x, p4));
    x.at(1, 1) = 1;
    CHECK(!in_Sbar0(x, complement(p4)));
}
