#include <doctest.h>

#include "fixtures.hpp"
#include "mantra/homology.hpp"
#include "oracle.hpp"

using mantra::IntegerMatrix;
using mantra::SimplicialComplex;

namespace {

IntegerMatrix make(std::size_t rows, std::size_t cols,
                   std::vector<long> entries) {
    IntegerMatrix M(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            M.at(r, c) = entries[r * cols + c];
    return M;
}

}  // namespace

TEST_CASE("boundary matrix of a single triangle") {
    auto K = SimplicialComplex::from_facets(fixtures::triangle());
    IntegerMatrix B = mantra::boundary_matrix(K, 2);
    REQUIRE(B.rows() == 3);
    REQUIRE(B.cols() == 1);
    // Edge rows in lexicographic order: {1,2}, {1,3}, {2,3}.
    CHECK(B.at(0, 0) == 1);   // remove vertex 3
    CHECK(B.at(1, 0) == -1);  // remove vertex 2
    CHECK(B.at(2, 0) == 1);   // remove vertex 1
}

TEST_CASE("boundary matrix shapes and the n = 0 case") {
    auto K = SimplicialComplex::from_facets(fixtures::tetrahedron_boundary());
    IntegerMatrix B0 = mantra::boundary_matrix(K, 0);
    CHECK(B0.rows() == 0);
    CHECK(B0.cols() == 4);

    IntegerMatrix B1 = mantra::boundary_matrix(K, 1);
    REQUIRE(B1.rows() == 4);
    REQUIRE(B1.cols() == 6);
    for (std::size_t c = 0; c < 6; ++c) {
        int plus = 0, minus = 0;
        for (std::size_t r = 0; r < 4; ++r) {
            if (B1.at(r, c) == 1) ++plus;
            if (B1.at(r, c) == -1) ++minus;
        }
        CHECK(plus == 1);
        CHECK(minus == 1);
    }
    CHECK_THROWS_AS(mantra::boundary_matrix(K, 3),
                    mantra::DimensionOutOfRangeError);
}

TEST_CASE("boundary of boundary vanishes") {
    mantra::SplitMix64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto K = SimplicialComplex::from_facets(fixtures::random_facets(rng));
        for (int n = 0; n < K.dim(); ++n) {
            IntegerMatrix prod = mantra::boundary_matrix(K, n) *
                                 mantra::boundary_matrix(K, n + 1);
            CHECK(prod.is_zero());
        }
    }
}

TEST_CASE("smith normal form on frozen matrices") {
    auto id3 = mantra::smith_normal_form(make(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
    CHECK(id3.rank == 3);
    CHECK(id3.invariant_factors == std::vector<mpz_class>{1, 1, 1});

    // Rank-1 with content 2: the single invariant factor is the gcd.
    auto rk1 = mantra::smith_normal_form(make(2, 2, {2, 4, 4, 8}));
    CHECK(rk1.rank == 1);
    CHECK(rk1.invariant_factors == std::vector<mpz_class>{2});

    // d1 = gcd of entries = 1, d1 * d2 = |det| = 6.
    auto diag = mantra::smith_normal_form(make(2, 2, {2, 0, 0, 3}));
    CHECK(diag.rank == 2);
    CHECK(diag.invariant_factors == std::vector<mpz_class>{1, 6});

    auto empty = mantra::smith_normal_form(IntegerMatrix(0, 5));
    CHECK(empty.rank == 0);
    CHECK(empty.invariant_factors.empty());

    auto zero = mantra::smith_normal_form(IntegerMatrix(3, 3));
    CHECK(zero.rank == 0);
}

TEST_CASE("smith normal form divisibility chain on random matrices") {
    mantra::SplitMix64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng.next_below(5);
        std::size_t cols = 1 + rng.next_below(5);
        IntegerMatrix M(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                M.at(r, c) = static_cast<long>(rng.next_below(21)) - 10;

        auto snf = mantra::smith_normal_form(M);
        CHECK(snf.rank == oracle::rational_rank(M));
        CHECK(snf.rank == snf.invariant_factors.size());
        for (std::size_t i = 0; i < snf.invariant_factors.size(); ++i) {
            CHECK(snf.invariant_factors[i] > 0);
            if (i > 0)
                CHECK(mpz_divisible_p(
                          snf.invariant_factors[i].get_mpz_t(),
                          snf.invariant_factors[i - 1].get_mpz_t()) != 0);
        }
    }
}

TEST_CASE("homology of the reference complexes") {
    auto hollow = mantra::homology_profile(
        SimplicialComplex::from_facets(fixtures::tetrahedron_boundary()));
    CHECK(hollow.betti == std::vector<std::int64_t>{1, 0, 1});
    for (const auto& t : hollow.torsion) CHECK(t.empty());

    auto solid = mantra::homology_profile(
        SimplicialComplex::from_facets(fixtures::solid_tetrahedron()));
    CHECK(solid.betti == std::vector<std::int64_t>{1, 0, 0, 0});

    auto graph = mantra::homology_profile(
        SimplicialComplex::from_facets(fixtures::complete_graph_k4()));
    CHECK(graph.betti == std::vector<std::int64_t>{1, 3});

    auto points = mantra::homology_profile(
        SimplicialComplex::from_facets(fixtures::four_points()));
    CHECK(points.betti == std::vector<std::int64_t>{4});
}

TEST_CASE("projective plane has Z_2 torsion in H_1") {
    auto K = SimplicialComplex::from_facets(fixtures::rp2_6());
    auto H = mantra::homology_profile(K);
    CHECK(H.betti == std::vector<std::int64_t>{1, 0, 0});
    REQUIRE(H.torsion.size() == 3);
    CHECK(H.torsion[0].empty());
    CHECK(H.torsion[1] == std::vector<std::string>{"Z_2"});
    CHECK(H.torsion[2].empty());

    // Cross-check the rank side against the rational oracle.
    CHECK(H.betti == oracle::betti_via_rational_ranks(K));
}

TEST_CASE("torus and Klein bottle") {
    auto torus = mantra::homology_profile(
        SimplicialComplex::from_facets(fixtures::torus_7()));
    CHECK(torus.betti == std::vector<std::int64_t>{1, 2, 1});
    CHECK(torus.torsion[1].empty());

    auto klein = mantra::homology_profile(
        SimplicialComplex::from_facets(fixtures::klein_bottle()));
    CHECK(klein.betti == std::vector<std::int64_t>{1, 1, 0});
    CHECK(klein.torsion[1] == std::vector<std::string>{"Z_2"});
}

TEST_CASE("3-sphere boundary of the 4-simplex") {
    auto H = mantra::homology_profile(
        SimplicialComplex::from_facets(fixtures::boundary_delta4()));
    CHECK(H.betti == std::vector<std::int64_t>{1, 0, 0, 1});
    for (const auto& t : H.torsion) CHECK(t.empty());
}

TEST_CASE("single-dimension homology and bounds") {
    auto K = SimplicialComplex::from_facets(fixtures::tetrahedron_boundary());
    auto [b1, t1] = mantra::homology(K, 1);
    CHECK(b1 == 0);
    CHECK(t1.empty());
    CHECK_THROWS_AS(mantra::homology(K, 5), mantra::DimensionOutOfRangeError);
}

TEST_CASE("prime power rendering of invariant factors") {
    CHECK(mantra::prime_power_factors(2) == std::vector<mpz_class>{2});
    CHECK(mantra::prime_power_factors(12) == std::vector<mpz_class>{3, 4});
    CHECK(mantra::prime_power_factors(360) == std::vector<mpz_class>{5, 8, 9});
    CHECK(mantra::prime_power_factors(97) == std::vector<mpz_class>{97});
}

TEST_CASE("homology properties on random complexes") {
    mantra::SplitMix64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        auto facets = fixtures::random_facets(rng);
        auto K = SimplicialComplex::from_facets(facets);
        auto H = mantra::homology_profile(K);

        // Euler-Poincare.
        std::int64_t chi_faces = K.euler_characteristic();
        std::int64_t chi_betti = 0;
        int sign = 1;
        for (std::int64_t b : H.betti) {
            chi_betti += sign * b;
            sign = -sign;
        }
        CHECK(chi_faces == chi_betti);

        // SNF ranks against the rational oracle.
        CHECK(H.betti == oracle::betti_via_rational_ranks(K));

        // Relabeling invariance.
        auto relabeled = mantra::homology_profile(
            SimplicialComplex::from_facets(fixtures::relabel(facets, rng)));
        CHECK(H == relabeled);

        if (K.is_connected()) {
            CHECK(H.betti[0] == 1);
            CHECK(H.torsion[0].empty());
        }
    }
}
