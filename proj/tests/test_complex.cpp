#include <doctest.h>

#include "fixtures.hpp"
#include "mantra/complex.hpp"

using mantra::Simplex;
using mantra::SimplicialComplex;

TEST_CASE("from_facets builds the tetrahedron boundary") {
    auto K = SimplicialComplex::from_facets(fixtures::tetrahedron_boundary());
    CHECK(K.dim() == 2);
    CHECK(K.f_vector() == std::vector<std::int64_t>{4, 6, 4});
    CHECK(K.euler_characteristic() == 2);
    CHECK(K.n_vertices() == 4);
}

TEST_CASE("from_facets smallest complexes") {
    auto point = SimplicialComplex::from_facets({{1}});
    CHECK(point.f_vector() == std::vector<std::int64_t>{1});
    CHECK(point.dim() == 0);

    auto tri = SimplicialComplex::from_facets(fixtures::triangle());
    CHECK(tri.f_vector() == std::vector<std::int64_t>{3, 3, 1});
}

TEST_CASE("from_facets input normalization") {
    // Vertex order irrelevant, duplicates collapse, non-maximal absorbed.
    auto K = SimplicialComplex::from_facets({{3, 1, 2}, {1, 2, 3}, {2, 3}});
    CHECK(K.facets().size() == 1);
    CHECK(K.f_vector() == std::vector<std::int64_t>{3, 3, 1});

    CHECK_THROWS_AS(SimplicialComplex::from_facets({{1, 2}, {}}),
                    mantra::EmptyFacetError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets({{0, 1}}),
                    mantra::NonPositiveVertexIdError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets({{-3}}),
                    mantra::NonPositiveVertexIdError);
}

TEST_CASE("k_faces ordering and bounds") {
    auto K = SimplicialComplex::from_facets(fixtures::tetrahedron_boundary());
    CHECK(K.k_faces(1).size() == 6);
    CHECK(K.k_faces(2).size() == 4);
    CHECK(K.k_faces(0).front() == Simplex({1}));
    CHECK_THROWS_AS(K.k_faces(3), mantra::DimensionOutOfRangeError);
    CHECK_THROWS_AS(K.k_faces(-1), mantra::DimensionOutOfRangeError);

    for (int k = 0; k <= K.dim(); ++k) {
        const auto& faces = K.k_faces(k);
        for (std::size_t i = 1; i < faces.size(); ++i)
            CHECK(faces[i - 1] < faces[i]);
    }
}

TEST_CASE("f_vector of disconnected and graph complexes") {
    auto pts = SimplicialComplex::from_facets(fixtures::four_points());
    CHECK(pts.f_vector() == std::vector<std::int64_t>{4});
    auto k4 = SimplicialComplex::from_facets(fixtures::complete_graph_k4());
    CHECK(k4.f_vector() == std::vector<std::int64_t>{4, 6});
}

TEST_CASE("euler characteristic of closed manifolds") {
    auto sphere = SimplicialComplex::from_facets(fixtures::tetrahedron_boundary());
    CHECK(sphere.euler_characteristic() == 2);
    auto torus = SimplicialComplex::from_facets(fixtures::torus_7());
    CHECK(torus.euler_characteristic() == 0);
    auto s3 = SimplicialComplex::from_facets(fixtures::boundary_delta4());
    CHECK(s3.euler_characteristic() == 0);
}

TEST_CASE("closure property and idempotence on random complexes") {
    mantra::SplitMix64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto facets = fixtures::random_facets(rng);
        auto K = SimplicialComplex::from_facets(facets);

        // Exhaustive subset check.
        for (int k = 0; k <= K.dim(); ++k)
            for (const Simplex& s : K.k_faces(k)) {
                const auto& vs = s.vertices;
                for (unsigned mask = 1; mask < (1u << vs.size()); ++mask) {
                    Simplex sub;
                    for (unsigned j = 0; j < vs.size(); ++j)
                        if (mask & (1u << j)) sub.vertices.push_back(vs[j]);
                    CHECK(K.has_simplex(sub));
                }
            }

        // Rebuilding from the computed facets reproduces the complex.
        std::vector<std::vector<int>> computed;
        for (const Simplex& f : K.facets()) computed.push_back(f.vertices);
        auto K2 = SimplicialComplex::from_facets(computed);
        CHECK(K.faces_by_dim() == K2.faces_by_dim());
    }
}

TEST_CASE("connectivity of 1-skeleton") {
    CHECK(SimplicialComplex::from_facets(fixtures::tetrahedron_boundary())
              .is_connected());
    CHECK_FALSE(
        SimplicialComplex::from_facets(fixtures::four_points()).is_connected());
    CHECK(SimplicialComplex::from_facets({{5}}).is_connected());
}
