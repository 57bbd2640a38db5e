#pragma once

#include <string>
#include <vector>

#include "mantra/complex.hpp"

namespace mantra {

struct Witness {
    Simplex simplex;
    std::string reason;
};

struct ManifoldReport {
    int dimension = -1;
    bool is_closed_pseudomanifold = false;
    bool is_connected = false;
    bool links_ok = false;
    bool is_manifold = false;
    std::vector<Witness> witnesses;
};

struct SurfaceClass {
    bool orientable = false;
    std::int64_t genus = 0;
    /// "S^2", "T^2", "RP^2", "Klein bottle", or "" for other surfaces.
    std::string name;
};

/// True iff every (d-1)-simplex lies in exactly two facets. Witnesses carry
/// the violating faces with their cofacet counts.
std::pair<bool, std::vector<Witness>> is_closed_pseudomanifold(
    const SimplicialComplex& K);

/// Subcomplex of faces disjoint from v whose union with {v} is a face.
SimplicialComplex vertex_link(const SimplicialComplex& K, int v);

/// Link of an edge in a 3-complex.
SimplicialComplex edge_link(const SimplicialComplex& K, const Simplex& e);

/// Closed connected combinatorial manifold verification for d = 2 or 3.
/// For surfaces every vertex link must be a single cycle; for 3-manifolds
/// every vertex link must be a 2-sphere and every edge link a single cycle.
ManifoldReport is_combinatorial_manifold(const SimplicialComplex& K);

/// Orientability by propagating coherent facet orientations across shared
/// codimension-1 faces. Requires a verified connected manifold.
bool orientability(const SimplicialComplex& K);

/// Variant used by property tests: propagation seeded at a given facet.
bool orientability_from(const SimplicialComplex& K, std::size_t start_facet);

/// Homeomorphism type of a verified closed connected surface from its Euler
/// characteristic and orientability.
SurfaceClass classify_surface(const SimplicialComplex& K);

}  // namespace mantra
