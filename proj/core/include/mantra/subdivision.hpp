#pragma once

#include <map>

#include "mantra/complex.hpp"

namespace mantra {

/// Maps each input simplex to the vertex it becomes in the subdivision.
/// Ids are 1-based and follow the canonical (dimension-major, lexicographic)
/// order of the input simplices, so f_0(Sd K) equals the total face count.
struct SubdivisionMap {
    std::map<Simplex, int> new_vertex_of;
};

/// Barycentric subdivision: faces of the output are chains of strictly
/// nested faces of the input.
std::pair<SimplicialComplex, SubdivisionMap> barycentric_subdivision(
    const SimplicialComplex& K);

}  // namespace mantra
