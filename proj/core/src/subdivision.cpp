#include "mantra/subdivision.hpp"

#include <algorithm>

namespace mantra {

namespace {

// Enumerates the complete flags s_0 c s_1 c ... c s_d inside a facet,
// recording each as a facet of the subdivision via the simplex-to-vertex map.
void collect_flags(const SubdivisionMap& map, const Simplex& top,
                   std::vector<int>& chain, std::vector<int>& current,
                   std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == top.dim() + 1) {
        out.push_back(chain);
        return;
    }
    // Extend the current face by one vertex of the facet in every way.
    for (int v : top.vertices) {
        if (std::binary_search(current.begin(), current.end(), v)) continue;
        std::vector<int> next = current;
        next.insert(std::lower_bound(next.begin(), next.end(), v), v);
        chain.push_back(map.new_vertex_of.at(Simplex(next)));
        std::swap(current, next);
        collect_flags(map, top, chain, current, out);
        std::swap(current, next);
        chain.pop_back();
    }
}

}  // namespace

std::pair<SimplicialComplex, SubdivisionMap> barycentric_subdivision(
    const SimplicialComplex& K) {
    SubdivisionMap map;
    int next_id = 1;
    for (const auto& faces : K.faces_by_dim())
        for (const Simplex& s : faces) map.new_vertex_of[s] = next_id++;

    // Maximal chains start at a vertex and end at a facet of K.
    std::vector<std::vector<int>> sd_facets;
    for (const Simplex& top : K.facets()) {
        std::vector<int> chain, current;
        collect_flags(map, top, chain, current, sd_facets);
    }
    return {SimplicialComplex::from_facets(sd_facets), std::move(map)};
}

}  // namespace mantra
