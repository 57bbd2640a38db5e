#pragma once

#include <vector>

#include "mantra/complex.hpp"
#include "mantra/rng.hpp"

namespace fixtures {

using Facets = std::vector<std::vector<int>>;

inline Facets tetrahedron_boundary() {
    return {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
}

inline Facets solid_tetrahedron() { return {{1, 2, 3, 4}}; }

inline Facets complete_graph_k4() {
    return {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
}

inline Facets four_points() { return {{1}, {2}, {3}, {4}}; }

inline Facets triangle() { return {{1, 2, 3}}; }

/// Boundary of the 4-simplex: the 5-vertex 3-sphere.
inline Facets boundary_delta4() {
    Facets out;
    for (int skip = 1; skip <= 5; ++skip) {
        std::vector<int> f;
        for (int v = 1; v <= 5; ++v)
            if (v != skip) f.push_back(v);
        out.push_back(f);
    }
    return out;
}

/// 6-vertex real projective plane (icosahedron antipodal quotient).
inline Facets rp2_6() {
    return {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
            {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}};
}

/// 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline Facets torus_7() {
    Facets out;
    for (int i = 0; i < 7; ++i) {
        out.push_back({i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
        out.push_back({i % 7 + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1});
    }
    return out;
}

/// Torus (twist = false) or Klein bottle (twist = true) from an n x m grid
/// with wraparound; the twisted vertical seam reverses column order.
inline Facets grid_surface(int n, int m, bool twist) {
    auto vertex = [&](int i, int j) {
        if (j == m) {
            j = 0;
            i = twist ? (n - i) % n : i % n;
        }
        return (i % n) * m + j + 1;
    };
    Facets out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            out.push_back({vertex(i, j), vertex(i + 1, j), vertex(i + 1, j + 1)});
            out.push_back({vertex(i, j), vertex(i, j + 1), vertex(i + 1, j + 1)});
        }
    return out;
}

inline Facets klein_bottle() { return grid_surface(4, 3, true); }
inline Facets grid_torus() { return grid_surface(3, 3, false); }

/// Octahedron boundary: another small 2-sphere.
inline Facets octahedron() {
    return {{1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6},
            {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6}};
}

/// Genus-2 orientable surface: connected sum of two grid tori, formed by
/// removing one triangle from each and gluing along the boundary cycle.
inline Facets genus2_surface() {
    Facets a = grid_surface(3, 3, false);   // vertices 1..9
    Facets b = grid_surface(3, 3, false);   // relabeled to 10..18
    for (auto& f : b)
        for (int& v : f) v += 9;
    // Drop one triangle from each and identify the boundary triangles'
    // vertex cycles pairwise.
    std::vector<int> cut_a = a.back();
    a.pop_back();
    std::vector<int> cut_b = b.back();
    b.pop_back();
    for (auto& f : b)
        for (int& v : f)
            for (int k = 0; k < 3; ++k)
                if (v == cut_b[k]) v = cut_a[k];
    Facets out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

/// Seeded generator of small random complexes for property suites.
inline Facets random_facets(mantra::SplitMix64& rng) {
    const int n_facets = 1 + static_cast<int>(rng.next_below(7));
    Facets out;
    for (int f = 0; f < n_facets; ++f) {
        const int size = 1 + static_cast<int>(rng.next_below(4));
        std::vector<int> facet;
        for (int v = 0; v < size; ++v)
            facet.push_back(1 + static_cast<int>(rng.next_below(7)));
        // Duplicate vertices collapse during normalization.
        out.push_back(facet);
    }
    return out;
}

/// Applies a random permutation of 1..max_vertex to every facet.
inline Facets relabel(const Facets& facets, mantra::SplitMix64& rng) {
    int max_vertex = 0;
    for (const auto& f : facets)
        for (int v : f) max_vertex = std::max(max_vertex, v);
    std::vector<int> perm(max_vertex + 1);
    for (int i = 1; i <= max_vertex; ++i) perm[i] = i;
    for (int i = max_vertex; i > 1; --i)
        std::swap(perm[i], perm[1 + rng.next_below(static_cast<std::uint64_t>(i))]);
    Facets out = facets;
    for (auto& f : out)
        for (int& v : f) v = perm[v];
    return out;
}

}  // namespace fixtures
