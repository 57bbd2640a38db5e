#include "mantra/manifold.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace mantra {

namespace {

void require_dim_2_or_3(const SimplicialComplex& K) {
    if (K.dim() != 2 && K.dim() != 3) throw UnsupportedDimensionError(K.dim());
}

// A single cycle: pure 1-dimensional, connected, every vertex in exactly
// two edges, at least three vertices.
bool is_single_cycle(const SimplicialComplex& L) {
    if (L.dim() != 1 || !L.is_pure() || !L.is_connected()) return false;
    const auto& verts = L.k_faces(0);
    const auto& edges = L.k_faces(1);
    if (verts.size() < 3 || verts.size() != edges.size()) return false;
    std::map<int, int> degree;
    for (const Simplex& e : edges) {
        ++degree[e.vertices[0]];
        ++degree[e.vertices[1]];
    }
    for (const auto& [v, d] : degree)
        if (d != 2) return false;
    return true;
}

SimplicialComplex link_of(const SimplicialComplex& K, const Simplex& s) {
    std::vector<std::vector<int>> link_faces;
    for (int k = s.dim() + 1; k <= K.dim(); ++k) {
        for (const Simplex& f : K.k_faces(k)) {
            if (!f.contains(s)) continue;
            std::vector<int> tau;
            std::set_difference(f.vertices.begin(), f.vertices.end(),
                                s.vertices.begin(), s.vertices.end(),
                                std::back_inserter(tau));
            link_faces.push_back(std::move(tau));
        }
    }
    return SimplicialComplex::from_facets(link_faces);
}

}  // namespace

std::pair<bool, std::vector<Witness>> is_closed_pseudomanifold(
    const SimplicialComplex& K) {
    require_dim_2_or_3(K);
    if (!K.is_pure()) throw NotPureError();

    const int d = K.dim();
    const auto& ridges = K.k_faces(d - 1);
    std::vector<int> cofacet_count(ridges.size(), 0);
    for (const Simplex& f : K.k_faces(d))
        for (int i = 0; i <= d; ++i)
            ++cofacet_count[*K.index_of(f.facet_opposite(i))];

    std::vector<Witness> witnesses;
    for (std::size_t r = 0; r < ridges.size(); ++r)
        if (cofacet_count[r] != 2)
            witnesses.push_back(
                {ridges[r], "contained in " + std::to_string(cofacet_count[r]) +
                                " facets, expected 2"});
    return {witnesses.empty(), std::move(witnesses)};
}

SimplicialComplex vertex_link(const SimplicialComplex& K, int v) {
    Simplex s({v});
    if (!K.has_simplex(s)) throw UnknownVertexError(v);
    return link_of(K, s);
}

SimplicialComplex edge_link(const SimplicialComplex& K, const Simplex& e) {
    if (e.dim() != 1 || !K.has_simplex(e)) throw UnknownSimplexError();
    return link_of(K, e);
}

ManifoldReport is_combinatorial_manifold(const SimplicialComplex& K) {
    require_dim_2_or_3(K);
    const int d = K.dim();

    ManifoldReport report;
    report.dimension = d;

    if (!K.is_pure()) {
        for (const Simplex& f : K.facets())
            if (f.dim() != d)
                report.witnesses.push_back({f, "facet below top dimension"});
        return report;
    }

    auto [closed, pm_witnesses] = is_closed_pseudomanifold(K);
    report.is_closed_pseudomanifold = closed;
    for (Witness& w : pm_witnesses) report.witnesses.push_back(std::move(w));

    report.is_connected = K.is_connected();
    if (!report.is_connected && !K.empty())
        report.witnesses.push_back(
            {K.k_faces(0).front(), "1-skeleton is disconnected"});

    report.links_ok = true;
    for (const Simplex& v : K.k_faces(0)) {
        SimplicialComplex link = vertex_link(K, v.vertices[0]);
        bool ok;
        if (d == 2) {
            ok = is_single_cycle(link);
        } else {
            // Link must be a 2-sphere: closed connected surface with chi = 2.
            ok = link.dim() == 2 && link.euler_characteristic() == 2 &&
                 is_combinatorial_manifold(link).is_manifold;
        }
        if (!ok) {
            report.links_ok = false;
            report.witnesses.push_back(
                {v, d == 2 ? "vertex link is not a single cycle"
                           : "vertex link is not a 2-sphere"});
        }
    }
    if (d == 3) {
        for (const Simplex& e : K.k_faces(1)) {
            if (!is_single_cycle(edge_link(K, e))) {
                report.links_ok = false;
                report.witnesses.push_back({e, "edge link is not a single cycle"});
            }
        }
    }

    report.is_manifold = report.is_closed_pseudomanifold &&
                         report.is_connected && report.links_ok;
    return report;
}

bool orientability_from(const SimplicialComplex& K, std::size_t start_facet) {
    const int d = K.dim();
    const auto& facets = K.k_faces(d);
    const auto& ridges = K.k_faces(d - 1);

    // For each ridge, the two incident facets with the deletion index of the
    // vertex removed (the sign (-1)^i of the induced orientation).
    struct Incidence {
        std::size_t facet;
        int sign;
    };
    std::vector<std::vector<Incidence>> incident(ridges.size());
    for (std::size_t fi = 0; fi < facets.size(); ++fi) {
        int sign = 1;
        for (int i = 0; i <= d; ++i) {
            incident[*K.index_of(facets[fi].facet_opposite(i))].push_back(
                {fi, sign});
            sign = -sign;
        }
    }

    // Shared ridges force opposite induced orientations on their cofacets:
    // s1 * sign1 = -(s2 * sign2).
    std::vector<int> orient(facets.size(), 0);
    orient[start_facet] = 1;
    std::queue<std::size_t> todo;
    todo.push(start_facet);
    while (!todo.empty()) {
        std::size_t fi = todo.front();
        todo.pop();
        int sign = 1;
        for (int i = 0; i <= d; ++i) {
            const auto& inc = incident[*K.index_of(facets[fi].facet_opposite(i))];
            for (const Incidence& other : inc) {
                if (other.facet == fi) continue;
                int required = -orient[fi] * sign * other.sign;
                if (orient[other.facet] == 0) {
                    orient[other.facet] = required;
                    todo.push(other.facet);
                } else if (orient[other.facet] != required) {
                    return false;
                }
            }
            sign = -sign;
        }
    }
    return true;
}

bool orientability(const SimplicialComplex& K) {
    ManifoldReport report = is_combinatorial_manifold(K);
    if (!report.is_manifold)
        throw NotAManifoldError(report.witnesses.empty()
                                    ? "verification failed"
                                    : report.witnesses.front().reason);
    return orientability_from(K, 0);
}

SurfaceClass classify_surface(const SimplicialComplex& K) {
    if (K.dim() != 2) throw UnsupportedDimensionError(K.dim());
    ManifoldReport report = is_combinatorial_manifold(K);
    if (!report.is_manifold)
        throw NotAManifoldError(report.witnesses.empty()
                                    ? "verification failed"
                                    : report.witnesses.front().reason);

    SurfaceClass cls;
    cls.orientable = orientability_from(K, 0);
    const std::int64_t chi = K.euler_characteristic();
    cls.genus = cls.orientable ? (2 - chi) / 2 : 2 - chi;
    if (cls.orientable && cls.genus == 0) cls.name = "S^2";
    else if (cls.orientable && cls.genus == 1) cls.name = "T^2";
    else if (!cls.orientable && cls.genus == 1) cls.name = "RP^2";
    else if (!cls.orientable && cls.genus == 2) cls.name = "Klein bottle";
    return cls;
}

}  // namespace mantra
