#include "mantra/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mantra {

bool Simplex::contains(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool Simplex::contains(const Simplex& other) const {
    return std::includes(vertices.begin(), vertices.end(),
                         other.vertices.begin(), other.vertices.end());
}

Simplex Simplex::facet_opposite(int i) const {
    Simplex f;
    f.vertices.reserve(vertices.size() - 1);
    for (int j = 0; j < static_cast<int>(vertices.size()); ++j)
        if (j != i) f.vertices.push_back(vertices[j]);
    return f;
}

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<int>>& facets) {
    // Normalize input facets to vertex sets.
    std::vector<Simplex> normalized;
    normalized.reserve(facets.size());
    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (facets[i].empty()) throw EmptyFacetError(i);
        std::vector<int> vs = facets[i];
        for (int v : vs)
            if (v <= 0) throw NonPositiveVertexIdError(v);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        normalized.emplace_back(std::move(vs));
    }
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()),
                     normalized.end());

    // Keep only maximal facets.
    std::vector<Simplex> maximal;
    for (const Simplex& s : normalized) {
        bool dominated = false;
        for (const Simplex& t : normalized)
            if (t.dim() > s.dim() && t.contains(s)) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(s);
    }

    SimplicialComplex K;
    if (maximal.empty()) return K;

    int dim = 0;
    for (const Simplex& s : maximal) dim = std::max(dim, s.dim());

    // Materialize the closure: all nonempty subsets of every facet.
    std::vector<std::set<Simplex>> faces(dim + 1);
    for (const Simplex& s : maximal) {
        const auto& vs = s.vertices;
        const unsigned n = static_cast<unsigned>(vs.size());
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            Simplex f;
            for (unsigned j = 0; j < n; ++j)
                if (mask & (1u << j)) f.vertices.push_back(vs[j]);
            faces[f.dim()].insert(std::move(f));
        }
    }

    K.faces_by_dim_.resize(dim + 1);
    for (int k = 0; k <= dim; ++k)
        K.faces_by_dim_[k].assign(faces[k].begin(), faces[k].end());
    K.facets_ = std::move(maximal);
    K.n_vertices_ = static_cast<int>(K.faces_by_dim_[0].size());
    return K;
}

const std::vector<Simplex>& SimplicialComplex::k_faces(int k) const {
    if (k < 0 || k > dim()) throw DimensionOutOfRangeError(k, dim());
    return faces_by_dim_[k];
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const {
    std::vector<std::int64_t> f;
    f.reserve(faces_by_dim_.size());
    for (const auto& faces : faces_by_dim_)
        f.push_back(static_cast<std::int64_t>(faces.size()));
    return f;
}

std::int64_t SimplicialComplex::euler_characteristic() const {
    std::int64_t chi = 0;
    int sign = 1;
    for (const auto& faces : faces_by_dim_) {
        chi += sign * static_cast<std::int64_t>(faces.size());
        sign = -sign;
    }
    return chi;
}

bool SimplicialComplex::has_simplex(const Simplex& s) const {
    return index_of(s).has_value();
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
    int k = s.dim();
    if (k < 0 || k > dim()) return std::nullopt;
    const auto& faces = faces_by_dim_[k];
    auto it = std::lower_bound(faces.begin(), faces.end(), s);
    if (it == faces.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - faces.begin());
}

bool SimplicialComplex::is_pure() const {
    for (const Simplex& s : facets_)
        if (s.dim() != dim()) return false;
    return true;
}

bool SimplicialComplex::is_connected() const {
    if (empty()) return true;
    const auto& verts = faces_by_dim_[0];
    const std::size_t n = verts.size();
    if (n <= 1) return true;

    std::map<int, std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) idx[verts[i].vertices[0]] = i;

    std::vector<std::vector<std::size_t>> adj(n);
    if (dim() >= 1) {
        for (const Simplex& e : faces_by_dim_[1]) {
            std::size_t a = idx.at(e.vertices[0]);
            std::size_t b = idx.at(e.vertices[1]);
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    }

    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t visited = 1;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++visited;
                stack.push_back(v);
            }
    }
    return visited == n;
}

}  // namespace mantra
