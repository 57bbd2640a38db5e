#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mantra/errors.hpp"

namespace mantra {

/// A single simplex: strictly increasing sequence of 1-based vertex ids.
struct Simplex {
    std::vector<int> vertices;

    Simplex() = default;
    explicit Simplex(std::vector<int> vs) : vertices(std::move(vs)) {}

    int dim() const { return static_cast<int>(vertices.size()) - 1; }

    bool contains(int v) const;
    bool contains(const Simplex& other) const;

    /// Face obtained by deleting the i-th smallest vertex.
    Simplex facet_opposite(int i) const;

    auto operator<=>(const Simplex&) const = default;
};

/// Immutable simplicial complex: downward-closed face set with the faces of
/// each dimension kept sorted lexicographically.
class SimplicialComplex {
public:
    /// Builds the downward closure of the given facet list. Facet vertex
    /// order is irrelevant; duplicate and non-maximal facets are absorbed.
    static SimplicialComplex from_facets(
        const std::vector<std::vector<int>>& facets);

    int dim() const { return static_cast<int>(faces_by_dim_.size()) - 1; }
    bool empty() const { return faces_by_dim_.empty(); }
    int n_vertices() const { return n_vertices_; }

    /// All k-simplices in lexicographic order.
    const std::vector<Simplex>& k_faces(int k) const;

    const std::vector<Simplex>& facets() const { return facets_; }
    const std::vector<std::vector<Simplex>>& faces_by_dim() const {
        return faces_by_dim_;
    }

    std::vector<std::int64_t> f_vector() const;
    std::int64_t euler_characteristic() const;

    bool has_simplex(const Simplex& s) const;
    /// Index of s within k_faces(s.dim()), if present.
    std::optional<std::size_t> index_of(const Simplex& s) const;

    /// True when every facet has the same dimension as the complex.
    bool is_pure() const;

    /// Connectivity of the 1-skeleton (vertices joined by edges).
    bool is_connected() const;

private:
    SimplicialComplex() = default;

    std::vector<std::vector<Simplex>> faces_by_dim_;
    std::vector<Simplex> facets_;
    int n_vertices_ = 0;
};

}  // namespace mantra
