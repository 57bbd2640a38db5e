#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mantra/complex.hpp"
#include "mantra/homology.hpp"

namespace mantra {

enum class FeatureKind {
    RandomScalar,
    Degree,
    DegreeOnehot,
    Random8,
    ConnectivityIndex,
};

FeatureKind parse_feature_kind(const std::string& name);
std::string feature_kind_name(FeatureKind kind);

struct FeatureOptions {
    std::optional<std::uint64_t> seed;
    /// Record id keyed into the random stream so batches are reproducible
    /// regardless of processing order.
    std::string record_id;
    /// One-hot width for DegreeOnehot; a batch-level quantity (max degree in
    /// the batch + 1). Defaults to max degree in this complex + 1.
    std::optional<std::size_t> onehot_width;
};

/// Per-dimension feature matrices; rows follow the canonical simplex order.
struct FeatureAssignment {
    FeatureKind kind;
    /// matrices[k][row][channel]; empty matrix for dimensions the kind does
    /// not populate.
    std::vector<std::vector<std::vector<double>>> matrices;
    std::size_t onehot_width = 0;
};

/// Signed vertex-based incidence; identical to boundary_matrix, exposed
/// under the neighborhood-operator name.
IntegerMatrix signed_incidence(const SimplicialComplex& K, int k);

/// L_k = B_k^T B_k + B_{k+1} B_{k+1}^T, with the missing term dropped at the
/// boundary dimensions. Symmetric, integer.
IntegerMatrix hodge_laplacian(const SimplicialComplex& K, int k);

/// Number of distinct same-dimension simplices sharing a coface one
/// dimension higher with s (s itself excluded).
std::int64_t upper_adjacent_count(const SimplicialComplex& K, const Simplex& s);

/// Number of distinct same-dimension simplices sharing a face one dimension
/// lower with s.
std::int64_t lower_adjacent_count(const SimplicialComplex& K, const Simplex& s);

FeatureAssignment make_features(const SimplicialComplex& K, FeatureKind kind,
                                const FeatureOptions& options = {});

/// Writes one CSV per populated dimension (dim0.csv, dim1.csv, ...) plus a
/// features.json sidecar describing kind, seed, and width.
void export_features_csv(const FeatureAssignment& features,
                         const FeatureOptions& options,
                         const std::string& directory);

}  // namespace mantra
