#include "mantra/operators.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>

#include <json.hpp>

#include "mantra/rng.hpp"

namespace mantra {

FeatureKind parse_feature_kind(const std::string& name) {
    if (name == "random-scalar") return FeatureKind::RandomScalar;
    if (name == "degree") return FeatureKind::Degree;
    if (name == "degree-onehot") return FeatureKind::DegreeOnehot;
    if (name == "random-8") return FeatureKind::Random8;
    if (name == "connectivity-index") return FeatureKind::ConnectivityIndex;
    throw UnknownKindError(name);
}

std::string feature_kind_name(FeatureKind kind) {
    switch (kind) {
        case FeatureKind::RandomScalar: return "random-scalar";
        case FeatureKind::Degree: return "degree";
        case FeatureKind::DegreeOnehot: return "degree-onehot";
        case FeatureKind::Random8: return "random-8";
        case FeatureKind::ConnectivityIndex: return "connectivity-index";
    }
    throw UnknownKindError("<invalid>");
}

IntegerMatrix signed_incidence(const SimplicialComplex& K, int k) {
    return boundary_matrix(K, k);
}

IntegerMatrix hodge_laplacian(const SimplicialComplex& K, int k) {
    if (k < 0 || k > K.dim()) throw DimensionOutOfRangeError(k, K.dim());
    IntegerMatrix L(K.k_faces(k).size(), K.k_faces(k).size());
    if (k > 0) {
        IntegerMatrix B = boundary_matrix(K, k);
        L = B.transposed() * B;
    }
    if (k < K.dim()) {
        IntegerMatrix B = boundary_matrix(K, k + 1);
        IntegerMatrix up = B * B.transposed();
        for (std::size_t r = 0; r < L.rows(); ++r)
            for (std::size_t c = 0; c < L.cols(); ++c)
                L.at(r, c) += up.at(r, c);
    }
    return L;
}

namespace {

// Same-dimension neighbors of s through its cofaces (up) or faces (down).
std::int64_t adjacent_count(const SimplicialComplex& K, const Simplex& s,
                            bool upper) {
    auto idx = K.index_of(s);
    if (!idx) throw UnknownSimplexError();
    const int k = s.dim();

    std::set<Simplex> neighbors;
    if (upper) {
        if (k + 1 <= K.dim()) {
            for (const Simplex& coface : K.k_faces(k + 1)) {
                if (!coface.contains(s)) continue;
                for (int i = 0; i <= coface.dim(); ++i) {
                    Simplex f = coface.facet_opposite(i);
                    if (f != s) neighbors.insert(std::move(f));
                }
            }
        }
    } else {
        if (k >= 1) {
            for (int i = 0; i <= s.dim(); ++i) {
                Simplex face = s.facet_opposite(i);
                for (const Simplex& t : K.k_faces(k))
                    if (t != s && t.contains(face)) neighbors.insert(t);
            }
        }
    }
    return static_cast<std::int64_t>(neighbors.size());
}

}  // namespace

std::int64_t upper_adjacent_count(const SimplicialComplex& K,
                                  const Simplex& s) {
    return adjacent_count(K, s, true);
}

std::int64_t lower_adjacent_count(const SimplicialComplex& K,
                                  const Simplex& s) {
    return adjacent_count(K, s, false);
}

FeatureAssignment make_features(const SimplicialComplex& K, FeatureKind kind,
                                const FeatureOptions& options) {
    const bool random =
        kind == FeatureKind::RandomScalar || kind == FeatureKind::Random8;
    if (random && !options.seed) throw MissingSeedError();

    FeatureAssignment out;
    out.kind = kind;
    out.matrices.resize(K.dim() + 1);
    const std::uint64_t stream = fnv1a(options.record_id);

    switch (kind) {
        case FeatureKind::RandomScalar:
        case FeatureKind::Random8: {
            const std::size_t channels = kind == FeatureKind::Random8 ? 8 : 1;
            std::uint64_t counter = 0;
            for (int k = 0; k <= K.dim(); ++k) {
                auto& M = out.matrices[k];
                M.resize(K.k_faces(k).size());
                for (auto& row : M) {
                    row.resize(channels);
                    for (double& x : row)
                        x = uniform01(*options.seed, stream, counter++);
                }
            }
            break;
        }
        case FeatureKind::Degree:
        case FeatureKind::DegreeOnehot: {
            const auto& verts = K.k_faces(0);
            std::vector<std::int64_t> degrees(verts.size());
            std::int64_t max_degree = 0;
            for (std::size_t i = 0; i < verts.size(); ++i) {
                degrees[i] = upper_adjacent_count(K, verts[i]);
                max_degree = std::max(max_degree, degrees[i]);
            }
            auto& M = out.matrices[0];
            M.resize(verts.size());
            if (kind == FeatureKind::Degree) {
                for (std::size_t i = 0; i < verts.size(); ++i)
                    M[i] = {static_cast<double>(degrees[i])};
            } else {
                const std::size_t width = options.onehot_width.value_or(
                    static_cast<std::size_t>(max_degree) + 1);
                out.onehot_width = width;
                for (std::size_t i = 0; i < verts.size(); ++i) {
                    M[i].assign(width, 0.0);
                    M[i][static_cast<std::size_t>(degrees[i])] = 1.0;
                }
            }
            break;
        }
        case FeatureKind::ConnectivityIndex: {
            // Upper index below the top dimension, lower index at the top.
            for (int k = 0; k <= K.dim(); ++k) {
                auto& M = out.matrices[k];
                const auto& faces = K.k_faces(k);
                M.resize(faces.size());
                for (std::size_t i = 0; i < faces.size(); ++i) {
                    std::int64_t count = k < K.dim()
                                             ? upper_adjacent_count(K, faces[i])
                                             : lower_adjacent_count(K, faces[i]);
                    M[i] = {static_cast<double>(count)};
                }
            }
            break;
        }
    }
    return out;
}

void export_features_csv(const FeatureAssignment& features,
                         const FeatureOptions& options,
                         const std::string& directory) {
    namespace fs = std::filesystem;
    fs::create_directories(directory);

    nlohmann::json sidecar;
    sidecar["kind"] = feature_kind_name(features.kind);
    if (options.seed) sidecar["seed"] = *options.seed;
    if (!options.record_id.empty()) sidecar["record_id"] = options.record_id;
    if (features.onehot_width > 0) sidecar["width"] = features.onehot_width;

    for (std::size_t k = 0; k < features.matrices.size(); ++k) {
        const auto& M = features.matrices[k];
        if (M.empty()) continue;
        std::ofstream out(fs::path(directory) /
                          ("dim" + std::to_string(k) + ".csv"));
        if (!out) throw IoError("cannot write feature CSV in " + directory);
        out << std::setprecision(17);
        for (const auto& row : M) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) out << ',';
                out << row[c];
            }
            out << '\n';
        }
    }

    std::ofstream meta(fs::path(directory) / "features.json");
    if (!meta) throw IoError("cannot write features.json in " + directory);
    meta << sidecar.dump(2) << '\n';
}

}  // namespace mantra
