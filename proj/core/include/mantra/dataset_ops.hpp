#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mantra/formats.hpp"
#include "mantra/manifold.hpp"

namespace mantra {

struct LabeledRecord {
    DatasetRecord record;
    ManifoldReport report;
    bool failed = false;
    std::string error;
};

/// Recomputes every label the raw schema stores: Betti numbers and torsion
/// for all records, plus orientability, genus, and recognized surface names
/// for 2-manifolds. Stored 3-manifold names are never overwritten.
/// Verification failures are flagged on the result, not thrown.
LabeledRecord compute_labels(const DatasetRecord& record);

struct FieldMismatch {
    std::string id;
    std::string field;
    std::string stored;
    std::string recomputed;
};

struct VerifyReport {
    std::size_t n_records = 0;
    std::size_t n_failed = 0;  // records whose recomputation failed outright
    std::vector<FieldMismatch> mismatches;

    bool clean() const { return mismatches.empty() && n_failed == 0; }
};

/// Recomputes labels for every record (in parallel) and diffs them against
/// the stored fields.
VerifyReport verify_labels(const std::vector<DatasetRecord>& dataset,
                           unsigned threads = 0);

enum class Split { Train, Validation, Test };
std::string split_name(Split s);

struct SplitAssignment {
    std::uint64_t seed = 0;
    std::array<double, 3> ratios{};
    std::string stratify_key;
    std::map<std::string, Split> assignment;
};

/// Deterministic stratified split: per stratum, ids are sorted, shuffled by
/// a seeded Fisher-Yates, and allocated to train/validation/test by largest
/// remainder. Strata smaller than 3 records go entirely to train.
SplitAssignment stratified_split(const std::vector<DatasetRecord>& dataset,
                                 std::uint64_t seed,
                                 std::array<double, 3> ratios,
                                 const std::string& key);

struct LabelHistogram {
    std::string key;
    /// value -> count, with nearest-integer percentage alongside.
    std::vector<std::pair<std::string, std::size_t>> buckets;
    std::size_t total = 0;

    int percent(std::size_t count) const;
};

/// Supported keys: name, orientable, genus, n_vertices, torsion_coefficients,
/// betti_numbers (full vector as one categorical value), betti_0..betti_3.
LabelHistogram label_distribution(const std::vector<DatasetRecord>& dataset,
                                  const std::string& key);

std::string histogram_to_markdown(const LabelHistogram& h);
std::string histogram_to_csv(const LabelHistogram& h);

/// Label value of one record under a stratification/histogram key.
std::string label_value(const DatasetRecord& record, const std::string& key);

/// JSON text {id: "train"|"validation"|"test"} in sorted id order.
std::string split_to_json(const SplitAssignment& split);

}  // namespace mantra
