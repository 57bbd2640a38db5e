#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mantra/errors.hpp"

namespace mantra {

/// One triangulation with its label fields, mirroring the raw JSON schema.
struct DatasetRecord {
    std::string id;
    std::vector<std::vector<int>> triangulation;
    std::optional<int> dimension;
    int n_vertices = 0;
    std::optional<std::vector<std::int64_t>> betti_numbers;
    /// One string per dimension; "" means no torsion in that dimension.
    std::optional<std::vector<std::string>> torsion_coefficients;
    std::optional<std::string> name;
    std::optional<std::int64_t> genus;
    std::optional<bool> orientable;

    bool operator==(const DatasetRecord&) const = default;

    /// Dimension from the explicit field or, failing that, the largest facet.
    int effective_dimension() const;
};

/// Parses the Lutz lexicographical text formats: one `id=[[...],...]` entry
/// per logical line, entries possibly wrapped across physical lines.
std::vector<std::pair<std::string, std::vector<std::vector<int>>>>
parse_lexicographical(const std::string& text);

/// Reads a JSON array of records; gzip is detected by magic bytes, so both
/// compressed and plain files work.
std::vector<DatasetRecord> read_dataset(const std::string& path);

/// Writes records in canonical field order and formatting; gzip-compresses
/// when the path ends in ".gz".
void write_dataset(const std::vector<DatasetRecord>& records,
                   const std::string& path);

/// Canonical JSON text of one record list (what write_dataset emits).
std::string dataset_to_json(const std::vector<DatasetRecord>& records);

/// Non-throwing invariant check; returns all violations found.
std::vector<std::string> validate_record(const DatasetRecord& record);

/// Entry in the local version manifest mapping a dataset version to its
/// archive location and checksum.
struct ManifestEntry {
    std::string version;
    std::string url;
    std::string sha256;
    std::string filename;
};

std::vector<ManifestEntry> read_manifest(const std::string& path);

/// Downloads one archive to dest_dir and verifies its SHA-256.
/// Returns the path of the downloaded file.
std::string fetch_archive(const ManifestEntry& entry,
                          const std::string& dest_dir);

std::string sha256_file(const std::string& path);

}  // namespace mantra
