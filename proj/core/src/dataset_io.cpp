#include <zlib.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mantra/formats.hpp"

namespace mantra {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool is_gzip(const std::string& data) {
    return data.size() >= 2 && static_cast<unsigned char>(data[0]) == 0x1f &&
           static_cast<unsigned char>(data[1]) == 0x8b;
}

std::string gunzip(const std::string& data) {
    z_stream zs{};
    if (inflateInit2(&zs, 16 + MAX_WBITS) != Z_OK)
        throw IoError("zlib inflateInit failed");

    std::string out;
    std::vector<char> buf(1 << 16);
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
    zs.avail_in = static_cast<uInt>(data.size());
    int ret;
    do {
        zs.next_out = reinterpret_cast<Bytef*>(buf.data());
        zs.avail_out = static_cast<uInt>(buf.size());
        ret = inflate(&zs, Z_NO_FLUSH);
        if (ret != Z_OK && ret != Z_STREAM_END) {
            inflateEnd(&zs);
            throw IoError("gzip decompression failed");
        }
        out.append(buf.data(), buf.size() - zs.avail_out);
    } while (ret != Z_STREAM_END && zs.avail_in > 0);
    inflateEnd(&zs);
    return out;
}

std::string gzip_compress(const std::string& data) {
    z_stream zs{};
    if (deflateInit2(&zs, Z_DEFAULT_COMPRESSION, Z_DEFLATED, 16 + MAX_WBITS, 8,
                     Z_DEFAULT_STRATEGY) != Z_OK)
        throw IoError("zlib deflateInit failed");

    std::string out;
    std::vector<char> buf(1 << 16);
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
    zs.avail_in = static_cast<uInt>(data.size());
    int ret;
    do {
        zs.next_out = reinterpret_cast<Bytef*>(buf.data());
        zs.avail_out = static_cast<uInt>(buf.size());
        ret = deflate(&zs, Z_FINISH);
        out.append(buf.data(), buf.size() - zs.avail_out);
    } while (ret != Z_STREAM_END);
    deflateEnd(&zs);
    return out;
}

const nlohmann::json& require_field(const nlohmann::json& obj,
                                    std::size_t index, const char* field) {
    auto it = obj.find(field);
    if (it == obj.end())
        throw SchemaViolationError(index, field, "missing required field");
    return *it;
}

DatasetRecord record_from_json(const nlohmann::json& obj, std::size_t index) {
    if (!obj.is_object())
        throw SchemaViolationError(index, "<record>", "not a JSON object");

    DatasetRecord r;
    const auto& id = require_field(obj, index, "id");
    if (!id.is_string())
        throw SchemaViolationError(index, "id", "expected string");
    r.id = id.get<std::string>();

    const auto& tri = require_field(obj, index, "triangulation");
    if (!tri.is_array())
        throw SchemaViolationError(index, "triangulation", "expected array");
    for (const auto& facet : tri) {
        if (!facet.is_array())
            throw SchemaViolationError(index, "triangulation",
                                       "facet is not an array");
        std::vector<int> vs;
        for (const auto& v : facet) {
            if (!v.is_number_integer())
                throw SchemaViolationError(index, "triangulation",
                                           "vertex id is not an integer");
            vs.push_back(v.get<int>());
        }
        r.triangulation.push_back(std::move(vs));
    }

    const auto& nv = require_field(obj, index, "n_vertices");
    if (!nv.is_number_integer())
        throw SchemaViolationError(index, "n_vertices", "expected integer");
    r.n_vertices = nv.get<int>();

    if (auto it = obj.find("dimension"); it != obj.end()) {
        if (!it->is_number_integer())
            throw SchemaViolationError(index, "dimension", "expected integer");
        r.dimension = it->get<int>();
    }
    if (auto it = obj.find("betti_numbers"); it != obj.end()) {
        if (!it->is_array())
            throw SchemaViolationError(index, "betti_numbers", "expected array");
        std::vector<std::int64_t> betti;
        for (const auto& b : *it) {
            if (!b.is_number_integer())
                throw SchemaViolationError(index, "betti_numbers",
                                           "entry is not an integer");
            betti.push_back(b.get<std::int64_t>());
        }
        r.betti_numbers = std::move(betti);
    }
    if (auto it = obj.find("torsion_coefficients"); it != obj.end()) {
        if (!it->is_array())
            throw SchemaViolationError(index, "torsion_coefficients",
                                       "expected array");
        std::vector<std::string> torsion;
        for (const auto& t : *it) {
            if (!t.is_string())
                throw SchemaViolationError(index, "torsion_coefficients",
                                           "entry is not a string");
            torsion.push_back(t.get<std::string>());
        }
        r.torsion_coefficients = std::move(torsion);
    }
    if (auto it = obj.find("name"); it != obj.end()) {
        if (!it->is_string())
            throw SchemaViolationError(index, "name", "expected string");
        r.name = it->get<std::string>();
    }
    if (auto it = obj.find("genus"); it != obj.end()) {
        if (!it->is_number_integer())
            throw SchemaViolationError(index, "genus", "expected integer");
        r.genus = it->get<std::int64_t>();
    }
    if (auto it = obj.find("orientable"); it != obj.end()) {
        if (!it->is_boolean())
            throw SchemaViolationError(index, "orientable", "expected boolean");
        r.orientable = it->get<bool>();
    }

    // Length invariants are hard errors on read; softer checks live in
    // validate_record.
    const int dim = r.effective_dimension();
    if (r.betti_numbers &&
        static_cast<int>(r.betti_numbers->size()) != dim + 1)
        throw SchemaViolationError(index, "betti_numbers",
                                   "length does not equal dimension + 1");
    if (r.torsion_coefficients &&
        static_cast<int>(r.torsion_coefficients->size()) != dim + 1)
        throw SchemaViolationError(index, "torsion_coefficients",
                                   "length does not equal dimension + 1");
    return r;
}

}  // namespace

int DatasetRecord::effective_dimension() const {
    if (dimension) return *dimension;
    std::size_t largest = 0;
    for (const auto& facet : triangulation)
        largest = std::max(largest, facet.size());
    return static_cast<int>(largest) - 1;
}

std::vector<DatasetRecord> read_dataset(const std::string& path) {
    std::string data = read_file(path);
    if (is_gzip(data)) data = gunzip(data);

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(data);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedJsonError(e.what());
    }
    if (!doc.is_array()) throw MalformedJsonError("top-level value is not an array");

    std::vector<DatasetRecord> records;
    records.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i)
        records.push_back(record_from_json(doc[i], i));
    return records;
}

std::string dataset_to_json(const std::vector<DatasetRecord>& records) {
    // Canonical layout: 2-space indent, facets inline, field order fixed.
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const DatasetRecord& r = records[i];
        out << (i ? ",\n" : "\n");
        out << "  {\n";
        out << "    \"id\": " << nlohmann::json(r.id).dump() << ",\n";
        out << "    \"triangulation\": [\n";
        for (std::size_t f = 0; f < r.triangulation.size(); ++f) {
            out << "      [";
            for (std::size_t v = 0; v < r.triangulation[f].size(); ++v)
                out << (v ? "," : "") << r.triangulation[f][v];
            out << (f + 1 < r.triangulation.size() ? "],\n" : "]\n");
        }
        out << "    ]";
        out << ",\n    \"dimension\": " << r.effective_dimension();
        out << ",\n    \"n_vertices\": " << r.n_vertices;
        if (r.betti_numbers) {
            out << ",\n    \"betti_numbers\": [\n";
            for (std::size_t b = 0; b < r.betti_numbers->size(); ++b)
                out << "      " << (*r.betti_numbers)[b]
                    << (b + 1 < r.betti_numbers->size() ? ",\n" : "\n");
            out << "    ]";
        }
        if (r.torsion_coefficients) {
            out << ",\n    \"torsion_coefficients\": [\n";
            for (std::size_t t = 0; t < r.torsion_coefficients->size(); ++t)
                out << "      "
                    << nlohmann::json((*r.torsion_coefficients)[t]).dump()
                    << (t + 1 < r.torsion_coefficients->size() ? ",\n" : "\n");
            out << "    ]";
        }
        if (r.name) out << ",\n    \"name\": " << nlohmann::json(*r.name).dump();
        if (r.genus.has_value()) out << ",\n    \"genus\": " << *r.genus;
        if (r.orientable.has_value())
            out << ",\n    \"orientable\": " << (*r.orientable ? "true" : "false");
        out << "\n  }";
    }
    out << "\n]\n";
    return out.str();
}

void write_dataset(const std::vector<DatasetRecord>& records,
                   const std::string& path) {
    std::string text = dataset_to_json(records);
    if (path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0)
        text = gzip_compress(text);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

std::vector<std::string> validate_record(const DatasetRecord& record) {
    std::vector<std::string> violations;

    std::set<int> distinct;
    for (std::size_t f = 0; f < record.triangulation.size(); ++f) {
        if (record.triangulation[f].empty())
            violations.push_back("facet #" + std::to_string(f) + " is empty");
        for (int v : record.triangulation[f]) {
            if (v <= 0)
                violations.push_back("facet #" + std::to_string(f) +
                                     " has non-positive vertex id");
            else
                distinct.insert(v);
        }
    }
    if (record.triangulation.empty())
        violations.push_back("triangulation is empty");

    if (static_cast<int>(distinct.size()) != record.n_vertices)
        violations.push_back("n_vertices mismatch: field says " +
                             std::to_string(record.n_vertices) + ", found " +
                             std::to_string(distinct.size()));

    const int dim = record.effective_dimension();
    if (record.betti_numbers &&
        static_cast<int>(record.betti_numbers->size()) != dim + 1)
        violations.push_back("betti_numbers length != dimension + 1");
    if (record.torsion_coefficients &&
        static_cast<int>(record.torsion_coefficients->size()) != dim + 1)
        violations.push_back("torsion_coefficients length != dimension + 1");

    if (record.name && !record.name->empty()) {
        static const std::set<std::string> surface_names = {
            "Klein bottle", "RP^2", "S^2", "T^2"};
        static const std::set<std::string> volume_names = {
            "S^2 twist S^1", "S^2 x S^1", "S^3"};
        const auto& allowed = dim == 2 ? surface_names : volume_names;
        if ((dim == 2 || dim == 3) && !allowed.count(*record.name))
            violations.push_back("name not in allowed set: '" + *record.name +
                                 "'");
    }
    return violations;
}

}  // namespace mantra
