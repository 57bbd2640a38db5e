#include "mantra/dataset_ops.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "mantra/homology.hpp"
#include "mantra/rng.hpp"

namespace mantra {

namespace {

// Torsion factors of one dimension as the dataset's string encoding:
// "" when free, otherwise the prime-power names joined with " x ".
std::string torsion_string(const std::vector<std::string>& factors) {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " x ";
        out += factors[i];
    }
    return out;
}

}  // namespace

LabeledRecord compute_labels(const DatasetRecord& record) {
    LabeledRecord out;
    out.record = record;
    try {
        SimplicialComplex K = SimplicialComplex::from_facets(record.triangulation);

        HomologyProfile H = homology_profile(K);
        out.record.betti_numbers = H.betti;
        std::vector<std::string> torsion;
        torsion.reserve(H.torsion.size());
        for (const auto& t : H.torsion) torsion.push_back(torsion_string(t));
        out.record.torsion_coefficients = std::move(torsion);
        out.record.dimension = K.dim();
        out.record.n_vertices = K.n_vertices();

        out.report = is_combinatorial_manifold(K);
        if (K.dim() == 2 && out.report.is_manifold) {
            SurfaceClass cls = classify_surface(K);
            out.record.orientable = cls.orientable;
            out.record.genus = cls.genus;
            out.record.name = cls.name;
        }
        // 3-manifold names cannot be recomputed; whatever is stored stays.
    } catch (const Error& e) {
        out.failed = true;
        out.error = e.what();
    }
    return out;
}

namespace {

template <typename T>
std::string show(const std::optional<T>& v) {
    if (!v) return "<absent>";
    if constexpr (std::is_same_v<T, bool>) return *v ? "true" : "false";
    else if constexpr (std::is_same_v<T, std::string>) return *v;
    else return std::to_string(*v);
}

std::string show_list(const std::optional<std::vector<std::int64_t>>& v) {
    if (!v) return "<absent>";
    std::string s = "[";
    for (std::size_t i = 0; i < v->size(); ++i)
        s += (i ? "," : "") + std::to_string((*v)[i]);
    return s + "]";
}

std::string show_list(const std::optional<std::vector<std::string>>& v) {
    if (!v) return "<absent>";
    std::string s = "[";
    for (std::size_t i = 0; i < v->size(); ++i)
        s += (i ? std::string(",") : std::string()) + "'" + (*v)[i] + "'";
    return s + "]";
}

void diff_record(const DatasetRecord& stored, const LabeledRecord& computed,
                 std::vector<FieldMismatch>& out) {
    const DatasetRecord& fresh = computed.record;
    if (stored.betti_numbers && fresh.betti_numbers &&
        *stored.betti_numbers != *fresh.betti_numbers)
        out.push_back({stored.id, "betti_numbers", show_list(stored.betti_numbers),
                       show_list(fresh.betti_numbers)});
    if (stored.torsion_coefficients && fresh.torsion_coefficients &&
        *stored.torsion_coefficients != *fresh.torsion_coefficients)
        out.push_back({stored.id, "torsion_coefficients",
                       show_list(stored.torsion_coefficients),
                       show_list(fresh.torsion_coefficients)});
    if (stored.orientable && fresh.orientable &&
        *stored.orientable != *fresh.orientable)
        out.push_back({stored.id, "orientable", show(stored.orientable),
                       show(fresh.orientable)});
    if (stored.genus && fresh.genus && *stored.genus != *fresh.genus)
        out.push_back(
            {stored.id, "genus", show(stored.genus), show(fresh.genus)});
    // Surface names are only checkable when the recomputed type is one of
    // the four recognized ones; 3-manifold names are pass-through.
    if (stored.effective_dimension() == 2 && stored.name && fresh.name &&
        !fresh.name->empty() && *stored.name != *fresh.name)
        out.push_back({stored.id, "name", show(stored.name), show(fresh.name)});
}

}  // namespace

VerifyReport verify_labels(const std::vector<DatasetRecord>& dataset,
                           unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<std::size_t>(threads, std::max<std::size_t>(dataset.size(), 1));

    VerifyReport report;
    report.n_records = dataset.size();

    // Results are collected by record index, so the merged output does not
    // depend on scheduling.
    std::vector<LabeledRecord> computed(dataset.size());
    std::vector<std::thread> pool;
    std::atomic<std::size_t> cursor{0};
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= dataset.size()) return;
                computed[i] = compute_labels(dataset[i]);
            }
        });
    for (auto& th : pool) th.join();

    for (std::size_t i = 0; i < dataset.size(); ++i) {
        if (computed[i].failed) {
            ++report.n_failed;
            report.mismatches.push_back(
                {dataset[i].id, "<computation>", "", computed[i].error});
            continue;
        }
        diff_record(dataset[i], computed[i], report.mismatches);
    }
    return report;
}

std::string split_name(Split s) {
    switch (s) {
        case Split::Train: return "train";
        case Split::Validation: return "validation";
        case Split::Test: return "test";
    }
    return "";
}

std::string label_value(const DatasetRecord& record, const std::string& key) {
    if (key == "name") return record.name.value_or("");
    if (key == "orientable") {
        if (!record.orientable) return "<absent>";
        return *record.orientable ? "true" : "false";
    }
    if (key == "genus")
        return record.genus ? std::to_string(*record.genus) : "<absent>";
    if (key == "n_vertices") return std::to_string(record.n_vertices);
    if (key == "betti_numbers") return show_list(record.betti_numbers);
    if (key == "torsion_coefficients")
        return show_list(record.torsion_coefficients);
    if (key.rfind("betti_", 0) == 0 && key.size() == 7 &&
        key[6] >= '0' && key[6] <= '9') {
        const std::size_t n = static_cast<std::size_t>(key[6] - '0');
        if (!record.betti_numbers || n >= record.betti_numbers->size())
            return "<absent>";
        return std::to_string((*record.betti_numbers)[n]);
    }
    throw UnknownKeyError(key);
}

SplitAssignment stratified_split(const std::vector<DatasetRecord>& dataset,
                                 std::uint64_t seed,
                                 std::array<double, 3> ratios,
                                 const std::string& key) {
    const double sum = ratios[0] + ratios[1] + ratios[2];
    if (ratios[0] <= 0 || ratios[1] <= 0 || ratios[2] <= 0 ||
        std::abs(sum - 1.0) > 1e-9)
        throw Error("split ratios must be positive and sum to 1");

    SplitAssignment out;
    out.seed = seed;
    out.ratios = ratios;
    out.stratify_key = key;

    std::map<std::string, std::vector<std::string>> strata;
    for (const DatasetRecord& r : dataset)
        strata[label_value(r, key)].push_back(r.id);

    for (auto& [label, ids] : strata) {
        std::sort(ids.begin(), ids.end());

        if (ids.size() < 3) {
            // Too small to spread over three splits.
            for (const std::string& id : ids)
                out.assignment[id] = Split::Train;
            continue;
        }

        // Stream keyed by (seed, stratum) so adding a stratum never
        // perturbs the shuffle of another.
        SplitMix64 rng(splitmix64(seed ^ fnv1a(label)));
        for (std::size_t i = ids.size() - 1; i > 0; --i)
            std::swap(ids[i], ids[rng.next_below(i + 1)]);

        // Largest-remainder allocation of the stratum size.
        const std::size_t n = ids.size();
        std::array<std::size_t, 3> counts{};
        std::array<double, 3> remainders{};
        std::size_t assigned = 0;
        for (int s = 0; s < 3; ++s) {
            double exact = ratios[s] * static_cast<double>(n);
            counts[s] = static_cast<std::size_t>(std::floor(exact));
            remainders[s] = exact - std::floor(exact);
            assigned += counts[s];
        }
        std::array<int, 3> order{0, 1, 2};
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return remainders[a] > remainders[b];
        });
        for (std::size_t i = 0; assigned < n; ++i, ++assigned)
            ++counts[order[i % 3]];

        std::size_t pos = 0;
        for (int s = 0; s < 3; ++s)
            for (std::size_t i = 0; i < counts[s]; ++i)
                out.assignment[ids[pos++]] = static_cast<Split>(s);
    }
    return out;
}

int LabelHistogram::percent(std::size_t count) const {
    if (total == 0) return 0;
    return static_cast<int>(std::lround(100.0 * static_cast<double>(count) /
                                        static_cast<double>(total)));
}

LabelHistogram label_distribution(const std::vector<DatasetRecord>& dataset,
                                  const std::string& key) {
    LabelHistogram h;
    h.key = key;
    h.total = dataset.size();

    std::map<std::string, std::size_t> counts;
    for (const DatasetRecord& r : dataset) ++counts[label_value(r, key)];

    // Numeric-looking labels sort numerically for readable tables.
    std::vector<std::pair<std::string, std::size_t>> buckets(counts.begin(),
                                                             counts.end());
    auto as_number = [](const std::string& s) -> std::optional<long long> {
        if (s.empty()) return std::nullopt;
        std::size_t pos = 0;
        try {
            long long v = std::stoll(s, &pos);
            if (pos == s.size()) return v;
        } catch (...) {
        }
        return std::nullopt;
    };
    std::stable_sort(buckets.begin(), buckets.end(), [&](const auto& a,
                                                         const auto& b) {
        auto na = as_number(a.first), nb = as_number(b.first);
        if (na && nb) return *na < *nb;
        if (na != nb) return na.has_value();
        return a.first < b.first;
    });
    h.buckets = std::move(buckets);
    return h;
}

std::string histogram_to_markdown(const LabelHistogram& h) {
    std::ostringstream out;
    out << "| " << h.key << " | count | percent |\n";
    out << "| --- | ---: | ---: |\n";
    for (const auto& [value, count] : h.buckets)
        out << "| " << (value.empty() ? "''" : value) << " | " << count << " | "
            << h.percent(count) << "% |\n";
    out << "| total | " << h.total << " | 100% |\n";
    return out.str();
}

std::string histogram_to_csv(const LabelHistogram& h) {
    std::ostringstream out;
    out << h.key << ",count,percent\n";
    for (const auto& [value, count] : h.buckets)
        out << nlohmann::json(value).dump() << ',' << count << ','
            << h.percent(count) << '\n';
    return out.str();
}

std::string split_to_json(const SplitAssignment& split) {
    std::ostringstream out;
    out << "{\n";
    std::size_t i = 0;
    for (const auto& [id, s] : split.assignment) {
        out << "  " << nlohmann::json(id).dump() << ": \"" << split_name(s)
            << '"' << (++i < split.assignment.size() ? ",\n" : "\n");
    }
    out << "}\n";
    return out.str();
}

}  // namespace mantra
