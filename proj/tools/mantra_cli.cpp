// Command-line front end for the MANTRA triangulation toolkit.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 I/O error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mantra/dataset_ops.hpp"
#include "mantra/formats.hpp"
#include "mantra/homology.hpp"
#include "mantra/manifold.hpp"
#include "mantra/operators.hpp"
#include "mantra/subdivision.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw mantra::IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void guard_output(const std::string& path, bool force) {
    if (!force && std::filesystem::exists(path))
        throw mantra::IoError("output " + path +
                              " exists; pass --force to overwrite");
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw mantra::IoError("cannot write " + path);
    out << text;
}

std::array<double, 3> parse_ratios(const std::string& spec) {
    std::array<double, 3> ratios{};
    std::stringstream ss(spec);
    std::string part;
    std::size_t i = 0;
    while (std::getline(ss, part, ',')) {
        if (i >= 3) throw CLI::ValidationError("--ratios", "expected three values");
        ratios[i++] = std::stod(part);
    }
    if (i != 3) throw CLI::ValidationError("--ratios", "expected three values");
    return ratios;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic tooling for the MANTRA triangulation dataset"};
    app.require_subcommand(1);

    std::string input, output, report_path, from_format = "lex";
    std::string key, kind, version, dest;
    std::string ratios_spec = "0.6,0.2,0.2";
    std::uint64_t seed = 0;
    bool seed_set = false;
    int iterations = 1;
    unsigned threads = 0;
    bool force = false;

    auto* convert = app.add_subcommand("convert", "Lexicographical text to JSON");
    convert->add_option("--from", from_format, "Input format (lex)")
        ->check(CLI::IsMember({"lex"}));
    convert->add_option("--input", input)->required();
    convert->add_option("--output", output)->required();
    convert->add_flag("--force", force, "Overwrite existing output");

    auto* labels = app.add_subcommand("labels", "Recompute and attach labels");
    labels->add_option("--input", input)->required();
    labels->add_option("--output", output)->required();
    labels->add_option("--threads", threads);
    labels->add_flag("--force", force);

    auto* verify = app.add_subcommand("verify", "Check stored labels against "
                                                "recomputed values");
    verify->add_option("--input", input)->required();
    verify->add_option("--report", report_path, "Write a CSV mismatch report");
    verify->add_option("--threads", threads);

    auto* check = app.add_subcommand("check", "Combinatorial manifold report");
    check->add_option("--input", input)->required();

    auto* subdivide = app.add_subcommand("subdivide", "Barycentric subdivision");
    subdivide->add_option("--input", input)->required();
    subdivide->add_option("--iterations", iterations)
        ->check(CLI::PositiveNumber);
    subdivide->add_option("--output", output)->required();
    subdivide->add_flag("--force", force);

    auto* split = app.add_subcommand("split", "Deterministic stratified split");
    split->add_option("--input", input)->required();
    split->add_option("--seed", seed)->required();
    split->add_option("--ratios", ratios_spec, "Three comma-separated fractions");
    split->add_option("--stratify-by", key)->required();
    split->add_option("--output", output)->required();
    split->add_flag("--force", force);

    auto* stats = app.add_subcommand("stats", "Label distribution tables");
    stats->add_option("--input", input)->required();
    stats->add_option("--key", key)->required();
    stats->add_option("--output", output, "Write CSV here instead of stdout");
    stats->add_flag("--force", force);

    auto* features = app.add_subcommand("features", "Feature matrices as CSV");
    features->add_option("--input", input)->required();
    features->add_option("--kind", kind)->required();
    features->add_option("--seed", seed)->each([&](const std::string&) {
        seed_set = true;
    });
    features->add_option("--output", output, "Output directory")->required();
    features->add_flag("--force", force);

    auto* fetch = app.add_subcommand("fetch", "Download dataset archives");
    fetch->add_option("--version", version)->required();
    fetch->add_option("--dest", dest, "Destination directory");
    fetch->add_option("--manifest", report_path, "Manifest JSON path")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (convert->parsed()) {
        guard_output(output, force);
        auto entries = mantra::parse_lexicographical(read_text_file(input));
        std::vector<mantra::DatasetRecord> records;
        for (auto& [id, facets] : entries) {
            mantra::DatasetRecord r;
            r.id = id;
            r.triangulation = facets;
            auto K = mantra::SimplicialComplex::from_facets(facets);
            r.n_vertices = K.n_vertices();
            r.dimension = K.dim();
            records.push_back(std::move(r));
        }
        mantra::write_dataset(records, output);
        std::cerr << "converted " << records.size() << " triangulations\n";
        return kExitOk;
    }

    if (labels->parsed()) {
        guard_output(output, force);
        auto records = mantra::read_dataset(input);
        std::size_t failed = 0;
        std::vector<mantra::DatasetRecord> out;
        out.reserve(records.size());
        for (const auto& r : records) {
            mantra::LabeledRecord lr = mantra::compute_labels(r);
            if (lr.failed) {
                ++failed;
                std::cerr << r.id << ": " << lr.error << '\n';
            }
            out.push_back(std::move(lr.record));
        }
        mantra::write_dataset(out, output);
        std::cerr << "labeled " << out.size() << " records, " << failed
                  << " failures\n";
        return failed == 0 ? kExitOk : kExitMismatch;
    }

    if (verify->parsed()) {
        auto records = mantra::read_dataset(input);
        mantra::VerifyReport rep = mantra::verify_labels(records, threads);
        if (!report_path.empty()) {
            std::ostringstream csv;
            csv << "id,field,stored,recomputed\n";
            for (const auto& m : rep.mismatches)
                csv << m.id << ',' << m.field << ',' << m.stored << ','
                    << m.recomputed << '\n';
            write_text_file(report_path, csv.str());
        }
        std::cerr << rep.n_records << " records, " << rep.mismatches.size()
                  << " mismatches, " << rep.n_failed << " failures\n";
        return rep.clean() ? kExitOk : kExitMismatch;
    }

    if (check->parsed()) {
        auto records = mantra::read_dataset(input);
        std::size_t bad = 0;
        for (const auto& r : records) {
            auto K = mantra::SimplicialComplex::from_facets(r.triangulation);
            mantra::ManifoldReport rep = mantra::is_combinatorial_manifold(K);
            std::cout << r.id << ": "
                      << (rep.is_manifold ? "manifold" : "NOT a manifold")
                      << " (dim " << rep.dimension << ")";
            if (!rep.witnesses.empty())
                std::cout << " [" << rep.witnesses.front().reason << "]";
            std::cout << '\n';
            if (!rep.is_manifold) ++bad;
        }
        return bad == 0 ? kExitOk : kExitMismatch;
    }

    if (subdivide->parsed()) {
        guard_output(output, force);
        auto records = mantra::read_dataset(input);
        std::vector<mantra::DatasetRecord> out;
        for (const auto& r : records) {
            auto K = mantra::SimplicialComplex::from_facets(r.triangulation);
            for (int i = 0; i < iterations; ++i)
                K = mantra::barycentric_subdivision(K).first;
            mantra::DatasetRecord s;
            s.id = r.id + "_sd" + std::to_string(iterations);
            for (const mantra::Simplex& f : K.facets())
                s.triangulation.push_back(f.vertices);
            s.n_vertices = K.n_vertices();
            s.dimension = K.dim();
            // Labels are topological invariants, so they carry over.
            s.betti_numbers = r.betti_numbers;
            s.torsion_coefficients = r.torsion_coefficients;
            s.name = r.name;
            s.genus = r.genus;
            s.orientable = r.orientable;
            out.push_back(std::move(s));
        }
        mantra::write_dataset(out, output);
        return kExitOk;
    }

    if (split->parsed()) {
        guard_output(output, force);
        auto records = mantra::read_dataset(input);
        auto ratios = parse_ratios(ratios_spec);
        mantra::SplitAssignment sa =
            mantra::stratified_split(records, seed, ratios, key);
        write_text_file(output, mantra::split_to_json(sa));
        return kExitOk;
    }

    if (stats->parsed()) {
        auto records = mantra::read_dataset(input);
        mantra::LabelHistogram h = mantra::label_distribution(records, key);
        if (output.empty()) {
            std::cout << mantra::histogram_to_markdown(h);
        } else {
            guard_output(output, force);
            write_text_file(output, mantra::histogram_to_csv(h));
        }
        return kExitOk;
    }

    if (features->parsed()) {
        auto records = mantra::read_dataset(input);
        mantra::FeatureKind fk = mantra::parse_feature_kind(kind);
        for (const auto& r : records) {
            auto K = mantra::SimplicialComplex::from_facets(r.triangulation);
            mantra::FeatureOptions opts;
            if (seed_set) opts.seed = seed;
            opts.record_id = r.id;
            mantra::FeatureAssignment fa = mantra::make_features(K, fk, opts);
            mantra::export_features_csv(
                fa, opts,
                (std::filesystem::path(output) / r.id).string());
        }
        return kExitOk;
    }

    if (fetch->parsed()) {
        if (dest.empty()) {
            if (const char* cache = std::getenv("MANTRA_CACHE_DIR"))
                dest = cache;
            else
                dest = ".";
        }
        auto manifest = mantra::read_manifest(report_path);
        bool any = false;
        for (const auto& entry : manifest) {
            if (entry.version != version) continue;
            any = true;
            std::string path = mantra::fetch_archive(entry, dest);
            std::cerr << "fetched " << path << '\n';
        }
        if (!any)
            throw mantra::IoError("version " + version + " not in manifest");
        return kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const mantra::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const mantra::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
}
