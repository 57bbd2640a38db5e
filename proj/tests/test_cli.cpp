#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mantra/formats.hpp"

// End-to-end checks against the installed binary.
#ifndef MANTRA_CLI_PATH
#error "MANTRA_CLI_PATH must point at the mantra executable"
#endif
#ifndef MANTRA_TEST_DATA_DIR
#error "MANTRA_TEST_DATA_DIR must point at tests/data"
#endif

namespace {

namespace fs = std::filesystem;

const std::string kCli = MANTRA_CLI_PATH;
const std::string kDataDir = MANTRA_TEST_DATA_DIR;

int run_cli(const std::string& args) {
    const std::string cmd = kCli + " " + args + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("mantra_cli_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("verify exits 0 on the clean sample file") {
    CHECK(run_cli("verify --input " + kDataDir + "/sample_2_manifolds.json") ==
          0);
}

TEST_CASE("verify exits 1 on tampered labels") {
    TempDir tmp;
    auto records = mantra::read_dataset(kDataDir + "/sample_2_manifolds.json");
    (*records[0].betti_numbers)[1] = 7;
    auto bad = tmp.path / "bad.json";
    mantra::write_dataset(records, bad.string());
    auto report = tmp.path / "report.csv";
    CHECK(run_cli("verify --input " + bad.string() +
                  " --report " + report.string()) == 1);
    CHECK(slurp(report).find("betti_numbers") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("") == 2);
    CHECK(run_cli("frobnicate") == 2);
    CHECK(run_cli("verify") == 2);                     // missing --input
    CHECK(run_cli("verify --input x --bogus-flag") == 2);
    TempDir tmp;
    CHECK(run_cli("split --input " + kDataDir +
                  "/sample_2_manifolds.json --seed 1 --ratios 0.5,0.5 "
                  "--stratify-by name --output " +
                  (tmp.path / "s.json").string()) == 2);
}

TEST_CASE("missing input exits 3") {
    CHECK(run_cli("verify --input /nonexistent/file.json") == 3);
}

TEST_CASE("convert then verify relabeled output") {
    TempDir tmp;
    auto converted = tmp.path / "converted.json";
    CHECK(run_cli("convert --from lex --input " + kDataDir + "/sample_lex.txt" +
                  " --output " + converted.string()) == 0);
    auto records = mantra::read_dataset(converted.string());
    REQUIRE(records.size() == 2);
    CHECK(records[0].id == "manifold_lex_d2_n6_#1");
    CHECK(records[0].n_vertices == 6);

    auto labeled = tmp.path / "labeled.json";
    CHECK(run_cli("labels --input " + converted.string() + " --output " +
                  labeled.string()) == 0);
    CHECK(run_cli("verify --input " + labeled.string()) == 0);

    // Output protection without --force.
    CHECK(run_cli("labels --input " + converted.string() + " --output " +
                  labeled.string()) == 3);
    CHECK(run_cli("labels --input " + converted.string() + " --output " +
                  labeled.string() + " --force") == 0);
}

TEST_CASE("check reports manifold status") {
    CHECK(run_cli("check --input " + kDataDir + "/sample_2_manifolds.json") ==
          0);
}

TEST_CASE("subdivide multiplies the triangle count") {
    TempDir tmp;
    auto out = tmp.path / "sd.json";
    CHECK(run_cli("subdivide --input " + kDataDir +
                  "/sample_2_manifolds.json --iterations 1 --output " +
                  out.string()) == 0);
    auto records = mantra::read_dataset(out.string());
    REQUIRE(records.size() == 2);
    CHECK(records[0].triangulation.size() == 24);  // 3! * 4
    CHECK(records[1].triangulation.size() == 36);  // 3! * 6
}

TEST_CASE("split output is byte-deterministic across runs") {
    TempDir tmp;
    auto a = tmp.path / "a.json";
    auto b = tmp.path / "b.json";
    const std::string common = "split --input " + kDataDir +
                               "/sample_2_manifolds.json --seed 42 "
                               "--ratios 0.6,0.2,0.2 --stratify-by name ";
    CHECK(run_cli(common + "--output " + a.string()) == 0);
    CHECK(run_cli(common + "--output " + b.string()) == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("stats prints a distribution table") {
    TempDir tmp;
    auto csv = tmp.path / "stats.csv";
    CHECK(run_cli("stats --input " + kDataDir +
                  "/sample_2_manifolds.json --key n_vertices --output " +
                  csv.string()) == 0);
    auto text = slurp(csv);
    CHECK(text.find("n_vertices,count,percent") != std::string::npos);
    CHECK(text.find("\"4\",1,50") != std::string::npos);
}

TEST_CASE("features exports per-record CSV directories") {
    TempDir tmp;
    CHECK(run_cli("features --input " + kDataDir +
                  "/sample_2_manifolds.json --kind connectivity-index "
                  "--output " +
                  tmp.path.string()) == 0);
    CHECK(fs::exists(tmp.path / "manifold_2_4_1" / "dim0.csv"));
    CHECK(fs::exists(tmp.path / "manifold_2_4_1" / "features.json"));
    CHECK(fs::exists(tmp.path / "manifold_2_5_1" / "dim2.csv"));
}

TEST_CASE("fetch resolves versions through the manifest") {
    TempDir tmp;
    auto payload = tmp.path / "2_manifolds.json.gz";
    {
        auto records = mantra::read_dataset(kDataDir + "/sample_2_manifolds.json");
        mantra::write_dataset(records, payload.string());
    }
    auto manifest = tmp.path / "manifest.json";
    std::ofstream(manifest) << R"({"1.0.0":[{"url":"file://)"
                            << payload.string() << R"(","sha256":")"
                            << mantra::sha256_file(payload.string())
                            << R"(","filename":"2_manifolds.json.gz"}]})";

    auto dest = tmp.path / "cache";
    CHECK(run_cli("fetch --version 1.0.0 --manifest " + manifest.string() +
                  " --dest " + dest.string()) == 0);
    CHECK(fs::exists(dest / "2_manifolds.json.gz"));

    CHECK(run_cli("fetch --version 9.9.9 --manifest " + manifest.string() +
                  " --dest " + dest.string()) == 3);
}
