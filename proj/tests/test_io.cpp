#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "regraph/export.hpp"
#include "regraph/library.hpp"
#include "regraph/manifest.hpp"
#include "regraph/report.hpp"
#include "regraph/verify.hpp"
#include "regraph/zipfile.hpp"

namespace fs = std::filesystem;
using namespace regraph;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "regraph_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

// a real, tiny library: n=10 census with a small saturation window
fs::path tiny_library(const std::string& name) {
    const fs::path dir = fresh_dir(name);
    RunConfig cfg;
    cfg.n_list = {10};
    cfg.census_window = 30000;
    cfg.master_seed = 5;
    cfg.out_dir = dir.string();
    build_library(cfg);
    return dir;
}

}  // namespace

TEST_CASE("record and config round trips") {
    const fs::path dir = fresh_dir("io_roundtrip");

    GraphRecord r;
    r.g6 = "D~{";
    r.n = 5;
    r.k = 4;
    r.bin = 13;
    r.chi = 1.0;
    r.mean_distance = 1.0;
    r.source = Source::CC;
    r.seed = 1234567890123456789ULL;
    r.run = 7;
    write_records_csv((dir / "records.csv").string(), {r});
    const auto back = read_records_csv((dir / "records.csv").string());
    REQUIRE(back.size() == 1);
    CHECK(back[0].g6 == r.g6);
    CHECK(back[0].bin == 13);
    CHECK(back[0].seed == r.seed);
    CHECK(back[0].source == Source::CC);

    RunConfig cfg;
    cfg.n_list = {10, 15};
    cfg.master_seed = 99;
    cfg.p_threshold = 0.999;
    write_config_json((dir / "config.json").string(), cfg);
    const auto cfg2 = read_config_json((dir / "config.json").string());
    CHECK(cfg2.n_list == cfg.n_list);
    CHECK(cfg2.master_seed == 99);
    CHECK(cfg2.p_threshold == doctest::Approx(0.999));
}

TEST_CASE("format_double6") {
    CHECK(format_double6(0.7) == "0.700000");
    CHECK(format_double6(std::numeric_limits<double>::quiet_NaN()) == "NA");
    CHECK(std::isnan(parse_double6("NA")));
}

TEST_CASE("zip writes are byte-stable and extract losslessly") {
    const fs::path dir = fresh_dir("zip_src");
    {
        std::ofstream(dir / "a.txt") << "alpha\n";
        fs::create_directories(dir / "sub");
        std::ofstream(dir / "sub" / "b.txt") << "beta\n";
    }
    const fs::path zip1 = dir / "out1.zip";
    const fs::path zip2 = dir / "out2.zip";
    zip_write(zip1.string(), dir.string(), {"a.txt", "sub/b.txt"});
    zip_write(zip2.string(), dir.string(), {"a.txt", "sub/b.txt"});
    CHECK(slurp(zip1) == slurp(zip2));
    CHECK(zip_list(zip1.string()) == std::vector<std::string>{"a.txt", "sub/b.txt"});

    const fs::path out = fresh_dir("zip_dst");
    zip_extract(zip1.string(), out.string());
    CHECK(slurp(out / "a.txt") == "alpha\n");
    CHECK(slurp(out / "sub" / "b.txt") == "beta\n");

    CHECK_THROWS(zip_write((dir / "bad.zip").string(), dir.string(), {"../escape"}));
}

TEST_CASE("library export, import, verify and report" * doctest::timeout(900)) {
    const fs::path lib = tiny_library("io_library");

    std::ostringstream diag;
    CHECK(verify_library(lib.string(), diag) == 0);

    const fs::path zip = lib / "export.zip";
    export_library(lib.string(), zip.string());
    const fs::path back = fresh_dir("io_import");
    import_library(zip.string(), back.string());
    CHECK(slurp(back / "manifest.csv") == slurp(lib / "manifest.csv"));
    CHECK(slurp(back / "bins.csv") == slurp(lib / "bins.csv"));
    CHECK(slurp(back / "config.json") == slurp(lib / "config.json"));

    // byte-stable export
    const fs::path zip2 = lib / "export2.zip";
    export_library(lib.string(), zip2.string());
    CHECK(slurp(zip) == slurp(zip2));

    write_reports(lib.string());
    CHECK(fs::exists(lib / "report" / "fig1_population.csv"));
    CHECK(fs::exists(lib / "report" / "fig4_bin_occupancy.csv"));
    CHECK(fs::exists(lib / "report" / "fig6_overlap.csv"));
    CHECK(fs::exists(lib / "report" / "fig7_11_cvm.csv"));
    CHECK(fs::exists(lib / "report" / "figS1_distances.csv"));
}

TEST_CASE("exporting an empty library yields the bare manifest archive") {
    const fs::path dir = fresh_dir("io_empty");
    RunConfig cfg;
    cfg.n_list = {};
    cfg.out_dir = dir.string();
    build_library(cfg);
    const fs::path zip = dir / "empty.zip";
    export_library(dir.string(), zip.string());
    CHECK(zip_list(zip.string()) ==
          std::vector<std::string>{"bins.csv", "config.json", "manifest.csv"});
}

TEST_CASE("verify flags corrupted libraries" * doctest::timeout(900)) {
    const fs::path lib = tiny_library("io_corrupt");

    // truncate one bin file
    fs::path bin_file;
    for (const auto& e : fs::recursive_directory_iterator(lib / "n10"))
        if (e.path().extension() == ".g6") bin_file = e.path();
    REQUIRE(!bin_file.empty());
    const auto lines = read_lines(bin_file.string());
    REQUIRE(!lines.empty());
    {
        std::vector<std::string> fewer(lines.begin(), lines.end() - 1);
        std::ofstream out(bin_file, std::ios::trunc);
        for (const auto& l : fewer) out << l << '\n';
    }
    std::ostringstream diag;
    CHECK(verify_library(lib.string(), diag) > 0);
    CHECK(diag.str().find("bin file") != std::string::npos);

    // restore, then corrupt a manifest chi value
    {
        std::ofstream out(bin_file, std::ios::trunc);
        for (const auto& l : lines) out << l << '\n';
    }
    std::ostringstream diag2;
    REQUIRE(verify_library(lib.string(), diag2) == 0);

    auto manifest = slurp(lib / "manifest.csv");
    const auto pos = manifest.find("0.");
    REQUIRE(pos != std::string::npos);
    manifest[pos + 2] = manifest[pos + 2] == '9' ? '8' : '9';
    std::ofstream(lib / "manifest.csv", std::ios::trunc) << manifest;
    std::ostringstream diag3;
    CHECK(verify_library(lib.string(), diag3) > 0);
}
