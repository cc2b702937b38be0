#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "risim/cli.hpp"
#include "risim/harness.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "risim");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = risim::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path workdir() {
    const fs::path dir = fs::path(RISIM_TEST_WORKDIR) / "cli_work";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("scalar subcommands") {
    CHECK(run({"se", "--scheme", "rasm", "--nr", "5", "--m", "2"}).out == "5\n");
    CHECK(run({"se", "--scheme", "rassk", "--nr", "6"}).out == "5\n");
    CHECK(run({"se", "--scheme", "rgsm", "--nr", "6", "--ns", "3", "--m", "2"}).out == "5\n");
    CHECK(run({"se", "--scheme", "tssk", "--nt", "8"}).out == "3\n");
    CHECK(run({"complexity", "--scheme", "rassk", "--nr", "4", "--n", "8", "--d", "8"}).out == "1656\n");
    CHECK(run({"complexity", "--scheme", "rasm", "--nr", "4", "--n", "8", "--m", "2"}).out == "3312\n");
    CHECK(run({"actable", "--nr", "4"}).out == "[[1],[2],[3],[4],[1,2],[1,3],[1,4],[2,3]]\n");
    CHECK(run({"actable", "--scheme", "rssk", "--nr", "4"}).out == "[[1],[2],[3],[4]]\n");
}

TEST_CASE("exit codes") {
    const auto bogus = run({"frobnicate"});
    CHECK(bogus.code == 2);
    CHECK(bogus.err.find("Usage") != std::string::npos);
    CHECK(run({"se", "--no-such-flag", "1"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"se", "--scheme", "rsm", "--nr", "6"}).code == 2);
    CHECK(run({"ber", "--nr", "4", "--max-trials", "10"}).code == 2);
    CHECK(run({"actable", "--nr", "3", "--ac-table", "[[1],[1]]"}).code == 2);
    CHECK(run({"se", "--config", "/nonexistent/file.cfg"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("CSV output, manifest and re-run") {
    const auto dir = workdir();
    const fs::path cfg_path = dir / "quick.cfg";
    {
        std::ofstream f(cfg_path);
        f << "scheme = rasm\nnr = 4\nn = 8\nm = 2\n"
             "snr_start = -5\nsnr_stop = 5\nsnr_step = 5\n"
             "max_trials = 20000\nmin_errors = 100\nblock_trials = 1000\nseed = 11\n";
    }
    const fs::path first = dir / "first.csv";
    const auto r = run({"ber", "--config", cfg_path.string(), "--n", "16", "--out", first.string()});
    REQUIRE(r.code == 0);
    const std::string csv = slurp(first);
    CHECK(csv.rfind("snr_db,trials,bit_errors,ber,ci95_low,ci95_high,aber_bound\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);

    const fs::path manifest_path = dir / "first.manifest.json";
    REQUIRE(fs::exists(manifest_path));
    const auto m = nlohmann::json::parse(slurp(manifest_path));
    CHECK(m["format_version"] == risim::harness::format_version);
    CHECK(m["command"] == "ber");
    CHECK(m["seed"] == 11);
    CHECK(m["config"]["n"] == "16");
    CHECK(m["content_sha1"] == risim::harness::git_blob_hash(csv));
    CHECK(m["output"] == "first.csv");

    const fs::path second = dir / "second.csv";
    REQUIRE(run({"ber", "--from-manifest", manifest_path.string(), "--out", second.string()}).code == 0);
    CHECK(slurp(second) == csv);

    // A flag still overrides the manifest.
    const auto changed = run({"ber", "--from-manifest", manifest_path.string(), "--seed", "12"});
    REQUIRE(changed.code == 0);
    CHECK(changed.out != csv);

    const auto to_stdout = run({"ber", "--config", cfg_path.string(), "--n", "16"});
    CHECK(to_stdout.out == csv);
}

TEST_CASE("aber and sr subcommands") {
    const auto aber = run({"aber", "--nr", "4", "--n", "8", "--snr-start", "0", "--snr-stop", "0",
                           "--max-trials", "5000", "--block-trials", "1000"});
    REQUIRE(aber.code == 0);
    CHECK(aber.out.rfind("snr_db,aber_bound,ber,ci95_low,ci95_high\n", 0) == 0);

    const auto sr = run({"sr", "--scheme", "rassk", "--nr", "4", "--n", "8", "--snr-start", "0",
                         "--snr-stop", "10", "--snr-step", "10", "--sr-samples", "1000"});
    REQUIRE(sr.code == 0);
    CHECK(sr.out.rfind("snr_db,r_b,r_e,sr,std_err\n", 0) == 0);
    CHECK(std::count(sr.out.begin(), sr.out.end(), '\n') == 3);
}
