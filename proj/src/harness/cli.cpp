#include "risim/cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "risim/analysis.hpp"
#include "risim/harness.hpp"

namespace risim {

namespace {

std::string flag_name(const std::string& key) {
    std::string dashed = key;
    std::replace(dashed.begin(), dashed.end(), '_', '-');
    return dashed == key ? "--" + key : "--" + dashed + ",--" + key;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

harness::ConfigMap manifest_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::config, "cannot read manifest " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::config, std::string("manifest JSON: ") + e.what());
    }
    if (!j.contains("format_version") || j["format_version"] != harness::format_version) {
        fail(ErrorKind::config, "manifest format_version mismatch");
    }
    if (!j.contains("config") || !j["config"].is_object()) fail(ErrorKind::config, "manifest has no config");
    harness::ConfigMap out;
    for (const auto& [k, v] : j["config"].items()) {
        if (!v.is_string()) fail(ErrorKind::config, "manifest config values must be strings");
        out[k] = v.get<std::string>();
    }
    return out;
}

std::filesystem::path manifest_path(const std::filesystem::path& out) {
    auto p = out;
    p.replace_extension(".manifest.json");
    return p;
}

/// Writes content to --out (with its manifest) or to the output stream.
void emit(const std::string& command, const SchemeConfig& cfg, const std::string& out_path,
          const std::string& content, std::ostream& out) {
    if (out_path.empty()) {
        out << content;
        return;
    }
    {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) fail(ErrorKind::config, "cannot write " + out_path);
        f << content;
    }
    nlohmann::json m;
    m["format_version"] = harness::format_version;
    m["command"] = command;
    m["config"] = harness::describe_config(cfg);
    m["seed"] = cfg.seed;
    m["output"] = std::filesystem::path(out_path).filename().string();
    m["content_sha1"] = harness::git_blob_hash(content);
    m["created_utc"] = utc_timestamp();
    std::ofstream f(manifest_path(out_path));
    if (!f) fail(ErrorKind::config, "cannot write manifest beside " + out_path);
    f << m.dump(2) << '\n';
}

struct CommonArgs {
    std::string config_file;
    std::string manifest_file;
    std::string out_path;
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;
};

void add_common(CLI::App& sub, CommonArgs& args) {
    sub.add_option("--config", args.config_file, "flat key = value configuration file");
    sub.add_option("--from-manifest", args.manifest_file, "re-run the configuration of a run manifest");
    sub.add_option("--out", args.out_path, "output file; a .manifest.json is written beside it");
    for (const auto& key : harness::config_keys()) {
        args.options[key] = sub.add_option(flag_name(key), args.values[key]);
    }
}

SchemeConfig resolve(const CommonArgs& args) {
    SchemeConfig cfg;
    harness::ConfigMap merged;
    if (!args.manifest_file.empty()) merged = manifest_config(args.manifest_file);
    if (!args.config_file.empty()) {
        for (auto& [k, v] : harness::read_config_file(args.config_file)) merged[k] = v;
    }
    for (const auto& [key, opt] : args.options) {
        if (opt->count() > 0) merged[key] = args.values.at(key);
    }
    harness::apply_config(cfg, merged);
    return cfg;
}

std::size_t index_antennas(const SchemeConfig& cfg) {
    return is_transmit_im(cfg.scheme) ? cfg.n_t : cfg.mapping_antennas();
}

bool is_config_error(ErrorKind k) {
    switch (k) {
        case ErrorKind::config:
        case ErrorKind::unsupported_configuration:
        case ErrorKind::invalid_dimension:
        case ErrorKind::insufficient_elements:
        case ErrorKind::unknown_combination: return true;
        default: return false;
    }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"RIS-assisted receive index modulation simulator and analysis toolkit", "risim"};
    app.require_subcommand(1);

    struct Command {
        CLI::App* app;
        std::unique_ptr<CommonArgs> args;
    };
    std::map<std::string, Command> commands;
    const std::map<std::string, std::string> descriptions{
        {"ber", "Monte Carlo BER sweep (CSV)"},
        {"aber", "union bound on the average BER next to the simulated BER (CSV)"},
        {"se", "spectral efficiency in bits per channel use"},
        {"complexity", "real operations of the exhaustive ML detector"},
        {"sr", "secrecy-rate sweep (CSV)"},
        {"actable", "index table of the configuration as JSON"},
    };
    std::size_t complexity_d = 0;
    for (const auto& [name, text] : descriptions) {
        auto args = std::make_unique<CommonArgs>();
        CLI::App* sub = app.add_subcommand(name, text);
        add_common(*sub, *args);
        if (name == "complexity") sub->add_option("--d", complexity_d, "index table size (default: the scheme's)");
        commands[name] = {sub, std::move(args)};
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        if (code != 0) {
            err << app.help();
            return 2;
        }
        return 0;
    }

    try {
        for (const auto& [name, cmd] : commands) {
            if (!cmd.app->parsed()) continue;
            const SchemeConfig cfg = resolve(*cmd.args);
            const std::string& out_path = cmd.args->out_path;
            if (name == "se") {
                const std::optional<std::size_t> n_s =
                    cfg.n_s > 0 ? std::optional<std::size_t>(cfg.n_s) : std::nullopt;
                out << analysis::spectral_efficiency(cfg.scheme, index_antennas(cfg), cfg.m, n_s) << '\n';
            } else if (name == "complexity") {
                const std::size_t d = complexity_d > 0 ? complexity_d : index_table(cfg).size();
                out << analysis::detection_complexity(cfg.scheme, cfg.n_r, cfg.n, d, cfg.m) << '\n';
            } else if (name == "actable") {
                emit(name, cfg, out_path, mapping::table_to_json(index_table(cfg)) + '\n', out);
            } else {
                std::ostringstream csv;
                if (name == "ber") harness::write_ber_csv(csv, harness::run_ber_sweep(cfg));
                if (name == "aber") harness::write_aber_csv(csv, harness::run_aber_sweep(cfg));
                if (name == "sr") harness::write_sr_csv(csv, harness::run_sr_sweep(cfg));
                emit(name, cfg, out_path, csv.str(), out);
            }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return is_config_error(e.kind()) ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace risim
