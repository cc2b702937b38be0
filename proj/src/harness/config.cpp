#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "risim/harness.hpp"

namespace risim::harness {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string normalize_key(std::string key) {
    std::replace(key.begin(), key.end(), '-', '_');
    return key;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::config, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::uint64_t to_count(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        if (!v.empty() && v.front() == '-') throw std::invalid_argument("negative");
        const auto x = std::stoull(v, &used);
        if (used != v.size()) throw std::invalid_argument("trailing text");
        return x;
    } catch (const std::exception&) {
        fail(ErrorKind::config, key + ": expected a non-negative integer, got '" + v + "'");
    }
}

double to_real(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument("trailing text");
        return x;
    } catch (const std::exception&) {
        fail(ErrorKind::config, key + ": expected a number, got '" + v + "'");
    }
}

bool to_flag(const std::string& key, const std::string& v) {
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    fail(ErrorKind::config, key + ": expected a boolean, got '" + v + "'");
}

std::string exact(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys{
        "scheme",      "nr",          "nd",           "nt",         "ns",
        "n",           "m",           "constellation", "rician_k",  "csi_error_var",
        "csi_model",   "es",          "snr_start",    "snr_stop",   "snr_step",
        "seed",        "max_trials",  "min_errors",   "block_trials", "sr_samples",
        "quadrature_points", "with_bound", "mean_scaling", "covariance_model", "pep_method", "ac_table",
    };
    return keys;
}

ConfigMap parse_config_text(const std::string& text) {
    ConfigMap out;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            fail(ErrorKind::config, "line " + std::to_string(line_no) + ": expected key = value");
        }
        const auto key = normalize_key(trim(line.substr(0, eq)));
        if (key.empty()) fail(ErrorKind::config, "line " + std::to_string(line_no) + ": empty key");
        out[key] = trim(line.substr(eq + 1));
    }
    return out;
}

ConfigMap read_config_file(const std::string& path) { return parse_config_text(read_file(path)); }

void apply_config(SchemeConfig& cfg, const ConfigMap& values) {
    const auto& keys = config_keys();
    for (const auto& [key, v] : values) {
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            fail(ErrorKind::config, "unknown configuration key: " + key);
        }
    }
    auto get = [&](const char* key) -> const std::string* {
        const auto it = values.find(key);
        return it == values.end() ? nullptr : &it->second;
    };
    if (auto v = get("scheme")) cfg.scheme = parse_scheme(*v);
    if (auto v = get("nr")) cfg.n_r = to_count("nr", *v);
    if (auto v = get("nd")) cfg.n_d = to_count("nd", *v);
    if (auto v = get("nt")) cfg.n_t = to_count("nt", *v);
    if (auto v = get("ns")) cfg.n_s = to_count("ns", *v);
    if (auto v = get("n")) cfg.n = to_count("n", *v);
    if (auto v = get("m")) cfg.m = to_count("m", *v);
    if (auto v = get("constellation")) {
        if (*v == "psk") cfg.constellation = mapping::ConstellationKind::psk;
        else if (*v == "qam") cfg.constellation = mapping::ConstellationKind::qam;
        else fail(ErrorKind::config, "constellation: expected psk or qam");
    }
    if (auto v = get("rician_k")) cfg.fading.rician_k = to_real("rician_k", *v);
    if (auto v = get("csi_error_var")) cfg.fading.csi_error_var = to_real("csi_error_var", *v);
    if (auto v = get("csi_model")) {
        if (*v == "additive") cfg.fading.csi_model = channel::CsiModel::additive_error;
        else if (*v == "literal") cfg.fading.csi_model = channel::CsiModel::literal_weighted;
        else fail(ErrorKind::config, "csi_model: expected additive or literal");
    }
    if (auto v = get("es")) cfg.e_s = to_real("es", *v);
    if (auto v = get("snr_start")) cfg.snr_start_db = to_real("snr_start", *v);
    if (auto v = get("snr_stop")) cfg.snr_stop_db = to_real("snr_stop", *v);
    if (auto v = get("snr_step")) cfg.snr_step_db = to_real("snr_step", *v);
    if (auto v = get("seed")) cfg.seed = to_count("seed", *v);
    if (auto v = get("max_trials")) cfg.max_trials = to_count("max_trials", *v);
    if (auto v = get("min_errors")) cfg.min_errors = to_count("min_errors", *v);
    if (auto v = get("block_trials")) cfg.block_trials = to_count("block_trials", *v);
    if (auto v = get("sr_samples")) cfg.sr_samples = to_count("sr_samples", *v);
    if (auto v = get("quadrature_points")) cfg.quadrature_points = to_count("quadrature_points", *v);
    if (auto v = get("with_bound")) cfg.with_bound = to_flag("with_bound", *v);
    if (auto v = get("mean_scaling")) {
        if (*v == "per_block") cfg.mean_scaling = MeanScaling::per_block;
        else if (*v == "total") cfg.mean_scaling = MeanScaling::total;
        else fail(ErrorKind::config, "mean_scaling: expected per_block or total");
    }
    if (auto v = get("covariance_model")) {
        if (*v == "exact_moment") cfg.covariance_model = CovarianceModel::exact_moment;
        else if (*v == "published") cfg.covariance_model = CovarianceModel::published;
        else fail(ErrorKind::config, "covariance_model: expected exact_moment or published");
    }
    if (auto v = get("pep_method")) {
        if (*v == "quadrature") cfg.pep_method = PepMethod::quadrature;
        else if (*v == "q_bound") cfg.pep_method = PepMethod::q_bound;
        else fail(ErrorKind::config, "pep_method: expected quadrature or q_bound");
    }
    if (auto v = get("ac_table")) {
        if (v->empty() || *v == "default") {
            cfg.ac_table.reset();
        } else {
            const std::string text = v->front() == '[' ? *v : read_file(*v);
            cfg.ac_table = mapping::table_from_json(text, cfg.mapping_antennas());
        }
    }
}

ConfigMap describe_config(const SchemeConfig& cfg) {
    ConfigMap out;
    out["scheme"] = to_string(cfg.scheme);
    out["nr"] = std::to_string(cfg.n_r);
    out["nd"] = std::to_string(cfg.n_d);
    out["nt"] = std::to_string(cfg.n_t);
    out["ns"] = std::to_string(cfg.n_s);
    out["n"] = std::to_string(cfg.n);
    out["m"] = std::to_string(cfg.m);
    out["constellation"] = cfg.constellation == mapping::ConstellationKind::psk ? "psk" : "qam";
    out["rician_k"] = exact(cfg.fading.rician_k);
    out["csi_error_var"] = exact(cfg.fading.csi_error_var);
    out["csi_model"] = cfg.fading.csi_model == channel::CsiModel::additive_error ? "additive" : "literal";
    out["es"] = exact(cfg.e_s);
    out["snr_start"] = exact(cfg.snr_start_db);
    out["snr_stop"] = exact(cfg.snr_stop_db);
    out["snr_step"] = exact(cfg.snr_step_db);
    out["seed"] = std::to_string(cfg.seed);
    out["max_trials"] = std::to_string(cfg.max_trials);
    out["min_errors"] = std::to_string(cfg.min_errors);
    out["block_trials"] = std::to_string(cfg.block_trials);
    out["sr_samples"] = std::to_string(cfg.sr_samples);
    out["quadrature_points"] = std::to_string(cfg.quadrature_points);
    out["with_bound"] = cfg.with_bound ? "true" : "false";
    out["mean_scaling"] = cfg.mean_scaling == MeanScaling::per_block ? "per_block" : "total";
    out["covariance_model"] =
        cfg.covariance_model == CovarianceModel::exact_moment ? "exact_moment" : "published";
    out["pep_method"] = cfg.pep_method == PepMethod::quadrature ? "quadrature" : "q_bound";
    out["ac_table"] = cfg.ac_table ? mapping::table_to_json(*cfg.ac_table) : "default";
    return out;
}

std::string git_blob_hash(const std::string& content) {
    const std::string header = "blob " + std::to_string(content.size()) + '\0';
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr) fail(ErrorKind::config, "hash context allocation failed");
    const bool ok = EVP_DigestInit_ex(ctx, EVP_sha1(), nullptr) == 1 &&
                    EVP_DigestUpdate(ctx, header.data(), header.size()) == 1 &&
                    EVP_DigestUpdate(ctx, content.data(), content.size()) == 1 &&
                    EVP_DigestFinal_ex(ctx, digest, &len) == 1;
    EVP_MD_CTX_free(ctx);
    if (!ok) fail(ErrorKind::config, "SHA-1 digest failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

}  // namespace risim::harness
