#include "risim/scheme.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "risim/baselines.hpp"

namespace risim {

namespace {

constexpr std::array<std::pair<Scheme, const char*>, 10> scheme_names{{
    {Scheme::rasm, "rasm"},
    {Scheme::rassk, "rassk"},
    {Scheme::rsm, "rsm"},
    {Scheme::rssk, "rssk"},
    {Scheme::rgsm, "rgsm"},
    {Scheme::rgssk, "rgssk"},
    {Scheme::tsm, "tsm"},
    {Scheme::tssk, "tssk"},
    {Scheme::tasm, "tasm"},
    {Scheme::simo_mrc, "simo_mrc"},
}};

}  // namespace

const char* to_string(Scheme s) {
    for (const auto& [v, name] : scheme_names) {
        if (v == s) return name;
    }
    return "unknown";
}

Scheme parse_scheme(std::string_view name) {
    for (const auto& [v, n] : scheme_names) {
        if (name == n) return v;
    }
    if (name == "simo-mrc" || name == "simo") return Scheme::simo_mrc;
    fail(ErrorKind::config, "unknown scheme: " + std::string(name));
}

bool carries_symbol(Scheme s) {
    switch (s) {
        case Scheme::rassk:
        case Scheme::rssk:
        case Scheme::rgssk:
        case Scheme::tssk: return false;
        default: return true;
    }
}

bool is_receive_im(Scheme s) {
    switch (s) {
        case Scheme::rasm:
        case Scheme::rassk:
        case Scheme::rsm:
        case Scheme::rssk:
        case Scheme::rgsm:
        case Scheme::rgssk: return true;
        default: return false;
    }
}

bool is_transmit_im(Scheme s) {
    return s == Scheme::tsm || s == Scheme::tssk || s == Scheme::tasm;
}

std::vector<double> SchemeConfig::snr_grid() const {
    std::vector<double> grid;
    const double span = snr_stop_db - snr_start_db;
    const auto steps = static_cast<long>(std::floor(span / snr_step_db + 1e-9));
    for (long i = 0; i <= steps; ++i) grid.push_back(snr_start_db + static_cast<double>(i) * snr_step_db);
    return grid;
}

void SchemeConfig::validate() const {
    fading.validate();
    if (n_r == 0 || n == 0) fail(ErrorKind::config, "n_r and n must be at least 1");
    if (mapping_antennas() > n_r) fail(ErrorKind::config, "mapping antennas exceed physical antennas");
    if (carries_symbol(scheme) && (m < 2 || !mapping::is_power_of_two(m))) {
        fail(ErrorKind::config, "constellation order must be a power of two >= 2");
    }
    if (is_transmit_im(scheme) && n_t < 2) fail(ErrorKind::config, "transmit-side schemes need n_t >= 2");
    if (!(snr_step_db > 0.0)) fail(ErrorKind::config, "SNR step must be positive");
    if (snr_stop_db < snr_start_db) fail(ErrorKind::config, "SNR stop below start");
    if (max_trials < 1000) fail(ErrorKind::config, "max_trials must be at least 1000");
    if (min_errors < 10) fail(ErrorKind::config, "min_errors must be at least 10");
    if (block_trials == 0) fail(ErrorKind::config, "block_trials must be positive");
    if (sr_samples == 0) fail(ErrorKind::config, "sr_samples must be positive");
    if (quadrature_points < 16) fail(ErrorKind::config, "quadrature_points must be at least 16");
    if (!(e_s > 0.0)) fail(ErrorKind::config, "e_s must be positive");
    if (ac_table && ac_table->n_r != mapping_antennas()) {
        fail(ErrorKind::config, "AC table antenna count differs from the mapping antennas");
    }
}

mapping::AcTable index_table(const SchemeConfig& cfg) {
    if (cfg.ac_table) return *cfg.ac_table;
    const std::size_t n_d = cfg.mapping_antennas();
    switch (cfg.scheme) {
        case Scheme::rasm:
        case Scheme::rassk: return mapping::select_predefined_acs(n_d);
        case Scheme::rsm:
        case Scheme::rssk:
        case Scheme::rgsm:
        case Scheme::rgssk: return baselines::build_fixed_ac_table(cfg.scheme, n_d, cfg.n_s);
        case Scheme::tsm:
        case Scheme::tssk:
        case Scheme::tasm: return baselines::transmit_table(cfg.scheme, cfg.n_t);
        case Scheme::simo_mrc: return mapping::make_table(cfg.n_r, {mapping::AntennaCombination(cfg.n_r, {0})});
    }
    fail(ErrorKind::config, "unhandled scheme");
}

double noise_variance(const SchemeConfig& cfg, double snr_db) {
    if (std::isinf(snr_db) && snr_db > 0.0) return 0.0;
    const double energy = carries_symbol(cfg.scheme) ? 1.0 : cfg.e_s;
    return energy * std::pow(10.0, -snr_db / 10.0);
}

}  // namespace risim
