#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "risim/link.hpp"
#include "risim/scheme.hpp"

namespace risim::harness {

inline constexpr int format_version = 1;

struct Interval {
    double low = 0.0;
    double high = 0.0;
};

/// Wilson score interval for errors out of n at z = 1.96.
Interval wilson_interval(std::uint64_t errors, std::uint64_t n);

struct AggregateStats {
    std::uint64_t bits = 0;
    std::uint64_t errors = 0;
    double ber = 0.0;
    Interval ci95;
};

AggregateStats aggregate_stats(std::span<const link::TrialCounts> batches);

/// One trial: random bits, channel, synthesis, ML detection, bit-error count.
link::TrialCounts run_ber_trial(const link::LinkSetup& setup, double snr_db, link::TrialStreams& streams);

struct SweepRow {
    double snr_db = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t bits = 0;
    std::uint64_t bit_errors = 0;
    double ber = 0.0;
    Interval ci95;
    std::optional<double> aber_bound;
    std::optional<double> r_b;
    std::optional<double> r_e;
    std::optional<double> sr;
    std::optional<double> std_err;
};

struct SweepResult {
    SchemeConfig config;
    std::vector<SweepRow> rows;
};

/// BER at one SNR: blocks of block_trials until min_errors or max_trials.
SweepRow run_ber_point(const SchemeConfig& cfg, double snr_db, std::uint64_t snr_index);

/// BER over the grid. Attaches the union bound when cfg.with_bound is set.
SweepResult run_ber_sweep(const SchemeConfig& cfg);
SweepResult run_sr_sweep(const SchemeConfig& cfg);
/// BER sweep with the bound always attached.
SweepResult run_aber_sweep(const SchemeConfig& cfg);

void write_ber_csv(std::ostream& os, const SweepResult& result);
void write_sr_csv(std::ostream& os, const SweepResult& result);
void write_aber_csv(std::ostream& os, const SweepResult& result);

// Flat key-value configuration. Keys use underscores; values are text.
using ConfigMap = std::map<std::string, std::string>;

/// Parses "key = value" lines; '#' starts a comment.
ConfigMap parse_config_text(const std::string& text);
ConfigMap read_config_file(const std::string& path);

/// Applies every key of the map onto cfg. Unknown keys raise a config error.
/// ac_table accepts inline JSON ('[' first) or a path to a JSON file.
void apply_config(SchemeConfig& cfg, const ConfigMap& values);
/// Every key of cfg, in the textual form apply_config reads back.
ConfigMap describe_config(const SchemeConfig& cfg);

/// Keys apply_config understands.
const std::vector<std::string>& config_keys();

/// SHA-1 of "blob <size>\0" followed by the content, as hex.
std::string git_blob_hash(const std::string& content);

}  // namespace risim::harness
