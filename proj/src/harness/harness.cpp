#include "risim/harness.hpp"

#include <cmath>
#include <cstdio>

#include "risim/analysis.hpp"
#include "risim/parallel.hpp"
#include "risim/secrecy.hpp"

namespace risim::harness {

namespace {

constexpr double z95 = 1.959963984540054;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string fmt(const std::optional<double>& v) { return v ? fmt(*v) : std::string{}; }

/// Union bound per grid point; empty where the bound does not apply or fails.
std::vector<std::optional<double>> bound_column(const SchemeConfig& cfg, const std::vector<double>& grid) {
    std::vector<std::optional<double>> out(grid.size());
    if (!is_receive_im(cfg.scheme)) return out;
    const auto ctx = analysis::AberContext::from_config(cfg);
    parallel::for_range(0, grid.size(), [&](std::size_t i) {
        const double n0 = noise_variance(cfg, grid[i]);
        if (!(n0 > 0.0)) return;
        try {
            out[i] = analysis::aber_union_bound(ctx, n0, cfg.pep_method);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::bound_invalid) throw;
        }
    });
    return out;
}

}  // namespace

Interval wilson_interval(std::uint64_t errors, std::uint64_t n) {
    if (n == 0) fail(ErrorKind::empty_aggregate, "interval over zero bits");
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(errors) / nn;
    const double z2 = z95 * z95;
    const double denom = 1.0 + z2 / nn;
    const double centre = (p + z2 / (2.0 * nn)) / denom;
    const double half = z95 * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
    // The interval touches the boundary exactly when no (or every) bit is in error.
    const double low = errors == 0 ? 0.0 : std::max(0.0, centre - half);
    const double high = errors == n ? 1.0 : std::min(1.0, centre + half);
    return {low, high};
}

AggregateStats aggregate_stats(std::span<const link::TrialCounts> batches) {
    AggregateStats s;
    for (const auto& b : batches) {
        s.bits += b.bits;
        s.errors += b.errors;
    }
    if (s.bits == 0) fail(ErrorKind::empty_aggregate, "no bits in aggregate");
    s.ber = static_cast<double>(s.errors) / static_cast<double>(s.bits);
    s.ci95 = wilson_interval(s.errors, s.bits);
    return s;
}

link::TrialCounts run_ber_trial(const link::LinkSetup& setup, double snr_db, link::TrialStreams& streams) {
    return link::run_trial(setup, noise_variance(setup.config(), snr_db), streams);
}

SweepRow run_ber_point(const SchemeConfig& cfg, double snr_db, std::uint64_t snr_index) {
    cfg.validate();
    const link::LinkSetup setup(cfg);
    const double n0 = noise_variance(cfg, snr_db);
    const std::uint64_t per_block = cfg.block_trials;
    const std::uint64_t max_blocks = (cfg.max_trials + per_block - 1) / per_block;

    struct Block {
        std::uint64_t trials = 0;
        link::TrialCounts counts;
    };
    const auto blocks = parallel::run_blocks_until<Block>(
        max_blocks,
        [&](std::size_t b) {
            auto streams = link::TrialStreams::derive(cfg.seed, snr_index, b);
            Block out;
            out.trials = std::min(per_block, cfg.max_trials - b * per_block);
            for (std::uint64_t t = 0; t < out.trials; ++t) {
                const auto c = link::run_trial(setup, n0, streams);
                out.counts.bits += c.bits;
                out.counts.errors += c.errors;
            }
            return out;
        },
        [&](const std::vector<Block>& kept) {
            std::uint64_t errors = 0;
            for (const auto& k : kept) errors += k.counts.errors;
            return errors >= cfg.min_errors;
        });

    std::vector<link::TrialCounts> counts;
    SweepRow row;
    row.snr_db = snr_db;
    for (const auto& b : blocks) {
        row.trials += b.trials;
        counts.push_back(b.counts);
    }
    const auto stats = aggregate_stats(counts);
    row.bits = stats.bits;
    row.bit_errors = stats.errors;
    row.ber = stats.ber;
    row.ci95 = stats.ci95;
    return row;
}

SweepResult run_ber_sweep(const SchemeConfig& cfg) {
    cfg.validate();
    SweepResult result{cfg, {}};
    const auto grid = cfg.snr_grid();
    for (std::size_t i = 0; i < grid.size(); ++i) result.rows.push_back(run_ber_point(cfg, grid[i], i));
    if (cfg.with_bound) {
        const auto bound = bound_column(cfg, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) result.rows[i].aber_bound = bound[i];
    }
    return result;
}

SweepResult run_aber_sweep(const SchemeConfig& cfg) {
    SchemeConfig with = cfg;
    with.with_bound = true;
    return run_ber_sweep(with);
}

SweepResult run_sr_sweep(const SchemeConfig& cfg) {
    cfg.validate();
    SweepResult result{cfg, {}};
    const auto grid = cfg.snr_grid();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto est = secrecy::estimate_secrecy(cfg, grid[i], cfg.sr_samples, cfg.seed, i);
        SweepRow row;
        row.snr_db = grid[i];
        row.trials = est.samples;
        row.r_b = est.r_b;
        row.r_e = est.r_e;
        row.sr = est.sr;
        row.std_err = est.std_err;
        result.rows.push_back(row);
    }
    return result;
}

void write_ber_csv(std::ostream& os, const SweepResult& result) {
    os << "snr_db,trials,bit_errors,ber,ci95_low,ci95_high,aber_bound\n";
    for (const auto& r : result.rows) {
        os << fmt(r.snr_db) << ',' << r.trials << ',' << r.bit_errors << ',' << fmt(r.ber) << ','
           << fmt(r.ci95.low) << ',' << fmt(r.ci95.high) << ',' << fmt(r.aber_bound) << '\n';
    }
}

void write_sr_csv(std::ostream& os, const SweepResult& result) {
    os << "snr_db,r_b,r_e,sr,std_err\n";
    for (const auto& r : result.rows) {
        os << fmt(r.snr_db) << ',' << fmt(r.r_b) << ',' << fmt(r.r_e) << ',' << fmt(r.sr) << ','
           << fmt(r.std_err) << '\n';
    }
}

void write_aber_csv(std::ostream& os, const SweepResult& result) {
    os << "snr_db,aber_bound,ber,ci95_low,ci95_high\n";
    for (const auto& r : result.rows) {
        os << fmt(r.snr_db) << ',' << fmt(r.aber_bound) << ',' << fmt(r.ber) << ',' << fmt(r.ci95.low)
           << ',' << fmt(r.ci95.high) << '\n';
    }
}

}  // namespace risim::harness
