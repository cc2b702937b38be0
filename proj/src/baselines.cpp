#include "risim/baselines.hpp"

#include <bit>
#include <limits>
#include <vector>

#include "risim/link.hpp"
#include "risim/parallel.hpp"

namespace risim::baselines {

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    constexpr std::uint64_t cap = std::uint64_t{1} << 62;
    std::uint64_t v = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        // v * (n - k + i) / i stays integral at every step.
        const std::uint64_t num = n - k + i;
        if (v > cap / num) return cap;
        v = v * num / i;
    }
    return v;
}

mapping::AcTable build_fixed_ac_table(Scheme scheme, std::size_t n_r, std::size_t n_s) {
    switch (scheme) {
        case Scheme::rsm:
        case Scheme::rssk: {
            if (n_r == 0 || !mapping::is_power_of_two(n_r)) {
                fail(ErrorKind::config, "single-antenna index tables need a power-of-two n_r");
            }
            std::vector<mapping::AntennaCombination> entries;
            for (std::size_t a = 0; a < n_r; ++a) entries.emplace_back(n_r, std::vector<std::size_t>{a});
            return mapping::make_table(n_r, std::move(entries));
        }
        case Scheme::rgsm:
        case Scheme::rgssk: {
            if (n_s == 0 || n_s > n_r) fail(ErrorKind::config, "n_s must lie in [1, n_r]");
            const std::uint64_t total = binomial(n_r, n_s);
            const std::uint64_t keep = std::uint64_t{1} << (std::bit_width(total) - 1);
            std::vector<mapping::AntennaCombination> entries;
            std::vector<std::size_t> idx(n_s);
            for (std::size_t j = 0; j < n_s; ++j) idx[j] = j;
            while (entries.size() < keep) {
                entries.emplace_back(n_r, idx);
                std::size_t j = n_s;
                while (j > 0 && idx[j - 1] == n_r - n_s + (j - 1)) --j;
                if (j == 0) break;
                ++idx[j - 1];
                for (std::size_t q = j; q < n_s; ++q) idx[q] = idx[q - 1] + 1;
            }
            return mapping::make_table(n_r, std::move(entries));
        }
        default: fail(ErrorKind::config, "fixed AC tables exist for rsm, rssk, rgsm and rgssk");
    }
}

mapping::AcTable transmit_table(Scheme scheme, std::size_t n_t) {
    switch (scheme) {
        case Scheme::tsm:
        case Scheme::tssk: return build_fixed_ac_table(Scheme::rsm, n_t, 1);
        case Scheme::tasm: return mapping::select_predefined_acs(n_t);
        default: fail(ErrorKind::config, "transmit tables exist for tsm, tssk and tasm");
    }
}

namespace {

constexpr std::uint64_t baseline_stream_tag = std::uint64_t{1} << 41;

BerEstimate simulate_fixed(const SchemeConfig& cfg, double snr_db, std::uint64_t trials,
                           std::uint64_t seed) {
    const link::LinkSetup setup(cfg);
    const double n0 = noise_variance(cfg, snr_db);
    const std::uint64_t per_block = cfg.block_trials;
    const std::uint64_t blocks = (trials + per_block - 1) / per_block;
    std::vector<link::TrialCounts> counts(blocks);
    parallel::for_range(0, blocks, [&](std::size_t b) {
        auto streams = link::TrialStreams::derive(seed, baseline_stream_tag, b);
        const std::uint64_t n = std::min(per_block, trials - b * per_block);
        link::TrialCounts acc;
        for (std::uint64_t t = 0; t < n; ++t) {
            const auto c = link::run_trial(setup, n0, streams);
            acc.bits += c.bits;
            acc.errors += c.errors;
        }
        counts[b] = acc;
    });
    BerEstimate e;
    e.trials = trials;
    for (const auto& c : counts) {
        e.bits += c.bits;
        e.errors += c.errors;
    }
    e.ber = e.bits > 0 ? static_cast<double>(e.errors) / static_cast<double>(e.bits) : 0.0;
    return e;
}

}  // namespace

BerEstimate simulate_transmit_im(const SchemeConfig& cfg, double snr_db, std::uint64_t trials,
                                 std::uint64_t seed) {
    if (!is_transmit_im(cfg.scheme)) fail(ErrorKind::config, "expected tsm, tssk or tasm");
    return simulate_fixed(cfg, snr_db, trials, seed);
}

BerEstimate simulate_simo_mrc(const SchemeConfig& cfg, double snr_db, std::uint64_t trials,
                              std::uint64_t seed) {
    if (cfg.scheme != Scheme::simo_mrc) fail(ErrorKind::config, "expected simo_mrc");
    return simulate_fixed(cfg, snr_db, trials, seed);
}

}  // namespace risim::baselines
