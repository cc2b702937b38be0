#include "risim/secrecy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "risim/link.hpp"
#include "risim/parallel.hpp"
#include "risim/ris.hpp"

namespace risim::secrecy {

double secrecy_rate(double r_b, double r_e) { return std::max(0.0, r_b - r_e); }

namespace {

constexpr std::uint64_t samples_per_block = 500;
constexpr std::uint64_t secrecy_stream_tag = std::uint64_t{1} << 40;

/// log2 sum_j exp(v_j) with a max shift.
double log2_sum_exp(std::span<const double> v) {
    const double top = *std::max_element(v.begin(), v.end());
    double s = 0.0;
    for (double x : v) s += std::exp(x - top);
    return (top + std::log(s)) / std::numbers::ln2;
}

struct SampleRates {
    std::vector<double> bob;
    std::vector<double> eve;
};

struct Moments {
    double mean = 0.0;
    double std_err = 0.0;
};

Moments moments(const std::vector<double>& v) {
    const double n = static_cast<double>(v.size());
    const double mean = parallel::pairwise_sum(v) / n;
    std::vector<double> dev(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) dev[i] = (v[i] - mean) * (v[i] - mean);
    const double var = v.size() > 1 ? parallel::pairwise_sum(dev) / (n - 1.0) : 0.0;
    return {mean, std::sqrt(var / n)};
}

SampleRates run_block(const link::LinkSetup& setup, link::EveView view, double n0,
                      std::uint64_t count, link::TrialStreams& streams) {
    const auto& space = setup.space();
    const std::size_t h_count = space.n_hyp();
    const std::size_t m = space.symbols.size();
    const double log2_h = std::log2(static_cast<double>(h_count));
    const double log2_m = std::log2(static_cast<double>(m));
    std::vector<double> d(h_count);
    std::vector<double> v(h_count);
    SampleRates out;
    out.bob.reserve(count);
    out.eve.reserve(count);
    for (std::uint64_t s = 0; s < count; ++s) {
        const auto link = setup.realize(streams, view != link::EveView::none);
        double bob_sum = 0.0;
        double eve_sum = 0.0;
        for (std::size_t h = 0; h < h_count; ++h) {
            auto y = link.received(h, space);
            ris::add_noise(y, n0, streams.noise);
            link.bob.distances(y, d);
            for (std::size_t j = 0; j < h_count; ++j) v[j] = (d[h] - d[j]) / n0;
            bob_sum += log2_sum_exp(v);

            if (view == link::EveView::none) continue;
            const cdouble y_e = link.eve_received(h, space) + streams.eve_noise.complex_gaussian(n0);
            const double d_true = std::norm(y_e - link.eve_received(h, space));
            if (view == link::EveView::symbols_only) {
                const std::size_t g = h / m;
                for (std::size_t k = 0; k < m; ++k) {
                    v[k] = (d_true - std::norm(y_e - link.eve_received(g * m + k, space))) / n0;
                }
                eve_sum += log2_sum_exp(std::span<const double>(v.data(), m));
            } else {
                for (std::size_t j = 0; j < h_count; ++j) {
                    v[j] = (d_true - std::norm(y_e - link.eve_received(j, space))) / n0;
                }
                eve_sum += log2_sum_exp(v);
            }
        }
        const double hn = static_cast<double>(h_count);
        out.bob.push_back(log2_h - bob_sum / hn);
        switch (view) {
            case link::EveView::none: out.eve.push_back(0.0); break;
            case link::EveView::symbols_only:
                out.eve.push_back((log2_m - eve_sum / hn) / static_cast<double>(m));
                break;
            case link::EveView::full: out.eve.push_back(log2_h - eve_sum / hn); break;
        }
    }
    return out;
}

struct RatePair {
    Moments bob;
    Moments eve;
    std::uint64_t samples = 0;
    double bob_cap = 0.0;
    double eve_cap = 0.0;
};

RatePair estimate(const SchemeConfig& cfg, double snr_db, std::uint64_t samples, std::uint64_t seed,
                  std::uint64_t stream_index) {
    if (samples < 1000) fail(ErrorKind::config, "rate estimates need at least 1000 samples");
    const link::LinkSetup setup(cfg);
    const double n0 = noise_variance(cfg, snr_db);
    if (!(n0 > 0.0)) fail(ErrorKind::domain, "rate estimates need a finite SNR");
    const auto view = link::eve_view(cfg.scheme);
    const std::uint64_t blocks = (samples + samples_per_block - 1) / samples_per_block;

    std::vector<SampleRates> parts(blocks);
    parallel::for_range(0, blocks, [&](std::size_t b) {
        auto streams = link::TrialStreams::derive(seed, secrecy_stream_tag | stream_index, b);
        const std::uint64_t count = std::min(samples_per_block, samples - b * samples_per_block);
        parts[b] = run_block(setup, view, n0, count, streams);
    });
    std::vector<double> bob;
    std::vector<double> eve;
    for (const auto& p : parts) {
        bob.insert(bob.end(), p.bob.begin(), p.bob.end());
        eve.insert(eve.end(), p.eve.begin(), p.eve.end());
    }
    const auto& space = setup.space();
    const double log2_h = std::log2(static_cast<double>(space.n_hyp()));
    RatePair out{moments(bob), moments(eve), samples, log2_h, 0.0};
    switch (view) {
        case link::EveView::none: out.eve_cap = 0.0; break;
        case link::EveView::symbols_only: {
            const double m = static_cast<double>(space.symbols.size());
            out.eve_cap = std::log2(m) / m;
            break;
        }
        case link::EveView::full: out.eve_cap = log2_h; break;
    }
    out.bob.mean = std::clamp(out.bob.mean, 0.0, out.bob_cap);
    out.eve.mean = std::clamp(out.eve.mean, 0.0, out.eve_cap);
    return out;
}

void require(const SchemeConfig& cfg, Scheme s) {
    if (cfg.scheme != s) fail(ErrorKind::config, std::string("estimator expects scheme ") + to_string(s));
}

}  // namespace

SecrecyEstimate estimate_secrecy(const SchemeConfig& cfg, double snr_db, std::uint64_t samples,
                                 std::uint64_t seed, std::uint64_t stream_index) {
    const auto r = estimate(cfg, snr_db, samples, seed, stream_index);
    SecrecyEstimate e;
    e.r_b = r.bob.mean;
    e.r_e = r.eve.mean;
    e.sr = secrecy_rate(e.r_b, e.r_e);
    e.samples = r.samples;
    e.std_err = std::hypot(r.bob.std_err, r.eve.std_err);
    return e;
}

RateEstimate estimate_rate_bob(const SchemeConfig& cfg, double snr_db, std::uint64_t samples,
                               std::uint64_t seed, std::uint64_t stream_index) {
    const auto r = estimate(cfg, snr_db, samples, seed, stream_index);
    return {r.bob.mean, r.bob.std_err, r.samples};
}

RateEstimate estimate_rate_eve(const SchemeConfig& cfg, double snr_db, std::uint64_t samples,
                               std::uint64_t seed, std::uint64_t stream_index) {
    const auto r = estimate(cfg, snr_db, samples, seed, stream_index);
    return {r.eve.mean, r.eve.std_err, r.samples};
}

RateEstimate estimate_rate_bob_rasm(const SchemeConfig& cfg, double snr_db, std::uint64_t samples,
                                    std::uint64_t seed) {
    require(cfg, Scheme::rasm);
    return estimate_rate_bob(cfg, snr_db, samples, seed);
}

RateEstimate estimate_rate_eve_rasm(const SchemeConfig& cfg, double snr_db, std::uint64_t samples,
                                    std::uint64_t seed) {
    require(cfg, Scheme::rasm);
    return estimate_rate_eve(cfg, snr_db, samples, seed);
}

RateEstimate estimate_rate_bob_rassk(const SchemeConfig& cfg, double snr_db, std::uint64_t samples,
                                     std::uint64_t seed) {
    require(cfg, Scheme::rassk);
    return estimate_rate_bob(cfg, snr_db, samples, seed);
}

}  // namespace risim::secrecy
