#include "risim/link.hpp"

#include <bit>
#include <cmath>

#include "risim/ris.hpp"

namespace risim::link {

std::uint64_t HypothesisSpace::word(std::size_t h) const {
    const std::size_t s = symbols.size();
    return (static_cast<std::uint64_t>(h / s) << bits_symbol) | labels[h % s];
}

EveView eve_view(Scheme s) {
    switch (s) {
        case Scheme::rasm:
        case Scheme::rsm:
        case Scheme::rgsm: return EveView::symbols_only;
        case Scheme::rassk:
        case Scheme::rssk:
        case Scheme::rgssk: return EveView::none;
        default: return EveView::full;
    }
}

TrialStreams TrialStreams::derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return {channel::ChannelStreams::derive(seed, a, b),
            RandomStream::derive(seed, StreamPurpose::noise, a, b),
            RandomStream::derive(seed, StreamPurpose::bits, a, b),
            RandomStream::derive(seed, StreamPurpose::eve_noise, a, b)};
}

std::vector<cdouble> LinkInstance::received(std::size_t h, const HypothesisSpace& space) const {
    const std::size_t s = space.symbols.size();
    const auto& resp = true_response.at(h / s);
    const cdouble x = space.symbols[h % s];
    std::vector<cdouble> y(resp.size());
    for (std::size_t m = 0; m < resp.size(); ++m) y[m] = ris::cmul(resp[m], x);
    return y;
}

cdouble LinkInstance::eve_received(std::size_t h, const HypothesisSpace& space) const {
    const std::size_t s = space.symbols.size();
    return ris::cmul(eve_gain.at(h / s), space.symbols[h % s]);
}

LinkSetup::LinkSetup(const SchemeConfig& cfg) : cfg_(cfg) {
    cfg_.validate();
    table_ = index_table(cfg_);
    space_.n_groups = table_.size();
    space_.bits_group = table_.bits_per_ac;
    if (carries_symbol(cfg_.scheme)) {
        constellation_ = mapping::build_constellation(cfg_.constellation, cfg_.m);
        space_.symbols = constellation_.points;
        space_.labels = constellation_.label;
        space_.bits_symbol = constellation_.bits_per_symbol();
    } else {
        space_.symbols = {cdouble{std::sqrt(cfg_.e_s), 0.0}};
        space_.labels = {0};
        space_.bits_symbol = 0;
    }
    if (is_transmit_im(cfg_.scheme)) {
        for (const auto& e : table_.entries) tx_sets_.push_back(e.antennas());
    }
}

namespace {

bool exact_csi(const SchemeConfig& cfg) {
    return cfg.fading.csi_error_var == 0.0 && cfg.fading.csi_model == channel::CsiModel::additive_error;
}

}  // namespace

LinkInstance LinkSetup::realize(TrialStreams& streams, bool with_eve) const {
    auto ch = channel::draw_realization(cfg_.n_r, cfg_.n, cfg_.fading, streams.channel, with_eve);
    if (!is_transmit_im(cfg_.scheme)) return realize(ch, with_eve);
    std::vector<std::vector<cdouble>> h1_tx{ch.h1};
    for (std::size_t t = 1; t < cfg_.n_t; ++t) {
        h1_tx.push_back(channel::sample_tx_ris_channel(cfg_.n, streams.channel.tx_ris));
    }
    return realize_transmit(ch, h1_tx, with_eve);
}

LinkInstance LinkSetup::realize(const channel::ChannelRealization& ch, bool with_eve) const {
    if (is_transmit_im(cfg_.scheme)) fail(ErrorKind::config, "transmit-side scheme needs per-antenna channels");
    auto plan = detect::ReceiveImPlan::build(ch.h1, ch.h2_est, table_);
    LinkInstance link;
    link.n_r = ch.n_r();
    link.est_response = std::move(plan.responses);
    if (exact_csi(cfg_)) {
        link.true_response = link.est_response;
    } else {
        for (const auto& w : plan.weights) link.true_response.push_back(ris::response(ch.h2_true, w));
    }
    if (with_eve) {
        for (const auto& w : plan.weights) link.eve_gain.push_back(ris::eve_response(ch.g2, w));
    }
    link.bob = detect::make_candidates(link.est_response, space_.symbols);
    return link;
}

LinkInstance LinkSetup::realize_transmit(const channel::ChannelRealization& ch,
                                         const std::vector<std::vector<cdouble>>& h1_tx,
                                         bool with_eve) const {
    if (h1_tx.size() != cfg_.n_t) fail(ErrorKind::invalid_dimension, "one h1 per transmit antenna");
    const mapping::AntennaCombination beam(ch.n_r(), {0});
    const auto part = ris::partition_res(ch.n(), beam);
    LinkInstance link;
    link.n_r = ch.n_r();
    for (const auto& set : tx_sets_) {
        std::vector<cdouble> h1(ch.n());
        const double scale = 1.0 / std::sqrt(static_cast<double>(set.size()));
        for (auto t : set) {
            for (std::size_t i = 0; i < h1.size(); ++i) h1[i] += h1_tx[t][i];
        }
        for (auto& v : h1) v *= scale;
        const auto phases = ris::compute_phase_config(part, h1, ch.h2_est);
        const auto w = ris::reflect_weights(phases, h1);
        link.est_response.push_back(ris::response(ch.h2_est, w));
        link.true_response.push_back(exact_csi(cfg_) ? link.est_response.back() : ris::response(ch.h2_true, w));
        if (with_eve) link.eve_gain.push_back(ris::eve_response(ch.g2, w));
    }
    link.bob = detect::make_candidates(link.est_response, space_.symbols);
    return link;
}

std::size_t LinkSetup::detect(const LinkInstance& link, std::span<const cdouble> y) const {
    if (cfg_.scheme == Scheme::simo_mrc) {
        const cdouble z = detect::mrc_combine(y, link.est_response.front());
        return detect::nearest_symbol(constellation_, z);
    }
    return link.bob.detect(y);
}

TrialCounts run_trial(const LinkSetup& setup, double n0, TrialStreams& streams) {
    const auto& space = setup.space();
    const LinkInstance link = setup.realize(streams, false);
    const std::size_t g = streams.bits.uniform_index(space.n_groups);
    const std::size_t k = streams.bits.uniform_index(space.symbols.size());
    const std::size_t h = g * space.symbols.size() + k;
    auto y = link.received(h, space);
    ris::add_noise(y, n0, streams.noise);
    const std::size_t h_hat = setup.detect(link, y);
    return {space.bits(), static_cast<std::uint64_t>(std::popcount(space.word(h) ^ space.word(h_hat)))};
}

}  // namespace risim::link
