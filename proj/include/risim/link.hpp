#pragma once

// Scheme-generic view of one channel realization. Every supported scheme is a
// set of spatial groups (an AC, a transmit antenna set, or the single SIMO
// beam) times a symbol alphabet, with hypothesis h = group * symbols + k.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "risim/channel.hpp"
#include "risim/detectors.hpp"
#include "risim/mapping.hpp"
#include "risim/random.hpp"
#include "risim/scheme.hpp"

namespace risim::link {

struct HypothesisSpace {
    std::size_t n_groups = 1;
    std::size_t bits_group = 0;
    std::size_t bits_symbol = 0;
    std::vector<cdouble> symbols;
    std::vector<std::uint32_t> labels;  // Gray label of each symbol index

    std::size_t n_hyp() const { return n_groups * symbols.size(); }
    std::size_t bits() const { return bits_group + bits_symbol; }
    std::uint64_t word(std::size_t h) const;
};

/// What the eavesdropper can resolve: nothing, only the symbol under the
/// (unknown to her) AC beam, or the full hypothesis set.
enum class EveView { none, symbols_only, full };

EveView eve_view(Scheme s);

struct TrialStreams {
    channel::ChannelStreams channel;
    RandomStream noise;
    RandomStream bits;
    RandomStream eve_noise;

    static TrialStreams derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b);
};

struct LinkInstance {
    std::size_t n_r = 0;
    std::vector<std::vector<cdouble>> est_response;   // per group, from the receiver estimate
    std::vector<std::vector<cdouble>> true_response;  // per group, what propagates
    std::vector<cdouble> eve_gain;                     // per group; empty without Eve
    detect::CandidateBank bob;

    /// Noise-free signal Bob receives under hypothesis h.
    std::vector<cdouble> received(std::size_t h, const HypothesisSpace& space) const;
    cdouble eve_received(std::size_t h, const HypothesisSpace& space) const;
};

class LinkSetup {
public:
    explicit LinkSetup(const SchemeConfig& cfg);

    const SchemeConfig& config() const { return cfg_; }
    const HypothesisSpace& space() const { return space_; }
    const mapping::AcTable& table() const { return table_; }
    const mapping::Constellation& constellation() const { return constellation_; }

    LinkInstance realize(TrialStreams& streams, bool with_eve) const;

    /// Receive-side and SIMO schemes from an explicit channel draw.
    LinkInstance realize(const channel::ChannelRealization& ch, bool with_eve) const;

    /// Transmit-side schemes: one transmitter-RIS vector per transmit antenna.
    LinkInstance realize_transmit(const channel::ChannelRealization& ch,
                                  const std::vector<std::vector<cdouble>>& h1_tx,
                                  bool with_eve) const;

    /// Index of the hypothesis the detector picks for y.
    std::size_t detect(const LinkInstance& link, std::span<const cdouble> y) const;

private:
    SchemeConfig cfg_;
    HypothesisSpace space_;
    mapping::AcTable table_;
    mapping::Constellation constellation_;
    std::vector<std::vector<std::size_t>> tx_sets_;
};

struct TrialCounts {
    std::uint64_t bits = 0;
    std::uint64_t errors = 0;
};

TrialCounts run_trial(const LinkSetup& setup, double n0, TrialStreams& streams);

}  // namespace risim::link
