#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "risim/common.hpp"
#include "risim/random.hpp"

namespace risim::channel {

enum class CsiModel {
    additive_error,    ///< estimate ~ CN(0, 1-d2), error ~ CN(0, d2), composite = estimate + error
    literal_weighted,  ///< composite = d2 * est + (1 - d2) * err, amplitude weights as printed
};

struct FadingSpec {
    double rician_k = 0.0;
    double csi_error_var = 0.0;
    CsiModel csi_model = CsiModel::additive_error;

    void validate() const;
};

/// One draw of every link. h2_true is what propagates (the composite channel
/// under CSI error); h2_est is what the receiver and the RIS controller know.
struct ChannelRealization {
    std::vector<cdouble> h1;   // transmitter -> RIS, length N
    ComplexMatrix h2_true;     // RIS -> receiver, N_r x N
    ComplexMatrix h2_est;      // receiver estimate, N_r x N
    std::vector<cdouble> g2;   // RIS -> eavesdropper, length N (empty if unused)

    std::size_t n() const { return h1.size(); }
    std::size_t n_r() const { return h2_true.rows(); }
};

/// Per-purpose substreams for one block of trials.
struct ChannelStreams {
    RandomStream tx_ris;
    RandomStream ris_rx;
    RandomStream csi;
    RandomStream eve;

    static ChannelStreams derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b);
};

std::vector<cdouble> sample_tx_ris_channel(std::size_t n, RandomStream& rng);

/// Deterministic unit-modulus line-of-sight term exp(-j*pi*(m+i)/4), 0-based indices.
cdouble los_component(std::size_t m, std::size_t i);

ComplexMatrix sample_ris_rx_channel(std::size_t n_r, std::size_t n, double k, RandomStream& rng);

struct CsiPair {
    ComplexMatrix composite;
    ComplexMatrix estimate;
};

CsiPair apply_csi_error(const ComplexMatrix& h2_true, const FadingSpec& spec, RandomStream& rng);

std::vector<cdouble> sample_eve_channel(std::size_t n, RandomStream& rng);

/// Draws h1, h2 (Rician per spec), applies the CSI model, and the eavesdropper
/// link when with_eve is set. Each link reads only its own stream.
ChannelRealization draw_realization(std::size_t n_r, std::size_t n, const FadingSpec& spec,
                                    ChannelStreams& streams, bool with_eve);

}  // namespace risim::channel
