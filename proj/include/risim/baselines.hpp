#pragma once

#include <cstddef>
#include <cstdint>

#include "risim/mapping.hpp"
#include "risim/scheme.hpp"

namespace risim::baselines {

/// RSM/RSSK: the n_r singletons. RGSM/RGSSK: the first 2^floor(log2 C(n_r, n_s))
/// size-n_s subsets in lexicographic order.
mapping::AcTable build_fixed_ac_table(Scheme scheme, std::size_t n_r, std::size_t n_s);

/// Transmit antenna sets of a transmit-side scheme: singletons for TSM/TSSK,
/// the adaptive pre-defined table over n_t for TASM.
mapping::AcTable transmit_table(Scheme scheme, std::size_t n_t);

/// Binomial coefficient; saturates far above any usable table size.
std::uint64_t binomial(std::size_t n, std::size_t k);

struct BerEstimate {
    std::uint64_t trials = 0;
    std::uint64_t bits = 0;
    std::uint64_t errors = 0;
    double ber = 0.0;
};

/// Fixed-length runs (no early stop) of the transmit-side and SIMO-MRC baselines.
BerEstimate simulate_transmit_im(const SchemeConfig& cfg, double snr_db, std::uint64_t trials,
                                 std::uint64_t seed);
BerEstimate simulate_simo_mrc(const SchemeConfig& cfg, double snr_db, std::uint64_t trials,
                              std::uint64_t seed);

}  // namespace risim::baselines
