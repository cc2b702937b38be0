#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "risim/channel.hpp"
#include "risim/mapping.hpp"

namespace risim {

enum class Scheme { rasm, rassk, rsm, rssk, rgsm, rgssk, tsm, tssk, tasm, simo_mrc };

const char* to_string(Scheme s);
Scheme parse_scheme(std::string_view name);

/// Schemes that carry a constellation symbol besides the index.
bool carries_symbol(Scheme s);
/// Schemes whose index lives at the receive antennas and go through the RIS AC pipeline.
bool is_receive_im(Scheme s);
bool is_transmit_im(Scheme s);

/// How the ABER bound sizes the per-antenna constructive mean.
enum class MeanScaling {
    per_block,  ///< exact count of elements aimed at the antenna
    total,      ///< every aimed antenna scaled by the full element count
};

/// Second-order statistics of the pairwise distance in the ABER bound.
enum class CovarianceModel {
    exact_moment,  ///< per-element moments of the actual RE assignment
    published,     ///< closed-form diagonal variances of the original derivation
};

enum class PepMethod { quadrature, q_bound };

struct SchemeConfig {
    Scheme scheme = Scheme::rasm;
    std::size_t n_r = 4;   // physical receive antennas
    std::size_t n_d = 0;   // antennas used for index mapping; 0 means n_r
    std::size_t n_t = 1;   // transmit antennas (transmit-side schemes)
    std::size_t n_s = 0;   // active antennas for generalized schemes
    std::size_t n = 16;    // reflection elements
    std::size_t m = 2;     // constellation order
    mapping::ConstellationKind constellation = mapping::ConstellationKind::psk;
    channel::FadingSpec fading;
    double e_s = 1.0;

    double snr_start_db = 0.0;
    double snr_stop_db = 10.0;
    double snr_step_db = 2.0;

    std::uint64_t seed = 1;
    std::uint64_t max_trials = 3'000'000;
    std::uint64_t min_errors = 100;
    std::uint64_t block_trials = 10'000;
    std::uint64_t sr_samples = 20'000;
    std::size_t quadrature_points = 64;
    bool with_bound = false;
    MeanScaling mean_scaling = MeanScaling::per_block;
    CovarianceModel covariance_model = CovarianceModel::exact_moment;
    PepMethod pep_method = PepMethod::quadrature;

    std::optional<mapping::AcTable> ac_table;  // overrides the scheme's default table

    std::size_t mapping_antennas() const { return n_d == 0 ? n_r : n_d; }
    std::vector<double> snr_grid() const;
    void validate() const;
};

/// Spatial-index table of a receive-side scheme (override, adaptive or fixed).
mapping::AcTable index_table(const SchemeConfig& cfg);

/// Noise variance for an average SNR of E_s / N0 in dB. +inf gives 0.
double noise_variance(const SchemeConfig& cfg, double snr_db);

}  // namespace risim
