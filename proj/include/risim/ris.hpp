#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "risim/channel.hpp"
#include "risim/common.hpp"
#include "risim/mapping.hpp"
#include "risim/random.hpp"

namespace risim::ris {

inline constexpr std::size_t idle_re = std::numeric_limits<std::size_t>::max();

/// Sequential split of the reflection elements into one block per selected antenna.
struct RePartition {
    std::size_t n = 0;
    std::size_t n_a = 0;
    std::size_t n_e = 0;
    std::vector<std::size_t> target;  // receive antenna per RE, or idle_re

    std::size_t assigned() const { return n_a * n_e; }
};

RePartition partition_res(std::size_t n, const mapping::AntennaCombination& ac);

/// Unit reflection phasors e^{j phi_i}; idle elements carry 0.
struct PhaseMatrix {
    std::vector<cdouble> phasors;

    /// phi_i in (-pi, pi]; idle elements report 0.
    std::vector<double> phases() const;
};

/// Phasor that turns h2 * e^{j phi} * h1 into a positive real.
cdouble aligning_phasor(cdouble h2, cdouble h1);

PhaseMatrix compute_phase_config(const RePartition& part, const std::vector<cdouble>& h1,
                                 const ComplexMatrix& h2_est);

/// Aligning phasors for every (antenna, element) pair of one channel estimate.
/// Configuring several partitions from one bank gives the same phasors as
/// compute_phase_config, without recomputing them per combination.
class PhaseBank {
public:
    PhaseBank(const std::vector<cdouble>& h1, const ComplexMatrix& h2_est);

    cdouble phasor(std::size_t antenna, std::size_t re) const { return phasors_(antenna, re); }
    PhaseMatrix configure(const RePartition& part) const;

private:
    ComplexMatrix phasors_;
};

/// Per-element weights w_i = e^{j phi_i} * h1_i as split planes.
struct ReflectWeights {
    std::vector<double> re;
    std::vector<double> im;
};

ReflectWeights reflect_weights(const PhaseMatrix& phases, const std::vector<cdouble>& h1);

/// Noise-free cascaded response h2 * diag(w) summed over elements, one entry per antenna.
std::vector<cdouble> response(const ComplexMatrix& h2, const ReflectWeights& w);

inline cdouble cmul(cdouble a, cdouble b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

/// Adds CN(0, n0) to each entry. Draws from rng even when n0 = 0.
void add_noise(std::vector<cdouble>& y, double n0, RandomStream& rng);

std::vector<cdouble> synthesize_received_rasm(const channel::ChannelRealization& ch,
                                              const PhaseMatrix& phases, cdouble x_k, double n0,
                                              RandomStream& rng);

std::vector<cdouble> synthesize_received_rassk(const channel::ChannelRealization& ch,
                                               const PhaseMatrix& phases, double e_s, double n0,
                                               RandomStream& rng);

/// Scalar cascaded gain toward the eavesdropper, sum_i g2_i w_i.
cdouble eve_response(const std::vector<cdouble>& g2, const ReflectWeights& w);

cdouble synthesize_eve_signal(const std::vector<cdouble>& h1, const std::vector<cdouble>& g2,
                              const PhaseMatrix& phases, cdouble x_k, double n0, RandomStream& rng);

/// Two-term SNR per selected antenna (partition order): aligned block plus the
/// cross-block leakage, each squared separately, scaled by symbol energy / n0.
std::vector<double> compute_selected_snr(const channel::ChannelRealization& ch,
                                         const RePartition& part, const PhaseMatrix& phases,
                                         double symbol_energy, double n0);

}  // namespace risim::ris
