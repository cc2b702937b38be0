#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "risim/channel.hpp"
#include "risim/common.hpp"
#include "risim/mapping.hpp"
#include "risim/ris.hpp"

namespace risim::detect {

struct Hypothesis {
    std::size_t ac_index = 0;
    std::size_t symbol_index = 0;

    bool operator==(const Hypothesis&) const = default;
};

/// Noise-free received vectors for a set of hypotheses, stored as split planes
/// laid out antenna-major (re[m * n_hyp + h]) for the distance kernel.
class CandidateBank {
public:
    CandidateBank() = default;
    CandidateBank(std::size_t n_r, std::size_t n_hyp);

    std::size_t n_r() const { return n_r_; }
    std::size_t n_hyp() const { return n_hyp_; }

    void set(std::size_t h, std::span<const cdouble> g);
    std::vector<cdouble> candidate(std::size_t h) const;

    /// Squared distance from y to every candidate; out has n_hyp entries.
    void distances(std::span<const cdouble> y, std::span<double> out) const;

    /// First hypothesis at minimum distance.
    std::size_t detect(std::span<const cdouble> y) const;

private:
    std::size_t n_r_ = 0;
    std::size_t n_hyp_ = 0;
    std::vector<double> re_;
    std::vector<double> im_;
};

/// Partitions, phases, weights and estimated responses of every AC in a table,
/// computed once per channel realization and shared by all symbol hypotheses.
struct ReceiveImPlan {
    std::vector<ris::RePartition> partitions;
    std::vector<ris::PhaseMatrix> phases;
    std::vector<ris::ReflectWeights> weights;
    std::vector<std::vector<cdouble>> responses;

    static ReceiveImPlan build(const std::vector<cdouble>& h1, const ComplexMatrix& h2_est,
                               const mapping::AcTable& table);
};

/// Hypothesis h = r * symbols.size() + k with candidate response_r * symbols[k].
CandidateBank make_candidates(const std::vector<std::vector<cdouble>>& responses,
                              std::span<const cdouble> symbols);

std::vector<cdouble> candidate_signal_rasm(const channel::ChannelRealization& ch_est,
                                           const mapping::AcTable& table, std::size_t r,
                                           std::size_t k, const mapping::Constellation& c);

std::vector<cdouble> candidate_signal_rassk(const channel::ChannelRealization& ch_est,
                                            const mapping::AcTable& table, std::size_t r,
                                            double e_s);

Hypothesis ml_detect_rasm(std::span<const cdouble> y, const channel::ChannelRealization& ch_est,
                          const mapping::AcTable& table, const mapping::Constellation& c);

std::size_t ml_detect_rassk(std::span<const cdouble> y, const channel::ChannelRealization& ch_est,
                            const mapping::AcTable& table, double e_s);

/// Symbol decision of the single-antenna eavesdropper, who knows h1, g2 and the phases.
std::size_t ml_detect_eve(cdouble y_e, const std::vector<cdouble>& h1,
                          const std::vector<cdouble>& g2, const ris::PhaseMatrix& phases,
                          const mapping::Constellation& c);

/// sum conj(h_m) y_m / sum |h_m|^2.
cdouble mrc_combine(std::span<const cdouble> y, std::span<const cdouble> h);

std::size_t nearest_symbol(const mapping::Constellation& c, cdouble z);

}  // namespace risim::detect
