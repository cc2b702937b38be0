#include "risim/detectors.hpp"

#include <cmath>

#include "risim/kernels.hpp"

namespace risim::detect {

CandidateBank::CandidateBank(std::size_t n_r, std::size_t n_hyp)
    : n_r_(n_r), n_hyp_(n_hyp), re_(n_r * n_hyp, 0.0), im_(n_r * n_hyp, 0.0) {}

void CandidateBank::set(std::size_t h, std::span<const cdouble> g) {
    if (h >= n_hyp_ || g.size() != n_r_) fail(ErrorKind::invalid_dimension, "candidate shape");
    for (std::size_t m = 0; m < n_r_; ++m) {
        re_[m * n_hyp_ + h] = g[m].real();
        im_[m * n_hyp_ + h] = g[m].imag();
    }
}

std::vector<cdouble> CandidateBank::candidate(std::size_t h) const {
    if (h >= n_hyp_) fail(ErrorKind::invalid_dimension, "hypothesis index out of range");
    std::vector<cdouble> g(n_r_);
    for (std::size_t m = 0; m < n_r_; ++m) g[m] = {re_[m * n_hyp_ + h], im_[m * n_hyp_ + h]};
    return g;
}

void CandidateBank::distances(std::span<const cdouble> y, std::span<double> out) const {
    if (y.size() != n_r_) fail(ErrorKind::invalid_dimension, "received vector length");
    // Small fixed buffers cover every supported antenna count without allocating.
    constexpr std::size_t stack_antennas = 64;
    double y_re_buf[stack_antennas];
    double y_im_buf[stack_antennas];
    std::vector<double> heap_re;
    std::vector<double> heap_im;
    double* y_re = y_re_buf;
    double* y_im = y_im_buf;
    if (n_r_ > stack_antennas) {
        heap_re.resize(n_r_);
        heap_im.resize(n_r_);
        y_re = heap_re.data();
        y_im = heap_im.data();
    }
    for (std::size_t m = 0; m < n_r_; ++m) {
        y_re[m] = y[m].real();
        y_im[m] = y[m].imag();
    }
    kernels::squared_distances({y_re, n_r_}, {y_im, n_r_}, re_, im_, n_hyp_, out);
}

std::size_t CandidateBank::detect(std::span<const cdouble> y) const {
    std::vector<double> d(n_hyp_);
    distances(y, d);
    return kernels::argmin(d);
}

ReceiveImPlan ReceiveImPlan::build(const std::vector<cdouble>& h1, const ComplexMatrix& h2_est,
                                   const mapping::AcTable& table) {
    const ris::PhaseBank bank(h1, h2_est);
    ReceiveImPlan plan;
    plan.partitions.reserve(table.size());
    plan.phases.reserve(table.size());
    plan.weights.reserve(table.size());
    plan.responses.reserve(table.size());
    for (const auto& ac : table.entries) {
        plan.partitions.push_back(ris::partition_res(h1.size(), ac));
        plan.phases.push_back(bank.configure(plan.partitions.back()));
        plan.weights.push_back(ris::reflect_weights(plan.phases.back(), h1));
        plan.responses.push_back(ris::response(h2_est, plan.weights.back()));
    }
    return plan;
}

CandidateBank make_candidates(const std::vector<std::vector<cdouble>>& responses,
                              std::span<const cdouble> symbols) {
    if (responses.empty() || symbols.empty()) fail(ErrorKind::invalid_dimension, "empty hypothesis set");
    const std::size_t n_r = responses.front().size();
    CandidateBank bank(n_r, responses.size() * symbols.size());
    std::vector<cdouble> g(n_r);
    for (std::size_t r = 0; r < responses.size(); ++r) {
        for (std::size_t k = 0; k < symbols.size(); ++k) {
            for (std::size_t m = 0; m < n_r; ++m) g[m] = ris::cmul(responses[r][m], symbols[k]);
            bank.set(r * symbols.size() + k, g);
        }
    }
    return bank;
}

namespace {

std::vector<cdouble> ac_response(const channel::ChannelRealization& ch_est,
                                 const mapping::AcTable& table, std::size_t r) {
    if (r >= table.size()) fail(ErrorKind::invalid_dimension, "AC index out of range");
    const auto part = ris::partition_res(ch_est.n(), table.entries[r]);
    const auto phases = ris::compute_phase_config(part, ch_est.h1, ch_est.h2_est);
    return ris::response(ch_est.h2_est, ris::reflect_weights(phases, ch_est.h1));
}

}  // namespace

std::vector<cdouble> candidate_signal_rasm(const channel::ChannelRealization& ch_est,
                                           const mapping::AcTable& table, std::size_t r,
                                           std::size_t k, const mapping::Constellation& c) {
    if (k >= c.m) fail(ErrorKind::invalid_dimension, "symbol index out of range");
    auto g = ac_response(ch_est, table, r);
    for (auto& v : g) v = ris::cmul(v, c.points[k]);
    return g;
}

std::vector<cdouble> candidate_signal_rassk(const channel::ChannelRealization& ch_est,
                                            const mapping::AcTable& table, std::size_t r,
                                            double e_s) {
    auto g = ac_response(ch_est, table, r);
    const cdouble amp{std::sqrt(e_s), 0.0};
    for (auto& v : g) v = ris::cmul(v, amp);
    return g;
}

Hypothesis ml_detect_rasm(std::span<const cdouble> y, const channel::ChannelRealization& ch_est,
                          const mapping::AcTable& table, const mapping::Constellation& c) {
    const auto plan = ReceiveImPlan::build(ch_est.h1, ch_est.h2_est, table);
    const auto h = make_candidates(plan.responses, c.points).detect(y);
    return {h / c.m, h % c.m};
}

std::size_t ml_detect_rassk(std::span<const cdouble> y, const channel::ChannelRealization& ch_est,
                            const mapping::AcTable& table, double e_s) {
    const auto plan = ReceiveImPlan::build(ch_est.h1, ch_est.h2_est, table);
    const cdouble amp{std::sqrt(e_s), 0.0};
    return make_candidates(plan.responses, std::span<const cdouble>(&amp, 1)).detect(y);
}

std::size_t ml_detect_eve(cdouble y_e, const std::vector<cdouble>& h1,
                          const std::vector<cdouble>& g2, const ris::PhaseMatrix& phases,
                          const mapping::Constellation& c) {
    const cdouble e = ris::eve_response(g2, ris::reflect_weights(phases, h1));
    std::size_t best = 0;
    double best_d = std::norm(y_e - ris::cmul(e, c.points[0]));
    for (std::size_t k = 1; k < c.m; ++k) {
        const double d = std::norm(y_e - ris::cmul(e, c.points[k]));
        if (d < best_d) {
            best_d = d;
            best = k;
        }
    }
    return best;
}

cdouble mrc_combine(std::span<const cdouble> y, std::span<const cdouble> h) {
    if (y.size() != h.size() || h.empty()) fail(ErrorKind::invalid_dimension, "MRC branch count");
    cdouble num{};
    double den = 0.0;
    for (std::size_t m = 0; m < h.size(); ++m) {
        num += std::conj(h[m]) * y[m];
        den += std::norm(h[m]);
    }
    if (den == 0.0) fail(ErrorKind::degenerate_channel, "MRC over an all-zero channel");
    return num / den;
}

std::size_t nearest_symbol(const mapping::Constellation& c, cdouble z) {
    std::size_t best = 0;
    double best_d = std::norm(z - c.points[0]);
    for (std::size_t k = 1; k < c.m; ++k) {
        const double d = std::norm(z - c.points[k]);
        if (d < best_d) {
            best_d = d;
            best = k;
        }
    }
    return best;
}

}  // namespace risim::detect
