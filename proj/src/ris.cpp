#include "risim/ris.hpp"

#include <cmath>
#include <numbers>

#include "risim/kernels.hpp"

namespace risim::ris {

RePartition partition_res(std::size_t n, const mapping::AntennaCombination& ac) {
    const std::size_t n_a = ac.n_a();
    if (n < n_a) fail(ErrorKind::insufficient_elements, "fewer reflection elements than selected antennas");
    RePartition p;
    p.n = n;
    p.n_a = n_a;
    p.n_e = n / n_a;
    p.target.assign(n, idle_re);
    for (std::size_t q = 0; q < n_a; ++q) {
        for (std::size_t i = q * p.n_e; i < (q + 1) * p.n_e; ++i) p.target[i] = ac.antennas()[q];
    }
    return p;
}

std::vector<double> PhaseMatrix::phases() const {
    std::vector<double> out(phasors.size(), 0.0);
    for (std::size_t i = 0; i < phasors.size(); ++i) {
        if (phasors[i] != cdouble{}) out[i] = std::arg(phasors[i]);
        if (out[i] == -std::numbers::pi) out[i] = std::numbers::pi;
    }
    return out;
}

cdouble aligning_phasor(cdouble h2, cdouble h1) {
    const cdouble c = cmul(h2, h1);
    const double mag = std::abs(c);
    if (mag == 0.0) return {1.0, 0.0};
    return {c.real() / mag, -c.imag() / mag};
}

namespace {

void check_dims(const RePartition& part, const std::vector<cdouble>& h1, const ComplexMatrix& h2) {
    if (h1.size() != part.n || h2.cols() != part.n) {
        fail(ErrorKind::invalid_dimension, "partition and channel element counts differ");
    }
    for (auto t : part.target) {
        if (t != idle_re && t >= h2.rows()) fail(ErrorKind::invalid_dimension, "target antenna out of range");
    }
}

}  // namespace

PhaseMatrix compute_phase_config(const RePartition& part, const std::vector<cdouble>& h1,
                                 const ComplexMatrix& h2_est) {
    check_dims(part, h1, h2_est);
    PhaseMatrix pm;
    pm.phasors.assign(part.n, cdouble{});
    for (std::size_t i = 0; i < part.n; ++i) {
        if (part.target[i] != idle_re) pm.phasors[i] = aligning_phasor(h2_est(part.target[i], i), h1[i]);
    }
    return pm;
}

PhaseBank::PhaseBank(const std::vector<cdouble>& h1, const ComplexMatrix& h2_est)
    : phasors_(h2_est.rows(), h2_est.cols()) {
    if (h1.size() != h2_est.cols()) fail(ErrorKind::invalid_dimension, "h1 and h2 element counts differ");
    for (std::size_t m = 0; m < h2_est.rows(); ++m) {
        for (std::size_t i = 0; i < h2_est.cols(); ++i) phasors_.set(m, i, aligning_phasor(h2_est(m, i), h1[i]));
    }
}

PhaseMatrix PhaseBank::configure(const RePartition& part) const {
    if (part.n != phasors_.cols()) fail(ErrorKind::invalid_dimension, "partition element count");
    PhaseMatrix pm;
    pm.phasors.assign(part.n, cdouble{});
    for (std::size_t i = 0; i < part.n; ++i) {
        const auto t = part.target[i];
        if (t == idle_re) continue;
        if (t >= phasors_.rows()) fail(ErrorKind::invalid_dimension, "target antenna out of range");
        pm.phasors[i] = phasors_(t, i);
    }
    return pm;
}

ReflectWeights reflect_weights(const PhaseMatrix& phases, const std::vector<cdouble>& h1) {
    if (phases.phasors.size() != h1.size()) fail(ErrorKind::invalid_dimension, "phase vector length");
    ReflectWeights w;
    w.re.resize(h1.size());
    w.im.resize(h1.size());
    for (std::size_t i = 0; i < h1.size(); ++i) {
        const cdouble v = cmul(phases.phasors[i], h1[i]);
        w.re[i] = v.real();
        w.im[i] = v.imag();
    }
    return w;
}

std::vector<cdouble> response(const ComplexMatrix& h2, const ReflectWeights& w) {
    std::vector<double> re(h2.rows());
    std::vector<double> im(h2.rows());
    kernels::cascade_response(h2, w.re, w.im, re, im);
    std::vector<cdouble> out(h2.rows());
    for (std::size_t m = 0; m < out.size(); ++m) out[m] = {re[m], im[m]};
    return out;
}

void add_noise(std::vector<cdouble>& y, double n0, RandomStream& rng) {
    if (!(n0 >= 0.0)) fail(ErrorKind::domain, "noise variance must be non-negative");
    for (auto& v : y) v += rng.complex_gaussian(n0);
}

std::vector<cdouble> synthesize_received_rasm(const channel::ChannelRealization& ch,
                                              const PhaseMatrix& phases, cdouble x_k, double n0,
                                              RandomStream& rng) {
    if (phases.phasors.size() != ch.n()) fail(ErrorKind::invalid_dimension, "phase vector length");
    auto y = response(ch.h2_true, reflect_weights(phases, ch.h1));
    for (auto& v : y) v = cmul(v, x_k);
    add_noise(y, n0, rng);
    return y;
}

std::vector<cdouble> synthesize_received_rassk(const channel::ChannelRealization& ch,
                                               const PhaseMatrix& phases, double e_s, double n0,
                                               RandomStream& rng) {
    if (!(e_s >= 0.0)) fail(ErrorKind::domain, "transmit energy must be non-negative");
    return synthesize_received_rasm(ch, phases, {std::sqrt(e_s), 0.0}, n0, rng);
}

cdouble eve_response(const std::vector<cdouble>& g2, const ReflectWeights& w) {
    if (g2.size() != w.re.size()) fail(ErrorKind::invalid_dimension, "eavesdropper channel length");
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < g2.size(); ++i) {
        re += g2[i].real() * w.re[i] - g2[i].imag() * w.im[i];
        im += g2[i].real() * w.im[i] + g2[i].imag() * w.re[i];
    }
    return {re, im};
}

cdouble synthesize_eve_signal(const std::vector<cdouble>& h1, const std::vector<cdouble>& g2,
                              const PhaseMatrix& phases, cdouble x_k, double n0, RandomStream& rng) {
    if (!(n0 >= 0.0)) fail(ErrorKind::domain, "noise variance must be non-negative");
    return cmul(eve_response(g2, reflect_weights(phases, h1)), x_k) + rng.complex_gaussian(n0);
}

std::vector<double> compute_selected_snr(const channel::ChannelRealization& ch,
                                         const RePartition& part, const PhaseMatrix& phases,
                                         double symbol_energy, double n0) {
    if (!(n0 > 0.0)) fail(ErrorKind::domain, "SNR needs a positive noise variance");
    check_dims(part, ch.h1, ch.h2_true);
    const auto w = reflect_weights(phases, ch.h1);
    std::vector<double> out;
    for (std::size_t q = 0; q < part.n_a; ++q) {
        const std::size_t l = part.target[q * part.n_e];
        cdouble aligned{};
        cdouble leak{};
        for (std::size_t i = 0; i < part.n; ++i) {
            if (part.target[i] == idle_re) continue;
            const cdouble term = cmul(ch.h2_true(l, i), {w.re[i], w.im[i]});
            (part.target[i] == l ? aligned : leak) += term;
        }
        out.push_back(symbol_energy * (std::norm(aligned) + std::norm(leak)) / n0);
    }
    return out;
}

}  // namespace risim::ris
