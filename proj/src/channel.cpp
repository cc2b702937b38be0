#include "risim/channel.hpp"

#include <cmath>
#include <numbers>

namespace risim::channel {

void FadingSpec::validate() const {
    if (!(rician_k >= 0.0)) fail(ErrorKind::domain, "Rician K must be non-negative");
    if (!(csi_error_var >= 0.0 && csi_error_var <= 1.0)) {
        fail(ErrorKind::domain, "CSI error variance must lie in [0, 1]");
    }
}

ChannelStreams ChannelStreams::derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return {RandomStream::derive(seed, StreamPurpose::tx_ris, a, b),
            RandomStream::derive(seed, StreamPurpose::ris_rx, a, b),
            RandomStream::derive(seed, StreamPurpose::csi, a, b),
            RandomStream::derive(seed, StreamPurpose::eve, a, b)};
}

std::vector<cdouble> sample_tx_ris_channel(std::size_t n, RandomStream& rng) {
    if (n == 0) fail(ErrorKind::invalid_dimension, "transmitter-RIS channel needs n >= 1");
    std::vector<cdouble> h(n);
    for (auto& v : h) v = rng.complex_gaussian();
    return h;
}

cdouble los_component(std::size_t m, std::size_t i) {
    return std::polar(1.0, -std::numbers::pi * static_cast<double>(m + i) / 4.0);
}

ComplexMatrix sample_ris_rx_channel(std::size_t n_r, std::size_t n, double k, RandomStream& rng) {
    if (n_r == 0 || n == 0) fail(ErrorKind::invalid_dimension, "RIS-receiver channel needs n_r, n >= 1");
    if (!(k >= 0.0)) fail(ErrorKind::domain, "Rician K must be non-negative");

    double los_w = 0.0;
    double nlos_w = 1.0;
    if (std::isinf(k)) {
        los_w = 1.0;
        nlos_w = 0.0;
    } else if (k > 0.0) {
        los_w = std::sqrt(k / (k + 1.0));
        nlos_w = std::sqrt(1.0 / (k + 1.0));
    }

    ComplexMatrix h(n_r, n);
    for (std::size_t m = 0; m < n_r; ++m) {
        for (std::size_t i = 0; i < n; ++i) {
            // The scattered part is drawn for every K so that K = 0 reproduces the Rayleigh draw.
            const cdouble scattered = rng.complex_gaussian();
            h.set(m, i, k == 0.0 ? scattered : los_w * los_component(m, i) + nlos_w * scattered);
        }
    }
    return h;
}

CsiPair apply_csi_error(const ComplexMatrix& h2_true, const FadingSpec& spec, RandomStream& rng) {
    spec.validate();
    const double d2 = spec.csi_error_var;
    if (d2 == 0.0 && spec.csi_model == CsiModel::additive_error) {
        return {h2_true, h2_true};
    }

    const double est_scale = std::sqrt(1.0 - d2);
    const double err_scale = std::sqrt(d2);
    CsiPair out{ComplexMatrix(h2_true.rows(), h2_true.cols()),
                ComplexMatrix(h2_true.rows(), h2_true.cols())};
    for (std::size_t m = 0; m < h2_true.rows(); ++m) {
        for (std::size_t i = 0; i < h2_true.cols(); ++i) {
            const cdouble est = est_scale * h2_true(m, i);
            const cdouble err = err_scale * rng.complex_gaussian();
            out.estimate.set(m, i, est);
            if (spec.csi_model == CsiModel::additive_error) {
                out.composite.set(m, i, est + err);
            } else {
                out.composite.set(m, i, d2 * est + (1.0 - d2) * err);
            }
        }
    }
    return out;
}

std::vector<cdouble> sample_eve_channel(std::size_t n, RandomStream& rng) {
    if (n == 0) fail(ErrorKind::invalid_dimension, "eavesdropper channel needs n >= 1");
    return sample_tx_ris_channel(n, rng);
}

ChannelRealization draw_realization(std::size_t n_r, std::size_t n, const FadingSpec& spec,
                                    ChannelStreams& streams, bool with_eve) {
    spec.validate();
    ChannelRealization ch;
    ch.h1 = sample_tx_ris_channel(n, streams.tx_ris);
    const ComplexMatrix h2 = sample_ris_rx_channel(n_r, n, spec.rician_k, streams.ris_rx);
    auto csi = apply_csi_error(h2, spec, streams.csi);
    ch.h2_true = std::move(csi.composite);
    ch.h2_est = std::move(csi.estimate);
    if (with_eve) ch.g2 = sample_eve_channel(n, streams.eve);
    return ch;
}

}  // namespace risim::channel
