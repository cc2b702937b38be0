#pragma once

#include <cstdint>
#include <random>

#include "risim/common.hpp"

namespace risim {

/// Fixed offsets that separate the per-purpose substreams of one master seed.
/// Adding a consumer never shifts the draws of another.
enum class StreamPurpose : std::uint64_t {
    tx_ris = 0x11,
    ris_rx = 0x22,
    csi = 0x33,
    noise = 0x44,
    eve = 0x55,
    eve_noise = 0x66,
    bits = 0x77,
    aux = 0x88,
};

std::uint64_t splitmix64(std::uint64_t x);

class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// Substream for (purpose, a, b) under a master seed, e.g. a = SNR index, b = block index.
    static RandomStream derive(std::uint64_t master, StreamPurpose purpose, std::uint64_t a = 0,
                               std::uint64_t b = 0);

    double gaussian() { return normal_(engine_); }

    /// Circular complex Gaussian CN(0, variance).
    cdouble complex_gaussian(double variance = 1.0);

    double uniform01() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

    std::uint64_t uniform_index(std::uint64_t n) {
        return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace risim
