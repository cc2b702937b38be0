#pragma once

#include <cstdint>

#include "risim/scheme.hpp"

namespace risim::secrecy {

struct RateEstimate {
    double rate = 0.0;  // bpcu
    double std_err = 0.0;
    std::uint64_t samples = 0;
};

struct SecrecyEstimate {
    double r_b = 0.0;
    double r_e = 0.0;
    double sr = 0.0;
    std::uint64_t samples = 0;
    double std_err = 0.0;
};

double secrecy_rate(double r_b, double r_e);

/// Bob's and Eve's DCMC rates on shared channel draws. Each sample is a fresh
/// channel; every hypothesis is sent once over it with fresh noise. stream_index
/// separates independent evaluations under one seed (the SNR index in a sweep).
SecrecyEstimate estimate_secrecy(const SchemeConfig& cfg, double snr_db, std::uint64_t samples,
                                 std::uint64_t seed, std::uint64_t stream_index = 0);

RateEstimate estimate_rate_bob(const SchemeConfig& cfg, double snr_db, std::uint64_t samples,
                               std::uint64_t seed, std::uint64_t stream_index = 0);
RateEstimate estimate_rate_eve(const SchemeConfig& cfg, double snr_db, std::uint64_t samples,
                               std::uint64_t seed, std::uint64_t stream_index = 0);

RateEstimate estimate_rate_bob_rasm(const SchemeConfig& cfg, double snr_db, std::uint64_t samples,
                                    std::uint64_t seed);
RateEstimate estimate_rate_eve_rasm(const SchemeConfig& cfg, double snr_db, std::uint64_t samples,
                                    std::uint64_t seed);
RateEstimate estimate_rate_bob_rassk(const SchemeConfig& cfg, double snr_db, std::uint64_t samples,
                                     std::uint64_t seed);

}  // namespace risim::secrecy
