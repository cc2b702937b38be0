#include <bit>

#include "risim/analysis.hpp"
#include "risim/baselines.hpp"

namespace risim::analysis {

namespace {

std::size_t floor_log2(std::uint64_t v) { return static_cast<std::size_t>(std::bit_width(v) - 1); }

std::size_t symbol_bits(std::size_t m) {
    if (m < 2 || !mapping::is_power_of_two(m)) {
        fail(ErrorKind::config, "constellation order must be a power of two >= 2");
    }
    return mapping::log2_exact(m);
}

std::size_t exact_index_bits(std::size_t n) {
    if (!mapping::is_power_of_two(n)) {
        fail(ErrorKind::config, "fixed single-antenna index needs a power-of-two antenna count");
    }
    return mapping::log2_exact(n);
}

std::size_t generalized_bits(std::size_t n, std::optional<std::size_t> n_s) {
    if (!n_s) fail(ErrorKind::config, "generalized schemes need n_s");
    if (*n_s == 0 || *n_s > n) fail(ErrorKind::config, "n_s must lie in [1, n_r]");
    return floor_log2(baselines::binomial(n, *n_s));
}

}  // namespace

std::size_t spectral_efficiency(Scheme scheme, std::size_t n_idx, std::size_t m,
                                std::optional<std::size_t> n_s) {
    if (n_idx == 0) fail(ErrorKind::config, "antenna count must be at least 1");
    if (n_idx > 63) fail(ErrorKind::config, "antenna count too large");
    const std::size_t adaptive = floor_log2((std::uint64_t{1} << n_idx) - 1);
    switch (scheme) {
        case Scheme::rasm: return adaptive + symbol_bits(m);
        case Scheme::rassk: return adaptive;
        case Scheme::rsm: return exact_index_bits(n_idx) + symbol_bits(m);
        case Scheme::rssk: return exact_index_bits(n_idx);
        case Scheme::rgsm: return generalized_bits(n_idx, n_s) + symbol_bits(m);
        case Scheme::rgssk: return generalized_bits(n_idx, n_s);
        case Scheme::tsm: return exact_index_bits(n_idx) + symbol_bits(m);
        case Scheme::tssk: return exact_index_bits(n_idx);
        case Scheme::tasm: return adaptive + symbol_bits(m);
        case Scheme::simo_mrc: return symbol_bits(m);
    }
    fail(ErrorKind::config, "unhandled scheme");
}

std::uint64_t detection_complexity(Scheme scheme, std::size_t n_r, std::size_t n, std::size_t d,
                                   std::size_t m) {
    if (n_r == 0 || n == 0 || d == 0 || m == 0) fail(ErrorKind::config, "complexity counts must be >= 1");
    const std::uint64_t per_hyp = 2 * n_r * (2 * n + 1 + 2 * n_r) + n - 1;
    switch (scheme) {
        case Scheme::rasm: return per_hyp * d * m;
        case Scheme::rassk: return per_hyp * d;
        default: fail(ErrorKind::unsupported_configuration, "complexity is defined for rasm and rassk");
    }
}

}  // namespace risim::analysis
