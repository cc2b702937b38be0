#include "risim/common.hpp"

#include <cmath>

#include "risim/random.hpp"

namespace risim {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_dimension: return "invalid-dimension";
        case ErrorKind::domain: return "domain";
        case ErrorKind::unsupported_configuration: return "unsupported-configuration";
        case ErrorKind::unknown_combination: return "unknown-combination";
        case ErrorKind::insufficient_elements: return "insufficient-elements";
        case ErrorKind::degenerate_channel: return "degenerate-channel";
        case ErrorKind::bound_invalid: return "bound-invalid";
        case ErrorKind::empty_aggregate: return "empty-aggregate";
        case ErrorKind::config: return "config";
    }
    return "unknown";
}

void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RandomStream RandomStream::derive(std::uint64_t master, StreamPurpose purpose, std::uint64_t a,
                                  std::uint64_t b) {
    std::uint64_t h = splitmix64(master);
    h = splitmix64(h ^ static_cast<std::uint64_t>(purpose));
    h = splitmix64(h ^ a);
    h = splitmix64(h ^ (b * 0x2545f4914f6cdd1dULL));
    return RandomStream(h);
}

cdouble RandomStream::complex_gaussian(double variance) {
    const double s = std::sqrt(variance / 2.0);
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    return {s * re, s * im};
}

}  // namespace risim
