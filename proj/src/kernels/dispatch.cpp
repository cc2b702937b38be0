#include <atomic>
#include <cstdlib>
#include <string_view>

#include "risim/kernels.hpp"

namespace risim::kernels {

const char* to_string(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "unknown";
}

bool isa_supported(Isa isa) {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2:
#if defined(__x86_64__) && defined(RISIM_HAVE_AVX2_KERNELS)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

Isa detected_isa() { return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

namespace {

Isa initial_isa() {
    if (const char* env = std::getenv("RIS_IM_KERNELS")) {
        const std::string_view v(env);
        if (v == "scalar") return Isa::scalar;
        if (v == "avx2" && isa_supported(Isa::avx2)) return Isa::avx2;
    }
    return detected_isa();
}

std::atomic<Isa>& selected() {
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

}  // namespace

Isa active_isa() { return selected().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
    if (!isa_supported(isa)) {
        fail(ErrorKind::unsupported_configuration,
             std::string("kernel variant not supported on this CPU: ") + to_string(isa));
    }
    selected().store(isa, std::memory_order_relaxed);
}

void cascade_response(const ComplexMatrix& h, std::span<const double> w_re,
                      std::span<const double> w_im, std::span<double> out_re,
                      std::span<double> out_im) {
    if (w_re.size() != h.cols() || w_im.size() != h.cols() || out_re.size() < h.rows() ||
        out_im.size() < h.rows()) {
        fail(ErrorKind::invalid_dimension, "cascade_response operand sizes");
    }
    if (active_isa() == Isa::avx2) {
        avx2::cascade_response(h, w_re, w_im, out_re, out_im);
    } else {
        scalar::cascade_response(h, w_re, w_im, out_re, out_im);
    }
}

void squared_distances(std::span<const double> y_re, std::span<const double> y_im,
                       std::span<const double> cand_re, std::span<const double> cand_im,
                       std::size_t n_hyp, std::span<double> out) {
    const std::size_t n = y_re.size() * n_hyp;
    if (y_im.size() != y_re.size() || cand_re.size() < n || cand_im.size() < n ||
        out.size() < n_hyp) {
        fail(ErrorKind::invalid_dimension, "squared_distances operand sizes");
    }
    if (active_isa() == Isa::avx2) {
        avx2::squared_distances(y_re, y_im, cand_re, cand_im, n_hyp, out);
    } else {
        scalar::squared_distances(y_re, y_im, cand_re, cand_im, n_hyp, out);
    }
}

std::size_t argmin(std::span<const double> values) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] < values[best]) best = i;
    }
    return best;
}

}  // namespace risim::kernels
