// Built with -mavx2 (no FMA) so that only code reached after the runtime
// feature check executes AVX2 instructions.
#include "risim/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)
#include <immintrin.h>

namespace risim::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

void cascade_response(const ComplexMatrix& h, std::span<const double> w_re,
                      std::span<const double> w_im, std::span<double> out_re,
                      std::span<double> out_im) {
    const std::size_t cols = h.cols();
    const std::size_t body = cols & ~std::size_t{3};
    for (std::size_t m = 0; m < h.rows(); ++m) {
        const double* hr = h.row_re(m).data();
        const double* hi = h.row_im(m).data();
        __m256d acc_re = _mm256_setzero_pd();
        __m256d acc_im = _mm256_setzero_pd();
        for (std::size_t i = 0; i < body; i += 4) {
            const __m256d a = _mm256_loadu_pd(hr + i);
            const __m256d b = _mm256_loadu_pd(hi + i);
            const __m256d c = _mm256_loadu_pd(w_re.data() + i);
            const __m256d d = _mm256_loadu_pd(w_im.data() + i);
            acc_re = _mm256_add_pd(acc_re, _mm256_sub_pd(_mm256_mul_pd(a, c), _mm256_mul_pd(b, d)));
            acc_im = _mm256_add_pd(acc_im, _mm256_add_pd(_mm256_mul_pd(a, d), _mm256_mul_pd(b, c)));
        }
        double sr = hsum(acc_re);
        double si = hsum(acc_im);
        for (std::size_t i = body; i < cols; ++i) {
            sr += hr[i] * w_re[i] - hi[i] * w_im[i];
            si += hr[i] * w_im[i] + hi[i] * w_re[i];
        }
        out_re[m] = sr;
        out_im[m] = si;
    }
}

void squared_distances(std::span<const double> y_re, std::span<const double> y_im,
                       std::span<const double> cand_re, std::span<const double> cand_im,
                       std::size_t n_hyp, std::span<double> out) {
    const std::size_t n_ant = y_re.size();
    const std::size_t body = n_hyp & ~std::size_t{3};
    for (std::size_t h = 0; h < body; h += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t m = 0; m < n_ant; ++m) {
            const __m256d yr = _mm256_set1_pd(y_re[m]);
            const __m256d yi = _mm256_set1_pd(y_im[m]);
            const __m256d dr = _mm256_sub_pd(yr, _mm256_loadu_pd(cand_re.data() + m * n_hyp + h));
            const __m256d di = _mm256_sub_pd(yi, _mm256_loadu_pd(cand_im.data() + m * n_hyp + h));
            acc = _mm256_add_pd(acc, _mm256_add_pd(_mm256_mul_pd(dr, dr), _mm256_mul_pd(di, di)));
        }
        _mm256_storeu_pd(out.data() + h, acc);
    }
    for (std::size_t h = body; h < n_hyp; ++h) {
        double d = 0.0;
        for (std::size_t m = 0; m < n_ant; ++m) {
            const double dr = y_re[m] - cand_re[m * n_hyp + h];
            const double di = y_im[m] - cand_im[m * n_hyp + h];
            d += dr * dr + di * di;
        }
        out[h] = d;
    }
}

}  // namespace risim::kernels::avx2

#else

namespace risim::kernels::avx2 {

void cascade_response(const ComplexMatrix&, std::span<const double>, std::span<const double>,
                      std::span<double>, std::span<double>) {
    fail(ErrorKind::unsupported_configuration, "AVX2 kernels not built for this target");
}

void squared_distances(std::span<const double>, std::span<const double>,
                       std::span<const double>, std::span<const double>, std::size_t,
                       std::span<double>) {
    fail(ErrorKind::unsupported_configuration, "AVX2 kernels not built for this target");
}

}  // namespace risim::kernels::avx2

#endif
