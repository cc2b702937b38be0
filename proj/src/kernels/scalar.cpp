#include "risim/kernels.hpp"

namespace risim::kernels::scalar {

void cascade_response(const ComplexMatrix& h, std::span<const double> w_re,
                      std::span<const double> w_im, std::span<double> out_re,
                      std::span<double> out_im) {
    const std::size_t cols = h.cols();
    for (std::size_t m = 0; m < h.rows(); ++m) {
        const auto hr = h.row_re(m);
        const auto hi = h.row_im(m);
        double acc_re = 0.0;
        double acc_im = 0.0;
        for (std::size_t i = 0; i < cols; ++i) {
            acc_re += hr[i] * w_re[i] - hi[i] * w_im[i];
            acc_im += hr[i] * w_im[i] + hi[i] * w_re[i];
        }
        out_re[m] = acc_re;
        out_im[m] = acc_im;
    }
}

void squared_distances(std::span<const double> y_re, std::span<const double> y_im,
                       std::span<const double> cand_re, std::span<const double> cand_im,
                       std::size_t n_hyp, std::span<double> out) {
    const std::size_t n_ant = y_re.size();
    for (std::size_t h = 0; h < n_hyp; ++h) {
        double d = 0.0;
        for (std::size_t m = 0; m < n_ant; ++m) {
            const double dr = y_re[m] - cand_re[m * n_hyp + h];
            const double di = y_im[m] - cand_im[m * n_hyp + h];
            d += dr * dr + di * di;
        }
        out[h] = d;
    }
}

}  // namespace risim::kernels::scalar
