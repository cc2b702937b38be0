#pragma once

// Inner loops of the link simulator. Each kernel has a scalar reference
// implementation and an AVX2 variant; the variant is picked at runtime from
// the CPU feature set and can be pinned with RIS_IM_KERNELS=scalar|avx2.
//
// squared_distances is bit-identical across variants (same operation order
// per hypothesis lane, no FMA). cascade_response reorders the sum over
// reflection elements in the vector variant and agrees to rounding.

#include <cstddef>
#include <span>

#include "risim/common.hpp"

namespace risim::kernels {

enum class Isa { scalar, avx2 };

const char* to_string(Isa isa);

/// Best variant supported by this CPU.
Isa detected_isa();
bool isa_supported(Isa isa);

/// Variant used by the dispatching entry points below.
Isa active_isa();
void set_active_isa(Isa isa);

/// out[m] = sum_i h(m, i) * w[i] for every row m of h.
void cascade_response(const ComplexMatrix& h, std::span<const double> w_re,
                      std::span<const double> w_im, std::span<double> out_re,
                      std::span<double> out_im);

/// Squared Euclidean distance from y to each of n_hyp candidate vectors.
/// Candidates are split planes laid out antenna-major: cand_re[m * n_hyp + h].
void squared_distances(std::span<const double> y_re, std::span<const double> y_im,
                       std::span<const double> cand_re, std::span<const double> cand_im,
                       std::size_t n_hyp, std::span<double> out);

/// Index of the first minimum.
std::size_t argmin(std::span<const double> values);

namespace scalar {
void cascade_response(const ComplexMatrix& h, std::span<const double> w_re,
                      std::span<const double> w_im, std::span<double> out_re,
                      std::span<double> out_im);
void squared_distances(std::span<const double> y_re, std::span<const double> y_im,
                       std::span<const double> cand_re, std::span<const double> cand_im,
                       std::size_t n_hyp, std::span<double> out);
}  // namespace scalar

namespace avx2 {
void cascade_response(const ComplexMatrix& h, std::span<const double> w_re,
                      std::span<const double> w_im, std::span<double> out_re,
                      std::span<double> out_im);
void squared_distances(std::span<const double> y_re, std::span<const double> y_im,
                       std::span<const double> cand_re, std::span<const double> cand_im,
                       std::size_t n_hyp, std::span<double> out);
}  // namespace avx2

}  // namespace risim::kernels
