#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "risim/mapping.hpp"
#include "risim/scheme.hpp"

namespace risim::analysis {

/// Bits per channel use. n_idx is the antenna count carrying the index: receive
/// antennas for the received-side schemes, transmit antennas for TSM/TSSK/TASM.
std::size_t spectral_efficiency(Scheme scheme, std::size_t n_idx, std::size_t m,
                                std::optional<std::size_t> n_s = std::nullopt);

/// Real multiplications plus additions of an exhaustive ML search.
std::uint64_t detection_complexity(Scheme scheme, std::size_t n_r, std::size_t n, std::size_t d,
                                   std::size_t m = 1);

class GaussLegendre {
public:
    explicit GaussLegendre(std::size_t points);

    std::size_t size() const { return nodes_.size(); }
    const std::vector<double>& nodes() const { return nodes_; }    // on [-1, 1]
    const std::vector<double>& weights() const { return weights_; }

    double integrate(const std::function<double(double)>& f, double a, double b) const;

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

/// q ~ N(mean, covariance) in R^d; the form is X = |q|^2.
struct GaussianQuadraticForm {
    Eigen::VectorXd mean;
    Eigen::MatrixXd covariance;

    std::size_t dim() const { return static_cast<std::size_t>(mean.size()); }
    void validate() const;
};

/// E[exp(t X)] = det(I - 2t S)^(-1/2) exp(t m' (I - 2t S)^(-1) m). Needs no inverse of S.
double mgf_noncentral_chisq(double t, const GaussianQuadraticForm& form);

/// Smallest positive t where I - 2t S turns singular (+inf for S = 0).
double mgf_pole(const GaussianQuadraticForm& form);

struct AberContext {
    std::size_t n_r = 0;  // physical receive antennas
    std::size_t n = 0;
    mapping::AcTable table;
    std::vector<cdouble> symbols;       // constellation, or the single carrier sqrt(E_s)
    std::vector<std::uint32_t> labels;  // per symbol index
    std::size_t bits_symbol = 0;
    std::size_t quadrature_points = 64;
    MeanScaling mean_scaling = MeanScaling::per_block;
    CovarianceModel covariance_model = CovarianceModel::exact_moment;

    static AberContext from_config(const SchemeConfig& cfg);

    std::size_t n_hyp() const { return table.size() * symbols.size(); }
    std::uint64_t word(std::size_t h) const;
    void validate() const;
};

/// Gaussian approximation of the squared distance between the noise-free
/// received vectors of two hypotheses. Antennas aimed at by either AC form a
/// correlated block; the others contribute (1 - t v)^(-order) with v the
/// residual variance (order = their count for independent exponentials).
struct PairwiseMgf {
    GaussianQuadraticForm coherent;
    double residual_order = 0.0;
    double residual_variance = 0.0;

    double operator()(double t) const;
};

PairwiseMgf build_pair_mgf(const AberContext& ctx, std::size_t r, std::size_t r_hat,
                           std::size_t k, std::size_t k_hat);

/// AC in error (r != r_hat).
PairwiseMgf build_z1_mgf(const AberContext& ctx, std::size_t r, std::size_t r_hat, std::size_t k,
                         std::size_t k_hat);

/// AC correct, symbol in error (k != k_hat).
PairwiseMgf build_z2_mgf(const AberContext& ctx, std::size_t r, std::size_t k, std::size_t k_hat);

double pep_unconditional(const std::function<double(double)>& mgf, double n0, PepMethod method,
                         std::size_t quadrature_points = 64);

double aber_union_bound(const AberContext& ctx, double n0, PepMethod method = PepMethod::quadrature);

/// Same bound over several noise levels, building each pairwise form once.
std::vector<double> aber_union_bound(const AberContext& ctx, const std::vector<double>& n0s,
                                     PepMethod method = PepMethod::quadrature);

}  // namespace risim::analysis
