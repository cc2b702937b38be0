#include <algorithm>
#include <cmath>
#include <limits>

#include "risim/analysis.hpp"

namespace risim::analysis {

void GaussianQuadraticForm::validate() const {
    if (covariance.rows() != mean.size() || covariance.cols() != mean.size()) {
        fail(ErrorKind::invalid_dimension, "quadratic form mean and covariance sizes differ");
    }
    if (mean.size() == 0) return;
    const double scale = std::max(1.0, covariance.cwiseAbs().maxCoeff());
    if ((covariance - covariance.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        fail(ErrorKind::domain, "covariance is not symmetric");
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(covariance, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10 * scale) fail(ErrorKind::domain, "covariance is not PSD");
}

double mgf_noncentral_chisq(double t, const GaussianQuadraticForm& form) {
    const auto d = static_cast<Eigen::Index>(form.dim());
    if (d == 0 || t == 0.0) return 1.0;
    const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(d, d) - 2.0 * t * form.covariance;
    const Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() != Eigen::Success) fail(ErrorKind::domain, "t at or beyond the MGF pole");
    const Eigen::MatrixXd& l = llt.matrixLLT();
    double log_det = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
        const double lii = l(i, i);
        if (!(lii > 0.0)) fail(ErrorKind::domain, "t at or beyond the MGF pole");
        log_det += 2.0 * std::log(lii);
    }
    const double quad = form.mean.dot(llt.solve(form.mean));
    return std::exp(-0.5 * log_det + t * quad);
}

double mgf_pole(const GaussianQuadraticForm& form) {
    if (form.dim() == 0) return std::numeric_limits<double>::infinity();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(form.covariance, Eigen::EigenvaluesOnly);
    const double lmax = es.eigenvalues().maxCoeff();
    if (!(lmax > 0.0)) return std::numeric_limits<double>::infinity();
    return 1.0 / (2.0 * lmax);
}

double PairwiseMgf::operator()(double t) const {
    double value = mgf_noncentral_chisq(t, coherent);
    if (residual_order > 0.0 && residual_variance > 0.0) {
        const double base = 1.0 - t * residual_variance;
        if (!(base > 0.0)) fail(ErrorKind::domain, "t at or beyond the residual MGF pole");
        value *= std::pow(base, -residual_order);
    }
    return value;
}

}  // namespace risim::analysis
