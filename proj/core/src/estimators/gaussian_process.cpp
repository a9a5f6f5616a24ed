#include "al/estimators/gaussian_process.hpp"

#include <cmath>

namespace al {

GaussianProcess::GaussianProcess(GpHyperparams params) : params_(params) {
    if (!(params_.length_scale > 0.0)) throw ContractError("gp: length scale must be positive");
    if (!(params_.signal_variance > 0.0)) throw ContractError("gp: signal variance must be positive");
    if (!(params_.noise_variance >= 0.0)) throw ContractError("gp: noise variance must be non-negative");
}

double GaussianProcess::kernel(const Eigen::RowVectorXd& a, const Eigen::RowVectorXd& b) const {
    const double l = params_.length_scale;
    return params_.signal_variance * std::exp(-(a - b).squaredNorm() / (2.0 * l * l));
}

void GaussianProcess::fit(const FeatureMatrix& X, const Targets& y) {
    const auto* targets = std::get_if<RealVector>(&y);
    if (targets == nullptr) throw DataError("gp: expected real-valued targets");
    require_paired(X, y);
    if (X.rows() == 0) throw DataError("gp: empty training set");
    require_finite(X, "gp training data");
    if (!targets->allFinite()) throw DataError("gp: targets contain non-finite values");

    const Index n = X.rows();
    Eigen::MatrixXd K(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j <= i; ++j) {
            K(i, j) = K(j, i) = kernel(X.row(i), X.row(j));
        }
    }
    K.diagonal().array() += params_.noise_variance;

    for (double jitter = kInitialJitter; jitter <= kMaxJitter * 1.0000001; jitter *= 10.0) {
        Eigen::MatrixXd A = K;
        A.diagonal().array() += jitter;
        Eigen::LLT<Eigen::MatrixXd> chol(A);
        if (chol.info() == Eigen::Success) {
            X_ = X;
            alpha_ = chol.solve(*targets);
            chol_ = std::move(chol);
            jitter_ = jitter;
            return;
        }
    }
    throw NumericalError("gp: kernel matrix not positive definite after jitter escalation");
}

RegressionPrediction GaussianProcess::predict_with_std(const FeatureMatrix& X) const {
    require_fitted();
    if (X.cols() != X_.cols()) throw DataError("gp: feature count mismatch");
    Eigen::MatrixXd Ks(X_.rows(), X.rows());
    for (Index j = 0; j < X.rows(); ++j) {
        for (Index i = 0; i < X_.rows(); ++i) Ks(i, j) = kernel(X_.row(i), X.row(j));
    }
    RegressionPrediction out;
    out.mean = Ks.transpose() * alpha_;
    const Eigen::MatrixXd V = chol_.matrixL().solve(Ks);
    out.std.resize(X.rows());
    for (Index j = 0; j < X.rows(); ++j) {
        const double var = params_.signal_variance - V.col(j).squaredNorm();
        out.std[j] = std::sqrt(std::max(var, 0.0));
    }
    return out;
}

Targets GaussianProcess::predict(const FeatureMatrix& X) const {
    return RealVector(predict_with_std(X).mean);
}

}  // namespace al
