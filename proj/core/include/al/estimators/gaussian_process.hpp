#pragma once

#include "al/estimator.hpp"

#include <Eigen/Cholesky>

namespace al {

struct GpHyperparams {
    double length_scale = 1.0;
    double signal_variance = 1.0;
    double noise_variance = 0.0;
};

/// Zero-mean Gaussian-process regressor with a fixed RBF kernel
/// k(a, b) = sf2 * exp(-|a - b|^2 / (2 l^2)).
///
/// The diagonal of K + noise*I receives a jitter that starts at 1e-10 and
/// grows tenfold up to 1e-4 until the Cholesky factorization succeeds.
class GaussianProcess final : public Estimator {
  public:
    static constexpr double kInitialJitter = 1e-10;
    static constexpr double kMaxJitter = 1e-4;

    explicit GaussianProcess(GpHyperparams params = {});

    std::string name() const override { return "gp"; }
    Capabilities capabilities() const override { return {.regression = true}; }
    std::unique_ptr<Estimator> clone() const override { return std::make_unique<GaussianProcess>(*this); }

    void fit(const FeatureMatrix& X, const Targets& y) override;
    bool fitted() const override { return X_.rows() > 0; }
    Targets predict(const FeatureMatrix& X) const override;
    RegressionPrediction predict_with_std(const FeatureMatrix& X) const override;

    double kernel(const Eigen::RowVectorXd& a, const Eigen::RowVectorXd& b) const;
    const GpHyperparams& hyperparams() const { return params_; }
    /// Jitter that the last successful factorization needed.
    double jitter() const { return jitter_; }

  private:
    GpHyperparams params_;
    FeatureMatrix X_;
    Eigen::LLT<Eigen::MatrixXd> chol_;
    Eigen::VectorXd alpha_;
    double jitter_ = 0.0;
};

}  // namespace al
