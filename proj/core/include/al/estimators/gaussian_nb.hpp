#pragma once

#include "al/estimator.hpp"

namespace al {

/// Gaussian naive Bayes with per-class, per-feature variances.
class GaussianNB final : public Estimator {
  public:
    static constexpr double kVarianceFloor = 1e-9;

    std::string name() const override { return "gnb"; }
    Capabilities capabilities() const override { return {.probabilistic = true}; }
    std::unique_ptr<Estimator> clone() const override { return std::make_unique<GaussianNB>(*this); }

    void fit(const FeatureMatrix& X, const Targets& y) override;
    bool fitted() const override { return !classes_.empty(); }
    Targets predict(const FeatureMatrix& X) const override;
    LabelArray classes() const override { return classes_; }
    ProbabilityMatrix predict_proba(const FeatureMatrix& X) const override;

    /// Per-class log joint density, classes x columns.
    Eigen::MatrixXd joint_log_likelihood(const FeatureMatrix& X) const;

    const Eigen::MatrixXd& means() const { return means_; }
    const Eigen::MatrixXd& variances() const { return variances_; }
    const Eigen::VectorXd& log_priors() const { return log_priors_; }

  private:
    LabelArray classes_;
    Eigen::MatrixXd means_;      // classes x features
    Eigen::MatrixXd variances_;  // classes x features
    Eigen::VectorXd log_priors_;
};

}  // namespace al
