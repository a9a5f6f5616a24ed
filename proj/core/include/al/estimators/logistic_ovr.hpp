#pragma once

#include "al/estimator.hpp"

namespace al {

struct LogisticParams {
    double learning_rate = 0.1;
    int epochs = 500;
    double l2 = 1e-4;
};

/// Value and gradient of the L2-regularized mean logistic loss of one binary
/// column. The bias is not regularized.
struct LogisticObjective {
    double loss = 0.0;
    Eigen::VectorXd grad_w;
    double grad_b = 0.0;
};

LogisticObjective logistic_objective(const FeatureMatrix& X, const Eigen::VectorXd& targets,
                                     const Eigen::VectorXd& w, double b, double l2);

/// One-vs-rest logistic regression trained by full-batch gradient descent.
///
/// Accepts either a LabelArray (multiclass; labels are one-hot expanded and
/// probabilities renormalized per row) or a MultilabelMatrix (independent
/// per-label sigmoids). Weights start at zero, so training is deterministic.
class LogisticOvr final : public Estimator {
  public:
    explicit LogisticOvr(LogisticParams params = {}) : params_(params) {}

    std::string name() const override { return "logistic_ovr"; }
    Capabilities capabilities() const override {
        return {.probabilistic = true, .decision_scores = true};
    }
    std::unique_ptr<Estimator> clone() const override { return std::make_unique<LogisticOvr>(*this); }

    void fit(const FeatureMatrix& X, const Targets& y) override;
    bool fitted() const override { return weights_.rows() > 0; }
    Targets predict(const FeatureMatrix& X) const override;
    LabelArray classes() const override { return classes_; }
    ProbabilityMatrix predict_proba(const FeatureMatrix& X) const override;
    DecisionMatrix decision_values(const FeatureMatrix& X) const override;

    bool multilabel() const { return multilabel_; }
    const Eigen::MatrixXd& weights() const { return weights_; }  // labels x features
    const Eigen::VectorXd& biases() const { return biases_; }

    /// Summed per-label objective after each epoch of the last fit
    /// (index 0 is the value at initialization).
    const std::vector<double>& loss_history() const { return loss_history_; }

  private:
    LogisticParams params_;
    bool multilabel_ = false;
    LabelArray classes_;
    Eigen::MatrixXd weights_;
    Eigen::VectorXd biases_;
    std::vector<double> loss_history_;
};

}  // namespace al
