#pragma once

#include "al/learner.hpp"

#include <optional>

namespace al {

struct AcquisitionParams {
    double xi = 0.01;   ///< exploration offset for PI and EI
    double kappa = 2.0; ///< UCB bonus weight
};

enum class Acquisition { probability_of_improvement, expected_improvement, upper_confidence_bound };

/// Standard normal CDF via erfc.
double normal_cdf(double z);
double normal_pdf(double z);

double acquisition_pi(double mean, double std, double best, double xi);
double acquisition_ei(double mean, double std, double best, double xi);
double acquisition_ucb(double mean, double std, double kappa);

/// Maximizes a black-box function with a regression surrogate that reports
/// a predictive standard deviation (typically a GaussianProcess).
/// Minimization problems negate their targets before teaching.
class BayesianOptimizer {
  public:
    explicit BayesianOptimizer(std::unique_ptr<Estimator> surrogate);

    void teach(const FeatureMatrix& X_new, const RealVector& y_new);

    QuerySelection query(const FeatureMatrix& candidates, Index n = 1,
                         Acquisition acquisition = Acquisition::expected_improvement,
                         AcquisitionParams params = {}) const;

    /// Acquisition value of every candidate under the current surrogate.
    UtilityArray acquisition_values(const FeatureMatrix& candidates, Acquisition acquisition,
                                    AcquisitionParams params = {}) const;

    bool fitted() const { return learner_.fitted(); }
    const ActiveLearner& learner() const { return learner_; }
    /// Best observation so far; empty before the first teach.
    std::optional<double> y_max() const { return y_max_; }
    const Eigen::RowVectorXd& X_max() const { return X_max_; }

  private:
    ActiveLearner learner_;
    Eigen::RowVectorXd X_max_;
    std::optional<double> y_max_;
};

}  // namespace al
