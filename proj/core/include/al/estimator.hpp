#pragma once

#include "al/types.hpp"

#include <memory>
#include <string>

namespace al {

struct Capabilities {
    bool probabilistic = false;
    bool decision_scores = false;
    bool regression = false;
};

/// Mean and standard deviation of a predictive distribution, per instance.
struct RegressionPrediction {
    RealVector mean;
    RealVector std;
};

/// The contract every model plugged into a learner satisfies.
///
/// fit() fully replaces previously fitted state. Capability-gated members
/// (predict_proba, decision_values, predict_with_std) throw ContractError
/// when the corresponding capability flag is not set.
///
/// For classifiers, predict_proba columns follow classes(), the sorted set of
/// labels seen at fit time. Multilabel models return one independent
/// probability per label column instead.
class Estimator {
  public:
    virtual ~Estimator() = default;

    virtual std::string name() const = 0;
    virtual Capabilities capabilities() const = 0;
    virtual std::unique_ptr<Estimator> clone() const = 0;

    virtual void fit(const FeatureMatrix& X, const Targets& y) = 0;
    virtual bool fitted() const = 0;

    /// LabelArray for classifiers, RealVector for regressors,
    /// MultilabelMatrix for multilabel models.
    virtual Targets predict(const FeatureMatrix& X) const = 0;

    virtual LabelArray classes() const { return {}; }

    virtual ProbabilityMatrix predict_proba(const FeatureMatrix& X) const;
    virtual DecisionMatrix decision_values(const FeatureMatrix& X) const;
    virtual RegressionPrediction predict_with_std(const FeatureMatrix& X) const;

  protected:
    void require_fitted() const;
};

}  // namespace al
