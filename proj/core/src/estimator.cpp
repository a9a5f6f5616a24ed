#include "al/estimator.hpp"

namespace al {

ProbabilityMatrix Estimator::predict_proba(const FeatureMatrix&) const {
    throw ContractError(name() + " is not probabilistic");
}

DecisionMatrix Estimator::decision_values(const FeatureMatrix&) const {
    throw ContractError(name() + " does not expose decision scores");
}

RegressionPrediction Estimator::predict_with_std(const FeatureMatrix&) const {
    throw ContractError(name() + " is not a regression estimator");
}

void Estimator::require_fitted() const {
    if (!fitted()) throw ContractError(name() + " is not fitted");
}

}  // namespace al
