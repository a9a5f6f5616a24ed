#pragma once

#include "al/learner.hpp"

namespace al {

enum class UncertaintyMeasure { least_confident, margin, entropy };

/// Smallest probability fed to a logarithm.
inline constexpr double kProbabilityClamp = 1e-300;

/// 1 - max_c P(c|x).
UtilityArray classifier_uncertainty(const ProbabilityMatrix& proba);
/// 1 - (P_1st - P_2nd). Requires at least two classes.
UtilityArray classifier_margin(const ProbabilityMatrix& proba);
/// -sum_c P ln P with 0 ln 0 = 0.
UtilityArray classifier_entropy(const ProbabilityMatrix& proba);

UtilityArray uncertainty(const ProbabilityMatrix& proba, UncertaintyMeasure measure);

/// Entropy of one distribution, same conventions as classifier_entropy.
double entropy(const Eigen::Ref<const Eigen::RowVectorXd>& p);

/// Utility functions over a learner's predicted probabilities; these plug
/// into QueryStrategy directly.
UtilityArray least_confident_utility(const ActiveLearner& learner, const FeatureMatrix& pool);
UtilityArray margin_utility(const ActiveLearner& learner, const FeatureMatrix& pool);
UtilityArray entropy_utility(const ActiveLearner& learner, const FeatureMatrix& pool);

ActiveLearner::Strategy uncertainty_strategy(UncertaintyMeasure measure,
                                             Selector selector = argmax_selector());

/// selector(measure(predict_proba(pool)), n), independent of the learner's
/// own strategy.
QuerySelection uncertainty_sampling(const ActiveLearner& learner, const FeatureMatrix& pool,
                                    Index n, UncertaintyMeasure measure,
                                    const Selector& selector = argmax_selector());

}  // namespace al
