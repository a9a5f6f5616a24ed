#pragma once

#include "al/learner.hpp"

namespace al {

// Matrix forms take a DecisionMatrix d_j(x) (d_j >= 0 means label j is
// predicted relevant) and/or a per-label probability matrix P_j(x), one row
// per pool instance. Every result follows the "larger is queried first"
// convention.

/// -min_j |d_j|.
UtilityArray svm_binary_minimum(const DecisionMatrix& decision);

/// Hinge loss of the signed hard predictions against the reference pattern
/// +1 at the most probable label (lowest index on ties), -1 elsewhere.
UtilityArray max_loss(const DecisionMatrix& decision, const ProbabilityMatrix& label_proba);

/// Mean hinge loss over every one-hot +1/-1 reference pattern.
UtilityArray mean_max_loss(const DecisionMatrix& decision);

/// Confidence |2 P_j - 1|, negated minimum over labels.
UtilityArray min_confidence(const ProbabilityMatrix& label_proba);
/// Confidence |2 P_j - 1|, negated mean over labels.
UtilityArray avg_confidence(const ProbabilityMatrix& label_proba);

/// Score d_j * (2 [d_j >= 0] - 1), negated minimum over labels.
UtilityArray min_score(const DecisionMatrix& decision);
/// Score d_j * (2 [d_j >= 0] - 1), negated mean over labels.
UtilityArray avg_score(const DecisionMatrix& decision);

enum class MultilabelStrategy {
    svm_binary_minimum,
    max_loss,
    mean_max_loss,
    min_confidence,
    avg_confidence,
    min_score,
    avg_score,
};

/// Evaluates a strategy from precomputed matrices. Strategies that only
/// need one of the two ignore the other, which may be empty.
UtilityArray multilabel_utility(MultilabelStrategy strategy, const DecisionMatrix& decision,
                                const ProbabilityMatrix& label_proba);

/// Learner-facing form: pulls decision values and/or per-label probabilities
/// from the learner's estimator.
UtilityArray multilabel_utility(MultilabelStrategy strategy, const ActiveLearner& learner,
                                const FeatureMatrix& pool);

ActiveLearner::Strategy multilabel_strategy(MultilabelStrategy strategy,
                                            Selector selector = argmax_selector());

}  // namespace al
