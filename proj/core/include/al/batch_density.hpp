#pragma once

#include "al/learner.hpp"

namespace al {

enum class SimilarityKind { euclidean_inverse, cosine };

/// euclidean_inverse: 1 / (1 + |a - b|), in (0, 1].
/// cosine: a.b / (|a||b|), 0 if either vector is zero.
double similarity(const Eigen::Ref<const Eigen::RowVectorXd>& a,
                  const Eigen::Ref<const Eigen::RowVectorXd>& b, SimilarityKind kind);

/// D_i = mean_j sim(x_i, x_j), including j == i.
Eigen::VectorXd information_density(const FeatureMatrix& pool,
                                    SimilarityKind kind = SimilarityKind::euclidean_inverse);

/// base_i * D_i^beta. With beta == 0 the base utilities are returned
/// unchanged.
UtilityArray density_weighted_utility(const UtilityArray& base, const Eigen::VectorXd& density,
                                      double beta);

/// Least-confident uncertainty weighted by information density over the pool.
ActiveLearner::Strategy density_weighted_strategy(ActiveLearner::Strategy::UtilityFn base,
                                                  double beta = 1.0,
                                                  SimilarityKind kind = SimilarityKind::euclidean_inverse);

/// Per-step trace of a ranked batch selection, for inspection and tests.
struct RankedBatchStep {
    Index picked = 0;
    double alpha = 0.0;
    Eigen::VectorXd scores;  // over all pool rows; already-picked rows hold NaN
};

/// Greedy ranked batch-mode selection.
///
/// At each step, with u unlabeled rows remaining and l rows in the labeled
/// set (labeled + rows picked so far), alpha = u / (u + l) and each remaining
/// candidate scores alpha * (1 - Phi_i) + (1 - alpha) * U_i, where Phi_i is
/// the largest similarity to the labeled set (0 when it is empty) and U_i the
/// least-confident uncertainty. The best candidate (lowest index on ties)
/// joins the labeled set. With an empty labeled set alpha is 1 and every
/// candidate would tie, so that step ranks by U_i alone.
QuerySelection ranked_batch(const ActiveLearner& learner, const FeatureMatrix& pool,
                            const FeatureMatrix& labeled, Index n,
                            SimilarityKind kind = SimilarityKind::euclidean_inverse,
                            std::vector<RankedBatchStep>* trace = nullptr);

/// Same selection given precomputed uncertainties.
IndexList ranked_batch_indices(const UtilityArray& uncertainty, const FeatureMatrix& pool,
                               const FeatureMatrix& labeled, Index n, SimilarityKind kind,
                               std::vector<RankedBatchStep>* trace = nullptr);

/// Ranked batch over the learner's own training set.
ActiveLearner::Strategy ranked_batch_strategy(SimilarityKind kind = SimilarityKind::euclidean_inverse);

}  // namespace al
