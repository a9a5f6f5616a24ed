#pragma once

#include "al/learner.hpp"

#include <cstdint>
#include <vector>

namespace al {

/// A committee of classifiers queried by disagreement.
///
/// Members may have seen different label subsets (bootstrap can miss rare
/// classes), so votes and probabilities are aligned over the union of the
/// members' classes, with absent classes contributing probability zero.
/// Member m bootstraps from seed base_seed + m.
class Committee {
  public:
    using Strategy = QueryStrategy<Committee>;

    Committee(std::vector<ActiveLearner> members, Strategy strategy, std::uint64_t base_seed = 0);

    /// Fits every member on (X, y), each with its own resample when
    /// bootstrapping.
    void fit(const FeatureMatrix& X, const Targets& y, bool bootstrap = false);
    void teach(const FeatureMatrix& X_new, const Targets& y_new, bool bootstrap = false);
    QuerySelection query(const FeatureMatrix& pool, Index n = 1) const;

    /// Sorted union of member classes.
    LabelArray classes() const;

    /// pool rows x members matrix of predicted labels.
    Eigen::MatrixXi vote(const FeatureMatrix& pool) const;
    /// Member probabilities, each aligned to classes().
    std::vector<ProbabilityMatrix> member_proba(const FeatureMatrix& pool) const;
    /// Mean of the aligned member probabilities.
    ProbabilityMatrix predict_proba(const FeatureMatrix& pool) const;
    /// Consensus argmax when members are probabilistic, majority vote
    /// otherwise (ties to the smaller label).
    LabelArray predict(const FeatureMatrix& X) const;
    double score(const FeatureMatrix& X, const LabelArray& y) const;

    const std::vector<ActiveLearner>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    std::uint64_t base_seed() const { return base_seed_; }
    void require_fitted() const;

  private:
    std::vector<ActiveLearner> members_;
    Strategy strategy_;
    std::uint64_t base_seed_;
};

/// Committee of regressors whose prediction spread drives queries.
class CommitteeRegressor {
  public:
    using Strategy = QueryStrategy<CommitteeRegressor>;

    CommitteeRegressor(std::vector<ActiveLearner> members, Strategy strategy,
                       std::uint64_t base_seed = 0);

    void fit(const FeatureMatrix& X, const RealVector& y, bool bootstrap = false);
    void teach(const FeatureMatrix& X_new, const RealVector& y_new, bool bootstrap = false);
    QuerySelection query(const FeatureMatrix& pool, Index n = 1) const;

    /// pool rows x members matrix of member predictions.
    Eigen::MatrixXd member_predictions(const FeatureMatrix& pool) const;
    /// Mean and population standard deviation of member predictions.
    RegressionPrediction predict(const FeatureMatrix& pool) const;

    const std::vector<ActiveLearner>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

  private:
    std::vector<ActiveLearner> members_;
    Strategy strategy_;
};

Eigen::MatrixXi committee_vote(const Committee& committee, const FeatureMatrix& pool);
ProbabilityMatrix committee_predict_proba(const Committee& committee, const FeatureMatrix& pool);

/// Entropy of the members' hard-vote distribution.
UtilityArray vote_entropy(const Committee& committee, const FeatureMatrix& pool);
/// Entropy of the consensus probabilities.
UtilityArray consensus_entropy(const Committee& committee, const FeatureMatrix& pool);
/// max_m KL(P_m || P_consensus).
UtilityArray max_disagreement(const Committee& committee, const FeatureMatrix& pool);
/// Population standard deviation of member predictions.
UtilityArray std_sampling(const CommitteeRegressor& committee, const FeatureMatrix& pool);

/// Vote entropy of each row of a label matrix (rows x members).
UtilityArray vote_entropy_of(const Eigen::MatrixXi& votes);
/// KL(p || q) with the entropy module's clamping conventions.
double kl_divergence(const Eigen::Ref<const Eigen::RowVectorXd>& p,
                     const Eigen::Ref<const Eigen::RowVectorXd>& q);

}  // namespace al
