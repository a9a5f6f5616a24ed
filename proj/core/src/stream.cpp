#include "al/stream.hpp"

#include <cmath>

namespace al {

StreamDecision stream_decide(const ActiveLearner& learner,
                             const Eigen::Ref<const Eigen::RowVectorXd>& instance,
                             UncertaintyMeasure measure, double threshold) {
    learner.require_fitted();
    if (!std::isfinite(threshold)) throw ContractError("stream threshold must be finite");
    if (!learner.estimator().capabilities().probabilistic) {
        throw ContractError("stream sampling needs a probabilistic estimator");
    }
    const FeatureMatrix x = instance;
    const ProbabilityMatrix p = learner.predict_proba(x);
    double u = 0.0;
    if (measure == UncertaintyMeasure::margin && p.cols() < 2) {
        u = 0.0;
    } else {
        u = uncertainty(p, measure)[0];
    }
    return {u >= threshold ? StreamVerdict::query : StreamVerdict::skip, u};
}

StreamDecision qbd_decide(const Committee& committee,
                          const Eigen::Ref<const Eigen::RowVectorXd>& instance) {
    const FeatureMatrix x = instance;
    const Eigen::MatrixXi votes = committee.vote(x);
    const bool unanimous = (votes.array() == votes(0, 0)).all();
    if (unanimous) return {StreamVerdict::skip, 0.0};
    return {StreamVerdict::query, vote_entropy_of(votes)[0]};
}

}  // namespace al
