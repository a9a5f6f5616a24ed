#pragma once

#include "al/committee.hpp"
#include "al/uncertainty.hpp"

namespace al {

enum class StreamVerdict { query, skip };

struct StreamDecision {
    StreamVerdict verdict = StreamVerdict::skip;
    double utility = 0.0;
};

/// Queries the instance iff its uncertainty under `measure` is >= threshold.
StreamDecision stream_decide(const ActiveLearner& learner,
                             const Eigen::Ref<const Eigen::RowVectorXd>& instance,
                             UncertaintyMeasure measure, double threshold);

/// Query by disagreement: queries iff the members' predicted labels are not
/// unanimous. The reported utility is the instance's vote entropy, which is
/// zero on every skip. Skipped instances are not self-labeled.
StreamDecision qbd_decide(const Committee& committee,
                          const Eigen::Ref<const Eigen::RowVectorXd>& instance);

}  // namespace al
