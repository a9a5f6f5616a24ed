#pragma once

#include "al/learner.hpp"

#include <cstdint>

namespace al {

enum class EerLoss { binary, log };

struct EerConfig {
    EerLoss loss = EerLoss::binary;
    /// Fraction of pool rows evaluated as candidates, in (0, 1].
    double subsample_fraction = 1.0;
    std::uint64_t seed = 0;
};

/// One-step lookahead: for each candidate x_i and each class c the estimator
/// is refit on train + (x_i, c) and its error over the whole pool is
/// weighted by P(c | x_i). Utility is the negated expected error.
///
/// Candidates outside the seeded subsample are marked ineligible in the
/// returned mask; their values are left at zero. The learner is not
/// modified: refits happen on clones.
Utilities expected_error_reduction(const ActiveLearner& learner, const FeatureMatrix& pool,
                                   const EerConfig& config = {});

/// Pool error of a probability matrix under the given loss:
/// sum_j (1 - max_c P) for binary, sum_j H(P_j) for log.
double pool_error(const ProbabilityMatrix& proba, EerLoss loss);

ActiveLearner::Strategy eer_strategy(EerConfig config = {});

}  // namespace al
