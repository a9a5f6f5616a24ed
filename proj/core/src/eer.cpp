#include "al/eer.hpp"

#include "al/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace al {

double pool_error(const ProbabilityMatrix& proba, EerLoss loss) {
    if (loss == EerLoss::binary) return classifier_uncertainty(proba).sum();
    return classifier_entropy(proba).sum();
}

Utilities expected_error_reduction(const ActiveLearner& learner, const FeatureMatrix& pool,
                                   const EerConfig& config) {
    learner.require_fitted();
    if (!learner.estimator().capabilities().probabilistic) {
        throw ContractError("expected error reduction needs a probabilistic estimator");
    }
    if (pool.rows() == 0) throw ContractError("expected error reduction: empty pool");
    if (!(config.subsample_fraction > 0.0 && config.subsample_fraction <= 1.0)) {
        throw ContractError("subsample fraction must lie in (0, 1]");
    }
    const auto* labels = std::get_if<LabelArray>(&learner.y_train());
    if (labels == nullptr) throw ContractError("expected error reduction needs class labels");

    const Index p = pool.rows();
    std::vector<std::uint8_t> eligible(static_cast<std::size_t>(p), 1);
    if (config.subsample_fraction < 1.0) {
        const auto keep = std::max<Index>(
            1, static_cast<Index>(std::ceil(config.subsample_fraction * static_cast<double>(p))));
        IndexList order(static_cast<std::size_t>(p));
        std::iota(order.begin(), order.end(), Index{0});
        std::mt19937_64 rng(config.seed);
        std::shuffle(order.begin(), order.end(), rng);
        std::fill(eligible.begin(), eligible.end(), 0);
        for (Index i = 0; i < keep; ++i) eligible[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = 1;
    }

    const ProbabilityMatrix proba = learner.predict_proba(pool);
    const LabelArray classes = learner.estimator().classes();
    const FeatureMatrix& X_train = learner.X_train();

    // Workspace reused across candidates: training rows plus one slot.
    FeatureMatrix X_ext(X_train.rows() + 1, X_train.cols());
    X_ext.topRows(X_train.rows()) = X_train;
    LabelArray y_ext = *labels;
    y_ext.push_back(0);
    auto model = learner.estimator().clone();

    UtilityArray u = UtilityArray::Zero(p);
    for (Index i = 0; i < p; ++i) {
        if (eligible[static_cast<std::size_t>(i)] == 0) continue;
        X_ext.row(X_train.rows()) = pool.row(i);
        double expected = 0.0;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            y_ext.back() = classes[c];
            model->fit(X_ext, y_ext);
            expected += proba(i, static_cast<Index>(c)) * pool_error(model->predict_proba(pool), config.loss);
        }
        u[i] = -expected;
    }
    return {std::move(u), std::move(eligible)};
}

ActiveLearner::Strategy eer_strategy(EerConfig config) {
    return {[config](const ActiveLearner& learner, const FeatureMatrix& pool) {
        return expected_error_reduction(learner, pool, config);
    }};
}

}  // namespace al
