#include "al/uncertainty.hpp"

#include <algorithm>
#include <cmath>

namespace al {

namespace {

void require_nonempty(const ProbabilityMatrix& p) {
    if (p.rows() == 0 || p.cols() == 0) throw ContractError("probability matrix is empty");
}

const ProbabilityMatrix& require_probabilistic(const ActiveLearner& learner,
                                               ProbabilityMatrix& storage,
                                               const FeatureMatrix& pool) {
    if (!learner.estimator().capabilities().probabilistic) {
        throw ContractError("uncertainty sampling needs a probabilistic estimator, got " +
                            learner.estimator().name());
    }
    storage = learner.predict_proba(pool);
    return storage;
}

}  // namespace

double entropy(const Eigen::Ref<const Eigen::RowVectorXd>& p) {
    double h = 0.0;
    for (Index c = 0; c < p.size(); ++c) {
        if (p[c] > 0.0) h -= p[c] * std::log(std::clamp(p[c], kProbabilityClamp, 1.0));
    }
    return h;
}

UtilityArray classifier_uncertainty(const ProbabilityMatrix& proba) {
    require_nonempty(proba);
    return (1.0 - proba.rowwise().maxCoeff().array()).matrix();
}

UtilityArray classifier_margin(const ProbabilityMatrix& proba) {
    require_nonempty(proba);
    if (proba.cols() < 2) throw ContractError("margin needs at least two classes");
    UtilityArray u(proba.rows());
    for (Index i = 0; i < proba.rows(); ++i) {
        double first = -1.0;
        double second = -1.0;
        for (Index c = 0; c < proba.cols(); ++c) {
            const double v = proba(i, c);
            if (v > first) {
                second = first;
                first = v;
            } else if (v > second) {
                second = v;
            }
        }
        u[i] = 1.0 - (first - second);
    }
    return u;
}

UtilityArray classifier_entropy(const ProbabilityMatrix& proba) {
    require_nonempty(proba);
    UtilityArray u(proba.rows());
    for (Index i = 0; i < proba.rows(); ++i) u[i] = entropy(proba.row(i));
    return u;
}

UtilityArray uncertainty(const ProbabilityMatrix& proba, UncertaintyMeasure measure) {
    switch (measure) {
        case UncertaintyMeasure::least_confident:
            return classifier_uncertainty(proba);
        case UncertaintyMeasure::margin:
            return classifier_margin(proba);
        case UncertaintyMeasure::entropy:
            return classifier_entropy(proba);
    }
    throw ContractError("unknown uncertainty measure");
}

UtilityArray least_confident_utility(const ActiveLearner& learner, const FeatureMatrix& pool) {
    ProbabilityMatrix p;
    return classifier_uncertainty(require_probabilistic(learner, p, pool));
}

UtilityArray margin_utility(const ActiveLearner& learner, const FeatureMatrix& pool) {
    ProbabilityMatrix p;
    const auto& proba = require_probabilistic(learner, p, pool);
    // a single observed class gives every instance zero margin uncertainty
    if (proba.cols() < 2) return UtilityArray::Zero(proba.rows());
    return classifier_margin(proba);
}

UtilityArray entropy_utility(const ActiveLearner& learner, const FeatureMatrix& pool) {
    ProbabilityMatrix p;
    return classifier_entropy(require_probabilistic(learner, p, pool));
}

ActiveLearner::Strategy uncertainty_strategy(UncertaintyMeasure measure, Selector selector) {
    switch (measure) {
        case UncertaintyMeasure::least_confident:
            return {least_confident_utility, std::move(selector)};
        case UncertaintyMeasure::margin:
            return {margin_utility, std::move(selector)};
        case UncertaintyMeasure::entropy:
            return {entropy_utility, std::move(selector)};
    }
    throw ContractError("unknown uncertainty measure");
}

QuerySelection uncertainty_sampling(const ActiveLearner& learner, const FeatureMatrix& pool,
                                    Index n, UncertaintyMeasure measure,
                                    const Selector& selector) {
    learner.require_fitted();
    require_query_args(pool, n);
    ProbabilityMatrix p;
    const UtilityArray u = uncertainty(require_probabilistic(learner, p, pool), measure);
    return make_selection(pool, selector(u, n, {}));
}

}  // namespace al
