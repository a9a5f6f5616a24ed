#include "al/multilabel.hpp"

#include <algorithm>
#include <cmath>

namespace al {

namespace {

void require_matrix(const Eigen::MatrixXd& m, const char* what) {
    if (m.rows() == 0 || m.cols() == 0) throw ContractError(std::string(what) + " is empty");
    if (!m.allFinite()) throw DataError(std::string(what) + " contains non-finite values");
}

double signed_prediction(double d) { return d >= 0.0 ? 1.0 : -1.0; }

double hinge(double prediction, double reference) { return std::max(0.0, 1.0 - prediction * reference); }

Eigen::MatrixXd scores(const DecisionMatrix& decision) {
    return decision.unaryExpr([](double d) { return d * signed_prediction(d); });
}

Eigen::MatrixXd confidences(const ProbabilityMatrix& proba) {
    return (2.0 * proba.array() - 1.0).abs().matrix();
}

}  // namespace

UtilityArray svm_binary_minimum(const DecisionMatrix& decision) {
    require_matrix(decision, "decision matrix");
    return -decision.cwiseAbs().rowwise().minCoeff();
}

UtilityArray max_loss(const DecisionMatrix& decision, const ProbabilityMatrix& label_proba) {
    require_matrix(decision, "decision matrix");
    require_matrix(label_proba, "label probability matrix");
    if (decision.rows() != label_proba.rows() || decision.cols() != label_proba.cols()) {
        throw ContractError("decision and probability matrices differ in shape");
    }
    UtilityArray u(decision.rows());
    for (Index i = 0; i < decision.rows(); ++i) {
        Index most_certain = 0;
        label_proba.row(i).maxCoeff(&most_certain);
        double loss = 0.0;
        for (Index j = 0; j < decision.cols(); ++j) {
            const double reference = (j == most_certain) ? 1.0 : -1.0;
            loss += hinge(signed_prediction(decision(i, j)), reference);
        }
        u[i] = loss;
    }
    return u;
}

UtilityArray mean_max_loss(const DecisionMatrix& decision) {
    require_matrix(decision, "decision matrix");
    const Index labels = decision.cols();
    UtilityArray u(decision.rows());
    for (Index i = 0; i < decision.rows(); ++i) {
        double total = 0.0;
        for (Index c = 0; c < labels; ++c) {
            for (Index j = 0; j < labels; ++j) {
                total += hinge(signed_prediction(decision(i, j)), j == c ? 1.0 : -1.0);
            }
        }
        u[i] = total / static_cast<double>(labels);
    }
    return u;
}

UtilityArray min_confidence(const ProbabilityMatrix& label_proba) {
    require_matrix(label_proba, "label probability matrix");
    return -confidences(label_proba).rowwise().minCoeff();
}

UtilityArray avg_confidence(const ProbabilityMatrix& label_proba) {
    require_matrix(label_proba, "label probability matrix");
    return -confidences(label_proba).rowwise().mean();
}

UtilityArray min_score(const DecisionMatrix& decision) {
    require_matrix(decision, "decision matrix");
    return -scores(decision).rowwise().minCoeff();
}

UtilityArray avg_score(const DecisionMatrix& decision) {
    require_matrix(decision, "decision matrix");
    return -scores(decision).rowwise().mean();
}

UtilityArray multilabel_utility(MultilabelStrategy strategy, const DecisionMatrix& decision,
                                const ProbabilityMatrix& label_proba) {
    switch (strategy) {
        case MultilabelStrategy::svm_binary_minimum:
            return svm_binary_minimum(decision);
        case MultilabelStrategy::max_loss:
            return max_loss(decision, label_proba);
        case MultilabelStrategy::mean_max_loss:
            return mean_max_loss(decision);
        case MultilabelStrategy::min_confidence:
            return min_confidence(label_proba);
        case MultilabelStrategy::avg_confidence:
            return avg_confidence(label_proba);
        case MultilabelStrategy::min_score:
            return min_score(decision);
        case MultilabelStrategy::avg_score:
            return avg_score(decision);
    }
    throw ContractError("unknown multilabel strategy");
}

UtilityArray multilabel_utility(MultilabelStrategy strategy, const ActiveLearner& learner,
                                const FeatureMatrix& pool) {
    learner.require_fitted();
    const auto& est = learner.estimator();
    const bool needs_decision = strategy != MultilabelStrategy::min_confidence &&
                                strategy != MultilabelStrategy::avg_confidence;
    const bool needs_proba = strategy == MultilabelStrategy::max_loss ||
                             strategy == MultilabelStrategy::min_confidence ||
                             strategy == MultilabelStrategy::avg_confidence;
    if (needs_decision && !est.capabilities().decision_scores) {
        throw ContractError(est.name() + " does not expose decision scores");
    }
    if (needs_proba && !est.capabilities().probabilistic) {
        throw ContractError(est.name() + " is not probabilistic");
    }
    const DecisionMatrix d = needs_decision ? est.decision_values(pool) : DecisionMatrix{};
    const ProbabilityMatrix p = needs_proba ? est.predict_proba(pool) : ProbabilityMatrix{};
    return multilabel_utility(strategy, d, p);
}

ActiveLearner::Strategy multilabel_strategy(MultilabelStrategy strategy, Selector selector) {
    return {[strategy](const ActiveLearner& learner, const FeatureMatrix& pool) {
                return multilabel_utility(strategy, learner, pool);
            },
            std::move(selector)};
}

}  // namespace al
