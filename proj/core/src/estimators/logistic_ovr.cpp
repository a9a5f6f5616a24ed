#include "al/estimators/logistic_ovr.hpp"

#include "estimators/common.hpp"

#include <cmath>

namespace al {

namespace {

double log1p_exp(double z) {
    return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

double sigmoid(double z) {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

}  // namespace

LogisticObjective logistic_objective(const FeatureMatrix& X, const Eigen::VectorXd& targets,
                                     const Eigen::VectorXd& w, double b, double l2) {
    const double n = static_cast<double>(X.rows());
    const Eigen::VectorXd z = (X * w).array() + b;
    Eigen::VectorXd residual(z.size());
    double loss = 0.0;
    for (Index i = 0; i < z.size(); ++i) {
        loss += log1p_exp(z[i]) - targets[i] * z[i];
        residual[i] = sigmoid(z[i]) - targets[i];
    }
    LogisticObjective out;
    out.loss = loss / n + 0.5 * l2 * w.squaredNorm();
    out.grad_w = X.transpose() * residual / n + l2 * w;
    out.grad_b = residual.sum() / n;
    return out;
}

void LogisticOvr::fit(const FeatureMatrix& X, const Targets& y) {
    require_paired(X, y);
    if (X.rows() == 0) throw DataError("logistic_ovr: empty training set");
    require_finite(X, "logistic_ovr training data");

    Eigen::MatrixXd columns;  // instances x binary problems
    LabelArray classes;
    bool multilabel = false;
    if (const auto* labels = std::get_if<LabelArray>(&y)) {
        classes = distinct_sorted(*labels);
        columns = Eigen::MatrixXd::Zero(X.rows(), static_cast<Index>(classes.size()));
        for (Index i = 0; i < X.rows(); ++i) {
            columns(i, class_position(classes, (*labels)[static_cast<std::size_t>(i)])) = 1.0;
        }
    } else if (const auto* m = std::get_if<MultilabelMatrix>(&y)) {
        if ((m->array() != 0 && m->array() != 1).any()) {
            throw DataError("logistic_ovr: multilabel entries must be 0 or 1");
        }
        columns = m->cast<double>();
        multilabel = true;
    } else {
        throw DataError("logistic_ovr: regression targets are not supported");
    }

    for (Index j = 0; j < columns.cols(); ++j) {
        const double positives = columns.col(j).sum();
        if (positives == 0.0 || positives == static_cast<double>(X.rows())) {
            throw DataError("logistic_ovr: label column " + std::to_string(j) +
                            " needs at least one positive and one negative example");
        }
    }

    const Index labels = columns.cols();
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(labels, X.cols());
    Eigen::VectorXd B = Eigen::VectorXd::Zero(labels);
    std::vector<double> history;
    history.reserve(static_cast<std::size_t>(params_.epochs) + 1);

    for (int epoch = 0; epoch <= params_.epochs; ++epoch) {
        double total = 0.0;
        for (Index j = 0; j < labels; ++j) {
            const Eigen::VectorXd w = W.row(j).transpose();
            const auto obj = logistic_objective(X, columns.col(j), w, B[j], params_.l2);
            total += obj.loss;
            if (epoch < params_.epochs) {
                W.row(j) -= params_.learning_rate * obj.grad_w.transpose();
                B[j] -= params_.learning_rate * obj.grad_b;
            }
        }
        history.push_back(total);
    }
    if (!W.allFinite() || !B.allFinite() || !std::isfinite(history.back())) {
        throw NumericalError("logistic_ovr: training diverged");
    }

    multilabel_ = multilabel;
    classes_ = std::move(classes);
    weights_ = std::move(W);
    biases_ = std::move(B);
    loss_history_ = std::move(history);
}

DecisionMatrix LogisticOvr::decision_values(const FeatureMatrix& X) const {
    require_fitted();
    if (X.cols() != weights_.cols()) throw DataError("logistic_ovr: feature count mismatch");
    DecisionMatrix d = X * weights_.transpose();
    d.rowwise() += biases_.transpose();
    return d;
}

ProbabilityMatrix LogisticOvr::predict_proba(const FeatureMatrix& X) const {
    ProbabilityMatrix p = decision_values(X).unaryExpr([](double z) { return sigmoid(z); });
    if (!multilabel_) {
        for (Index i = 0; i < p.rows(); ++i) p.row(i) /= p.row(i).sum();
    }
    return p;
}

Targets LogisticOvr::predict(const FeatureMatrix& X) const {
    if (multilabel_) {
        const DecisionMatrix d = decision_values(X);
        return MultilabelMatrix((d.array() >= 0.0).cast<int>());
    }
    return argmax_labels(predict_proba(X), classes_);
}

}  // namespace al
