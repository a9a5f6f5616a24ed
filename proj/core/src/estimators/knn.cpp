#include "al/estimators/knn.hpp"

#include "estimators/common.hpp"

#include <algorithm>
#include <numeric>

namespace al {

KnnClassifier::KnnClassifier(Index k) : k_(k) {
    if (k < 1) throw ContractError("knn: k must be at least 1");
}

void KnnClassifier::fit(const FeatureMatrix& X, const Targets& y) {
    const auto& labels = require_labels(y, "knn");
    require_paired(X, y);
    if (X.rows() == 0) throw DataError("knn: empty training set");
    require_finite(X, "knn training data");
    if (k_ > X.rows()) {
        throw DataError("knn: k=" + std::to_string(k_) + " exceeds " + std::to_string(X.rows()) +
                        " training rows");
    }
    X_ = X;
    y_ = labels;
    classes_ = distinct_sorted(labels);
}

IndexList KnnClassifier::neighbours(const Eigen::RowVectorXd& x) const {
    std::vector<double> dist(static_cast<std::size_t>(X_.rows()));
    for (Index i = 0; i < X_.rows(); ++i) {
        dist[static_cast<std::size_t>(i)] = (X_.row(i) - x).squaredNorm();
    }
    IndexList order(dist.size());
    std::iota(order.begin(), order.end(), Index{0});
    std::partial_sort(order.begin(), order.begin() + k_, order.end(), [&](Index a, Index b) {
        const double da = dist[static_cast<std::size_t>(a)];
        const double db = dist[static_cast<std::size_t>(b)];
        return da < db || (da == db && a < b);
    });
    order.resize(static_cast<std::size_t>(k_));
    return order;
}

ProbabilityMatrix KnnClassifier::predict_proba(const FeatureMatrix& X) const {
    require_fitted();
    if (X.cols() != X_.cols()) throw DataError("knn: feature count mismatch");
    ProbabilityMatrix p = ProbabilityMatrix::Zero(X.rows(), static_cast<Index>(classes_.size()));
    for (Index i = 0; i < X.rows(); ++i) {
        for (Index j : neighbours(X.row(i))) {
            p(i, class_position(classes_, y_[static_cast<std::size_t>(j)])) += 1.0;
        }
    }
    p /= static_cast<double>(k_);
    return p;
}

Targets KnnClassifier::predict(const FeatureMatrix& X) const {
    return argmax_labels(predict_proba(X), classes_);
}

}  // namespace al
