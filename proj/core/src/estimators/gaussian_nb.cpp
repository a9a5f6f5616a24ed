#include "al/estimators/gaussian_nb.hpp"

#include "estimators/common.hpp"

#include <cmath>
#include <numbers>

namespace al {

void GaussianNB::fit(const FeatureMatrix& X, const Targets& y) {
    const auto& labels = require_labels(y, "gnb");
    require_paired(X, y);
    if (X.rows() == 0) throw DataError("gnb: empty training set");
    if (X.cols() == 0) throw DataError("gnb: zero features");
    require_finite(X, "gnb training data");

    LabelArray classes = distinct_sorted(labels);
    const auto k = static_cast<Index>(classes.size());
    Eigen::MatrixXd means = Eigen::MatrixXd::Zero(k, X.cols());
    Eigen::MatrixXd sq = Eigen::MatrixXd::Zero(k, X.cols());
    Eigen::VectorXd counts = Eigen::VectorXd::Zero(k);
    for (Index i = 0; i < X.rows(); ++i) {
        const Index c = class_position(classes, labels[static_cast<std::size_t>(i)]);
        means.row(c) += X.row(i);
        counts[c] += 1.0;
    }
    for (Index c = 0; c < k; ++c) means.row(c) /= counts[c];
    for (Index i = 0; i < X.rows(); ++i) {
        const Index c = class_position(classes, labels[static_cast<std::size_t>(i)]);
        sq.row(c) += (X.row(i) - means.row(c)).array().square().matrix();
    }
    Eigen::MatrixXd variances(k, X.cols());
    for (Index c = 0; c < k; ++c) {
        variances.row(c) = (sq.row(c) / counts[c]).array().max(kVarianceFloor).matrix();
    }

    classes_ = std::move(classes);
    means_ = std::move(means);
    variances_ = std::move(variances);
    log_priors_ = (counts / static_cast<double>(X.rows())).array().log().matrix();
}

Eigen::MatrixXd GaussianNB::joint_log_likelihood(const FeatureMatrix& X) const {
    require_fitted();
    if (X.cols() != means_.cols()) throw DataError("gnb: feature count mismatch");
    const Index k = means_.rows();
    Eigen::MatrixXd jll(X.rows(), k);
    for (Index c = 0; c < k; ++c) {
        const double norm =
            -0.5 * (2.0 * std::numbers::pi * variances_.row(c).array()).log().sum();
        for (Index i = 0; i < X.rows(); ++i) {
            const double quad =
                ((X.row(i) - means_.row(c)).array().square() / variances_.row(c).array()).sum();
            jll(i, c) = log_priors_[c] + norm - 0.5 * quad;
        }
    }
    return jll;
}

ProbabilityMatrix GaussianNB::predict_proba(const FeatureMatrix& X) const {
    return softmax_rows(joint_log_likelihood(X));
}

Targets GaussianNB::predict(const FeatureMatrix& X) const {
    return argmax_labels(predict_proba(X), classes_);
}

}  // namespace al
