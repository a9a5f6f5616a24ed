#pragma once

#include "al/types.hpp"

#include <algorithm>
#include <string>

namespace al {

inline const LabelArray& require_labels(const Targets& y, const char* who) {
    const auto* labels = std::get_if<LabelArray>(&y);
    if (labels == nullptr) throw DataError(std::string(who) + ": expected class labels");
    return *labels;
}

inline LabelArray distinct_sorted(LabelArray labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return labels;
}

inline Index class_position(const LabelArray& classes, int label) {
    const auto it = std::lower_bound(classes.begin(), classes.end(), label);
    if (it == classes.end() || *it != label) return -1;
    return static_cast<Index>(it - classes.begin());
}

/// Row-wise softmax of log scores, stabilized by the row maximum.
inline ProbabilityMatrix softmax_rows(const Eigen::MatrixXd& log_scores) {
    ProbabilityMatrix p(log_scores.rows(), log_scores.cols());
    for (Index i = 0; i < log_scores.rows(); ++i) {
        const double m = log_scores.row(i).maxCoeff();
        p.row(i) = (log_scores.row(i).array() - m).exp().matrix();
        p.row(i) /= p.row(i).sum();
    }
    return p;
}

/// First maximal column per row, mapped through `classes`.
inline LabelArray argmax_labels(const ProbabilityMatrix& p, const LabelArray& classes) {
    LabelArray out(static_cast<std::size_t>(p.rows()));
    for (Index i = 0; i < p.rows(); ++i) {
        Index best = 0;
        p.row(i).maxCoeff(&best);
        out[static_cast<std::size_t>(i)] = classes[static_cast<std::size_t>(best)];
    }
    return out;
}

}  // namespace al
