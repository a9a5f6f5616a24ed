#pragma once

#include "al/types.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>

namespace al::testing {

/// Random probability rows with k columns drawn from a flat Dirichlet.
inline ProbabilityMatrix random_proba(Index rows, Index k, std::mt19937_64& rng) {
    std::exponential_distribution<double> e(1.0);
    ProbabilityMatrix p(rows, k);
    for (Index i = 0; i < rows; ++i) {
        for (Index c = 0; c < k; ++c) p(i, c) = e(rng);
        p.row(i) /= p.row(i).sum();
    }
    return p;
}

inline FeatureMatrix random_matrix(Index rows, Index cols, std::mt19937_64& rng, double scale = 1.0) {
    std::normal_distribution<double> n(0.0, scale);
    FeatureMatrix X(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) X(i, j) = n(rng);
    return X;
}

/// Two well-separated 2-D clusters, labels alternate 0/1.
inline std::pair<FeatureMatrix, LabelArray> two_clusters(Index rows, std::uint64_t seed,
                                                         double offset = 2.0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n(0.0, 1.0);
    FeatureMatrix X(rows, 2);
    LabelArray y(static_cast<std::size_t>(rows));
    for (Index i = 0; i < rows; ++i) {
        const int label = static_cast<int>(i % 2);
        X(i, 0) = (label == 0 ? -offset : offset) + n(rng);
        X(i, 1) = n(rng);
        y[static_cast<std::size_t>(i)] = label;
    }
    return {X, y};
}

/// Ranking oracle: indices sorted by (-value, index).
inline IndexList brute_force_ranking(const Eigen::VectorXd& values) {
    IndexList idx(static_cast<std::size_t>(values.size()));
    std::iota(idx.begin(), idx.end(), Index{0});
    std::sort(idx.begin(), idx.end(), [&](Index a, Index b) {
        if (values[a] != values[b]) return values[a] > values[b];
        return a < b;
    });
    return idx;
}

inline FeatureMatrix rows_of(std::initializer_list<std::initializer_list<double>> rows) {
    FeatureMatrix X(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (const auto& r : rows) {
        Index j = 0;
        for (double v : r) X(i, j++) = v;
        ++i;
    }
    return X;
}

}  // namespace al::testing
