#pragma once

#include "al/eer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace al::testing {

using Row = std::vector<double>;

/// Plain Gaussian naive Bayes written from the textbook density, used as an
/// oracle for the lookahead loop. Classes are the sorted distinct labels.
struct OracleNB {
    std::vector<int> classes;
    std::vector<double> prior;
    std::vector<Row> mean;
    std::vector<Row> var;

    OracleNB(const std::vector<Row>& X, const std::vector<int>& y) {
        classes = y;
        std::sort(classes.begin(), classes.end());
        classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
        const std::size_t d = X[0].size();
        for (int c : classes) {
            Row m(d, 0.0);
            Row v(d, 0.0);
            double n = 0;
            for (std::size_t i = 0; i < X.size(); ++i) {
                if (y[i] != c) continue;
                n += 1;
                for (std::size_t j = 0; j < d; ++j) m[j] += X[i][j];
            }
            for (auto& e : m) e /= n;
            for (std::size_t i = 0; i < X.size(); ++i) {
                if (y[i] != c) continue;
                for (std::size_t j = 0; j < d; ++j) v[j] += (X[i][j] - m[j]) * (X[i][j] - m[j]);
            }
            for (auto& e : v) e = std::max(e / n, 1e-9);
            prior.push_back(n / static_cast<double>(X.size()));
            mean.push_back(m);
            var.push_back(v);
        }
    }

    Row proba(const Row& x) const {
        Row p(classes.size());
        double total = 0.0;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            double dens = prior[c];
            for (std::size_t j = 0; j < x.size(); ++j) {
                const double z = x[j] - mean[c][j];
                dens *= std::exp(-z * z / (2 * var[c][j])) / std::sqrt(2 * std::numbers::pi * var[c][j]);
            }
            p[c] = dens;
            total += dens;
        }
        for (auto& e : p) e /= total;
        return p;
    }
};

inline std::vector<Row> to_rows(const FeatureMatrix& X) {
    std::vector<Row> out(static_cast<std::size_t>(X.rows()));
    for (Index i = 0; i < X.rows(); ++i)
        for (Index j = 0; j < X.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(X(i, j));
    return out;
}

inline double oracle_loss(const Row& p, EerLoss loss) {
    if (loss == EerLoss::binary) return 1.0 - *std::max_element(p.begin(), p.end());
    double h = 0.0;
    for (double v : p)
        if (v > 0) h -= v * std::log(v);
    return h;
}

/// Brute-force one-step lookahead with the oracle model.
inline std::vector<double> oracle_eer(const FeatureMatrix& Xt, const LabelArray& yt, const FeatureMatrix& pool,
                               EerLoss loss) {
    const auto train = to_rows(Xt);
    const auto rows = to_rows(pool);
    const OracleNB base(train, yt);
    std::vector<double> out;
    for (const auto& x : rows) {
        const Row p = base.proba(x);
        double expected = 0.0;
        for (std::size_t c = 0; c < base.classes.size(); ++c) {
            auto X2 = train;
            auto y2 = yt;
            X2.push_back(x);
            y2.push_back(base.classes[c]);
            const OracleNB model(X2, y2);
            double err = 0.0;
            for (const auto& z : rows) err += oracle_loss(model.proba(z), loss);
            expected += p[c] * err;
        }
        out.push_back(-expected);
    }
    return out;
}

}  // namespace al::testing
