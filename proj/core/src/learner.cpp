#include "al/learner.hpp"

#include <string>

namespace al {

ActiveLearner::ActiveLearner(std::unique_ptr<Estimator> estimator, Strategy strategy,
                             std::uint64_t seed)
    : estimator_(std::move(estimator)),
      strategy_(std::move(strategy)),
      y_train_(LabelArray{}),
      seed_(seed),
      rng_(seed) {
    if (!estimator_) throw ContractError("learner requires an estimator");
}

ActiveLearner::ActiveLearner(const ActiveLearner& other)
    : estimator_(other.estimator_->clone()),
      strategy_(other.strategy_),
      X_train_(other.X_train_),
      y_train_(other.y_train_),
      seed_(other.seed_),
      rng_(other.rng_) {}

ActiveLearner& ActiveLearner::operator=(const ActiveLearner& other) {
    if (this != &other) {
        ActiveLearner copy(other);
        *this = std::move(copy);
    }
    return *this;
}

void ActiveLearner::reseed(std::uint64_t seed) {
    seed_ = seed;
    rng_.seed(seed);
}

void ActiveLearner::require_fitted() const {
    if (!estimator_->fitted()) throw ContractError("learner is not fitted");
}

void ActiveLearner::refit(bool bootstrap) {
    if (!bootstrap) {
        estimator_->fit(X_train_, y_train_);
        return;
    }
    const Index n = X_train_.rows();
    std::uniform_int_distribution<Index> pick(0, n - 1);
    IndexList rows(static_cast<std::size_t>(n));
    for (auto& r : rows) r = pick(rng_);
    estimator_->fit(take_rows(X_train_, rows), take_targets(y_train_, rows));
}

void ActiveLearner::fit(const FeatureMatrix& X, const Targets& y, bool bootstrap) {
    require_paired(X, y);
    if (X.rows() == 0) throw DataError("cannot fit on an empty training set");
    require_finite(X, "training data");
    FeatureMatrix X_prev = std::move(X_train_);
    Targets y_prev = std::move(y_train_);
    X_train_ = X;
    y_train_ = y;
    try {
        refit(bootstrap);
    } catch (...) {
        X_train_ = std::move(X_prev);
        y_train_ = std::move(y_prev);
        throw;
    }
}

void ActiveLearner::teach(const FeatureMatrix& X_new, const Targets& y_new, bool bootstrap) {
    require_paired(X_new, y_new);
    if (X_new.rows() == 0) throw DataError("cannot teach an empty batch");
    require_finite(X_new, "taught data");
    if (X_train_.rows() == 0) {
        fit(X_new, y_new, bootstrap);
        return;
    }
    if (X_new.cols() != X_train_.cols()) {
        throw DataError("taught feature count " + std::to_string(X_new.cols()) +
                        " differs from training feature count " +
                        std::to_string(X_train_.cols()));
    }
    FeatureMatrix X_all = vstack(X_train_, X_new);
    Targets y_all = append_targets(y_train_, y_new);
    std::swap(X_train_, X_all);
    std::swap(y_train_, y_all);
    try {
        refit(bootstrap);
    } catch (...) {
        std::swap(X_train_, X_all);
        std::swap(y_train_, y_all);
        throw;
    }
}

QuerySelection ActiveLearner::query(const FeatureMatrix& pool, Index n) const {
    require_fitted();
    require_query_args(pool, n);
    if (pool.cols() != X_train_.cols()) throw DataError("pool feature count differs from training data");
    return make_selection(pool, strategy_.select(*this, pool, n));
}

Targets ActiveLearner::predict(const FeatureMatrix& X) const {
    require_fitted();
    return estimator_->predict(X);
}

ProbabilityMatrix ActiveLearner::predict_proba(const FeatureMatrix& X) const {
    require_fitted();
    return estimator_->predict_proba(X);
}

double ActiveLearner::score(const FeatureMatrix& X, const Targets& y) const {
    require_fitted();
    require_paired(X, y);
    if (X.rows() == 0) throw DataError("cannot score on an empty set");
    return score_predictions(estimator_->predict(X), y);
}

double score_predictions(const Targets& predicted, const Targets& truth) {
    if (predicted.index() != truth.index()) {
        throw DataError("prediction and target kinds differ");
    }
    if (const auto* p = std::get_if<LabelArray>(&predicted)) {
        const auto& t = std::get<LabelArray>(truth);
        std::size_t hits = 0;
        for (std::size_t i = 0; i < p->size(); ++i) hits += ((*p)[i] == t[i]) ? 1 : 0;
        return static_cast<double>(hits) / static_cast<double>(p->size());
    }
    if (const auto* p = std::get_if<RealVector>(&predicted)) {
        const auto& t = std::get<RealVector>(truth);
        const double ss_res = (t - *p).squaredNorm();
        const double ss_tot = (t.array() - t.mean()).square().sum();
        if (ss_tot == 0.0) return ss_res == 0.0 ? 1.0 : 0.0;
        return 1.0 - ss_res / ss_tot;
    }
    const auto& p = std::get<MultilabelMatrix>(predicted);
    const auto& t = std::get<MultilabelMatrix>(truth);
    return static_cast<double>((p.array() == t.array()).count()) / static_cast<double>(p.size());
}

}  // namespace al
