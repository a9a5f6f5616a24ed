#pragma once

#include "al/estimator.hpp"
#include "al/strategy.hpp"

#include <cstdint>
#include <memory>
#include <random>

namespace al {

/// An estimator, the data it has been taught, and the strategy used to pick
/// what to label next.
///
/// fit() replaces the training data; teach() appends to it. Either way the
/// estimator is refit from scratch on the accumulated set. Bootstrap refits
/// draw a with-replacement resample of the accumulated set from the
/// learner's own seeded generator.
class ActiveLearner {
  public:
    using Strategy = QueryStrategy<ActiveLearner>;

    ActiveLearner(std::unique_ptr<Estimator> estimator, Strategy strategy,
                  std::uint64_t seed = 0);

    ActiveLearner(const ActiveLearner& other);
    ActiveLearner& operator=(const ActiveLearner& other);
    ActiveLearner(ActiveLearner&&) noexcept = default;
    ActiveLearner& operator=(ActiveLearner&&) noexcept = default;
    ~ActiveLearner() = default;

    void fit(const FeatureMatrix& X, const Targets& y, bool bootstrap = false);
    void teach(const FeatureMatrix& X_new, const Targets& y_new, bool bootstrap = false);

    /// Does not modify the learner.
    QuerySelection query(const FeatureMatrix& pool, Index n = 1) const;

    /// Accuracy for classifiers, R^2 for regressors, per-entry (Hamming)
    /// accuracy for multilabel models.
    double score(const FeatureMatrix& X, const Targets& y) const;

    Targets predict(const FeatureMatrix& X) const;
    ProbabilityMatrix predict_proba(const FeatureMatrix& X) const;

    bool fitted() const { return estimator_->fitted(); }
    const Estimator& estimator() const { return *estimator_; }
    const Strategy& strategy() const { return strategy_; }
    const FeatureMatrix& X_train() const { return X_train_; }
    const Targets& y_train() const { return y_train_; }
    Index labeled_count() const { return X_train_.rows(); }
    std::uint64_t seed() const { return seed_; }

    /// Restarts the bootstrap generator from `seed`.
    void reseed(std::uint64_t seed);

    void require_fitted() const;

  private:
    void refit(bool bootstrap);

    std::unique_ptr<Estimator> estimator_;
    Strategy strategy_;
    FeatureMatrix X_train_;
    Targets y_train_;
    std::uint64_t seed_;
    std::mt19937_64 rng_;
};

/// Shared scoring rule, also used by committees.
double score_predictions(const Targets& predicted, const Targets& truth);

}  // namespace al
