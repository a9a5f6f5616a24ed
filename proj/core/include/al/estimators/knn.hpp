#pragma once

#include "al/estimator.hpp"

namespace al {

/// k-nearest-neighbour classifier, Euclidean metric.
/// Distance ties resolve towards the lower training index.
class KnnClassifier final : public Estimator {
  public:
    explicit KnnClassifier(Index k = 3);

    std::string name() const override { return "knn"; }
    Capabilities capabilities() const override { return {.probabilistic = true}; }
    std::unique_ptr<Estimator> clone() const override { return std::make_unique<KnnClassifier>(*this); }

    void fit(const FeatureMatrix& X, const Targets& y) override;
    bool fitted() const override { return !classes_.empty(); }
    Targets predict(const FeatureMatrix& X) const override;
    LabelArray classes() const override { return classes_; }
    ProbabilityMatrix predict_proba(const FeatureMatrix& X) const override;

    Index k() const { return k_; }

    /// Training rows ordered by (distance to x, index), first k.
    IndexList neighbours(const Eigen::RowVectorXd& x) const;

  private:
    Index k_;
    FeatureMatrix X_;
    LabelArray y_;
    LabelArray classes_;
};

}  // namespace al
