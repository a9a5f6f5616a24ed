#pragma once

#include "al/estimator.hpp"

#include <cmath>
#include <memory>

namespace al::testing {

/// Classifier whose probabilities come from a lookup table: instance x gets
/// row round(x[0]) of the table. fit() only marks it fitted.
class TableClassifier final : public Estimator {
  public:
    TableClassifier(ProbabilityMatrix table, LabelArray classes)
        : table_(std::move(table)), classes_(std::move(classes)) {}

    std::string name() const override { return "table"; }
    Capabilities capabilities() const override { return {.probabilistic = true}; }
    std::unique_ptr<Estimator> clone() const override { return std::make_unique<TableClassifier>(*this); }
    void fit(const FeatureMatrix&, const Targets&) override { fitted_ = true; }
    bool fitted() const override { return fitted_; }
    LabelArray classes() const override { return classes_; }

    ProbabilityMatrix predict_proba(const FeatureMatrix& X) const override {
        require_fitted();
        ProbabilityMatrix p(X.rows(), table_.cols());
        for (Index i = 0; i < X.rows(); ++i) p.row(i) = table_.row(static_cast<Index>(std::lround(X(i, 0))));
        return p;
    }

    Targets predict(const FeatureMatrix& X) const override {
        const auto p = predict_proba(X);
        LabelArray out(static_cast<std::size_t>(X.rows()));
        for (Index i = 0; i < X.rows(); ++i) {
            Index best = 0;
            p.row(i).maxCoeff(&best);
            out[static_cast<std::size_t>(i)] = classes_[static_cast<std::size_t>(best)];
        }
        return out;
    }

  private:
    ProbabilityMatrix table_;
    LabelArray classes_;
    bool fitted_ = false;
};

/// Regressor that always predicts the same value.
class ConstantRegressor final : public Estimator {
  public:
    explicit ConstantRegressor(double value) : value_(value) {}

    std::string name() const override { return "constant"; }
    Capabilities capabilities() const override { return {.regression = true}; }
    std::unique_ptr<Estimator> clone() const override { return std::make_unique<ConstantRegressor>(*this); }
    void fit(const FeatureMatrix&, const Targets&) override { fitted_ = true; }
    bool fitted() const override { return fitted_; }
    Targets predict(const FeatureMatrix& X) const override {
        require_fitted();
        return RealVector(RealVector::Constant(X.rows(), value_));
    }
    RegressionPrediction predict_with_std(const FeatureMatrix& X) const override {
        return {std::get<RealVector>(predict(X)), RealVector::Zero(X.rows())};
    }

  private:
    double value_;
    bool fitted_ = false;
};

}  // namespace al::testing
