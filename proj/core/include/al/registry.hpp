#pragma once

#include "al/estimator.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace al {

/// A name that is not in a registry. The message lists the valid names.
class UnknownNameError : public ContractError {
  public:
    UnknownNameError(const std::string& kind, const std::string& name,
                     const std::vector<std::string>& valid);
    const std::vector<std::string>& valid() const { return valid_; }

  private:
    std::vector<std::string> valid_;
};

const std::vector<std::string>& strategy_names();
const std::vector<std::string>& estimator_names();

std::unique_ptr<Estimator> make_estimator(const std::string& name);

/// Uniform handle over single learners and committees, so harnesses can run
/// any registered strategy through one fit/query/teach loop.
class AnyLearner {
  public:
    virtual ~AnyLearner() = default;

    virtual void fit(const FeatureMatrix& X, const Targets& y) = 0;
    virtual void teach(const FeatureMatrix& X, const Targets& y) = 0;
    virtual IndexList query(const FeatureMatrix& pool, Index n) const = 0;
    virtual double score(const FeatureMatrix& X, const Targets& y) const = 0;
    /// Empty matrix when the underlying model is not probabilistic.
    virtual ProbabilityMatrix predict_proba(const FeatureMatrix& X) const = 0;
    virtual Targets predict(const FeatureMatrix& X) const = 0;
    /// Labels matching the predict_proba columns; empty for regressors.
    virtual LabelArray classes() const = 0;
    virtual Index labeled_count() const = 0;
    virtual bool fitted() const = 0;
};

struct LearnerSpec {
    std::string strategy = "least_confident";
    std::string estimator = "gnb";
    std::uint64_t seed = 0;
    /// Committee size for the qbc_* strategies.
    std::size_t committee_size = 3;
};

/// Throws UnknownNameError for unregistered strategy or estimator names.
///
/// qbc_* strategies build a committee of `committee_size` bootstrap-
/// diversified members. `random` draws uniformly without replacement from a
/// generator seeded by (seed, labeled count), so queries stay pure. A
/// regression estimator (gp) receives class labels as real targets.
std::unique_ptr<AnyLearner> make_learner(const LearnerSpec& spec);

}  // namespace al
