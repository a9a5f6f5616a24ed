#include "al/registry.hpp"

#include "al/batch_density.hpp"
#include "al/committee.hpp"
#include "al/eer.hpp"
#include "al/estimators/gaussian_nb.hpp"
#include "al/estimators/gaussian_process.hpp"
#include "al/estimators/knn.hpp"
#include "al/estimators/logistic_ovr.hpp"
#include "al/multilabel.hpp"
#include "al/uncertainty.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

namespace al {

namespace {

std::string join(const std::vector<std::string>& names) {
    std::string out;
    for (const auto& n : names) {
        if (!out.empty()) out += ", ";
        out += n;
    }
    return out;
}

/// Regression estimators learn the numeric value of class labels.
Targets adapt_targets(const Estimator& est, const Targets& y) {
    if (!est.capabilities().regression) return y;
    if (const auto* labels = std::get_if<LabelArray>(&y)) {
        RealVector r(static_cast<Index>(labels->size()));
        for (std::size_t i = 0; i < labels->size(); ++i) r[static_cast<Index>(i)] = (*labels)[i];
        return r;
    }
    return y;
}

IndexList random_pick(const ActiveLearner& learner, const FeatureMatrix& pool, Index n) {
    IndexList order(static_cast<std::size_t>(pool.rows()));
    std::iota(order.begin(), order.end(), Index{0});
    std::seed_seq seq{static_cast<std::uint32_t>(learner.seed()),
                      static_cast<std::uint32_t>(learner.seed() >> 32),
                      static_cast<std::uint32_t>(learner.labeled_count())};
    std::mt19937_64 rng(seq);
    std::shuffle(order.begin(), order.end(), rng);
    order.resize(static_cast<std::size_t>(n));
    return order;
}

using SingleFactory = std::function<ActiveLearner::Strategy(std::uint64_t)>;
using CommitteeFactory = std::function<Committee::Strategy()>;

const std::map<std::string, SingleFactory>& single_strategies() {
    static const std::map<std::string, SingleFactory> table = {
        {"random", [](std::uint64_t) { return ActiveLearner::Strategy::joint(random_pick); }},
        {"least_confident",
         [](std::uint64_t) { return uncertainty_strategy(UncertaintyMeasure::least_confident); }},
        {"margin", [](std::uint64_t) { return uncertainty_strategy(UncertaintyMeasure::margin); }},
        {"entropy", [](std::uint64_t) { return uncertainty_strategy(UncertaintyMeasure::entropy); }},
        {"eer_binary",
         [](std::uint64_t seed) { return eer_strategy({EerLoss::binary, 1.0, seed}); }},
        {"eer_log", [](std::uint64_t seed) { return eer_strategy({EerLoss::log, 1.0, seed}); }},
        {"ranked_batch", [](std::uint64_t) { return ranked_batch_strategy(); }},
        {"density_lc",
         [](std::uint64_t) { return density_weighted_strategy(least_confident_utility, 1.0); }},
        {"svm_bin_min",
         [](std::uint64_t) { return multilabel_strategy(MultilabelStrategy::svm_binary_minimum); }},
        {"max_loss", [](std::uint64_t) { return multilabel_strategy(MultilabelStrategy::max_loss); }},
        {"mean_max_loss",
         [](std::uint64_t) { return multilabel_strategy(MultilabelStrategy::mean_max_loss); }},
        {"min_conf",
         [](std::uint64_t) { return multilabel_strategy(MultilabelStrategy::min_confidence); }},
        {"avg_conf",
         [](std::uint64_t) { return multilabel_strategy(MultilabelStrategy::avg_confidence); }},
        {"min_score", [](std::uint64_t) { return multilabel_strategy(MultilabelStrategy::min_score); }},
        {"avg_score", [](std::uint64_t) { return multilabel_strategy(MultilabelStrategy::avg_score); }},
    };
    return table;
}

const std::map<std::string, CommitteeFactory>& committee_strategies() {
    static const std::map<std::string, CommitteeFactory> table = {
        {"qbc_vote", [] { return Committee::Strategy(vote_entropy); }},
        {"qbc_consensus", [] { return Committee::Strategy(consensus_entropy); }},
        {"qbc_kl", [] { return Committee::Strategy(max_disagreement); }},
    };
    return table;
}

class SingleLearner final : public AnyLearner {
  public:
    explicit SingleLearner(ActiveLearner learner) : learner_(std::move(learner)) {}

    void fit(const FeatureMatrix& X, const Targets& y) override {
        learner_.fit(X, adapt_targets(learner_.estimator(), y));
    }
    void teach(const FeatureMatrix& X, const Targets& y) override {
        learner_.teach(X, adapt_targets(learner_.estimator(), y));
    }
    IndexList query(const FeatureMatrix& pool, Index n) const override {
        return learner_.query(pool, n).indices;
    }
    double score(const FeatureMatrix& X, const Targets& y) const override {
        return learner_.score(X, adapt_targets(learner_.estimator(), y));
    }
    ProbabilityMatrix predict_proba(const FeatureMatrix& X) const override {
        if (!learner_.estimator().capabilities().probabilistic) return {};
        return learner_.predict_proba(X);
    }
    Targets predict(const FeatureMatrix& X) const override { return learner_.predict(X); }
    LabelArray classes() const override { return learner_.estimator().classes(); }
    Index labeled_count() const override { return learner_.labeled_count(); }
    bool fitted() const override { return learner_.fitted(); }

  private:
    ActiveLearner learner_;
};

class CommitteeLearner final : public AnyLearner {
  public:
    explicit CommitteeLearner(Committee committee) : committee_(std::move(committee)) {}

    void fit(const FeatureMatrix& X, const Targets& y) override { committee_.fit(X, y, true); }
    void teach(const FeatureMatrix& X, const Targets& y) override { committee_.teach(X, y, true); }
    IndexList query(const FeatureMatrix& pool, Index n) const override {
        return committee_.query(pool, n).indices;
    }
    double score(const FeatureMatrix& X, const Targets& y) const override {
        const auto* labels = std::get_if<LabelArray>(&y);
        if (labels == nullptr) throw DataError("committees score class labels only");
        return committee_.score(X, *labels);
    }
    ProbabilityMatrix predict_proba(const FeatureMatrix& X) const override {
        return committee_.predict_proba(X);
    }
    Targets predict(const FeatureMatrix& X) const override { return committee_.predict(X); }
    LabelArray classes() const override { return committee_.classes(); }
    Index labeled_count() const override { return committee_.members().front().labeled_count(); }
    bool fitted() const override {
        return std::all_of(committee_.members().begin(), committee_.members().end(),
                           [](const auto& m) { return m.fitted(); });
    }

  private:
    Committee committee_;
};

}  // namespace

UnknownNameError::UnknownNameError(const std::string& kind, const std::string& name,
                                   const std::vector<std::string>& valid)
    : ContractError("unknown " + kind + " '" + name + "'; valid names: " + join(valid)),
      valid_(valid) {}

const std::vector<std::string>& strategy_names() {
    static const std::vector<std::string> names = {
        "random",       "least_confident", "margin",   "entropy",       "qbc_vote",
        "qbc_consensus", "qbc_kl",         "eer_binary", "eer_log",     "ranked_batch",
        "density_lc",   "svm_bin_min",     "max_loss", "mean_max_loss", "min_conf",
        "avg_conf",     "min_score",       "avg_score"};
    return names;
}

const std::vector<std::string>& estimator_names() {
    static const std::vector<std::string> names = {"gnb", "knn", "logistic_ovr", "gp"};
    return names;
}

std::unique_ptr<Estimator> make_estimator(const std::string& name) {
    if (name == "gnb") return std::make_unique<GaussianNB>();
    if (name == "knn") return std::make_unique<KnnClassifier>();
    if (name == "logistic_ovr") return std::make_unique<LogisticOvr>();
    if (name == "gp") return std::make_unique<GaussianProcess>();
    throw UnknownNameError("estimator", name, estimator_names());
}

std::unique_ptr<AnyLearner> make_learner(const LearnerSpec& spec) {
    if (const auto it = committee_strategies().find(spec.strategy); it != committee_strategies().end()) {
        std::vector<ActiveLearner> members;
        for (std::size_t m = 0; m < spec.committee_size; ++m) {
            members.emplace_back(make_estimator(spec.estimator),
                                 uncertainty_strategy(UncertaintyMeasure::least_confident));
        }
        return std::make_unique<CommitteeLearner>(
            Committee(std::move(members), it->second(), spec.seed));
    }
    const auto it = single_strategies().find(spec.strategy);
    if (it == single_strategies().end()) {
        throw UnknownNameError("strategy", spec.strategy, strategy_names());
    }
    return std::make_unique<SingleLearner>(
        ActiveLearner(make_estimator(spec.estimator), it->second(spec.seed), spec.seed));
}

}  // namespace al
