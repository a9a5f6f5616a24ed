#include "al/estimators/gaussian_nb.hpp"
#include "al/estimators/knn.hpp"
#include "al/learner.hpp"
#include "al/uncertainty.hpp"
#include "support/fixtures.hpp"

#include <doctest.h>

#include <set>

using namespace al;
using al::testing::rows_of;

namespace {

/// Predicts the training mean; used to pin R^2 at zero.
class MeanRegressor final : public Estimator {
  public:
    std::string name() const override { return "mean"; }
    Capabilities capabilities() const override { return {.regression = true}; }
    std::unique_ptr<Estimator> clone() const override { return std::make_unique<MeanRegressor>(*this); }
    void fit(const FeatureMatrix&, const Targets& y) override { mean_ = std::get<RealVector>(y).mean(); fitted_ = true; }
    bool fitted() const override { return fitted_; }
    Targets predict(const FeatureMatrix& X) const override { return RealVector(RealVector::Constant(X.rows(), mean_)); }

  private:
    double mean_ = 0.0;
    bool fitted_ = false;
};

ActiveLearner::Strategy fixed_utility(UtilityArray u) {
    return {[u](const ActiveLearner&, const FeatureMatrix&) -> Utilities { return u; }};
}

ActiveLearner knn1_learner() {
    return {std::make_unique<KnnClassifier>(1), uncertainty_strategy(UncertaintyMeasure::least_confident)};
}

ActiveLearner gnb_learner(std::uint64_t seed = 0) {
    return {std::make_unique<GaussianNB>(), uncertainty_strategy(UncertaintyMeasure::least_confident), seed};
}

}  // namespace

TEST_CASE("fit then predict returns a known label") {
    auto [X, y] = al::testing::two_clusters(10, 1);
    auto learner = gnb_learner();
    learner.fit(X, y);
    const auto pred = std::get<LabelArray>(learner.predict(X.topRows(1)));
    CHECK((pred[0] == 0 || pred[0] == 1));
    CHECK(learner.labeled_count() == 10);
}

TEST_CASE("fit replaces earlier training data") {
    auto learner = knn1_learner();
    learner.fit(rows_of({{0, 0}, {5, 5}}), LabelArray{0, 1});
    learner.fit(rows_of({{0, 0.1}, {5, 5.1}}), LabelArray{1, 0});
    CHECK(learner.labeled_count() == 2);
    // (0,0) is now nearest to the second set's (0,0.1), labeled 1.
    CHECK(std::get<LabelArray>(learner.predict(rows_of({{0, 0}})))[0] == 1);
}

TEST_CASE("fit rejects malformed input") {
    auto learner = gnb_learner();
    auto [X, y] = al::testing::two_clusters(10, 2);
    y.pop_back();
    CHECK_THROWS_AS(learner.fit(X, y), DataError);
    CHECK_THROWS_AS(learner.fit(FeatureMatrix(0, 2), LabelArray{}), DataError);
    FeatureMatrix bad = X;
    bad(3, 1) = std::numeric_limits<double>::quiet_NaN();
    y.push_back(0);
    CHECK_THROWS_AS(learner.fit(bad, y), DataError);
    CHECK_FALSE(learner.fitted());
}

TEST_CASE("teach appends and refits") {
    auto [X, y] = al::testing::two_clusters(11, 3);
    auto learner = gnb_learner();
    learner.fit(X.topRows(10), LabelArray(y.begin(), y.begin() + 10));
    learner.teach(X.bottomRows(1), LabelArray{y.back()});
    CHECK(learner.labeled_count() == 11);
    CHECK(learner.X_train().bottomRows(1) == X.bottomRows(1));

    SUBCASE("feature mismatch and empty batches are rejected") {
        CHECK_THROWS_AS(learner.teach(FeatureMatrix::Zero(1, 3), LabelArray{0}), DataError);
        CHECK_THROWS_AS(learner.teach(FeatureMatrix(0, 2), LabelArray{}), DataError);
        CHECK(learner.labeled_count() == 11);
    }
}

TEST_CASE("teach without bootstrap is deterministic") {
    auto [X, y] = al::testing::two_clusters(30, 4);
    auto a = gnb_learner(1);
    auto b = gnb_learner(99);
    for (auto* l : {&a, &b}) {
        l->fit(X.topRows(10), LabelArray(y.begin(), y.begin() + 10));
        l->teach(X.bottomRows(20), LabelArray(y.begin() + 10, y.end()));
    }
    CHECK(a.predict_proba(X) == b.predict_proba(X));
}

TEST_CASE("bootstrap teach is reproducible for a fixed seed") {
    auto [X, y] = al::testing::two_clusters(40, 5);
    auto run = [&] {
        auto l = gnb_learner(42);
        l.fit(X.topRows(20), LabelArray(y.begin(), y.begin() + 20));
        l.teach(X.bottomRows(20), LabelArray(y.begin() + 20, y.end()), true);
        return l.predict_proba(X);
    };
    const auto first = run();
    const auto second = run();
    CHECK(first == second);

    auto plain = gnb_learner(42);
    plain.fit(X, y);
    CHECK(first != plain.predict_proba(X));
}

TEST_CASE("query selects by utility") {
    auto [X, y] = al::testing::two_clusters(10, 6);

    SUBCASE("single-row pool") {
        auto learner = gnb_learner();
        learner.fit(X, y);
        const auto sel = learner.query(X.topRows(1), 1);
        CHECK(sel.indices == IndexList{0});
        CHECK(sel.instances == X.topRows(1));
    }
    SUBCASE("descending utility order") {
        ActiveLearner learner(std::make_unique<GaussianNB>(), fixed_utility(Eigen::Vector3d(0.1, 0.4, 0.2)));
        learner.fit(X, y);
        const FeatureMatrix pool = X.topRows(3);
        const auto sel = learner.query(pool, 2);
        CHECK(sel.indices == IndexList{1, 2});
        CHECK(sel.instances.row(0) == pool.row(1));
        CHECK(sel.instances.row(1) == pool.row(2));
    }
    SUBCASE("precondition failures") {
        auto learner = gnb_learner();
        CHECK_THROWS_AS(learner.query(X, 1), ContractError);
        learner.fit(X, y);
        CHECK_THROWS_AS(learner.query(X.topRows(3), 4), ContractError);
        CHECK_THROWS_AS(learner.query(X.topRows(3), 0), ContractError);
        CHECK_THROWS_AS(learner.query(FeatureMatrix(0, 2), 1), ContractError);
    }
}

TEST_CASE("query leaves learner and pool untouched") {
    auto [X, y] = al::testing::two_clusters(30, 7);
    auto learner = gnb_learner();
    learner.fit(X.topRows(10), LabelArray(y.begin(), y.begin() + 10));
    const FeatureMatrix pool = X.bottomRows(20);
    const FeatureMatrix pool_before = pool;
    const FeatureMatrix train_before = learner.X_train();
    const auto first = learner.query(pool, 5);
    const auto second = learner.query(pool, 5);
    CHECK(first.indices == second.indices);
    CHECK(pool == pool_before);
    CHECK(learner.X_train() == train_before);
    CHECK(std::get<LabelArray>(learner.y_train()).size() == 10);
}

TEST_CASE("score") {
    auto learner = knn1_learner();
    const auto X = rows_of({{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    learner.fit(X, LabelArray{0, 1, 0, 1});
    CHECK(learner.score(X, LabelArray{0, 1, 0, 1}) == 1.0);
    CHECK(learner.score(X, LabelArray{0, 1, 1, 0}) == 0.5);
    CHECK_THROWS_AS(learner.score(FeatureMatrix(0, 2), LabelArray{}), DataError);
    CHECK_THROWS_AS(knn1_learner().score(X, LabelArray{0, 1, 0, 1}), ContractError);

    ActiveLearner reg(std::make_unique<MeanRegressor>(), fixed_utility(UtilityArray()));
    const RealVector targets = Eigen::Vector4d(1, 2, 3, 6);
    reg.fit(X, targets);
    CHECK(reg.score(X, targets) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("select_argmax") {
    CHECK(select_argmax(Eigen::Vector3d(0.2, 0.9, 0.9), 2) == IndexList{1, 2});
    CHECK(select_argmax(Eigen::VectorXd::Constant(1, 5.0), 1) == IndexList{0});
    CHECK(select_argmax(Eigen::Vector3d(1, 3, 2), 3) == IndexList{1, 2, 0});
    CHECK_THROWS_AS(select_argmax(Eigen::Vector3d(1, 3, 2), 4), ContractError);
    CHECK_THROWS_AS(select_argmax(Eigen::Vector3d(1, std::nan(""), 2), 1), ContractError);

    const std::vector<std::uint8_t> mask{1, 0, 1};
    CHECK(select_argmax(Eigen::Vector3d(1, 3, 2), 2, mask) == IndexList{2, 0});
    CHECK_THROWS_AS(select_argmax(Eigen::Vector3d(1, 3, 2), 3, mask), ContractError);
}

TEST_CASE("select_argmax agrees with a brute-force sort") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> len(1, 40);
    std::uniform_int_distribution<int> coarse(0, 5);  // forces ties
    for (int trial = 0; trial < 500; ++trial) {
        const Index p = len(rng);
        Eigen::VectorXd u(p);
        for (Index i = 0; i < p; ++i) u[i] = coarse(rng) * 0.25;
        const Index n = std::uniform_int_distribution<Index>(1, p)(rng);
        IndexList expected = al::testing::brute_force_ranking(u);
        expected.resize(static_cast<std::size_t>(n));
        REQUIRE(select_argmax(u, n) == expected);
    }
}

TEST_CASE("select_shuffled_argmax") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::VectorXd u = Eigen::VectorXd::Random(12);
        for (std::uint64_t seed : {0ULL, 1ULL, 77ULL}) {
            CHECK(select_shuffled_argmax(u, 5, seed) == select_argmax(u, 5));
        }
    }

    const Eigen::Vector4d flat(1, 1, 1, 1);
    CHECK(select_shuffled_argmax(flat, 2, 1) == select_shuffled_argmax(flat, 2, 1));

    std::set<IndexList> all_pairs;
    for (Index a = 0; a < 4; ++a)
        for (Index b = 0; b < 4; ++b)
            if (a != b) all_pairs.insert({a, b});
    std::set<IndexList> seen;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto pick = select_shuffled_argmax(flat, 2, seed);
        CHECK(all_pairs.count(pick) == 1);
        seen.insert(pick);
    }
    CHECK(seen.size() > 1);

    // ties only reorder among equal values
    const Eigen::VectorXd mixed = (Eigen::VectorXd(6) << 3, 1, 3, 2, 3, 1).finished();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto pick = select_shuffled_argmax(mixed, 6, seed);
        for (std::size_t i = 0; i < 3; ++i) CHECK(mixed[pick[i]] == 3.0);
        CHECK(pick[3] == 3);
    }
}

TEST_CASE("every utility composes with every selector") {
    auto [X, y] = al::testing::two_clusters(40, 9);
    const FeatureMatrix pool = X.bottomRows(25);
    const std::vector<ActiveLearner::Strategy::UtilityFn> utilities = {
        [](const ActiveLearner& l, const FeatureMatrix& p) -> Utilities { return least_confident_utility(l, p); },
        [](const ActiveLearner& l, const FeatureMatrix& p) -> Utilities { return margin_utility(l, p); },
        [](const ActiveLearner& l, const FeatureMatrix& p) -> Utilities { return entropy_utility(l, p); },
    };
    const std::vector<Selector> selectors = {argmax_selector(), shuffled_argmax_selector(5)};
    for (const auto& u : utilities) {
        for (const auto& s : selectors) {
            ActiveLearner learner(std::make_unique<GaussianNB>(), {u, s});
            learner.fit(X.topRows(15), LabelArray(y.begin(), y.begin() + 15));
            const auto sel = learner.query(pool, 4);
            CHECK(sel.indices.size() == 4);
            CHECK(std::set<Index>(sel.indices.begin(), sel.indices.end()).size() == 4);
        }
    }
}

TEST_CASE("capability-gated calls are contract errors") {
    auto [X, y] = al::testing::two_clusters(10, 10);
    GaussianNB gnb;
    gnb.fit(X, y);
    CHECK_THROWS_AS(gnb.decision_values(X), ContractError);
    CHECK_THROWS_AS(gnb.predict_with_std(X), ContractError);
    GaussianNB unfitted;
    CHECK_THROWS_AS(unfitted.predict_proba(X), ContractError);
}
