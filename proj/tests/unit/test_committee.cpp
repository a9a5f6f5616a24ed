#include "al/committee.hpp"
#include "al/estimators/gaussian_nb.hpp"
#include "al/estimators/knn.hpp"
#include "al/uncertainty.hpp"
#include "support/fixtures.hpp"
#include "support/stubs.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>

using namespace al;
using al::testing::rows_of;
using al::testing::TableClassifier;

namespace {

ActiveLearner member(std::unique_ptr<Estimator> est) {
    return ActiveLearner(std::move(est), uncertainty_strategy(UncertaintyMeasure::least_confident));
}

/// Committee whose member m answers row i of the pool with tables[m].row(i).
Committee table_committee(const std::vector<ProbabilityMatrix>& tables, LabelArray classes = {0, 1}) {
    std::vector<ActiveLearner> members;
    for (const auto& t : tables) members.push_back(member(std::make_unique<TableClassifier>(t, classes)));
    Committee c(std::move(members), Committee::Strategy(vote_entropy));
    c.fit(rows_of({{0}}), LabelArray{0});
    return c;
}

FeatureMatrix index_pool(Index rows) {
    FeatureMatrix X(rows, 1);
    for (Index i = 0; i < rows; ++i) X(i, 0) = static_cast<double>(i);
    return X;
}

Committee knn_committee(int size) {
    std::vector<ActiveLearner> members;
    for (int m = 0; m < size; ++m) members.push_back(member(std::make_unique<KnnClassifier>(1)));
    return Committee(std::move(members), Committee::Strategy(vote_entropy), 100);
}

/// Independent vote entropy: count votes with a map.
double vote_entropy_oracle(const Eigen::VectorXi& votes) {
    std::map<int, int> counts;
    for (Index m = 0; m < votes.size(); ++m) ++counts[votes[m]];
    double h = 0.0;
    for (const auto& [label, n] : counts) {
        const double f = static_cast<double>(n) / static_cast<double>(votes.size());
        h -= f * std::log(f);
    }
    return h;
}

}  // namespace

TEST_CASE("committee construction") {
    std::vector<ActiveLearner> one;
    one.push_back(member(std::make_unique<GaussianNB>()));
    CHECK_THROWS_AS(Committee(std::move(one), Committee::Strategy(vote_entropy)), ContractError);
    CHECK_THROWS_AS(Committee({}, Committee::Strategy(vote_entropy)), ContractError);
}

TEST_CASE("committee vote") {
    auto c = knn_committee(3);
    const auto X = rows_of({{0, 0}, {5, 5}, {10, 0}});
    c.fit(X, LabelArray{0, 1, 2});

    SUBCASE("identical members vote identically") {
        const auto votes = committee_vote(c, X);
        CHECK(votes.rows() == 3);
        CHECK(votes.cols() == 3);
        for (Index i = 0; i < 3; ++i) {
            CHECK(votes(i, 0) == i);
            CHECK(votes(i, 1) == votes(i, 0));
            CHECK(votes(i, 2) == votes(i, 0));
        }
        CHECK(vote_entropy(c, X).isZero());
    }
    SUBCASE("empty pool") {
        CHECK_THROWS_AS(committee_vote(c, FeatureMatrix(0, 2)), ContractError);
        CHECK_THROWS_AS(vote_entropy(c, FeatureMatrix(0, 2)), ContractError);
    }
}

TEST_CASE("consensus probabilities") {
    SUBCASE("two opposed members") {
        const auto c = table_committee({rows_of({{1, 0}}), rows_of({{0, 1}})});
        const auto p = committee_predict_proba(c, index_pool(1));
        CHECK(p(0, 0) == doctest::Approx(0.5));
        CHECK(p(0, 1) == doctest::Approx(0.5));
    }
    SUBCASE("three members average") {
        const auto c = table_committee({rows_of({{0.2, 0.8}}), rows_of({{0.4, 0.6}}), rows_of({{0.6, 0.4}})});
        const auto p = committee_predict_proba(c, index_pool(1));
        CHECK(std::abs(p(0, 0) - 0.4) < 1e-12);
        CHECK(std::abs(p(0, 1) - 0.6) < 1e-12);
    }
    SUBCASE("rows sum to one") {
        std::mt19937_64 rng(31);
        std::vector<ProbabilityMatrix> tables;
        for (int m = 0; m < 5; ++m) tables.push_back(al::testing::random_proba(200, 4, rng));
        const auto c = table_committee(tables, {0, 1, 2, 3});
        const auto p = committee_predict_proba(c, index_pool(200));
        CHECK((p.rowwise().sum().array() - 1.0).abs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("members with different label subsets are aligned over the union") {
    std::vector<ActiveLearner> members;
    members.push_back(member(std::make_unique<TableClassifier>(rows_of({{0.5, 0.5}}), LabelArray{0, 1})));
    members.push_back(member(std::make_unique<TableClassifier>(rows_of({{0.5, 0.5}}), LabelArray{1, 2})));
    Committee c(std::move(members), Committee::Strategy(consensus_entropy));
    c.fit(rows_of({{0}}), LabelArray{0});
    CHECK(c.classes() == LabelArray{0, 1, 2});
    const auto p = c.predict_proba(index_pool(1));
    CHECK(p.cols() == 3);
    CHECK(std::abs(p(0, 0) - 0.25) < 1e-12);
    CHECK(std::abs(p(0, 1) - 0.5) < 1e-12);
    CHECK(std::abs(p(0, 2) - 0.25) < 1e-12);
}

TEST_CASE("vote entropy") {
    Eigen::MatrixXi votes(3, 3);
    votes << 1, 1, 1,  //
        0, 0, 1,       //
        0, 1, 2;
    const auto h = vote_entropy_of(votes);
    CHECK(h[0] == 0.0);
    // -(2/3 ln 2/3 + 1/3 ln 1/3)
    CHECK(std::abs(h[1] - 0.636514) < 1e-6);
    CHECK(std::abs(h[2] - std::log(3.0)) < 1e-12);

    Eigen::MatrixXi split(1, 2);
    split << 0, 1;
    CHECK(std::abs(vote_entropy_of(split)[0] - std::numbers::ln2) < 1e-12);
}

TEST_CASE("vote entropy matches a counting oracle and its bound") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> label(0, 4);
    for (int members = 2; members <= 7; ++members) {
        Eigen::MatrixXi votes(100, members);
        for (Index i = 0; i < votes.rows(); ++i)
            for (Index m = 0; m < members; ++m) votes(i, m) = label(rng);
        const auto h = vote_entropy_of(votes);
        for (Index i = 0; i < votes.rows(); ++i) {
            CHECK(std::abs(h[i] - vote_entropy_oracle(votes.row(i).transpose())) < 1e-12);
            CHECK(h[i] >= 0.0);
            CHECK(h[i] <= std::log(static_cast<double>(std::min(members, 5))) + 1e-12);
        }
    }
}

TEST_CASE("consensus entropy") {
    SUBCASE("confident agreement") {
        const auto c = table_committee({rows_of({{1, 0}}), rows_of({{1, 0}})});
        CHECK(consensus_entropy(c, index_pool(1))[0] == 0.0);
    }
    SUBCASE("confident opposition") {
        const auto c = table_committee({rows_of({{1, 0}}), rows_of({{0, 1}})});
        CHECK(std::abs(consensus_entropy(c, index_pool(1))[0] - std::numbers::ln2) < 1e-12);
    }
    SUBCASE("three members") {
        const auto c = table_committee({rows_of({{0.2, 0.8}}), rows_of({{0.4, 0.6}}), rows_of({{0.6, 0.4}})});
        // entropy of (0.4, 0.6)
        CHECK(std::abs(consensus_entropy(c, index_pool(1))[0] - 0.673012) < 1e-6);
    }
}

TEST_CASE("max disagreement") {
    SUBCASE("identical members") {
        const auto c = table_committee({rows_of({{0.3, 0.7}}), rows_of({{0.3, 0.7}})});
        CHECK(std::abs(max_disagreement(c, index_pool(1))[0]) < 1e-15);
    }
    SUBCASE("opposed certain members") {
        const auto c = table_committee({rows_of({{1, 0}}), rows_of({{0, 1}})});
        CHECK(std::abs(max_disagreement(c, index_pool(1))[0] - std::numbers::ln2) < 1e-12);
    }
    SUBCASE("non-negative and equal to the larger member divergence") {
        std::mt19937_64 rng(33);
        const auto a = al::testing::random_proba(300, 2, rng);
        const auto b = al::testing::random_proba(300, 2, rng);
        const auto c = table_committee({a, b});
        const auto u = max_disagreement(c, index_pool(300));
        for (Index i = 0; i < 300; ++i) {
            const Eigen::RowVectorXd q = 0.5 * (a.row(i) + b.row(i));
            double kl_a = 0.0;
            double kl_b = 0.0;
            for (Index k = 0; k < 2; ++k) {
                kl_a += a(i, k) * std::log(a(i, k) / q[k]);
                kl_b += b(i, k) * std::log(b(i, k) / q[k]);
            }
            CHECK(u[i] >= 0.0);
            CHECK(std::abs(u[i] - std::max(kl_a, kl_b)) < 1e-12);
        }
    }
}

TEST_CASE("committee regressor spread") {
    std::vector<ActiveLearner> members;
    members.push_back(member(std::make_unique<al::testing::ConstantRegressor>(1.0)));
    members.push_back(member(std::make_unique<al::testing::ConstantRegressor>(3.0)));
    CommitteeRegressor c(std::move(members), CommitteeRegressor::Strategy(std_sampling));
    const auto X = rows_of({{0}, {1}});
    c.fit(X, RealVector(Eigen::Vector2d(0, 0)));
    const auto s = std_sampling(c, X);
    CHECK(s[0] == doctest::Approx(1.0));
    CHECK(s[1] == doctest::Approx(1.0));
    const auto pred = c.predict(X);
    CHECK(pred.mean[0] == doctest::Approx(2.0));

    std::vector<ActiveLearner> same;
    same.push_back(member(std::make_unique<al::testing::ConstantRegressor>(2.0)));
    same.push_back(member(std::make_unique<al::testing::ConstantRegressor>(2.0)));
    CommitteeRegressor flat(std::move(same), CommitteeRegressor::Strategy(std_sampling));
    flat.fit(X, RealVector(Eigen::Vector2d(0, 0)));
    CHECK(std_sampling(flat, X).isZero());

    std::vector<ActiveLearner> classifiers;
    classifiers.push_back(member(std::make_unique<GaussianNB>()));
    classifiers.push_back(member(std::make_unique<GaussianNB>()));
    CHECK_THROWS_AS(CommitteeRegressor(std::move(classifiers), CommitteeRegressor::Strategy(std_sampling)),
                    ContractError);
}

TEST_CASE("committee teaching") {
    const auto [X, y] = al::testing::two_clusters(40, 34);

    SUBCASE("teach reaches every member") {
        auto c = knn_committee(4);
        c.fit(X.topRows(10), LabelArray(y.begin(), y.begin() + 10));
        c.teach(X.middleRows(10, 5), LabelArray(y.begin() + 10, y.begin() + 15));
        CHECK(c.size() == 4);
        for (const auto& m : c.members()) CHECK(m.labeled_count() == 15);
    }
    SUBCASE("bootstrap draws differ across members and repeat across runs") {
        auto gnb_committee = [] {
            std::vector<ActiveLearner> members;
            for (int m = 0; m < 3; ++m) members.push_back(member(std::make_unique<GaussianNB>()));
            return Committee(std::move(members), Committee::Strategy(vote_entropy), 100);
        };
        auto a = gnb_committee();
        auto b = gnb_committee();
        a.fit(X, y, true);
        b.fit(X, y, true);
        const auto means = [](const Committee& c, std::size_t m) {
            return dynamic_cast<const GaussianNB&>(c.members()[m].estimator()).means();
        };
        for (std::size_t m = 0; m < 3; ++m) {
            CHECK(means(a, m) == means(b, m));
            CHECK(a.members()[m].seed() == 100 + m);
            CHECK(a.members()[m].labeled_count() == X.rows());
        }
        CHECK(means(a, 0) != means(a, 1));
        CHECK(means(a, 1) != means(a, 2));
    }
    SUBCASE("query returns disagreement maximisers") {
        auto c = knn_committee(3);
        c.fit(X, y, true);
        const auto pool = X.bottomRows(10);
        const auto sel = c.query(pool, 3);
        CHECK(sel.indices.size() == 3);
        const auto ranking = al::testing::brute_force_ranking(vote_entropy(c, pool));
        CHECK(sel.indices == IndexList(ranking.begin(), ranking.begin() + 3));
    }
}
