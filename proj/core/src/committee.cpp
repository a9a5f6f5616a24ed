#include "al/committee.hpp"

#include "al/uncertainty.hpp"
#include "estimators/common.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace al {

namespace {

void require_members(std::size_t count, const char* who) {
    if (count < 2) {
        throw ContractError(std::string(who) + " needs at least two members, got " +
                            std::to_string(count));
    }
}

void require_pool(const FeatureMatrix& pool) {
    if (pool.rows() == 0) throw ContractError("committee pool is empty");
}

}  // namespace

Committee::Committee(std::vector<ActiveLearner> members, Strategy strategy, std::uint64_t base_seed)
    : members_(std::move(members)), strategy_(std::move(strategy)), base_seed_(base_seed) {
    require_members(members_.size(), "committee");
    for (std::size_t m = 0; m < members_.size(); ++m) members_[m].reseed(base_seed_ + m);
}

void Committee::require_fitted() const {
    for (const auto& m : members_) m.require_fitted();
}

void Committee::fit(const FeatureMatrix& X, const Targets& y, bool bootstrap) {
    for (auto& m : members_) m.fit(X, y, bootstrap);
}

void Committee::teach(const FeatureMatrix& X_new, const Targets& y_new, bool bootstrap) {
    for (auto& m : members_) m.teach(X_new, y_new, bootstrap);
}

QuerySelection Committee::query(const FeatureMatrix& pool, Index n) const {
    require_fitted();
    require_query_args(pool, n);
    return make_selection(pool, strategy_.select(*this, pool, n));
}

LabelArray Committee::classes() const {
    LabelArray all;
    for (const auto& m : members_) {
        const LabelArray c = m.estimator().classes();
        all.insert(all.end(), c.begin(), c.end());
    }
    return distinct_sorted(std::move(all));
}

Eigen::MatrixXi Committee::vote(const FeatureMatrix& pool) const {
    require_pool(pool);
    require_fitted();
    Eigen::MatrixXi votes(pool.rows(), static_cast<Index>(members_.size()));
    for (std::size_t m = 0; m < members_.size(); ++m) {
        const auto predicted = members_[m].predict(pool);
        const auto* labels = std::get_if<LabelArray>(&predicted);
        if (labels == nullptr) throw ContractError("committee members must be classifiers");
        for (Index i = 0; i < pool.rows(); ++i) {
            votes(i, static_cast<Index>(m)) = (*labels)[static_cast<std::size_t>(i)];
        }
    }
    return votes;
}

std::vector<ProbabilityMatrix> Committee::member_proba(const FeatureMatrix& pool) const {
    require_pool(pool);
    require_fitted();
    const LabelArray universe = classes();
    std::vector<ProbabilityMatrix> out;
    out.reserve(members_.size());
    for (const auto& m : members_) {
        const ProbabilityMatrix own = m.predict_proba(pool);
        const LabelArray own_classes = m.estimator().classes();
        if (static_cast<Index>(own_classes.size()) != own.cols()) {
            throw ContractError("member probability columns do not match its classes");
        }
        ProbabilityMatrix aligned =
            ProbabilityMatrix::Zero(pool.rows(), static_cast<Index>(universe.size()));
        for (std::size_t c = 0; c < own_classes.size(); ++c) {
            aligned.col(class_position(universe, own_classes[c])) = own.col(static_cast<Index>(c));
        }
        out.push_back(std::move(aligned));
    }
    return out;
}

ProbabilityMatrix Committee::predict_proba(const FeatureMatrix& pool) const {
    const auto members = member_proba(pool);
    ProbabilityMatrix mean = ProbabilityMatrix::Zero(members.front().rows(), members.front().cols());
    for (const auto& p : members) mean += p;
    return mean / static_cast<double>(members.size());
}

LabelArray Committee::predict(const FeatureMatrix& X) const {
    const bool probabilistic = std::all_of(members_.begin(), members_.end(), [](const auto& m) {
        return m.estimator().capabilities().probabilistic;
    });
    if (probabilistic) return argmax_labels(predict_proba(X), classes());

    const Eigen::MatrixXi votes = vote(X);
    LabelArray out(static_cast<std::size_t>(X.rows()));
    for (Index i = 0; i < votes.rows(); ++i) {
        std::map<int, int> counts;
        for (Index m = 0; m < votes.cols(); ++m) ++counts[votes(i, m)];
        int best = counts.begin()->first;
        for (const auto& [label, count] : counts) {
            if (count > counts[best]) best = label;
        }
        out[static_cast<std::size_t>(i)] = best;
    }
    return out;
}

double Committee::score(const FeatureMatrix& X, const LabelArray& y) const {
    require_paired(X, y);
    if (X.rows() == 0) throw DataError("cannot score on an empty set");
    return score_predictions(predict(X), y);
}

CommitteeRegressor::CommitteeRegressor(std::vector<ActiveLearner> members, Strategy strategy,
                                       std::uint64_t base_seed)
    : members_(std::move(members)), strategy_(std::move(strategy)) {
    require_members(members_.size(), "committee regressor");
    for (std::size_t m = 0; m < members_.size(); ++m) {
        if (!members_[m].estimator().capabilities().regression) {
            throw ContractError("committee regressor member " + std::to_string(m) +
                                " is not a regression estimator");
        }
        members_[m].reseed(base_seed + m);
    }
}

void CommitteeRegressor::fit(const FeatureMatrix& X, const RealVector& y, bool bootstrap) {
    for (auto& m : members_) m.fit(X, y, bootstrap);
}

void CommitteeRegressor::teach(const FeatureMatrix& X_new, const RealVector& y_new, bool bootstrap) {
    for (auto& m : members_) m.teach(X_new, y_new, bootstrap);
}

QuerySelection CommitteeRegressor::query(const FeatureMatrix& pool, Index n) const {
    for (const auto& m : members_) m.require_fitted();
    require_query_args(pool, n);
    return make_selection(pool, strategy_.select(*this, pool, n));
}

Eigen::MatrixXd CommitteeRegressor::member_predictions(const FeatureMatrix& pool) const {
    require_pool(pool);
    Eigen::MatrixXd out(pool.rows(), static_cast<Index>(members_.size()));
    for (std::size_t m = 0; m < members_.size(); ++m) {
        out.col(static_cast<Index>(m)) = std::get<RealVector>(members_[m].predict(pool));
    }
    return out;
}

RegressionPrediction CommitteeRegressor::predict(const FeatureMatrix& pool) const {
    const Eigen::MatrixXd preds = member_predictions(pool);
    RegressionPrediction out;
    out.mean = preds.rowwise().mean();
    out.std.resize(preds.rows());
    for (Index i = 0; i < preds.rows(); ++i) {
        const double var = (preds.row(i).array() - out.mean[i]).square().mean();
        out.std[i] = std::sqrt(var);
    }
    return out;
}

Eigen::MatrixXi committee_vote(const Committee& committee, const FeatureMatrix& pool) {
    return committee.vote(pool);
}

ProbabilityMatrix committee_predict_proba(const Committee& committee, const FeatureMatrix& pool) {
    return committee.predict_proba(pool);
}

UtilityArray vote_entropy_of(const Eigen::MatrixXi& votes) {
    const auto members = static_cast<double>(votes.cols());
    UtilityArray u(votes.rows());
    for (Index i = 0; i < votes.rows(); ++i) {
        std::map<int, int> counts;
        for (Index m = 0; m < votes.cols(); ++m) ++counts[votes(i, m)];
        double h = 0.0;
        for (const auto& [label, count] : counts) {
            const double p = count / members;
            h -= p * std::log(p);
        }
        u[i] = h;
    }
    return u;
}

UtilityArray vote_entropy(const Committee& committee, const FeatureMatrix& pool) {
    return vote_entropy_of(committee.vote(pool));
}

UtilityArray consensus_entropy(const Committee& committee, const FeatureMatrix& pool) {
    return classifier_entropy(committee.predict_proba(pool));
}

double kl_divergence(const Eigen::Ref<const Eigen::RowVectorXd>& p,
                     const Eigen::Ref<const Eigen::RowVectorXd>& q) {
    double kl = 0.0;
    for (Index c = 0; c < p.size(); ++c) {
        if (p[c] <= 0.0) continue;
        kl += p[c] * (std::log(std::clamp(p[c], kProbabilityClamp, 1.0)) -
                      std::log(std::clamp(q[c], kProbabilityClamp, 1.0)));
    }
    return std::max(kl, 0.0);
}

UtilityArray max_disagreement(const Committee& committee, const FeatureMatrix& pool) {
    const auto members = committee.member_proba(pool);
    ProbabilityMatrix consensus = ProbabilityMatrix::Zero(members.front().rows(), members.front().cols());
    for (const auto& p : members) consensus += p;
    consensus /= static_cast<double>(members.size());

    UtilityArray u = UtilityArray::Zero(pool.rows());
    for (const auto& p : members) {
        for (Index i = 0; i < pool.rows(); ++i) {
            u[i] = std::max(u[i], kl_divergence(p.row(i), consensus.row(i)));
        }
    }
    return u;
}

UtilityArray std_sampling(const CommitteeRegressor& committee, const FeatureMatrix& pool) {
    return committee.predict(pool).std;
}

}  // namespace al
