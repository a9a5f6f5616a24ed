#include "al/batch_density.hpp"

#include "al/uncertainty.hpp"

#include <cmath>
#include <limits>

namespace al {

double similarity(const Eigen::Ref<const Eigen::RowVectorXd>& a,
                  const Eigen::Ref<const Eigen::RowVectorXd>& b, SimilarityKind kind) {
    if (a.size() != b.size()) {
        throw DataError("similarity: dimension mismatch " + std::to_string(a.size()) + " vs " +
                        std::to_string(b.size()));
    }
    if (kind == SimilarityKind::euclidean_inverse) return 1.0 / (1.0 + (a - b).norm());
    const double na = a.norm();
    const double nb = b.norm();
    if (na == 0.0 || nb == 0.0) return 0.0;
    return a.dot(b) / (na * nb);
}

Eigen::VectorXd information_density(const FeatureMatrix& pool, SimilarityKind kind) {
    if (pool.rows() == 0) throw ContractError("information density: empty pool");
    const Index p = pool.rows();
    Eigen::MatrixXd sim(p, p);
    for (Index i = 0; i < p; ++i) {
        for (Index j = 0; j <= i; ++j) sim(i, j) = sim(j, i) = similarity(pool.row(i), pool.row(j), kind);
    }
    return sim.rowwise().sum() / static_cast<double>(p);
}

UtilityArray density_weighted_utility(const UtilityArray& base, const Eigen::VectorXd& density,
                                      double beta) {
    if (base.size() != density.size()) throw ContractError("utility and density lengths differ");
    if (!(beta >= 0.0)) throw ContractError("density exponent must be non-negative");
    if (beta == 0.0) return base;
    const bool integral = std::floor(beta) == beta;
    UtilityArray out(base.size());
    for (Index i = 0; i < base.size(); ++i) {
        if (density[i] < 0.0 && !integral) {
            throw ContractError("negative density with a fractional exponent");
        }
        out[i] = base[i] * std::pow(density[i], beta);
    }
    return out;
}

ActiveLearner::Strategy density_weighted_strategy(ActiveLearner::Strategy::UtilityFn base,
                                                  double beta, SimilarityKind kind) {
    return {[base = std::move(base), beta, kind](const ActiveLearner& learner,
                                                const FeatureMatrix& pool) -> Utilities {
        Utilities u = base(learner, pool);
        u.values = density_weighted_utility(u.values, information_density(pool, kind), beta);
        return u;
    }};
}

IndexList ranked_batch_indices(const UtilityArray& uncertainty, const FeatureMatrix& pool,
                               const FeatureMatrix& labeled, Index n, SimilarityKind kind,
                               std::vector<RankedBatchStep>* trace) {
    require_query_args(pool, n);
    if (uncertainty.size() != pool.rows()) throw ContractError("uncertainty length differs from pool");
    if (labeled.rows() > 0 && labeled.cols() != pool.cols()) {
        throw DataError("labeled set feature count differs from pool");
    }
    const Index p = pool.rows();

    // Phi_i: running max similarity to everything labeled so far.
    Eigen::VectorXd phi = Eigen::VectorXd::Zero(p);
    for (Index i = 0; i < p; ++i) {
        for (Index j = 0; j < labeled.rows(); ++j) {
            phi[i] = std::max(phi[i], similarity(pool.row(i), labeled.row(j), kind));
        }
    }

    std::vector<bool> taken(static_cast<std::size_t>(p), false);
    Index labeled_count = labeled.rows();
    IndexList picks;
    picks.reserve(static_cast<std::size_t>(n));
    for (Index step = 0; step < n; ++step) {
        const Index remaining = p - step;
        const double alpha =
            static_cast<double>(remaining) / static_cast<double>(remaining + labeled_count);
        Eigen::VectorXd scores = Eigen::VectorXd::Constant(p, std::numeric_limits<double>::quiet_NaN());
        Index best = -1;
        for (Index i = 0; i < p; ++i) {
            if (taken[static_cast<std::size_t>(i)]) continue;
            scores[i] = labeled_count == 0 ? uncertainty[i]
                                           : alpha * (1.0 - phi[i]) + (1.0 - alpha) * uncertainty[i];
            if (best < 0 || scores[i] > scores[best]) best = i;
        }
        taken[static_cast<std::size_t>(best)] = true;
        picks.push_back(best);
        ++labeled_count;
        for (Index i = 0; i < p; ++i) {
            if (!taken[static_cast<std::size_t>(i)]) {
                phi[i] = std::max(phi[i], similarity(pool.row(i), pool.row(best), kind));
            }
        }
        if (trace != nullptr) trace->push_back({best, alpha, std::move(scores)});
    }
    return picks;
}

QuerySelection ranked_batch(const ActiveLearner& learner, const FeatureMatrix& pool,
                            const FeatureMatrix& labeled, Index n, SimilarityKind kind,
                            std::vector<RankedBatchStep>* trace) {
    learner.require_fitted();
    require_query_args(pool, n);
    const UtilityArray u = least_confident_utility(learner, pool);
    return make_selection(pool, ranked_batch_indices(u, pool, labeled, n, kind, trace));
}

ActiveLearner::Strategy ranked_batch_strategy(SimilarityKind kind) {
    return ActiveLearner::Strategy::joint(
        [kind](const ActiveLearner& learner, const FeatureMatrix& pool, Index n) {
            return ranked_batch_indices(least_confident_utility(learner, pool), pool,
                                        learner.X_train(), n, kind);
        });
}

}  // namespace al
