#pragma once

#include "al/selectors.hpp"

#include <functional>
#include <utility>

namespace al {

/// A query strategy is a utility function composed with a selector. Any
/// utility pairs with any selector.
///
/// Strategies that pick a batch jointly (ranked batch-mode, the random
/// baseline) are not expressible as utility + selector and are wrapped with
/// QueryStrategy::joint instead.
template <class Learner>
class QueryStrategy {
  public:
    using UtilityFn = std::function<Utilities(const Learner&, const FeatureMatrix&)>;
    using JointFn = std::function<IndexList(const Learner&, const FeatureMatrix&, Index)>;

    QueryStrategy(UtilityFn utility, Selector selector = argmax_selector())
        : utility_(std::move(utility)), selector_(std::move(selector)) {}

    static QueryStrategy joint(JointFn fn) {
        QueryStrategy s;
        s.joint_ = std::move(fn);
        return s;
    }

    bool composed() const { return static_cast<bool>(utility_); }

    Utilities utility(const Learner& learner, const FeatureMatrix& pool) const {
        if (!utility_) throw ContractError("joint strategy has no separable utility");
        return utility_(learner, pool);
    }

    IndexList select(const Learner& learner, const FeatureMatrix& pool, Index n) const {
        if (joint_) return joint_(learner, pool, n);
        const Utilities u = utility_(learner, pool);
        if (u.values.size() != pool.rows()) {
            throw ContractError("utility length differs from pool size");
        }
        return selector_(u.values, n, u.eligible);
    }

  private:
    QueryStrategy() = default;

    UtilityFn utility_;
    Selector selector_;
    JointFn joint_;
};

/// Shared preconditions of every query: a non-empty pool and 1 <= n <= rows.
inline void require_query_args(const FeatureMatrix& pool, Index n) {
    if (pool.rows() == 0) throw ContractError("query pool is empty");
    if (n < 1 || n > pool.rows()) {
        throw ContractError("query size " + std::to_string(n) + " outside [1, " +
                            std::to_string(pool.rows()) + "]");
    }
}

}  // namespace al
