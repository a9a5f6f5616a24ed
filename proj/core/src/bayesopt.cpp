#include "al/bayesopt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace al {

namespace {

void require_std(double std) {
    if (!(std >= 0.0)) throw ContractError("predictive standard deviation must be non-negative");
}

void require_params(const AcquisitionParams& p) {
    if (!(p.xi >= 0.0) || !std::isfinite(p.xi) || !(p.kappa >= 0.0) || !std::isfinite(p.kappa)) {
        throw ContractError("acquisition parameters must be finite and non-negative");
    }
}

// Acquisition is evaluated by the optimizer itself; the strategy slot of the
// surrogate learner is never consulted.
ActiveLearner::Strategy unused_strategy() {
    return {[](const ActiveLearner&, const FeatureMatrix& pool) -> Utilities {
        return UtilityArray(UtilityArray::Zero(pool.rows()));
    }};
}

}  // namespace

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double normal_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi); }

double acquisition_pi(double mean, double std, double best, double xi) {
    require_std(std);
    const double gain = mean - best - xi;
    if (std == 0.0) return gain > 0.0 ? 1.0 : 0.0;
    return normal_cdf(gain / std);
}

double acquisition_ei(double mean, double std, double best, double xi) {
    require_std(std);
    const double gain = mean - best - xi;
    if (std == 0.0) return std::max(0.0, gain);
    const double z = gain / std;
    return std::max(0.0, gain * normal_cdf(z) + std * normal_pdf(z));
}

double acquisition_ucb(double mean, double std, double kappa) {
    require_std(std);
    return mean + kappa * std;
}

BayesianOptimizer::BayesianOptimizer(std::unique_ptr<Estimator> surrogate)
    : learner_(std::move(surrogate), unused_strategy()) {
    if (!learner_.estimator().capabilities().regression) {
        throw ContractError("bayesian optimizer needs a regression surrogate");
    }
}

void BayesianOptimizer::teach(const FeatureMatrix& X_new, const RealVector& y_new) {
    learner_.teach(X_new, y_new);
    Index best = 0;
    const double top = y_new.maxCoeff(&best);
    if (!y_max_ || top > *y_max_) {
        y_max_ = top;
        X_max_ = X_new.row(best);
    }
}

UtilityArray BayesianOptimizer::acquisition_values(const FeatureMatrix& candidates,
                                                   Acquisition acquisition,
                                                   AcquisitionParams params) const {
    if (!learner_.fitted() || !y_max_) throw ContractError("surrogate is not fitted");
    if (candidates.rows() == 0) throw ContractError("no candidates");
    require_params(params);
    const auto pred = learner_.estimator().predict_with_std(candidates);
    UtilityArray u(candidates.rows());
    for (Index i = 0; i < candidates.rows(); ++i) {
        switch (acquisition) {
            case Acquisition::probability_of_improvement:
                u[i] = acquisition_pi(pred.mean[i], pred.std[i], *y_max_, params.xi);
                break;
            case Acquisition::expected_improvement:
                u[i] = acquisition_ei(pred.mean[i], pred.std[i], *y_max_, params.xi);
                break;
            case Acquisition::upper_confidence_bound:
                u[i] = acquisition_ucb(pred.mean[i], pred.std[i], params.kappa);
                break;
        }
    }
    return u;
}

QuerySelection BayesianOptimizer::query(const FeatureMatrix& candidates, Index n,
                                        Acquisition acquisition, AcquisitionParams params) const {
    const UtilityArray u = acquisition_values(candidates, acquisition, params);
    require_query_args(candidates, n);
    return make_selection(candidates, select_argmax(u, n));
}

}  // namespace al
