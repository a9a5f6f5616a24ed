#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace al {

using Index = Eigen::Index;
using IndexList = std::vector<Index>;

/// Dense instances, one row per instance.
using FeatureMatrix = Eigen::MatrixXd;
/// Integer class identifiers, one per instance.
using LabelArray = std::vector<int>;
/// Real-valued regression targets.
using RealVector = Eigen::VectorXd;
/// Binary relevance matrix, instances x labels.
using MultilabelMatrix = Eigen::MatrixXi;
/// Per-instance class probabilities; rows sum to one.
using ProbabilityMatrix = Eigen::MatrixXd;
/// Per-label decision scores d_j(x); sign gives predicted relevance.
using DecisionMatrix = Eigen::MatrixXd;
/// One informativeness score per pool row. Larger is queried first.
using UtilityArray = Eigen::VectorXd;

/// Supervision for any of the three learning tasks.
using Targets = std::variant<LabelArray, RealVector, MultilabelMatrix>;

/// Violated precondition or capability misuse by the caller.
class ContractError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Bad input data: shapes, non-finite values, malformed files.
class DataError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Numerical failure inside a model (divergence, factorization).
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct QuerySelection {
    IndexList indices;
    FeatureMatrix instances;
};

Index target_rows(const Targets& y);

/// Concatenates two target sets of the same kind.
Targets append_targets(const Targets& a, const Targets& b);

/// Rows of `y` at `rows`, in the given order (repeats allowed).
Targets take_targets(const Targets& y, const IndexList& rows);

FeatureMatrix take_rows(const FeatureMatrix& X, const IndexList& rows);

FeatureMatrix vstack(const FeatureMatrix& top, const FeatureMatrix& bottom);

/// Throws DataError unless every entry of X is finite.
void require_finite(const FeatureMatrix& X, const char* what);

/// Throws DataError unless X and y describe the same number of rows.
void require_paired(const FeatureMatrix& X, const Targets& y);

QuerySelection make_selection(const FeatureMatrix& pool, IndexList indices);

}  // namespace al
