#pragma once

#include "al/bench/dataset.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace al::bench {

/// Fraction of rows held out for evaluation.
inline constexpr double kTestFraction = 0.2;

struct CurveConfig {
    std::string strategy = "least_confident";
    std::string estimator = "gnb";
    Index initial = 10;
    Index queries = 10;
    Index batch = 1;
    std::uint64_t seed = 0;
};

struct CurvePoint {
    Index step = 0;     ///< 0 is the initial fit, then one per query round
    Index labeled = 0;
    double accuracy = 0.0;
    double seconds = 0.0;  ///< cumulative wall clock since the initial fit
};

struct CurveResult {
    std::vector<CurvePoint> points;
    /// Pool row ids (indices into the dataset) in the order they were queried.
    IndexList queried_rows;
    Index test_rows = 0;
};

/// Row partition used by every experiment: a seeded shuffle, then the first
/// 20% become the test set, the next `initial` the labeled set, and the rest
/// the pool.
struct Split {
    IndexList test;
    IndexList labeled;
    IndexList pool;
};

Split split_rows(Index rows, Index initial, std::uint64_t seed);

/// Runs the fit/query/teach loop with the dataset's true labels as the
/// oracle. Throws DataError when the pool cannot supply queries x batch rows
/// and UnknownNameError for unregistered names.
CurveResult run_learning_curve(const Dataset& data, const CurveConfig& config);

/// First step whose accuracy reaches `threshold`, or -1.
Index first_crossing(const CurveResult& curve, double threshold);

struct RuntimeConfig {
    std::vector<std::string> strategies = {"least_confident", "qbc", "eer"};
    int repeats = 10;
    Index queries = 10;
    Index initial = 10;
    std::string estimator = "gnb";
    std::uint64_t seed = 0;
};

struct RuntimeEntry {
    std::string strategy;
    double mean_seconds = 0.0;
    double std_seconds = 0.0;  ///< population standard deviation
    int repeats = 0;
    Index queries = 0;
};

struct RuntimeResult {
    std::vector<RuntimeEntry> entries;
};

/// Times `repeats` runs of `queries` single-instance query + teach rounds per
/// strategy, after one discarded warm-up run. Only the loop is timed.
RuntimeResult run_runtime_bench(const Dataset& data, const RuntimeConfig& config);

/// Maps bench shorthands (qbc, eer) onto registry names.
std::string canonical_strategy(const std::string& name);

void write_curve_csv(const CurveResult& curve, const std::string& config_line, std::ostream& out);
CurveResult read_curve_csv(std::istream& in);
void write_runtime_csv(const RuntimeResult& result, const std::string& config_line, std::ostream& out);
RuntimeResult read_runtime_csv(std::istream& in);

std::string describe(const CurveConfig& config);
std::string describe(const RuntimeConfig& config);

}  // namespace al::bench
