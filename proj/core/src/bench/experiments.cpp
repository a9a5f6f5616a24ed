#include "al/bench/experiments.hpp"

#include "al/registry.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace al::bench {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Removes the pool positions in `picked` from `pool` and returns their row ids.
IndexList take_from_pool(IndexList& pool, const IndexList& picked) {
    IndexList rows;
    rows.reserve(picked.size());
    for (Index p : picked) rows.push_back(pool[static_cast<std::size_t>(p)]);
    IndexList positions = picked;
    std::sort(positions.rbegin(), positions.rend());
    for (Index p : positions) pool.erase(pool.begin() + p);
    return rows;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(field);
    return out;
}

bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line.front() != '#') return true;
    }
    return false;
}

}  // namespace

Split split_rows(Index rows, Index initial, std::uint64_t seed) {
    if (initial < 1) throw ContractError("initial labeled count must be at least 1");
    IndexList order(static_cast<std::size_t>(rows));
    std::iota(order.begin(), order.end(), Index{0});
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    const auto test = static_cast<Index>(std::floor(kTestFraction * static_cast<double>(rows)));
    if (test + initial > rows) {
        throw DataError("dataset of " + std::to_string(rows) + " rows cannot hold " +
                        std::to_string(initial) + " initial rows plus a " + std::to_string(test) +
                        "-row test set");
    }
    Split s;
    s.test.assign(order.begin(), order.begin() + test);
    s.labeled.assign(order.begin() + test, order.begin() + test + initial);
    s.pool.assign(order.begin() + test + initial, order.end());
    return s;
}

std::string canonical_strategy(const std::string& name) {
    if (name == "qbc") return "qbc_vote";
    if (name == "eer") return "eer_binary";
    return name;
}

CurveResult run_learning_curve(const Dataset& data, const CurveConfig& config) {
    if (config.queries < 1) throw ContractError("number of queries must be at least 1");
    if (config.batch < 1) throw ContractError("batch size must be at least 1");

    auto learner = make_learner({.strategy = canonical_strategy(config.strategy),
                                 .estimator = config.estimator,
                                 .seed = config.seed});
    Split split = split_rows(data.rows(), config.initial, config.seed);
    if (config.queries * config.batch > static_cast<Index>(split.pool.size())) {
        throw DataError("pool of " + std::to_string(split.pool.size()) + " rows exhausted by " +
                        std::to_string(config.queries) + " queries of " +
                        std::to_string(config.batch));
    }

    const FeatureMatrix X_test = take_rows(data.X, split.test);
    const Targets y_test = take_targets(data.y, split.test);

    CurveResult result;
    result.test_rows = static_cast<Index>(split.test.size());
    learner->fit(take_rows(data.X, split.labeled), take_targets(data.y, split.labeled));
    const auto start = Clock::now();
    result.points.push_back({0, learner->labeled_count(), learner->score(X_test, y_test), 0.0});

    for (Index step = 1; step <= config.queries; ++step) {
        const FeatureMatrix pool = take_rows(data.X, split.pool);
        const IndexList picked = learner->query(pool, config.batch);
        const IndexList rows = take_from_pool(split.pool, picked);
        learner->teach(take_rows(data.X, rows), take_targets(data.y, rows));
        result.queried_rows.insert(result.queried_rows.end(), rows.begin(), rows.end());
        result.points.push_back(
            {step, learner->labeled_count(), learner->score(X_test, y_test), seconds_since(start)});
    }
    return result;
}

Index first_crossing(const CurveResult& curve, double threshold) {
    for (const auto& p : curve.points) {
        if (p.accuracy >= threshold) return p.step;
    }
    return -1;
}

RuntimeResult run_runtime_bench(const Dataset& data, const RuntimeConfig& config) {
    if (config.repeats < 1) throw ContractError("repeats must be at least 1");
    if (config.queries < 1) throw ContractError("number of queries must be at least 1");

    RuntimeResult result;
    for (const auto& name : config.strategies) {
        const std::string strategy = canonical_strategy(name);
        std::vector<double> times;
        for (int run = -1; run < config.repeats; ++run) {  // run -1 is the warm-up
            const auto seed = config.seed + static_cast<std::uint64_t>(std::max(run, 0));
            auto learner =
                make_learner({.strategy = strategy, .estimator = config.estimator, .seed = seed});
            Split split = split_rows(data.rows(), config.initial, seed);
            if (config.queries > static_cast<Index>(split.pool.size())) {
                throw DataError("pool exhausted by " + std::to_string(config.queries) + " queries");
            }
            learner->fit(take_rows(data.X, split.labeled), take_targets(data.y, split.labeled));

            const auto start = Clock::now();
            for (Index q = 0; q < config.queries; ++q) {
                const FeatureMatrix pool = take_rows(data.X, split.pool);
                const IndexList rows = take_from_pool(split.pool, learner->query(pool, 1));
                learner->teach(take_rows(data.X, rows), take_targets(data.y, rows));
            }
            const double elapsed = seconds_since(start);
            if (run >= 0) times.push_back(elapsed);
        }
        const double mean = std::accumulate(times.begin(), times.end(), 0.0) / static_cast<double>(times.size());
        double var = 0.0;
        for (double t : times) var += (t - mean) * (t - mean);
        var /= static_cast<double>(times.size());
        result.entries.push_back({name, mean, std::sqrt(var), config.repeats, config.queries});
    }
    return result;
}

void write_curve_csv(const CurveResult& curve, const std::string& config_line, std::ostream& out) {
    out << "# config: " << config_line << '\n';
    out << "step,labeled,accuracy,seconds\n";
    out << std::setprecision(17);
    for (const auto& p : curve.points) {
        out << p.step << ',' << p.labeled << ',' << p.accuracy << ',' << p.seconds << '\n';
    }
}

CurveResult read_curve_csv(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line) || line != "step,labeled,accuracy,seconds") {
        throw DataError("curve CSV: missing header");
    }
    CurveResult curve;
    while (next_data_line(in, line)) {
        const auto f = split_fields(line);
        if (f.size() != 4) throw DataError("curve CSV: malformed row '" + line + "'");
        curve.points.push_back({std::stol(f[0]), std::stol(f[1]), std::stod(f[2]), std::stod(f[3])});
    }
    return curve;
}

void write_runtime_csv(const RuntimeResult& result, const std::string& config_line,
                       std::ostream& out) {
    out << "# config: " << config_line << '\n';
    out << "strategy,mean_s,std_s,repeats,queries\n";
    out << std::setprecision(17);
    for (const auto& e : result.entries) {
        out << e.strategy << ',' << e.mean_seconds << ',' << e.std_seconds << ',' << e.repeats
            << ',' << e.queries << '\n';
    }
}

RuntimeResult read_runtime_csv(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line) || line != "strategy,mean_s,std_s,repeats,queries") {
        throw DataError("runtime CSV: missing header");
    }
    RuntimeResult result;
    while (next_data_line(in, line)) {
        const auto f = split_fields(line);
        if (f.size() != 5) throw DataError("runtime CSV: malformed row '" + line + "'");
        result.entries.push_back({f[0], std::stod(f[1]), std::stod(f[2]), std::stoi(f[3]), std::stol(f[4])});
    }
    return result;
}

std::string describe(const CurveConfig& c) {
    std::ostringstream s;
    s << "strategy=" << c.strategy << " estimator=" << c.estimator << " initial=" << c.initial
      << " queries=" << c.queries << " batch=" << c.batch << " seed=" << c.seed;
    return s.str();
}

std::string describe(const RuntimeConfig& c) {
    std::ostringstream s;
    s << "strategies=";
    for (std::size_t i = 0; i < c.strategies.size(); ++i) s << (i ? ";" : "") << c.strategies[i];
    s << " repeats=" << c.repeats << " queries=" << c.queries << " initial=" << c.initial
      << " estimator=" << c.estimator << " seed=" << c.seed;
    return s.str();
}

}  // namespace al::bench
