#include "al/bench/dataset.hpp"
#include "al/bench/experiments.hpp"
#include "al/registry.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

template <typename Write>
void emit(const std::string& path, Write&& write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw al::DataError("cannot write " + path);
    write(out);
    if (!out) throw al::DataError("failed writing " + path);
}

std::string with_dataset(std::string line, const std::string& dataset) {
    return line + " dataset=" + (dataset.empty() ? "synthetic" : dataset);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Active learning benchmark harness"};
    app.require_subcommand(1);

    al::bench::CurveConfig curve;
    std::string curve_data, curve_out;
    auto* curve_cmd = app.add_subcommand("curve", "Learning curve of one strategy with a simulated oracle");
    curve_cmd->add_option("--dataset", curve_data, "Dataset CSV")->required();
    curve_cmd->add_option("--strategy", curve.strategy, "Query strategy")->capture_default_str();
    curve_cmd->add_option("--estimator", curve.estimator, "Estimator")->capture_default_str();
    curve_cmd->add_option("--initial", curve.initial, "Initially labeled rows")->capture_default_str()->check(CLI::PositiveNumber);
    curve_cmd->add_option("--queries", curve.queries, "Query rounds")->capture_default_str()->check(CLI::NonNegativeNumber);
    curve_cmd->add_option("--batch", curve.batch, "Rows per query round")->capture_default_str()->check(CLI::PositiveNumber);
    curve_cmd->add_option("--seed", curve.seed, "Split and strategy seed")->capture_default_str();
    curve_cmd->add_option("--output", curve_out, "Result CSV (stdout when omitted)");

    al::bench::RuntimeConfig runtime;
    std::string runtime_data, runtime_out;
    Eigen::Index synthetic_rows = 500;
    auto* runtime_cmd = app.add_subcommand("runtime", "Mean and spread of query + teach time per strategy");
    runtime_cmd->add_option("--strategies", runtime.strategies, "Comma-separated strategy names")
        ->delimiter(',')
        ->capture_default_str();
    runtime_cmd->add_option("--repeats", runtime.repeats, "Timed runs per strategy")->capture_default_str()->check(CLI::PositiveNumber);
    runtime_cmd->add_option("--queries", runtime.queries, "Queries per run")->capture_default_str()->check(CLI::PositiveNumber);
    runtime_cmd->add_option("--initial", runtime.initial, "Initially labeled rows")->capture_default_str()->check(CLI::PositiveNumber);
    runtime_cmd->add_option("--estimator", runtime.estimator, "Estimator")->capture_default_str();
    runtime_cmd->add_option("--seed", runtime.seed, "Split seed")->capture_default_str();
    runtime_cmd->add_option("--dataset", runtime_data, "Dataset CSV (two-Gaussian data when omitted)");
    runtime_cmd->add_option("--synthetic-rows", synthetic_rows, "Rows of the default dataset")->capture_default_str()->check(CLI::PositiveNumber);
    runtime_cmd->add_option("--output", runtime_out, "Result CSV (stdout when omitted)");

    std::string kind = "two-gaussians", synth_out;
    Eigen::Index synth_rows = 400;
    std::uint64_t synth_seed = 7;
    auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic dataset");
    synth_cmd->add_option("--kind", kind, "Dataset family")->capture_default_str()->check(CLI::IsMember({"two-gaussians"}));
    synth_cmd->add_option("--rows", synth_rows, "Row count")->capture_default_str()->check(CLI::PositiveNumber);
    synth_cmd->add_option("--seed", synth_seed, "Generator seed")->capture_default_str();
    synth_cmd->add_option("--output", synth_out, "Dataset CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kUsageError;
    }

    try {
        if (*curve_cmd) {
            const auto data = al::bench::load_csv(curve_data);
            const auto result = al::bench::run_learning_curve(data, curve);
            emit(curve_out, [&](std::ostream& out) {
                al::bench::write_curve_csv(result, with_dataset(al::bench::describe(curve), curve_data), out);
            });
        } else if (*runtime_cmd) {
            const auto data = runtime_data.empty() ? al::bench::two_gaussians(synthetic_rows, runtime.seed)
                                                   : al::bench::load_csv(runtime_data);
            const auto result = al::bench::run_runtime_bench(data, runtime);
            emit(runtime_out, [&](std::ostream& out) {
                al::bench::write_runtime_csv(result, with_dataset(al::bench::describe(runtime), runtime_data), out);
            });
        } else if (*synth_cmd) {
            al::bench::write_csv(al::bench::two_gaussians(synth_rows, synth_seed), synth_out);
        }
    } catch (const al::UnknownNameError& e) {
        std::cerr << "albench: " << e.what() << '\n';
        return kUsageError;
    } catch (const al::DataError& e) {
        std::cerr << "albench: " << e.what() << '\n';
        return kDataError;
    } catch (const al::ContractError& e) {
        std::cerr << "albench: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "albench: " << e.what() << '\n';
        return kDataError;
    }
    return 0;
}
