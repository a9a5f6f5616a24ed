#pragma once

#include "al/types.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace al::bench {

struct Dataset {
    FeatureMatrix X;
    /// LabelArray for a single `label` column, MultilabelMatrix when the
    /// header has several `label_*` columns.
    Targets y;
    std::vector<std::string> feature_names;
    std::vector<std::string> label_names;

    Index rows() const { return X.rows(); }
};

/// Parses a dataset CSV: a header row, numeric feature columns, and label
/// columns named `label` or `label_*`. Throws DataError naming the offending
/// line on malformed input.
Dataset load_csv(const std::filesystem::path& path);
Dataset parse_csv(std::istream& in, const std::string& source = "<stream>");

void write_csv(const Dataset& data, const std::filesystem::path& path);
void write_csv(const Dataset& data, std::ostream& out);

/// Two isotropic unit-variance Gaussian blobs centred at (-2, 0) and (+2, 0);
/// row i belongs to class i % 2.
Dataset two_gaussians(Index rows, std::uint64_t seed);

}  // namespace al::bench
