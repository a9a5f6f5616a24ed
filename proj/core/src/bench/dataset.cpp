#include "al/bench/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

namespace al::bench {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

bool is_label_column(std::string_view name) {
    return name == "label" || name.rfind("label_", 0) == 0;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
    throw DataError(source + ":" + std::to_string(line) + ": " + what);
}

template <class T>
T parse_number(std::string_view field, const std::string& source, std::size_t line,
               const std::string& column) {
    T value{};
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (field.empty() || ec != std::errc{} || ptr != end) {
        fail(source, line, "column '" + column + "' is not numeric: '" + std::string(field) + "'");
    }
    return value;
}

}  // namespace

Dataset parse_csv(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty() || line.front() == '#') continue;
        for (auto field : split(line)) header.emplace_back(field);
        break;
    }
    if (header.empty()) throw DataError(source + ": empty file");

    std::vector<std::size_t> feature_cols;
    std::vector<std::size_t> label_cols;
    Dataset data;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (is_label_column(header[c])) {
            label_cols.push_back(c);
            data.label_names.push_back(header[c]);
        } else {
            feature_cols.push_back(c);
            data.feature_names.push_back(header[c]);
        }
    }
    if (label_cols.empty()) fail(source, line_no, "header has no 'label' or 'label_*' column");
    if (feature_cols.empty()) fail(source, line_no, "header has no feature columns");
    const bool multilabel = label_cols.size() > 1;
    if (multilabel && std::find(data.label_names.begin(), data.label_names.end(), "label") !=
                          data.label_names.end()) {
        fail(source, line_no, "mixes 'label' with 'label_*' columns");
    }

    std::vector<double> features;
    std::vector<int> labels;
    Index rows = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty() || line.front() == '#') continue;
        const auto fields = split(line);
        if (fields.size() != header.size()) {
            fail(source, line_no,
                 "expected " + std::to_string(header.size()) + " fields, found " +
                     std::to_string(fields.size()));
        }
        for (std::size_t c : feature_cols) {
            const double v = parse_number<double>(fields[c], source, line_no, header[c]);
            if (!std::isfinite(v)) fail(source, line_no, "column '" + header[c] + "' is not finite");
            features.push_back(v);
        }
        for (std::size_t c : label_cols) {
            const int v = parse_number<int>(fields[c], source, line_no, header[c]);
            if (v < 0) fail(source, line_no, "negative label in column '" + header[c] + "'");
            if (multilabel && v > 1) fail(source, line_no, "multilabel entries must be 0 or 1");
            labels.push_back(v);
        }
        ++rows;
    }
    if (rows == 0) throw DataError(source + ": no data rows");

    const auto nf = static_cast<Index>(feature_cols.size());
    const auto nl = static_cast<Index>(label_cols.size());
    data.X = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
        features.data(), rows, nf);
    if (multilabel) {
        data.y = MultilabelMatrix(
            Eigen::Map<const Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
                labels.data(), rows, nl));
    } else {
        data.y = LabelArray(labels.begin(), labels.end());
    }
    return data;
}

Dataset load_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());
    return parse_csv(in, path.string());
}

void write_csv(const Dataset& data, std::ostream& out) {
    out << std::setprecision(17);
    bool first = true;
    for (const auto& name : data.feature_names) {
        out << (first ? "" : ",") << name;
        first = false;
    }
    for (const auto& name : data.label_names) out << ',' << name;
    out << '\n';
    for (Index i = 0; i < data.X.rows(); ++i) {
        for (Index j = 0; j < data.X.cols(); ++j) out << (j == 0 ? "" : ",") << data.X(i, j);
        if (const auto* labels = std::get_if<LabelArray>(&data.y)) {
            out << ',' << (*labels)[static_cast<std::size_t>(i)];
        } else {
            const auto& m = std::get<MultilabelMatrix>(data.y);
            for (Index j = 0; j < m.cols(); ++j) out << ',' << m(i, j);
        }
        out << '\n';
    }
}

void write_csv(const Dataset& data, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path.string());
    write_csv(data, out);
}

Dataset two_gaussians(Index rows, std::uint64_t seed) {
    if (rows < 2) throw ContractError("two_gaussians needs at least two rows");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    Dataset data;
    data.X.resize(rows, 2);
    LabelArray y(static_cast<std::size_t>(rows));
    for (Index i = 0; i < rows; ++i) {
        const int label = static_cast<int>(i % 2);
        data.X(i, 0) = (label == 0 ? -2.0 : 2.0) + noise(rng);
        data.X(i, 1) = noise(rng);
        y[static_cast<std::size_t>(i)] = label;
    }
    data.y = std::move(y);
    data.feature_names = {"x0", "x1"};
    data.label_names = {"label"};
    return data;
}

}  // namespace al::bench
