#include "al/types.hpp"

#include <string>

namespace al {

Index target_rows(const Targets& y) {
    return std::visit(
        [](const auto& v) -> Index {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, LabelArray>) {
                return static_cast<Index>(v.size());
            } else {
                return v.rows();
            }
        },
        y);
}

Targets append_targets(const Targets& a, const Targets& b) {
    if (a.index() != b.index()) {
        throw DataError("cannot append targets of different kinds");
    }
    if (const auto* la = std::get_if<LabelArray>(&a)) {
        LabelArray out = *la;
        const auto& lb = std::get<LabelArray>(b);
        out.insert(out.end(), lb.begin(), lb.end());
        return out;
    }
    if (const auto* ra = std::get_if<RealVector>(&a)) {
        const auto& rb = std::get<RealVector>(b);
        RealVector out(ra->size() + rb.size());
        out << *ra, rb;
        return out;
    }
    const auto& ma = std::get<MultilabelMatrix>(a);
    const auto& mb = std::get<MultilabelMatrix>(b);
    if (ma.rows() > 0 && mb.rows() > 0 && ma.cols() != mb.cols()) {
        throw DataError("multilabel column counts differ");
    }
    if (ma.rows() == 0) return mb;
    if (mb.rows() == 0) return ma;
    MultilabelMatrix out(ma.rows() + mb.rows(), ma.cols());
    out << ma, mb;
    return out;
}

Targets take_targets(const Targets& y, const IndexList& rows) {
    if (const auto* l = std::get_if<LabelArray>(&y)) {
        LabelArray out;
        out.reserve(rows.size());
        for (Index r : rows) out.push_back((*l)[static_cast<std::size_t>(r)]);
        return out;
    }
    if (const auto* r = std::get_if<RealVector>(&y)) {
        RealVector out(static_cast<Index>(rows.size()));
        for (std::size_t i = 0; i < rows.size(); ++i) out[static_cast<Index>(i)] = (*r)[rows[i]];
        return out;
    }
    const auto& m = std::get<MultilabelMatrix>(y);
    MultilabelMatrix out(static_cast<Index>(rows.size()), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Index>(i)) = m.row(rows[i]);
    return out;
}

FeatureMatrix take_rows(const FeatureMatrix& X, const IndexList& rows) {
    FeatureMatrix out(static_cast<Index>(rows.size()), X.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < 0 || rows[i] >= X.rows()) {
            throw ContractError("row index " + std::to_string(rows[i]) + " out of range");
        }
        out.row(static_cast<Index>(i)) = X.row(rows[i]);
    }
    return out;
}

FeatureMatrix vstack(const FeatureMatrix& top, const FeatureMatrix& bottom) {
    if (top.rows() == 0) return bottom;
    if (bottom.rows() == 0) return top;
    if (top.cols() != bottom.cols()) {
        throw DataError("feature count mismatch: " + std::to_string(top.cols()) + " vs " +
                        std::to_string(bottom.cols()));
    }
    FeatureMatrix out(top.rows() + bottom.rows(), top.cols());
    out << top, bottom;
    return out;
}

void require_finite(const FeatureMatrix& X, const char* what) {
    if (!X.allFinite()) {
        throw DataError(std::string(what) + " contains non-finite values");
    }
}

void require_paired(const FeatureMatrix& X, const Targets& y) {
    if (X.rows() != target_rows(y)) {
        throw DataError("row count mismatch: " + std::to_string(X.rows()) + " instances vs " +
                        std::to_string(target_rows(y)) + " targets");
    }
}

QuerySelection make_selection(const FeatureMatrix& pool, IndexList indices) {
    QuerySelection sel;
    sel.instances = take_rows(pool, indices);
    sel.indices = std::move(indices);
    return sel;
}

}  // namespace al
