#include "al/selectors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace al {

namespace {

IndexList eligible_rows(const UtilityArray& u, Index n, std::span<const std::uint8_t> eligible) {
    if (!eligible.empty() && static_cast<Index>(eligible.size()) != u.size()) {
        throw ContractError("eligibility mask length differs from utility length");
    }
    IndexList rows;
    rows.reserve(static_cast<std::size_t>(u.size()));
    for (Index i = 0; i < u.size(); ++i) {
        if (std::isnan(u[i])) throw ContractError("utility " + std::to_string(i) + " is NaN");
        if (eligible.empty() || eligible[static_cast<std::size_t>(i)] != 0) rows.push_back(i);
    }
    if (n < 1 || n > static_cast<Index>(rows.size())) {
        throw ContractError("cannot select " + std::to_string(n) + " of " +
                            std::to_string(rows.size()) + " candidates");
    }
    return rows;
}

}  // namespace

IndexList select_argmax(const UtilityArray& utilities, Index n,
                        std::span<const std::uint8_t> eligible) {
    IndexList rows = eligible_rows(utilities, n, eligible);
    std::partial_sort(rows.begin(), rows.begin() + n, rows.end(), [&](Index a, Index b) {
        return utilities[a] > utilities[b] || (utilities[a] == utilities[b] && a < b);
    });
    rows.resize(static_cast<std::size_t>(n));
    return rows;
}

IndexList select_shuffled_argmax(const UtilityArray& utilities, Index n, std::uint64_t seed,
                                 std::span<const std::uint8_t> eligible) {
    IndexList rows = eligible_rows(utilities, n, eligible);
    std::mt19937_64 rng(seed);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::stable_sort(rows.begin(), rows.end(),
                     [&](Index a, Index b) { return utilities[a] > utilities[b]; });
    rows.resize(static_cast<std::size_t>(n));
    return rows;
}

Selector argmax_selector() {
    return [](const UtilityArray& u, Index n, std::span<const std::uint8_t> eligible) {
        return select_argmax(u, n, eligible);
    };
}

Selector shuffled_argmax_selector(std::uint64_t seed) {
    return [seed](const UtilityArray& u, Index n, std::span<const std::uint8_t> eligible) {
        return select_shuffled_argmax(u, n, seed, eligible);
    };
}

}  // namespace al
