#pragma once

#include "al/types.hpp"

#include <cstdint>
#include <functional>
#include <span>

namespace al {

/// Utility scores plus an optional eligibility mask. Rows whose mask entry is
/// zero are never selected; an empty mask means every row is eligible.
struct Utilities {
    UtilityArray values;
    std::vector<std::uint8_t> eligible;

    Utilities() = default;
    Utilities(UtilityArray v) : values(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    Utilities(UtilityArray v, std::vector<std::uint8_t> mask)
        : values(std::move(v)), eligible(std::move(mask)) {}
};

using Selector =
    std::function<IndexList(const UtilityArray&, Index, std::span<const std::uint8_t>)>;

/// Indices of the n largest utilities in descending order, ties broken by
/// lower index. Throws ContractError on NaN or when n is not in
/// [1, number of eligible rows].
IndexList select_argmax(const UtilityArray& utilities, Index n,
                        std::span<const std::uint8_t> eligible = {});

/// Like select_argmax, but equal utilities are ordered by a permutation drawn
/// from `seed`.
IndexList select_shuffled_argmax(const UtilityArray& utilities, Index n, std::uint64_t seed,
                                 std::span<const std::uint8_t> eligible = {});

Selector argmax_selector();
Selector shuffled_argmax_selector(std::uint64_t seed);

}  // namespace al
