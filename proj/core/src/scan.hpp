#pragma once

#include <functional>
#include <type_traits>
#include <utility>
#include <vector>

#include "elect/rules.hpp"

namespace elect::detail {

// Number of size-s subsets of m candidates; throws InstanceTooLarge beyond cap.
long long checked_subset_count(int m, int s, long long cap);

// All size-s subsets of {0..m-1} in canonical (lexicographic member-list)
// order. A callback returning bool may stop the walk early by returning
// false.
template <class Fn>
void for_each_combination(int m, int s, Fn&& fn) {
    std::vector<int> comb(static_cast<size_t>(s));
    for (int i = 0; i < s; ++i) comb[static_cast<size_t>(i)] = i;
    for (;;) {
        const std::vector<int>& view = comb;
        if constexpr (std::is_same_v<std::invoke_result_t<Fn&, const std::vector<int>&>, bool>) {
            if (!fn(view)) break;
        } else {
            fn(view);
        }
        int i = s - 1;
        while (i >= 0 && comb[static_cast<size_t>(i)] == m - s + i) --i;
        if (i < 0) break;
        ++comb[static_cast<size_t>(i)];
        for (int j = i + 1; j < s; ++j) comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
    }
}

enum class Direction { Maximize, Minimize };

struct ScanResult {
    Rational best;
    std::vector<CandidateSet> sets;  // arg-best family, canonical order, capped
    bool truncated = false;
};

// Exhaustive arg-best scan over all size-s subsets. `bound`, when it returns
// a value, is a one-sided bound (upper for Maximize, lower for Minimize) that
// lets a subset be skipped only when it is strictly beaten, so the tie family
// is never affected.
ScanResult scan_subsets(
    const Election& e, long long subset_cap, int tie_cap, Direction dir,
    const std::function<Rational(const CandidateSet&)>& value,
    const std::function<std::optional<Rational>(const CandidateSet&)>& bound = nullptr);

// S-round greedy argmax selection: fills the deterministic trace (every
// candidate's value each round, smallest-index argmax chosen); in enumerated
// mode also explores every argmax branch and reports all distinct final sets
// in canonical order.
WinnerReport run_sequential(
    const Election& e, RuleId rule, const RuleOptions& options,
    const std::function<std::vector<std::pair<CandidateId, Rational>>(const CandidateSet&)>& round_values);

}  // namespace elect::detail
