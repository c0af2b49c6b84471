#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elect/election.hpp"
#include "elect/rational.hpp"
#include "elect/support.hpp"

namespace elect {

inline constexpr long long kDefaultSubsetCap = 1'000'000;
inline constexpr int kDefaultTieCap = 64;

enum class TieMode { Deterministic, Enumerated };

enum class RuleId { ODH, OODH, AV, SAV, MAV, RAV, PAV, CCHA, CCRA, MHA, MRA };

// CLI-facing rule names: "odh", "oodh", "av", ...
const char* rule_name(RuleId rule);
std::optional<RuleId> rule_from_name(const std::string& name);
// All rules in presentation order.
const std::vector<RuleId>& all_rules();

// One sequential-selection round: every still-unelected candidate's value and
// the pick made by the deterministic branch.
struct IterationRecord {
    int iteration = 0;  // 1-based
    std::vector<std::pair<CandidateId, Rational>> considered;
    CandidateId chosen = -1;
    Rational chosen_value;
};

struct WinnerReport {
    RuleId rule{};
    TieMode tie_mode = TieMode::Deterministic;
    // Deterministic mode: exactly one set. Enumerated mode: every winner set
    // reachable under some tie-breaking, in canonical order, capped by
    // tie_cap (truncated flags the cap).
    std::vector<CandidateSet> winner_sets;
    bool all_tied = false;   // coverage/assignment rules: every S-subset ties
    bool truncated = false;  // tie family hit the cap
    // Objective value of the winning set(s) for subset-scan rules (max-min
    // support, score, misrepresentation count, max distance).
    std::optional<Rational> value;
    // Per-iteration values for sequential rules (deterministic branch).
    std::vector<IterationRecord> trace;

    // Deterministic winner set (first in canonical order).
    const CandidateSet& winners() const { return winner_sets.front(); }
};

struct RuleOptions {
    TieMode ties = TieMode::Deterministic;
    long long subset_cap = kDefaultSubsetCap;
    int tie_cap = kDefaultTieCap;
    int hall_cap = kDefaultHallCap;
    MaxMinMethod maxmin_method = MaxMinMethod::Auto;
};

// Iterative max-min rule: S rounds, each electing a candidate that maximizes
// the best achievable minimum support of the elected set extended by one.
WinnerReport odh(const Election& e, const RuleOptions& options = {});

// Global max-min rule: argmax of the best achievable minimum support over all
// S-subsets. Throws InstanceTooLarge above the subset cap.
WinnerReport oodh(const Election& e, const RuleOptions& options = {});

// Dispatch by rule id (covers the baseline rules too).
WinnerReport run_rule(RuleId rule, const Election& e, const RuleOptions& options = {});

}  // namespace elect
