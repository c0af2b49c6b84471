#include "elect/rules.hpp"

#include <algorithm>
#include <set>

#include "elect/baselines.hpp"
#include "scan.hpp"

namespace elect {

const char* rule_name(RuleId rule) {
    switch (rule) {
        case RuleId::ODH: return "odh";
        case RuleId::OODH: return "oodh";
        case RuleId::AV: return "av";
        case RuleId::SAV: return "sav";
        case RuleId::MAV: return "mav";
        case RuleId::RAV: return "rav";
        case RuleId::PAV: return "pav";
        case RuleId::CCHA: return "ccha";
        case RuleId::CCRA: return "ccra";
        case RuleId::MHA: return "mha";
        case RuleId::MRA: return "mra";
    }
    return "?";
}

std::optional<RuleId> rule_from_name(const std::string& name) {
    for (RuleId rule : all_rules())
        if (name == rule_name(rule)) return rule;
    return std::nullopt;
}

const std::vector<RuleId>& all_rules() {
    static const std::vector<RuleId> rules = {
        RuleId::ODH,  RuleId::OODH, RuleId::AV,   RuleId::SAV, RuleId::MAV, RuleId::RAV,
        RuleId::PAV,  RuleId::CCHA, RuleId::CCRA, RuleId::MHA, RuleId::MRA};
    return rules;
}

namespace detail {

long long checked_subset_count(int m, int s, long long cap) {
    long long subsets = 1;
    for (int i = 1; i <= s; ++i) {
        subsets = subsets * (m - s + i) / i;  // exact: prefix products are binomials
        if (subsets > cap)
            throw InstanceTooLarge("choosing " + std::to_string(s) + " of " + std::to_string(m) +
                                   " candidates exceeds the subset cap of " + std::to_string(cap));
    }
    return subsets;
}

ScanResult scan_subsets(const Election& e, long long subset_cap, int tie_cap, Direction dir,
                        const std::function<Rational(const CandidateSet&)>& value,
                        const std::function<std::optional<Rational>(const CandidateSet&)>& bound) {
    int m = e.num_candidates();
    int s = e.seats();
    checked_subset_count(m, s, subset_cap);

    ScanResult result;
    bool have_best = false;
    for_each_combination(m, s, [&](const std::vector<int>& comb) {
        CandidateSet w(m);
        for (int c : comb) w.insert(c);
        if (have_best && bound) {
            // Skip only subsets that are strictly beaten, never potential ties.
            if (auto b = bound(w)) {
                bool beaten = dir == Direction::Maximize ? *b < result.best : *b > result.best;
                if (beaten) return;
            }
        }
        Rational v = value(w);
        bool better =
            !have_best || (dir == Direction::Maximize ? v > result.best : v < result.best);
        if (better) {
            result.best = v;
            result.sets.assign(1, w);
            result.truncated = false;
            have_best = true;
        } else if (v == result.best) {
            if (static_cast<int>(result.sets.size()) < tie_cap)
                result.sets.push_back(w);
            else
                result.truncated = true;
        }
    });
    return result;
}

namespace {

// All distinct final winner sets reachable when every argmax branch may be
// taken. Branches are explored deterministic-pick-first so the truncated
// prefix always contains the deterministic outcome.
void enumerate_branches(
    const Election& e, const CandidateSet& elected, int remaining,
    const std::function<std::vector<std::pair<CandidateId, Rational>>(const CandidateSet&)>& values_of,
    std::set<CandidateSet>* visited, std::set<CandidateSet>* results, int tie_cap,
    bool* truncated) {
    if (remaining == 0) {
        if (results->count(elected)) return;
        if (static_cast<int>(results->size()) < tie_cap)
            results->insert(elected);
        else
            *truncated = true;
        return;
    }
    if (!visited->insert(elected).second) return;
    auto values = values_of(elected);
    Rational best;
    bool first = true;
    for (const auto& [c, v] : values) {
        if (first || v > best) best = v;
        first = false;
    }
    for (const auto& [c, v] : values) {
        if (v != best) continue;
        CandidateSet next = elected;
        next.insert(c);
        enumerate_branches(e, next, remaining - 1, values_of, visited, results, tie_cap,
                           truncated);
    }
}

}  // namespace

WinnerReport run_sequential(
    const Election& e, RuleId rule, const RuleOptions& options,
    const std::function<std::vector<std::pair<CandidateId, Rational>>(const CandidateSet&)>&
        round_values) {
    WinnerReport report;
    report.rule = rule;
    report.tie_mode = options.ties;

    CandidateSet elected(e.num_candidates());
    for (int round = 1; round <= e.seats(); ++round) {
        IterationRecord rec;
        rec.iteration = round;
        rec.considered = round_values(elected);
        for (const auto& [c, v] : rec.considered) {
            if (rec.chosen < 0 || v > rec.chosen_value) {
                rec.chosen = c;
                rec.chosen_value = v;
            }
        }
        elected.insert(rec.chosen);
        report.trace.push_back(std::move(rec));
    }
    report.value = report.trace.back().chosen_value;

    if (options.ties == TieMode::Deterministic) {
        report.winner_sets.push_back(elected);
        return report;
    }
    std::set<CandidateSet> visited;
    std::set<CandidateSet> results;
    bool truncated = false;
    enumerate_branches(e, CandidateSet(e.num_candidates()), e.seats(), round_values, &visited,
                       &results, options.tie_cap, &truncated);
    report.winner_sets.assign(results.begin(), results.end());
    report.truncated = truncated;
    return report;
}

}  // namespace detail

namespace {

SupportOptions support_options(const RuleOptions& options) {
    SupportOptions so;
    so.method = options.maxmin_method;
    so.hall_cap = options.hall_cap;
    return so;
}

}  // namespace

WinnerReport odh(const Election& e, const RuleOptions& options) {
    SupportOptions so = support_options(options);
    auto round_values = [&](const CandidateSet& elected) {
        std::vector<std::pair<CandidateId, Rational>> out;
        for (CandidateId c = 0; c < e.num_candidates(); ++c) {
            if (elected.contains(c)) continue;
            CandidateSet trial = elected;
            trial.insert(c);
            out.emplace_back(c, maxmin_support(e, trial, so).value);
        }
        return out;
    };
    return detail::run_sequential(e, RuleId::ODH, options, round_values);
}

WinnerReport oodh(const Election& e, const RuleOptions& options) {
    SupportOptions so = support_options(options);
    std::vector<Count> singleton(static_cast<size_t>(e.num_candidates()));
    for (CandidateId c = 0; c < e.num_candidates(); ++c)
        singleton[static_cast<size_t>(c)] = e.approvals(c);

    // Upper bound: the least-approved member already caps the value.
    auto bound = [&](const CandidateSet& w) -> std::optional<Rational> {
        Count least = -1;
        for (CandidateId c : w.members()) {
            Count a = singleton[static_cast<size_t>(c)];
            if (least < 0 || a < least) least = a;
        }
        return Rational(least);
    };
    auto value = [&](const CandidateSet& w) { return maxmin_support(e, w, so).value; };

    detail::ScanResult scan = detail::scan_subsets(e, options.subset_cap, options.tie_cap,
                                                   detail::Direction::Maximize, value, bound);

    WinnerReport report;
    report.rule = RuleId::OODH;
    report.tie_mode = options.ties;
    report.value = scan.best;
    if (options.ties == TieMode::Deterministic)
        report.winner_sets.push_back(scan.sets.front());
    else {
        report.winner_sets = std::move(scan.sets);
        report.truncated = scan.truncated;
    }
    return report;
}

WinnerReport run_rule(RuleId rule, const Election& e, const RuleOptions& options) {
    switch (rule) {
        case RuleId::ODH: return odh(e, options);
        case RuleId::OODH: return oodh(e, options);
        case RuleId::AV: return av(e, options);
        case RuleId::SAV: return sav(e, options);
        case RuleId::MAV: return mav(e, options);
        case RuleId::RAV: return rav(e, options);
        case RuleId::PAV: return pav(e, options);
        case RuleId::CCHA: return ccha(e, options);
        case RuleId::CCRA: return ccra(e, options);
        case RuleId::MHA: return mha(e, options);
        case RuleId::MRA: return mra(e, options);
    }
    throw ElectError("unknown rule");
}

}  // namespace elect
