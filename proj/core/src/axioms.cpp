#include "elect/axioms.hpp"

#include <algorithm>

#include "elect/baselines.hpp"
#include "elect/divisor.hpp"
#include "scan.hpp"

namespace elect {

const char* axiom_name(AxiomId axiom) {
    switch (axiom) {
        case AxiomId::JR: return "jr";
        case AxiomId::EJR: return "ejr";
        case AxiomId::LowerQuota: return "lower-quota";
        case AxiomId::HouseMonotonicity: return "house-mono";
        case AxiomId::PopulationMonotonicity: return "pop-mono";
        case AxiomId::ClosedListEquivalence: return "closed-list";
    }
    return "?";
}

std::optional<AxiomId> axiom_from_name(const std::string& name) {
    for (AxiomId axiom : all_axioms())
        if (name == axiom_name(axiom)) return axiom;
    return std::nullopt;
}

const std::vector<AxiomId>& all_axioms() {
    static const std::vector<AxiomId> axioms = {
        AxiomId::JR,       AxiomId::EJR,     AxiomId::LowerQuota, AxiomId::HouseMonotonicity,
        AxiomId::PopulationMonotonicity, AxiomId::ClosedListEquivalence};
    return axioms;
}

namespace {

void require_seat_count(const Election& e, const CandidateSet& w) {
    if (w.size() != e.seats())
        throw SeatsMismatch("winner set has " + std::to_string(w.size()) + " members, needs " +
                            std::to_string(e.seats()));
}

std::string label_set(const Election& e, const CandidateSet& s) {
    std::string out = "{";
    for (CandidateId c : s.members()) {
        if (out.size() > 1) out += ", ";
        out += e.label_of(c);
    }
    return out + "}";
}

// Force tie enumeration while preserving the caller's caps.
RuleOptions enumerated(RuleOptions options) {
    options.ties = TieMode::Enumerated;
    return options;
}

// Does any outcome of `report` intersect g? all_tied means every S-subset is
// an outcome, so any non-empty g is hit whenever S >= 1.
bool some_outcome_hits(const WinnerReport& report, const CandidateSet& g) {
    if (report.all_tied) return !g.empty();
    for (const auto& w : report.winner_sets)
        if (w.intersects(g)) return true;
    return false;
}

}  // namespace

AxiomVerdict check_jr(const Election& e, const CandidateSet& w) {
    require_seat_count(e, w);
    AxiomVerdict verdict;
    verdict.axiom = AxiomId::JR;
    // A violating ballot family is fully determined by a common candidate c
    // outside W: take every ballot that contains c and misses W.
    for (CandidateId c = 0; c < e.num_candidates(); ++c) {
        if (w.contains(c)) continue;
        Count mass = 0;
        std::vector<CandidateSet> family;
        for (const auto& [ballot, count] : e.profile()) {
            if (!ballot.contains(c) || ballot.intersects(w)) continue;
            mass += count;
            family.push_back(ballot);
        }
        if (mass * e.seats() >= e.total_voters() && !family.empty()) {
            verdict.status = VerdictStatus::Violated;
            CandidateSet group(e.num_candidates());
            group.insert(c);
            verdict.group = group;
            verdict.family = std::move(family);
            verdict.quota = Rational(e.total_voters(), e.seats());
            verdict.achieved = 0;
            verdict.detail = std::to_string(mass) + " voters back " + e.label_of(c) +
                             " yet hold no winner (threshold " +
                             decimal_string(*verdict.quota) + ")";
            return verdict;
        }
    }
    verdict.detail = "every cohesive 1-group holds a winner";
    return verdict;
}

AxiomVerdict check_ejr(const Election& e, const CandidateSet& w, const AxiomOptions& options) {
    require_seat_count(e, w);
    AxiomVerdict verdict;
    verdict.axiom = AxiomId::EJR;
    int m = e.num_candidates();
    int top = std::min<int>(e.seats(), options.max_ell);
    for (int ell = 1; ell <= top; ++ell) {
        try {
            detail::checked_subset_count(m, ell, options.subset_cap);
        } catch (const InstanceTooLarge&) {
            verdict.status = VerdictStatus::Inconclusive;
            verdict.detail = "group size " + std::to_string(ell) +
                             " needs more than the subset cap allows; sizes below it hold";
            return verdict;
        }
        bool found = false;
        detail::for_each_combination(m, ell, [&](const std::vector<int>& comb) -> bool {
            CandidateSet t(m);
            for (int c : comb) t.insert(c);
            Count mass = 0;
            Count best_held = 0;
            std::vector<CandidateSet> family;
            for (const auto& [ballot, count] : e.profile()) {
                if (!t.is_subset_of(ballot)) continue;
                Count held = ballot.intersect(w).size();
                if (held >= ell) continue;
                mass += count;
                best_held = std::max(best_held, held);
                family.push_back(ballot);
            }
            if (mass * e.seats() >= static_cast<Count>(ell) * e.total_voters() &&
                !family.empty()) {
                verdict.status = VerdictStatus::Violated;
                verdict.group = t;
                verdict.family = std::move(family);
                verdict.quota = Rational(static_cast<Count>(ell) * e.total_voters(), e.seats());
                verdict.quota_floor = ell;
                verdict.achieved = best_held;
                verdict.detail = std::to_string(mass) + " voters share " + label_set(e, t) +
                                 " yet none holds " + std::to_string(ell) + " winners";
                found = true;
                return false;
            }
            return true;
        });
        if (found) return verdict;
    }
    verdict.detail = "no cohesive group is underrepresented up to size " + std::to_string(top);
    return verdict;
}

AxiomVerdict check_lower_quota(const Election& e, const CandidateSet& w,
                               const AxiomOptions& options) {
    require_seat_count(e, w);
    AxiomVerdict verdict;
    verdict.axiom = AxiomId::LowerQuota;
    const auto& profile = e.profile();
    int n = static_cast<int>(profile.size());
    if (n > options.max_ballot_types) {
        verdict.status = VerdictStatus::Inconclusive;
        verdict.detail = std::to_string(n) + " ballot types exceed the family enumeration cap of " +
                         std::to_string(options.max_ballot_types);
        return verdict;
    }
    // Every family of ballot types; the largest common set is the only
    // candidate group worth testing for it.
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Count mass = 0;
        CandidateSet common = e.full_set();
        CandidateSet united(e.num_candidates());
        std::vector<CandidateSet> family;
        for (int i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            const auto& [ballot, count] = profile[static_cast<size_t>(i)];
            mass += count;
            common = common.intersect(ballot);
            united = united.unite(ballot);
            family.push_back(ballot);
        }
        Count quota_floor = mass * e.seats() / e.total_voters();
        if (quota_floor < 1 || common.size() < quota_floor) continue;
        Count achieved = w.intersect(united).size();
        if (achieved >= quota_floor) continue;
        verdict.status = VerdictStatus::Violated;
        verdict.group = common;
        verdict.family = std::move(family);
        verdict.quota = Rational(mass * e.seats(), e.total_voters());
        verdict.quota_floor = quota_floor;
        verdict.achieved = achieved;
        verdict.detail = "family mass " + std::to_string(mass) + " earns " +
                         std::to_string(quota_floor) + " seats, got " + std::to_string(achieved);
        return verdict;
    }
    verdict.detail = "every ballot-type family gets its floored quota";
    return verdict;
}

AxiomVerdict check_house_monotonicity(RuleId rule, const Election& e,
                                      const AxiomOptions& options) {
    if (e.seats() >= e.num_candidates())
        throw PreconditionFailed("a seat can only be added while S < |C|");
    Election bigger = with_seats(e, e.seats() + 1);

    WinnerReport before, after;
    try {
        before = run_rule(rule, e, options.rule_options);
        after = run_rule(rule, bigger, options.rule_options);
    } catch (const InstanceTooLarge& err) {
        throw RuleCannotRun(std::string(rule_name(rule)) + ": " + err.what());
    }

    AxiomVerdict verdict;
    verdict.axiom = AxiomId::HouseMonotonicity;
    verdict.counter_election = bigger;
    verdict.winners_before = before.winner_sets;
    verdict.winners_after = after.winner_sets;

    if (options.rule_options.ties == TieMode::Deterministic) {
        // Compare the two single outputs literally.
        if (before.winners().is_subset_of(after.winners())) {
            verdict.detail = "the deterministic output survives the extra seat";
            return verdict;
        }
        verdict.status = VerdictStatus::Violated;
        verdict.detail = "the deterministic output at " + std::to_string(e.seats()) +
                         " seats loses a member at " + std::to_string(e.seats() + 1);
        return verdict;
    }

    // Enumerated mode: violated only when no outcome pair is nested. all_tied
    // at either size guarantees a nested pair, since every S-subset (resp.
    // (S+1)-subset) is an outcome there.
    bool nested = before.all_tied || after.all_tied;
    for (const auto& w : before.winner_sets) {
        if (nested) break;
        for (const auto& bigger_w : after.winner_sets)
            if (w.is_subset_of(bigger_w)) {
                nested = true;
                break;
            }
    }
    if (nested) {
        verdict.detail = "an S-outcome survives into some (S+1)-outcome";
        return verdict;
    }
    if (before.truncated || after.truncated) {
        verdict.status = VerdictStatus::Inconclusive;
        verdict.detail = "no nested pair among the enumerated outcomes, but a tie family was cut";
        return verdict;
    }
    verdict.status = VerdictStatus::Violated;
    verdict.detail = "no outcome at " + std::to_string(e.seats()) +
                     " seats survives into any outcome at " + std::to_string(e.seats() + 1);
    return verdict;
}

namespace {

// One population-monotonicity condition: rerun the rule on `shifted` and ask
// whether g can still win. Fills `verdict` on violation/inconclusive.
VerdictStatus pop_condition(RuleId rule, const Election& shifted, const CandidateSet& g,
                            const RuleOptions& rule_options, AxiomVerdict* verdict,
                            const std::string& what) {
    WinnerReport report = run_rule(rule, shifted, rule_options);
    if (some_outcome_hits(report, g)) return VerdictStatus::Satisfied;
    verdict->counter_election = shifted;
    verdict->winners_after = report.winner_sets;
    if (report.truncated) {
        verdict->status = VerdictStatus::Inconclusive;
        verdict->detail = what + ": the favored set misses every enumerated outcome, but the tie "
                          "family was cut";
        return VerdictStatus::Inconclusive;
    }
    verdict->status = VerdictStatus::Violated;
    verdict->detail = what + ": the favored set misses every outcome";
    return VerdictStatus::Violated;
}

}  // namespace

AxiomVerdict check_population_monotonicity(RuleId rule, const Election& e, const CandidateSet& g,
                                           const std::optional<CandidateSet>& a,
                                           const AxiomOptions& options) {
    if (g.empty()) throw PreconditionFailed("the favored set must be non-empty");
    // Always conservative: a violation must hold across every tie outcome.
    RuleOptions rule_options = enumerated(options.rule_options);
    WinnerReport base = run_rule(rule, e, rule_options);
    bool inside = base.all_tied && g.size() <= e.seats();
    for (const auto& w : base.winner_sets)
        if (g.is_subset_of(w)) inside = true;
    if (!inside)
        throw PreconditionFailed("the favored set is not inside any winner set");

    AxiomVerdict verdict;
    verdict.axiom = AxiomId::PopulationMonotonicity;
    verdict.group = g;
    verdict.winners_before = base.winner_sets;

    bool inconclusive = false;
    if (a.has_value()) {
        if (a->intersects(g))
            throw PreconditionFailed("the moved ballot-type must be disjoint from the favored set");
        if (e.count_of(*a) < 1)
            throw PreconditionFailed("the moved ballot-type has no voters");
        // Condition 1: one A-voter now approves A united with G; totals stay.
        std::vector<std::pair<CandidateSet, Count>> entries(e.profile().begin(),
                                                            e.profile().end());
        for (auto& [ballot, count] : entries)
            if (ballot == *a) --count;
        entries.emplace_back(a->unite(g), 1);
        Election moved = with_profile(e, entries, e.total_voters());
        verdict.family.assign(1, *a);
        VerdictStatus status =
            pop_condition(rule, moved, g, rule_options, &verdict, "moved-voter condition");
        if (status == VerdictStatus::Violated) return verdict;
        inconclusive = inconclusive || status == VerdictStatus::Inconclusive;
    }

    // Condition 2: one extra voter who approves exactly G.
    std::vector<std::pair<CandidateSet, Count>> entries(e.profile().begin(), e.profile().end());
    entries.emplace_back(g, 1);
    Election grown = with_profile(e, entries, e.total_voters() + 1);
    VerdictStatus status =
        pop_condition(rule, grown, g, rule_options, &verdict, "added-voter condition");
    if (status == VerdictStatus::Violated) return verdict;
    inconclusive = inconclusive || status == VerdictStatus::Inconclusive;

    if (inconclusive) {
        verdict.status = VerdictStatus::Inconclusive;
        return verdict;
    }
    verdict.status = VerdictStatus::Satisfied;
    verdict.detail = "the favored set survives every support gain";
    return verdict;
}

AxiomVerdict check_population_monotonicity_all(RuleId rule, const Election& e,
                                               const AxiomOptions& options) {
    WinnerReport base = run_rule(rule, e, options.rule_options);
    const CandidateSet& winners = base.winner_sets.front();
    std::vector<CandidateId> members = winners.members();
    int k = static_cast<int>(members.size());

    AxiomVerdict verdict;
    verdict.axiom = AxiomId::PopulationMonotonicity;
    verdict.winners_before = base.winner_sets;
    bool inconclusive = false;

    // Every non-empty subset of the winners; past 16 seats only singletons
    // stay tractable.
    std::vector<unsigned> masks;
    if (k <= 16)
        for (unsigned mask = 1; mask < (1u << k); ++mask) masks.push_back(mask);
    else
        for (int i = 0; i < k; ++i) masks.push_back(1u << i);

    for (unsigned mask : masks) {
        CandidateSet g(e.num_candidates());
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) g.insert(members[static_cast<size_t>(i)]);

        AxiomVerdict one = check_population_monotonicity(rule, e, g, std::nullopt, options);
        if (one.status == VerdictStatus::Violated) return one;
        inconclusive = inconclusive || one.status == VerdictStatus::Inconclusive;

        for (const auto& [ballot, count] : e.profile()) {
            if (count < 1 || ballot.intersects(g)) continue;
            one = check_population_monotonicity(rule, e, g, ballot, options);
            if (one.status == VerdictStatus::Violated) return one;
            inconclusive = inconclusive || one.status == VerdictStatus::Inconclusive;
        }
    }
    if (inconclusive) {
        verdict.status = VerdictStatus::Inconclusive;
        verdict.detail = "some favored set could not be confirmed (tie family cut)";
        return verdict;
    }
    verdict.detail = "every favored subset of the winners survives every support gain";
    return verdict;
}

AxiomVerdict check_closed_list_equivalence(RuleId rule, const Election& e,
                                           const AxiomOptions& options) {
    auto cle = as_closed_list(e);
    if (!cle)
        throw NotClosedListShaped("the profile is not a set of disjoint lists of size >= S");
    Apportionment app = divisor_apportionment(*cle);

    WinnerReport report;
    try {
        report = run_rule(rule, e, enumerated(options.rule_options));
    } catch (const InstanceTooLarge& err) {
        throw RuleCannotRun(std::string(rule_name(rule)) + ": " + err.what());
    }

    AxiomVerdict verdict;
    verdict.axiom = AxiomId::ClosedListEquivalence;
    verdict.winners_before = report.winner_sets;
    CandidateSet apportioned(e.num_candidates());
    for (CandidateId c : app.elected) apportioned.insert(c);
    verdict.winners_after.assign(1, apportioned);

    auto seats_of = [&](const CandidateSet& w) {
        std::vector<int> per_list;
        per_list.reserve(cle->lists.size());
        for (const auto& list : cle->lists) {
            int got = 0;
            for (CandidateId c : list)
                if (w.contains(c)) ++got;
            per_list.push_back(got);
        }
        return per_list;
    };
    for (const auto& w : report.winner_sets) {
        if (seats_of(w) == app.seats) {
            verdict.detail = "outcome " + label_set(e, w) + " matches the divisor seat split";
            return verdict;
        }
    }
    if (report.all_tied) {
        // Every S-subset ties, and the apportioned set itself has S members.
        verdict.detail = "all outcomes tie; the apportioned set is among them";
        return verdict;
    }
    if (report.truncated) {
        verdict.status = VerdictStatus::Inconclusive;
        verdict.detail = "no enumerated outcome matches the divisor seat split, but the tie "
                         "family was cut";
        return verdict;
    }
    verdict.status = VerdictStatus::Violated;
    verdict.detail = "no outcome matches the divisor seat split";
    return verdict;
}

namespace {

bool is_positive_type(const Election& e, const CandidateSet& ballot) {
    return e.count_of(ballot) > 0;
}

bool distinct_family(const std::vector<CandidateSet>& family) {
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i + 1; j < family.size(); ++j)
            if (family[i] == family[j]) return false;
    return true;
}

// The two elections must differ exactly by one voter moving from `from` to
// ballot `to` (same totals), or by one extra voter casting `added`.
bool profile_delta_matches(const Election& base, const Election& shifted,
                           const CandidateSet& g) {
    if (shifted.total_voters() == base.total_voters() + 1) {
        // added-voter shape: exactly g gains one count
        if (shifted.count_of(g) != base.count_of(g) + 1) return false;
        for (const auto& [ballot, count] : shifted.profile())
            if (!(ballot == g) && count != base.count_of(ballot)) return false;
        for (const auto& [ballot, count] : base.profile())
            if (!(ballot == g) && count != shifted.count_of(ballot)) return false;
        return true;
    }
    if (shifted.total_voters() != base.total_voters()) return false;
    // moved-voter shape: one type loses one count, its union with g gains one
    const CandidateSet* source = nullptr;
    for (const auto& [ballot, count] : base.profile()) {
        Count now = shifted.count_of(ballot);
        if (now == count - 1) {
            if (source) return false;
            source = &ballot;
        } else if (now < count) {
            return false;
        }
    }
    if (!source || source->intersects(g)) return false;
    CandidateSet target = source->unite(g);
    if (shifted.count_of(target) != base.count_of(target) + 1) return false;
    for (const auto& [ballot, count] : shifted.profile())
        if (!(ballot == *source) && !(ballot == target) && count != base.count_of(ballot))
            return false;
    return true;
}

}  // namespace

bool reverify_violation(const Election& e, const CandidateSet& w, const AxiomVerdict& verdict) {
    if (verdict.status != VerdictStatus::Violated) return false;
    switch (verdict.axiom) {
        case AxiomId::JR: {
            if (!verdict.group || verdict.group->size() != 1 || verdict.family.empty())
                return false;
            if (!distinct_family(verdict.family)) return false;
            CandidateId c = verdict.group->members().front();
            Count mass = 0;
            for (const auto& ballot : verdict.family) {
                if (!ballot.contains(c) || ballot.intersects(w)) return false;
                if (!is_positive_type(e, ballot)) return false;
                mass += e.count_of(ballot);
            }
            return mass * e.seats() >= e.total_voters();
        }
        case AxiomId::EJR: {
            if (!verdict.group || !verdict.quota_floor || verdict.family.empty()) return false;
            if (!distinct_family(verdict.family)) return false;
            Count ell = *verdict.quota_floor;
            if (verdict.group->size() != ell) return false;
            Count mass = 0;
            for (const auto& ballot : verdict.family) {
                if (!verdict.group->is_subset_of(ballot)) return false;
                if (static_cast<Count>(ballot.intersect(w).size()) >= ell) return false;
                if (!is_positive_type(e, ballot)) return false;
                mass += e.count_of(ballot);
            }
            return mass * e.seats() >= ell * e.total_voters();
        }
        case AxiomId::LowerQuota: {
            if (!verdict.group || verdict.family.empty()) return false;
            if (!distinct_family(verdict.family)) return false;
            Count mass = 0;
            CandidateSet united(e.num_candidates());
            for (const auto& ballot : verdict.family) {
                if (!verdict.group->is_subset_of(ballot)) return false;
                if (!is_positive_type(e, ballot)) return false;
                mass += e.count_of(ballot);
                united = united.unite(ballot);
            }
            Count quota_floor = mass * e.seats() / e.total_voters();
            if (quota_floor < 1) return false;
            if (verdict.group->size() < quota_floor) return false;
            return static_cast<Count>(w.intersect(united).size()) < quota_floor;
        }
        case AxiomId::HouseMonotonicity: {
            if (!verdict.counter_election) return false;
            const Election& bigger = *verdict.counter_election;
            if (bigger.seats() != e.seats() + 1) return false;
            if (with_seats(bigger, e.seats()) != e) return false;
            // The witness stores which rule ran only implicitly; replay every
            // rule and accept when one reproduces both stored families. A
            // deterministic witness (one set each side) replays in that mode;
            // otherwise the strong no-nested-pair condition must hold across
            // the full, uncut tie families.
            for (RuleId rule : all_rules()) {
                try {
                    if (verdict.winners_before.size() == 1 && verdict.winners_after.size() == 1) {
                        RuleOptions det;
                        WinnerReport before = run_rule(rule, e, det);
                        WinnerReport after = run_rule(rule, bigger, det);
                        if (before.winner_sets == verdict.winners_before &&
                            after.winner_sets == verdict.winners_after &&
                            !before.winners().is_subset_of(after.winners()))
                            return true;
                    }
                    RuleOptions opts;
                    opts.ties = TieMode::Enumerated;
                    WinnerReport before = run_rule(rule, e, opts);
                    WinnerReport after = run_rule(rule, bigger, opts);
                    if (before.winner_sets != verdict.winners_before ||
                        after.winner_sets != verdict.winners_after)
                        continue;
                    if (before.truncated || after.truncated || before.all_tied || after.all_tied)
                        continue;
                    bool nested = false;
                    for (const auto& small : before.winner_sets)
                        for (const auto& big : after.winner_sets)
                            if (small.is_subset_of(big)) nested = true;
                    if (!nested) return true;
                } catch (const ElectError&) {
                    continue;
                }
            }
            return false;
        }
        case AxiomId::PopulationMonotonicity: {
            if (!verdict.counter_election || !verdict.group) return false;
            const CandidateSet& g = *verdict.group;
            if (!profile_delta_matches(e, *verdict.counter_election, g)) return false;
            RuleOptions opts;
            opts.ties = TieMode::Enumerated;
            for (RuleId rule : all_rules()) {
                try {
                    WinnerReport base = run_rule(rule, e, opts);
                    if (base.winner_sets != verdict.winners_before) continue;
                    bool favored = base.all_tied;
                    for (const auto& win : base.winner_sets)
                        if (g.is_subset_of(win)) favored = true;
                    if (!favored) continue;
                    WinnerReport after = run_rule(rule, *verdict.counter_election, opts);
                    if (after.truncated) continue;
                    if (!some_outcome_hits(after, g)) return true;
                } catch (const ElectError&) {
                    continue;
                }
            }
            return false;
        }
        case AxiomId::ClosedListEquivalence: {
            auto cle = as_closed_list(e);
            if (!cle) return false;
            Apportionment app = divisor_apportionment(*cle);
            RuleOptions opts;
            opts.ties = TieMode::Enumerated;
            for (RuleId rule : all_rules()) {
                try {
                    WinnerReport report = run_rule(rule, e, opts);
                    if (report.winner_sets != verdict.winners_before) continue;
                    if (report.truncated || report.all_tied) continue;
                    bool matched = false;
                    for (const auto& win : report.winner_sets) {
                        std::vector<int> per_list;
                        for (const auto& list : cle->lists) {
                            int got = 0;
                            for (CandidateId c : list)
                                if (win.contains(c)) ++got;
                            per_list.push_back(got);
                        }
                        if (per_list == app.seats) matched = true;
                    }
                    if (!matched) return true;
                } catch (const ElectError&) {
                    continue;
                }
            }
            return false;
        }
    }
    return false;
}

}  // namespace elect
