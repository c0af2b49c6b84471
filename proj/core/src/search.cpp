#include "elect/axioms.hpp"

namespace elect {

namespace {

// Axiom evaluation for one generated election; nothing (not a violation, not
// even a verdict) when the instance is out of scope for the axiom or the
// rule's caps.
std::optional<AxiomVerdict> evaluate(RuleId rule, AxiomId axiom, const Election& e,
                                     const AxiomOptions& options) {
    try {
        switch (axiom) {
            case AxiomId::JR:
            case AxiomId::EJR:
            case AxiomId::LowerQuota: {
                RuleOptions det = options.rule_options;
                det.ties = TieMode::Deterministic;
                CandidateSet w = run_rule(rule, e, det).winners();
                if (axiom == AxiomId::JR) return check_jr(e, w);
                if (axiom == AxiomId::EJR) return check_ejr(e, w, options);
                return check_lower_quota(e, w, options);
            }
            case AxiomId::HouseMonotonicity:
                if (e.seats() >= e.num_candidates()) return std::nullopt;
                return check_house_monotonicity(rule, e, options);
            case AxiomId::PopulationMonotonicity:
                return check_population_monotonicity_all(rule, e, options);
            case AxiomId::ClosedListEquivalence:
                if (!as_closed_list(e)) return std::nullopt;
                return check_closed_list_equivalence(rule, e, options);
        }
    } catch (const InstanceTooLarge&) {
    } catch (const RuleCannotRun&) {
    } catch (const PreconditionFailed&) {
    }
    return std::nullopt;
}

bool still_violates(RuleId rule, AxiomId axiom, const Election& e, const AxiomOptions& options) {
    auto v = evaluate(rule, axiom, e, options);
    return v && v->status == VerdictStatus::Violated;
}

// Greedy minimization: drop ballot types, crush counts, drop candidates —
// keeping every step only when the violation survives.
Election shrink(RuleId rule, AxiomId axiom, Election e, const AxiomOptions& options) {
    auto surplus = [](const Election& el) { return el.total_voters() - el.ballot_total(); };
    bool improved = true;
    while (improved) {
        improved = false;

        // Drop whole ballot types.
        for (size_t i = 0; i < e.profile().size(); ++i) {
            std::vector<std::pair<CandidateSet, Count>> entries(e.profile().begin(),
                                                                e.profile().end());
            entries.erase(entries.begin() + static_cast<long>(i));
            Count cast = 0;
            for (const auto& [ballot, count] : entries) cast += count;
            Election candidate = with_profile(e, entries, cast + surplus(e));
            if (still_violates(rule, axiom, candidate, options)) {
                e = std::move(candidate);
                improved = true;
                break;
            }
        }
        if (improved) continue;

        // Crush counts: all the way to 1, else halve.
        for (size_t i = 0; i < e.profile().size(); ++i) {
            if (e.profile()[i].second <= 1) continue;
            for (Count target : {Count{1}, e.profile()[i].second / 2}) {
                if (target >= e.profile()[i].second) continue;
                std::vector<std::pair<CandidateSet, Count>> entries(e.profile().begin(),
                                                                    e.profile().end());
                entries[i].second = target;
                Count cast = 0;
                for (const auto& [ballot, count] : entries) cast += count;
                Election candidate = with_profile(e, entries, cast + surplus(e));
                if (still_violates(rule, axiom, candidate, options)) {
                    e = std::move(candidate);
                    improved = true;
                    break;
                }
            }
            if (improved) break;
        }
        if (improved) continue;

        // Shed abstainers (voters beyond the cast ballots).
        if (surplus(e) > 0) {
            Election candidate = with_profile(
                e, {e.profile().begin(), e.profile().end()}, e.ballot_total());
            if (still_violates(rule, axiom, candidate, options)) {
                e = std::move(candidate);
                improved = true;
                continue;
            }
        }

        // Drop candidates (keeping S <= |C| - 1).
        for (CandidateId c = 0; c < e.num_candidates() && e.seats() < e.num_candidates(); ++c) {
            std::vector<std::string> labels;
            for (CandidateId k = 0; k < e.num_candidates(); ++k)
                if (k != c) labels.push_back(e.label_of(k));
            std::vector<BallotLine> lines;
            for (const auto& [ballot, count] : e.profile()) {
                BallotLine line;
                line.count = count;
                for (CandidateId k : ballot.members())
                    if (k != c) line.labels.push_back(e.label_of(k));
                lines.push_back(std::move(line));
            }
            Election candidate =
                build_election(labels, e.seats(), lines, e.ballot_total() + surplus(e));
            if (still_violates(rule, axiom, candidate, options)) {
                e = std::move(candidate);
                improved = true;
                break;
            }
        }
    }
    return e;
}

}  // namespace

std::optional<SearchResult> search_counterexample(RuleId rule, AxiomId axiom,
                                                  ElectionGenerator gen, long long trials,
                                                  const AxiomOptions& options) {
    for (long long trial = 0; trial < trials; ++trial) {
        Election e = gen.next();
        auto verdict = evaluate(rule, axiom, e, options);
        if (!verdict || verdict->status != VerdictStatus::Violated) continue;
        SearchResult result;
        result.trial = trial;
        result.election = shrink(rule, axiom, std::move(e), options);
        result.verdict = *evaluate(rule, axiom, result.election, options);
        return result;
    }
    return std::nullopt;
}

}  // namespace elect
