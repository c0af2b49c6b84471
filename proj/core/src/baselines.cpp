#include "elect/baselines.hpp"

#include <algorithm>
#include <numeric>

#include "mcmf.hpp"
#include "scan.hpp"

namespace elect {

namespace {

// Winner report for a rule whose objective is a per-candidate additive score:
// take the S best scores, expanding ties at the boundary. The tie family is
// every set made of the above-boundary candidates plus a choice of
// boundary-score candidates, generated in canonical order.
WinnerReport top_scores(const Election& e, RuleId rule, const RuleOptions& options,
                        const std::vector<Rational>& score) {
    int m = e.num_candidates();
    int s = e.seats();

    std::vector<CandidateId> order(static_cast<size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](CandidateId x, CandidateId y) {
        return score[static_cast<size_t>(x)] > score[static_cast<size_t>(y)];
    });
    Rational threshold = score[static_cast<size_t>(order[static_cast<size_t>(s - 1)])];

    std::vector<CandidateId> above;     // strictly better than the boundary
    std::vector<CandidateId> boundary;  // exactly at the boundary
    for (CandidateId c = 0; c < m; ++c) {
        if (score[static_cast<size_t>(c)] > threshold)
            above.push_back(c);
        else if (score[static_cast<size_t>(c)] == threshold)
            boundary.push_back(c);
    }
    int slots = s - static_cast<int>(above.size());

    WinnerReport report;
    report.rule = rule;
    report.tie_mode = options.ties;
    Rational total;
    for (CandidateId c : above) total += score[static_cast<size_t>(c)];
    total += threshold * slots;
    report.value = total;

    if (options.ties == TieMode::Deterministic) {
        CandidateSet w(m);
        for (CandidateId c : above) w.insert(c);
        for (int i = 0; i < slots; ++i) w.insert(boundary[static_cast<size_t>(i)]);
        report.winner_sets.push_back(w);
        return report;
    }
    detail::for_each_combination(
        static_cast<int>(boundary.size()), slots, [&](const std::vector<int>& comb) -> bool {
            if (static_cast<int>(report.winner_sets.size()) >= options.tie_cap) {
                report.truncated = true;  // this combination proves one more exists
                return false;
            }
            CandidateSet w(m);
            for (CandidateId c : above) w.insert(c);
            for (int i : comb) w.insert(boundary[static_cast<size_t>(i)]);
            report.winner_sets.push_back(w);
            return true;
        });
    return report;
}

WinnerReport from_scan(RuleId rule, const RuleOptions& options, detail::ScanResult scan) {
    WinnerReport report;
    report.rule = rule;
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

// Zero-objective winner sets of a minimization scan; when none exists every
// S-subset ties and only a deterministic representative is materialized.
WinnerReport zero_or_all_tied(const Election& e, RuleId rule, const RuleOptions& options,
                              detail::ScanResult scan) {
    if (scan.best == 0) return from_scan(rule, options, std::move(scan));
    WinnerReport report;
    report.rule = rule;
    report.tie_mode = options.ties;
    report.all_tied = true;
    CandidateSet w(e.num_candidates());
    for (CandidateId c = 0; c < e.seats(); ++c) w.insert(c);
    report.winner_sets.push_back(w);
    return report;
}

Count uncovered_mass(const Election& e, const CandidateSet& w) {
    Count mass = 0;
    for (const auto& [ballot, count] : e.profile())
        if (!ballot.intersects(w)) mass += count;
    return mass;
}

// H(p) = 1 + 1/2 + ... + 1/p for p = 0..s.
std::vector<Rational> harmonic_prefix(int s) {
    std::vector<Rational> h(static_cast<size_t>(s) + 1);
    for (int p = 1; p <= s; ++p)
        h[static_cast<size_t>(p)] = h[static_cast<size_t>(p - 1)] + Rational(1, p);
    return h;
}

Rational pav_score(const Election& e, const CandidateSet& w, const std::vector<Rational>& h) {
    Rational score;
    for (const auto& [ballot, count] : e.profile())
        score += count * h[static_cast<size_t>(ballot.intersect(w).size())];
    return score;
}

}  // namespace

WinnerReport av(const Election& e, const RuleOptions& options) {
    std::vector<Rational> score(static_cast<size_t>(e.num_candidates()));
    for (CandidateId c = 0; c < e.num_candidates(); ++c) score[static_cast<size_t>(c)] = e.approvals(c);
    return top_scores(e, RuleId::AV, options, score);
}

WinnerReport sav(const Election& e, const RuleOptions& options) {
    std::vector<Rational> score(static_cast<size_t>(e.num_candidates()));
    for (const auto& [ballot, count] : e.profile()) {
        if (ballot.empty()) continue;
        Rational share(count, ballot.size());
        for (CandidateId c : ballot.members()) score[static_cast<size_t>(c)] += share;
    }
    return top_scores(e, RuleId::SAV, options, score);
}

WinnerReport mav(const Election& e, const RuleOptions& options) {
    int s = e.seats();
    auto max_distance = [&](const CandidateSet& w) {
        Count worst = 0;
        for (const auto& [ballot, count] : e.profile()) {
            // Hamming distance |w \ ballot| + |ballot \ w|.
            Count d = s + ballot.size() - 2 * ballot.intersect(w).size();
            worst = std::max(worst, d);
        }
        return Rational(worst);
    };
    return from_scan(RuleId::MAV, options,
                     detail::scan_subsets(e, options.subset_cap, options.tie_cap,
                                          detail::Direction::Minimize, max_distance));
}

WinnerReport rav(const Election& e, const RuleOptions& options) {
    auto round_values = [&](const CandidateSet& elected) {
        std::vector<std::pair<CandidateId, Rational>> out;
        for (CandidateId c = 0; c < e.num_candidates(); ++c) {
            if (elected.contains(c)) continue;
            Rational weight;
            for (const auto& [ballot, count] : e.profile())
                if (ballot.contains(c))
                    weight += Rational(count, 1 + ballot.intersect(elected).size());
            out.emplace_back(c, weight);
        }
        return out;
    };
    return detail::run_sequential(e, RuleId::RAV, options, round_values);
}

WinnerReport pav(const Election& e, const RuleOptions& options) {
    auto h = harmonic_prefix(e.seats());
    auto score = [&](const CandidateSet& w) { return pav_score(e, w, h); };
    return from_scan(RuleId::PAV, options,
                     detail::scan_subsets(e, options.subset_cap, options.tie_cap,
                                          detail::Direction::Maximize, score));
}

WinnerReport ccha(const Election& e, const RuleOptions& options) {
    auto uncovered = [&](const CandidateSet& w) { return Rational(uncovered_mass(e, w)); };
    return from_scan(RuleId::CCHA, options,
                     detail::scan_subsets(e, options.subset_cap, options.tie_cap,
                                          detail::Direction::Minimize, uncovered));
}

WinnerReport ccra(const Election& e, const RuleOptions& options) {
    auto uncovered = [&](const CandidateSet& w) { return Rational(uncovered_mass(e, w)); };
    return zero_or_all_tied(e, RuleId::CCRA, options,
                            detail::scan_subsets(e, options.subset_cap, options.tie_cap,
                                                 detail::Direction::Minimize, uncovered));
}

WinnerReport mha(const Election& e, const RuleOptions& options) {
    auto misrep = [&](const CandidateSet& w) {
        return Rational(monroe_assignment(e, w).misrepresentation);
    };
    return from_scan(RuleId::MHA, options,
                     detail::scan_subsets(e, options.subset_cap, options.tie_cap,
                                          detail::Direction::Minimize, misrep));
}

WinnerReport mra(const Election& e, const RuleOptions& options) {
    auto misrep = [&](const CandidateSet& w) {
        return Rational(monroe_assignment(e, w).misrepresentation);
    };
    return zero_or_all_tied(e, RuleId::MRA, options,
                            detail::scan_subsets(e, options.subset_cap, options.tie_cap,
                                                 detail::Direction::Minimize, misrep));
}

Count MonroeAssignment::load_of(CandidateId c) const {
    Count load = 0;
    for (const auto& [key, amount] : shares)
        if (key.second == c) load += amount;
    return load;
}

MonroeAssignment monroe_assignment(const Election& e, const CandidateSet& w) {
    int s = e.seats();
    if (w.size() != s)
        throw SeatsMismatch("assignment needs exactly " + std::to_string(s) +
                            " winners, got " + std::to_string(w.size()));

    Count low = e.total_voters() / s;
    Count high = low + (e.total_voters() % s == 0 ? 0 : 1);
    if (low * s > e.ballot_total())
        throw InfeasibleAssignment(
            "cast ballots (" + std::to_string(e.ballot_total()) +
            ") cannot fill the per-winner load floor of " + std::to_string(low));

    const auto& profile = e.profile();
    int num_ballots = static_cast<int>(profile.size());
    std::vector<CandidateId> winners = w.members();

    // source -> ballot-type -> winner -> sink. The load floor is enforced by a
    // strongly negative-cost sink edge per winner: any optimum saturates all of
    // them because one such unit outweighs every possible misrepresentation.
    int source = 0;
    int sink = num_ballots + s + 1;
    detail::CostFlowNetwork network(sink + 1);
    auto ballot_node = [&](int i) { return 1 + i; };
    auto winner_node = [&](int j) { return 1 + num_ballots + j; };
    long long mandatory_reward = e.ballot_total() + 1;

    std::vector<std::vector<int>> share_edges(static_cast<size_t>(num_ballots));
    for (int i = 0; i < num_ballots; ++i) {
        const auto& [ballot, count] = profile[static_cast<size_t>(i)];
        network.add_edge(source, ballot_node(i), count, 0);
        for (int j = 0; j < s; ++j) {
            long long cost = ballot.contains(winners[static_cast<size_t>(j)]) ? 0 : 1;
            share_edges[static_cast<size_t>(i)].push_back(
                network.add_edge(ballot_node(i), winner_node(j), count, cost));
        }
    }
    for (int j = 0; j < s; ++j) {
        network.add_edge(winner_node(j), sink, low, -mandatory_reward);
        if (high > low) network.add_edge(winner_node(j), sink, high - low, 0);
    }

    auto [flow, cost] = network.min_cost_max_flow(source, sink);
    (void)cost;
    if (flow != e.ballot_total())
        throw std::logic_error("balanced assignment flow fell short of the ballot total");

    MonroeAssignment assignment;
    for (int i = 0; i < num_ballots; ++i) {
        const auto& [ballot, count] = profile[static_cast<size_t>(i)];
        for (int j = 0; j < s; ++j) {
            long long amount = network.flow_on(share_edges[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            if (amount == 0) continue;
            CandidateId c = winners[static_cast<size_t>(j)];
            assignment.shares[{ballot, c}] = amount;
            if (!ballot.contains(c)) assignment.misrepresentation += amount;
        }
    }
    return assignment;
}

ScoreBreakdown score_breakdown(const Election& e, RuleId rule, const CandidateSet& w) {
    ScoreBreakdown breakdown;
    const auto& profile = e.profile();
    switch (rule) {
        case RuleId::AV:
            for (const auto& [ballot, count] : profile)
                breakdown.contributions.emplace_back(ballot,
                                                     Rational(count * ballot.intersect(w).size()));
            break;
        case RuleId::SAV:
            for (const auto& [ballot, count] : profile) {
                Rational term;
                if (!ballot.empty())
                    term = Rational(count) * Rational(ballot.intersect(w).size(), ballot.size());
                breakdown.contributions.emplace_back(ballot, term);
            }
            break;
        case RuleId::PAV: {
            auto h = harmonic_prefix(e.seats());
            for (const auto& [ballot, count] : profile)
                breakdown.contributions.emplace_back(
                    ballot, count * h[static_cast<size_t>(ballot.intersect(w).size())]);
            break;
        }
        case RuleId::CCHA:
        case RuleId::CCRA:
            for (const auto& [ballot, count] : profile)
                breakdown.contributions.emplace_back(
                    ballot, Rational(ballot.intersects(w) ? 0 : count));
            break;
        case RuleId::MAV: {
            for (const auto& [ballot, count] : profile) {
                (void)count;
                Count d = e.seats() + ballot.size() - 2 * ballot.intersect(w).size();
                breakdown.contributions.emplace_back(ballot, Rational(d));
            }
            Rational worst;
            for (const auto& [ballot, term] : breakdown.contributions)
                worst = std::max(worst, term);
            breakdown.score = worst;
            return breakdown;
        }
        case RuleId::MHA:
        case RuleId::MRA: {
            MonroeAssignment assignment = monroe_assignment(e, w);
            for (const auto& [ballot, count] : profile) {
                (void)count;
                Rational term;
                for (CandidateId c : w.members()) {
                    auto it = assignment.shares.find({ballot, c});
                    if (it != assignment.shares.end() && !ballot.contains(c)) term += it->second;
                }
                breakdown.contributions.emplace_back(ballot, term);
            }
            break;
        }
        default:
            throw RuleCannotRun(std::string("rule ") + rule_name(rule) +
                                " has no additive score breakdown");
    }
    for (const auto& [ballot, term] : breakdown.contributions) breakdown.score += term;
    return breakdown;
}

}  // namespace elect
