#pragma once

#include <map>
#include <utility>
#include <vector>

#include "elect/election.hpp"
#include "elect/rational.hpp"
#include "elect/rules.hpp"

namespace elect {

// Approval voting: top-S approval scores.
WinnerReport av(const Election& e, const RuleOptions& options = {});

// Satisfaction approval voting: each ballot contributes count/|ballot| to
// every approved candidate; empty ballots contribute nothing.
WinnerReport sav(const Election& e, const RuleOptions& options = {});

// Minimax approval voting: minimize the maximum Hamming distance between the
// winner set and any cast ballot.
WinnerReport mav(const Election& e, const RuleOptions& options = {});

// Reweighted approval voting: S sequential picks, each maximizing
// sum over approving ballots of count/(1 + already-elected approved).
WinnerReport rav(const Election& e, const RuleOptions& options = {});

// Proportional approval voting: maximize sum of count * H(|ballot ∩ W|) where
// H(p) = 1 + 1/2 + ... + 1/p.
WinnerReport pav(const Election& e, const RuleOptions& options = {});

// Chamberlin-Courant (Harsanyi flavor): minimize the number of voters whose
// ballot misses the winner set entirely.
WinnerReport ccha(const Election& e, const RuleOptions& options = {});

// Chamberlin-Courant (Rawls flavor): the zero-uncovered winner sets; when no
// set covers everyone, every S-subset ties (all_tied).
WinnerReport ccra(const Election& e, const RuleOptions& options = {});

// Monroe (Harsanyi flavor): minimize optimal-assignment misrepresentation.
WinnerReport mha(const Election& e, const RuleOptions& options = {});

// Monroe (Rawls flavor): the zero-misrepresentation winner sets, else
// all_tied.
WinnerReport mra(const Election& e, const RuleOptions& options = {});

// A balanced voter-to-winner assignment: every ballot-type's count is fully
// assigned to winners, each winner's load stays within
// [floor(|V|/S), ceil(|V|/S)], and the number of voters assigned to a
// candidate they do not approve (the misrepresentation) is minimal.
struct MonroeAssignment {
    std::map<std::pair<CandidateSet, CandidateId>, Count> shares;
    Count misrepresentation = 0;

    // Voters assigned to winner c.
    Count load_of(CandidateId c) const;
};

// Throws SeatsMismatch when |W| != S, InfeasibleAssignment when the load
// bounds cannot absorb the cast ballots (total_voters far above the ballot
// total). Only the optimal misrepresentation value is canonical; the share
// matrix is one optimum among possibly many.
MonroeAssignment monroe_assignment(const Election& e, const CandidateSet& w);

// Additive objective breakdown for one winner set: total plus one
// contribution term per ballot-type. For MAV the total is the maximum term
// rather than the sum.
struct ScoreBreakdown {
    Rational score;
    std::vector<std::pair<CandidateSet, Rational>> contributions;
};

// Supported for AV, SAV, PAV, CCHA, MAV, MHA (and the Rawls variants via
// their Harsanyi objective).
ScoreBreakdown score_breakdown(const Election& e, RuleId rule, const CandidateSet& w);

}  // namespace elect
