#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elect/candidate_set.hpp"
#include "elect/errors.hpp"

namespace elect {

using Count = std::int64_t;

// One line of raw ballot input: the approved labels (may be empty) and how
// many voters cast exactly that ballot.
struct BallotLine {
    std::vector<std::string> labels;
    Count count = 0;
};

// An approval election: a candidate roster, a seat count S, a profile mapping
// each distinct ballot-type to its voter count, and the total number of
// voters (which may exceed the number of cast ballots).
class Election {
public:
    int num_candidates() const { return static_cast<int>(labels_.size()); }
    int seats() const { return seats_; }
    Count total_voters() const { return total_voters_; }
    Count ballot_total() const { return ballot_total_; }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label_of(CandidateId c) const { return labels_.at(static_cast<size_t>(c)); }
    // Throws UnknownCandidate for undeclared labels.
    CandidateId id_of(const std::string& label) const;

    // Ballot types in canonical order, counts all positive, keys distinct.
    const std::vector<std::pair<CandidateSet, Count>>& profile() const { return profile_; }
    // Count for one ballot type (0 when absent).
    Count count_of(const CandidateSet& ballot) const;

    CandidateSet full_set() const { return CandidateSet::full(num_candidates()); }
    // Number of voters approving candidate c.
    Count approvals(CandidateId c) const;

    bool operator==(const Election& other) const = default;

    friend Election build_election(std::vector<std::string> labels, int seats,
                                   const std::vector<BallotLine>& ballots,
                                   std::optional<Count> total_voters);
    friend Election make_election(int num_candidates, int seats,
                                  const std::vector<std::pair<std::vector<CandidateId>, Count>>& ballots,
                                  std::optional<Count> total_voters);
    friend Election with_seats(const Election& e, int seats);
    friend Election with_profile(const Election& e,
                                 const std::vector<std::pair<CandidateSet, Count>>& profile,
                                 Count total_voters);

private:
    static Election assemble(std::vector<std::string> labels, int seats,
                             std::vector<std::pair<CandidateSet, Count>> entries,
                             std::optional<Count> total_voters);

    std::vector<std::string> labels_;
    int seats_ = 0;
    Count total_voters_ = 0;
    Count ballot_total_ = 0;
    std::vector<std::pair<CandidateSet, Count>> profile_;
};

// Validates labels/seats/counts, merges duplicate ballot-types by summing
// counts, and defaults total_voters to the ballot total when omitted.
// Throws UnknownCandidate, SeatsOutOfRange, VoterCountTooSmall.
Election build_election(std::vector<std::string> labels, int seats,
                        const std::vector<BallotLine>& ballots,
                        std::optional<Count> total_voters = std::nullopt);

// Convenience builder over candidate ids; labels are "a".."z" for up to 26
// candidates, "c1", "c2", ... beyond that.
Election make_election(int num_candidates, int seats,
                       const std::vector<std::pair<std::vector<CandidateId>, Count>>& ballots,
                       std::optional<Count> total_voters = std::nullopt);

// Copy with a different seat count (same roster and profile).
Election with_seats(const Election& e, int seats);

// Copy with a replaced profile (entries with zero counts are dropped;
// duplicates merged). Used by the axiom constructions.
Election with_profile(const Election& e,
                      const std::vector<std::pair<CandidateSet, Count>>& profile,
                      Count total_voters);

// Number of voters approving at least one member of K.
Count supporters(const Election& e, const CandidateSet& k);

// A closed-list election: disjoint ordered candidate lists, one vote count
// per list.
struct ClosedListElection {
    std::vector<std::vector<CandidateId>> lists;  // each in roster order
    std::vector<Count> votes;                     // parallel to lists
    int seats = 0;
    Count total_voters = 0;
};

// Recognizes a closed-list-shaped profile: every positive ballot-type is
// pairwise disjoint from the others and has at least S members. Lists are
// ordered by their smallest roster index; within a list, roster order.
// Returns nothing when the profile is not shaped that way.
std::optional<ClosedListElection> as_closed_list(const Election& e);

}  // namespace elect
