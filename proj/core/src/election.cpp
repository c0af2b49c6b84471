#include "elect/election.hpp"

#include <algorithm>
#include <map>

namespace elect {

CandidateId Election::id_of(const std::string& label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<CandidateId>(i);
    throw UnknownCandidate("unknown candidate label \"" + label + "\"");
}

Count Election::count_of(const CandidateSet& ballot) const {
    auto it = std::lower_bound(profile_.begin(), profile_.end(), ballot,
                               [](const auto& entry, const CandidateSet& key) { return entry.first < key; });
    if (it != profile_.end() && it->first == ballot) return it->second;
    return 0;
}

Count Election::approvals(CandidateId c) const {
    Count n = 0;
    for (const auto& [ballot, count] : profile_)
        if (ballot.contains(c)) n += count;
    return n;
}

namespace {

// Sorts into canonical order, merges duplicate keys, drops zero-count entries.
std::vector<std::pair<CandidateSet, Count>> normalize_profile(
    std::vector<std::pair<CandidateSet, Count>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<CandidateSet, Count>> out;
    for (auto& [ballot, count] : entries) {
        if (count == 0) continue;
        if (!out.empty() && out.back().first == ballot)
            out.back().second += count;
        else
            out.emplace_back(std::move(ballot), count);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& entry) { return entry.second == 0; }),
              out.end());
    return out;
}

}  // namespace

Election Election::assemble(std::vector<std::string> labels, int seats,
                            std::vector<std::pair<CandidateSet, Count>> entries,
                            std::optional<Count> total_voters) {
    int m = static_cast<int>(labels.size());
    if (seats < 1 || seats > m)
        throw SeatsOutOfRange("seats must be between 1 and the number of candidates (" +
                              std::to_string(m) + "), got " + std::to_string(seats));
    for (const auto& [ballot, count] : entries)
        if (count < 0)
            throw VoterCountTooSmall("ballot counts must be non-negative");
    Election e;
    e.labels_ = std::move(labels);
    e.seats_ = seats;
    e.profile_ = normalize_profile(std::move(entries));
    Count cast = 0;
    for (const auto& [ballot, count] : e.profile_) cast += count;
    e.ballot_total_ = cast;
    e.total_voters_ = total_voters.value_or(cast);
    if (e.total_voters_ < cast)
        throw VoterCountTooSmall("total voters (" + std::to_string(e.total_voters_) +
                                 ") is below the number of cast ballots (" + std::to_string(cast) + ")");
    return e;
}

Election build_election(std::vector<std::string> labels, int seats,
                        const std::vector<BallotLine>& ballots,
                        std::optional<Count> total_voters) {
    int m = static_cast<int>(labels.size());
    for (int i = 0; i < m; ++i) {
        if (labels[static_cast<size_t>(i)].empty())
            throw UnknownCandidate("candidate labels must be non-empty");
        for (int j = i + 1; j < m; ++j)
            if (labels[static_cast<size_t>(i)] == labels[static_cast<size_t>(j)])
                throw UnknownCandidate("duplicate candidate label \"" +
                                       labels[static_cast<size_t>(i)] + "\"");
    }
    auto resolve = [&](const std::string& label) -> CandidateId {
        for (int i = 0; i < m; ++i)
            if (labels[static_cast<size_t>(i)] == label) return i;
        throw UnknownCandidate("unknown candidate label \"" + label + "\"");
    };
    std::vector<std::pair<CandidateSet, Count>> entries;
    entries.reserve(ballots.size());
    for (const auto& line : ballots) {
        CandidateSet ballot(m);
        for (const auto& label : line.labels) ballot.insert(resolve(label));
        entries.emplace_back(std::move(ballot), line.count);
    }
    return Election::assemble(std::move(labels), seats, std::move(entries), total_voters);
}

Election make_election(int num_candidates, int seats,
                       const std::vector<std::pair<std::vector<CandidateId>, Count>>& ballots,
                       std::optional<Count> total_voters) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(num_candidates));
    for (int i = 0; i < num_candidates; ++i) {
        if (num_candidates <= 26)
            labels.push_back(std::string(1, static_cast<char>('a' + i)));
        else
            labels.push_back("c" + std::to_string(i + 1));
    }
    std::vector<std::pair<CandidateSet, Count>> entries;
    entries.reserve(ballots.size());
    for (const auto& [ids, count] : ballots)
        entries.emplace_back(CandidateSet::of(num_candidates, ids), count);
    return Election::assemble(std::move(labels), seats, std::move(entries), total_voters);
}

Election with_seats(const Election& e, int seats) {
    int m = e.num_candidates();
    if (seats < 1 || seats > m)
        throw SeatsOutOfRange("seats must be between 1 and the number of candidates (" +
                              std::to_string(m) + "), got " + std::to_string(seats));
    Election out = e;
    out.seats_ = seats;
    return out;
}

Election with_profile(const Election& e,
                      const std::vector<std::pair<CandidateSet, Count>>& profile,
                      Count total_voters) {
    return Election::assemble(e.labels(), e.seats(), profile, total_voters);
}

Count supporters(const Election& e, const CandidateSet& k) {
    Count n = 0;
    for (const auto& [ballot, count] : e.profile())
        if (ballot.intersects(k)) n += count;
    return n;
}

std::optional<ClosedListElection> as_closed_list(const Election& e) {
    const auto& profile = e.profile();
    if (profile.empty()) return std::nullopt;
    CandidateSet seen(e.num_candidates());
    for (const auto& [ballot, count] : profile) {
        if (ballot.size() < e.seats()) return std::nullopt;
        if (ballot.intersects(seen)) return std::nullopt;
        seen = seen.unite(ballot);
    }
    // Order lists by smallest roster index.
    std::vector<std::pair<CandidateSet, Count>> sorted = profile;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first.first() < b.first.first(); });
    ClosedListElection cle;
    cle.seats = e.seats();
    cle.total_voters = e.total_voters();
    for (const auto& [ballot, count] : sorted) {
        cle.lists.push_back(ballot.members());
        cle.votes.push_back(count);
    }
    return cle;
}

}  // namespace elect
