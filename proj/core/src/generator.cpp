#include "elect/axioms.hpp"

namespace elect {

namespace {

// SplitMix64: tiny, well-mixed, and identical on every platform.
std::uint64_t mix(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

ElectionGenerator::ElectionGenerator(std::uint64_t seed, GeneratorBounds bounds)
    : state_(seed), bounds_(bounds) {}

Election ElectionGenerator::next() {
    auto draw = [&](int n) { return static_cast<int>(mix(state_) % static_cast<unsigned>(n)); };

    if (bounds_.closed_list) {
        int seats = 1 + draw(bounds_.max_seats);
        int lists = 1 + draw(bounds_.max_lists);
        // Roster-contiguous disjoint lists, each at least S long.
        std::vector<std::pair<std::vector<CandidateId>, Count>> ballots;
        CandidateId next_id = 0;
        for (int i = 0; i < lists && next_id + seats <= 60; ++i) {
            int size = seats + draw(2);
            std::vector<CandidateId> list;
            for (int j = 0; j < size; ++j) list.push_back(next_id++);
            ballots.emplace_back(std::move(list), 1 + draw(static_cast<int>(bounds_.max_count)));
        }
        return make_election(static_cast<int>(next_id), seats, ballots);
    }

    int m = bounds_.min_candidates + draw(bounds_.max_candidates - bounds_.min_candidates + 1);
    int seat_room = bounds_.seats_below_candidates ? m - 1 : m;
    int seats = 1 + draw(std::min(bounds_.max_seats, std::max(1, seat_room)));
    int types = 1 + draw(bounds_.max_ballot_types);

    std::vector<std::pair<std::vector<CandidateId>, Count>> ballots;
    for (int t = 0; t < types; ++t) {
        std::vector<CandidateId> approved;
        for (CandidateId c = 0; c < m; ++c)
            if (draw(2) == 1) approved.push_back(c);
        ballots.emplace_back(std::move(approved), 1 + draw(static_cast<int>(bounds_.max_count)));
    }
    Count cast = 0;
    for (const auto& [approved, count] : ballots) cast += count;
    // One election in four keeps extra voters who cast no ballot at all.
    std::optional<Count> total;
    if (draw(4) == 0) total = cast + draw(static_cast<int>(bounds_.max_count));
    return make_election(m, seats, ballots, total);
}

}  // namespace elect
