#include <algorithm>

#include "doctest.h"
#include "elect/election.hpp"
#include "helpers.hpp"

using namespace elect;
using elect::test::ids;

TEST_CASE("candidate sets have canonical lexicographic order") {
    auto s01 = ids(4, {0, 1});
    auto s0 = ids(4, {0});
    auto s02 = ids(4, {0, 2});
    auto s1 = ids(4, {1});
    CHECK(s0 < s01);
    CHECK(s01 < s02);
    CHECK(s02 < s1);
    std::vector<CandidateSet> family = {s1, s02, s0, s01};
    std::sort(family.begin(), family.end());
    CHECK(family == std::vector<CandidateSet>{s0, s01, s02, s1});
}

TEST_CASE("candidate set algebra") {
    auto a = ids(70, {0, 3, 69});
    auto b = ids(70, {3, 5});
    CHECK(a.size() == 3);
    CHECK(a.contains(69));
    CHECK(a.intersects(b));
    CHECK(a.intersect(b) == ids(70, {3}));
    CHECK(a.unite(b) == ids(70, {0, 3, 5, 69}));
    CHECK(a.difference(b) == ids(70, {0, 69}));
    CHECK(ids(70, {3}).is_subset_of(a));
    CHECK(!a.is_subset_of(b));
    CHECK(a.first() == 0);
    CHECK(CandidateSet(70).empty());
    CHECK(CandidateSet::full(70).size() == 70);
}

TEST_CASE("profiles are merged, sorted, and zero-free") {
    Election e = build_election({"a", "b", "c"}, 1,
                                {{{"b", "a"}, 2}, {{"a", "b"}, 3}, {{"c"}, 0}, {{}, 4}});
    REQUIRE(e.profile().size() == 2);  // {} and {a,b}; the zero-count {c} drops
    CHECK(e.profile()[0].first == CandidateSet(3));
    CHECK(e.profile()[0].second == 4);
    CHECK(e.profile()[1].first == ids(3, {0, 1}));
    CHECK(e.profile()[1].second == 5);
    CHECK(e.ballot_total() == 9);
    CHECK(e.total_voters() == 9);  // defaults to cast ballots
    CHECK(e.count_of(ids(3, {0, 1})) == 5);
    CHECK(e.count_of(ids(3, {2})) == 0);
    CHECK(e.approvals(0) == 5);
    CHECK(e.approvals(2) == 0);
}

TEST_CASE("construction contract violations throw") {
    CHECK_THROWS_AS(build_election({"a", "a"}, 1, {}), UnknownCandidate);
    CHECK_THROWS_AS(build_election({"a"}, 0, {}), SeatsOutOfRange);
    CHECK_THROWS_AS(build_election({"a"}, 2, {}), SeatsOutOfRange);
    CHECK_THROWS_AS(build_election({"a"}, 1, {{{"z"}, 1}}), UnknownCandidate);
    CHECK_THROWS_AS(build_election({"a"}, 1, {{{"a"}, -1}}), VoterCountTooSmall);
    CHECK_THROWS_AS(build_election({"a"}, 1, {{{"a"}, 5}}, 4), VoterCountTooSmall);
    CHECK_NOTHROW(build_election({"a"}, 1, {{{"a"}, 5}}, 7));
}

TEST_CASE("total voters may exceed cast ballots") {
    Election e = elect::test::load("sigma_a.elect");
    CHECK(e.num_candidates() == 7);
    CHECK(e.seats() == 3);
    CHECK(e.total_voters() == 45000);
    CHECK(e.ballot_total() == 43000);
    CHECK(e.approvals(e.id_of("a")) == 16000);
    CHECK(supporters(e, ids(7, {0, 1})) == 20000);
    CHECK(supporters(e, e.full_set()) == 43000);
}

TEST_CASE("with_seats and with_profile preserve the rest") {
    Election e = make_election(3, 1, {{{0, 1}, 3}, {{2}, 2}});
    Election bigger = with_seats(e, 2);
    CHECK(bigger.seats() == 2);
    CHECK(bigger.profile() == e.profile());
    // decrement one type to zero; it must vanish
    std::vector<std::pair<CandidateSet, Count>> entries(e.profile().begin(), e.profile().end());
    for (auto& [ballot, count] : entries)
        if (ballot == ids(3, {2})) count = 0;
    Election trimmed = with_profile(e, entries, e.total_voters());
    CHECK(trimmed.profile().size() == 1);
    CHECK(trimmed.ballot_total() == 3);
    CHECK(trimmed.total_voters() == 5);
}

TEST_CASE("closed-list recognition") {
    Election t1 = elect::test::load("table1.elect");
    auto cle = as_closed_list(t1);
    REQUIRE(cle.has_value());
    REQUIRE(cle->lists.size() == 3);
    CHECK(cle->votes == std::vector<Count>{5100, 3150, 1750});
    CHECK(cle->seats == 5);
    CHECK(cle->lists[0] == std::vector<CandidateId>{0, 1, 2, 3, 4});
    CHECK(cle->lists[2] == std::vector<CandidateId>{10, 11, 12, 13, 14});

    // overlapping types are not closed-list shaped
    CHECK(!as_closed_list(make_election(4, 2, {{{0, 1, 2}, 5}, {{2, 3}, 4}})).has_value());
    // a list smaller than S is not closed-list shaped
    CHECK(!as_closed_list(make_election(4, 2, {{{0, 1}, 5}, {{2}, 4}})).has_value());
    // lists are ordered by smallest roster index regardless of vote counts
    auto flipped = as_closed_list(make_election(4, 2, {{{2, 3}, 9}, {{0, 1}, 1}}));
    REQUIRE(flipped.has_value());
    CHECK(flipped->lists[0] == std::vector<CandidateId>{0, 1});
    CHECK(flipped->votes == std::vector<Count>{1, 9});
}
