#include <string>
#include <vector>

#include "doctest.h"
#include "elect/axioms.hpp"
#include "elect/baselines.hpp"
#include "elect/io.hpp"
#include "elect/rules.hpp"
#include "helpers.hpp"

using namespace elect;

TEST_CASE("the generator replays a seed exactly") {
    GeneratorBounds bounds;
    ElectionGenerator g1(42, bounds);
    ElectionGenerator g2(42, bounds);
    bool any_difference_from_third_seed = false;
    ElectionGenerator g3(43, bounds);
    for (int i = 0; i < 30; ++i) {
        Election a = g1.next();
        Election b = g2.next();
        CHECK(emit_election(a) == emit_election(b));
        CHECK(a == b);
        if (!(g3.next() == a)) any_difference_from_third_seed = true;
    }
    CHECK(any_difference_from_third_seed);
}

TEST_CASE("generated elections respect their bounds") {
    GeneratorBounds bounds;
    bounds.min_candidates = 3;
    bounds.max_candidates = 5;
    bounds.max_seats = 4;
    bounds.max_ballot_types = 6;
    bounds.max_count = 12;
    ElectionGenerator gen(7, bounds);
    bool saw_abstainers = false;
    for (int i = 0; i < 200; ++i) {
        Election e = gen.next();
        CHECK(e.num_candidates() >= 3);
        CHECK(e.num_candidates() <= 5);
        CHECK(e.seats() >= 1);
        CHECK(e.seats() <= 4);
        CHECK(e.seats() <= e.num_candidates());
        CHECK(e.profile().size() <= 6);  // duplicate draws merge
        for (const auto& [ballot, count] : e.profile()) {
            CHECK(count >= 1);
            CHECK(count <= 12);
        }
        CHECK(e.total_voters() >= e.ballot_total());
        if (e.total_voters() > e.ballot_total()) saw_abstainers = true;
    }
    CHECK(saw_abstainers);

    bounds.seats_below_candidates = true;
    ElectionGenerator strict(9, bounds);
    for (int i = 0; i < 80; ++i) {
        Election e = strict.next();
        CHECK(e.seats() < e.num_candidates());
    }
}

TEST_CASE("closed-list mode emits apportionable electorates") {
    GeneratorBounds bounds;
    bounds.closed_list = true;
    bounds.max_lists = 4;
    bounds.max_seats = 5;
    bounds.max_count = 1000;
    ElectionGenerator gen(11, bounds);
    for (int i = 0; i < 100; ++i) {
        Election e = gen.next();
        auto cle = as_closed_list(e);
        REQUIRE(cle.has_value());
        CHECK(cle->seats == e.seats());
        CHECK(cle->lists.size() >= 1);
        CHECK(cle->lists.size() <= 4);
        int roster = 0;
        for (size_t j = 0; j < cle->lists.size(); ++j) {
            int size = static_cast<int>(cle->lists[j].size());
            CHECK(size >= e.seats());
            CHECK(size <= e.seats() + 1);
            roster += size;
            CHECK(cle->votes[j] >= 1);
            CHECK(cle->votes[j] <= 1000);
        }
        CHECK(roster == e.num_candidates());
        CHECK(e.total_voters() == e.ballot_total());
    }
}

TEST_CASE("searching finds the plain-approval representation hole") {
    GeneratorBounds bounds;
    bounds.max_candidates = 4;
    bounds.max_seats = 3;
    bounds.max_ballot_types = 4;
    bounds.max_count = 8;

    auto result = search_counterexample(RuleId::AV, AxiomId::JR, ElectionGenerator(1, bounds), 200);
    REQUIRE(result.has_value());
    CHECK(result->trial == 132);
    CHECK(result->verdict.status == VerdictStatus::Violated);

    // greedy minimization kept only what the violation needs
    CHECK(result->election.num_candidates() == 3);
    CHECK(result->election.profile().size() == 2);

    CandidateSet w = av(result->election).winners();
    CHECK(check_jr(result->election, w).status == VerdictStatus::Violated);
    CHECK(reverify_violation(result->election, w, result->verdict));

    // identical seed, identical hunt
    auto again = search_counterexample(RuleId::AV, AxiomId::JR, ElectionGenerator(1, bounds), 200);
    REQUIRE(again.has_value());
    CHECK(again->trial == result->trial);
    CHECK(emit_election(again->election) == emit_election(result->election));
}

TEST_CASE("searching finds the proportional-approval seat regression") {
    GeneratorBounds bounds;
    bounds.min_candidates = 3;
    bounds.max_candidates = 3;
    bounds.max_seats = 2;
    bounds.max_ballot_types = 5;
    bounds.max_count = 4;
    bounds.seats_below_candidates = true;

    auto result = search_counterexample(RuleId::PAV, AxiomId::HouseMonotonicity,
                                        ElectionGenerator(3, bounds), 1000);
    REQUIRE(result.has_value());
    CHECK(result->trial == 936);
    CHECK(result->verdict.status == VerdictStatus::Violated);
    REQUIRE(result->verdict.counter_election.has_value());
    CHECK(result->verdict.counter_election->seats() == result->election.seats() + 1);
    CHECK(reverify_violation(result->election, pav(result->election).winners(), result->verdict));
}

TEST_CASE("the sequential max-min rule survives a lower-quota hunt") {
    GeneratorBounds bounds;
    bounds.max_candidates = 5;
    bounds.max_seats = 3;
    bounds.max_ballot_types = 6;
    bounds.max_count = 9;
    bounds.seats_below_candidates = true;

    auto result = search_counterexample(RuleId::ODH, AxiomId::LowerQuota,
                                        ElectionGenerator(17, bounds), 400);
    CHECK_FALSE(result.has_value());
}
