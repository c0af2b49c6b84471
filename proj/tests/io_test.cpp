#include <sstream>

#include "doctest.h"
#include "elect/axioms.hpp"
#include "elect/io.hpp"
#include "helpers.hpp"

using namespace elect;
using elect::test::ids;

namespace {

void check_syntax_error(const std::string& body, int line, int col) {
    CAPTURE(body);
    try {
        parse_election_text(body);
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& err) {
        CHECK(err.line == line);
        CHECK(err.col == col);
    }
}

}  // namespace

TEST_CASE("the sigma_a file parses to the expected election") {
    Election e = elect::test::load("sigma_a.elect");
    CHECK(e.labels() == std::vector<std::string>{"a", "b", "c", "d", "e", "f", "g"});
    CHECK(e.seats() == 3);
    CHECK(e.total_voters() == 45000);
    REQUIRE(e.profile().size() == 7);
    CHECK(e.count_of(ids(7, {0, 1})) == 10000);
    CHECK(e.count_of(ids(7, {4, 5, 6})) == 5000);
}

TEST_CASE("comments, blank lines, and empty ballots") {
    Election e = parse_election_text(
        "# leading comment\n"
        "candidates: a b   # trailing comment\n"
        "\n"
        "seats: 1\n"
        "ballot 2:\n"
        "ballot 3: a\n");
    CHECK(e.ballot_total() == 5);
    CHECK(e.count_of(CandidateSet(2)) == 2);
    CHECK(e.count_of(ids(2, {0})) == 3);
}

TEST_CASE("voters header is optional and defaults to the ballot total") {
    Election e = parse_election_text("candidates: a\nseats: 1\nballot 4: a\n");
    CHECK(e.total_voters() == 4);
}

TEST_CASE("diagnostics carry line and column") {
    check_syntax_error("candidates: a\nseats: x\n", 2, 8);
    check_syntax_error("candidates: a\nseats: 1\nballot 0: a\n", 3, 8);
    check_syntax_error("candidates: a\nseats: 1\nballot -2: a\n", 3, 8);
    check_syntax_error("candidates: a\nseats: 1\nballot two: a\n", 3, 8);
    check_syntax_error("wat: 3\n", 1, 1);
    check_syntax_error("candidates: a a\nseats: 1\n", 1, 15);  // duplicate label
    check_syntax_error("candidates: a\n", 2, 1);               // missing seats
    check_syntax_error("seats: 1\n", 2, 1);                    // missing candidates
    check_syntax_error("candidates: a\nseats: 99999999999\n", 2, 8);
}

TEST_CASE("header and label errors") {
    CHECK_THROWS_AS(parse_election_text("candidates: a\nseats: 1\nseats: 2\n"), DuplicateHeader);
    CHECK_THROWS_AS(parse_election_text("candidates: a\ncandidates: b\nseats: 1\n"),
                    DuplicateHeader);
    CHECK_THROWS_AS(parse_election_text("candidates: a\nseats: 1\nballot 1: z\n"),
                    UnknownCandidate);
    CHECK_THROWS_AS(parse_election_text("candidates: a\nseats: 1\nvoters: 1\nballot 2: a\n"),
                    VoterCountTooSmall);
    CHECK_THROWS_AS(parse_election_text("candidates: a b\nseats: 3\n"), SeatsOutOfRange);
    CHECK_THROWS_AS(parse_election_file("/nonexistent/path.elect"), ElectError);
}

TEST_CASE("emit produces a canonical round-trippable rendering") {
    Election e = elect::test::load("sigma_a.elect");
    std::string text = emit_election(e);
    CHECK(parse_election_text(text) == e);
    // voters is always written, even when redundant
    Election simple = make_election(2, 1, {{{0}, 1}});
    CHECK(emit_election(simple).find("voters: 1") != std::string::npos);
    CHECK(parse_election_text(emit_election(simple)) == simple);
}

TEST_CASE("round-trip holds across a generated batch") {
    GeneratorBounds bounds;
    ElectionGenerator gen(2026, bounds);
    for (int i = 0; i < 200; ++i) {
        Election e = gen.next();
        CHECK(parse_election_text(emit_election(e)) == e);
    }
}

TEST_CASE("round-trip through a stream") {
    Election e = elect::test::load("sigma_h.elect");
    std::istringstream in(emit_election(e));
    CHECK(parse_election(in) == e);
}
