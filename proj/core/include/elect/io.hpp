#pragma once

#include <iosfwd>
#include <string>

#include "elect/axioms.hpp"
#include "elect/divisor.hpp"
#include "elect/election.hpp"
#include "elect/rules.hpp"

namespace elect {

// Election text format:
//
//   # full-line or trailing comments
//   candidates: a b c
//   seats: 2
//   voters: 14          (optional; defaults to the ballot total)
//   ballot 3: a b
//   ballot 1: b
//   ballot 2:           (an empty ballot-type)
//
// Tokens are whitespace-separated; ballot counts are positive integers; every
// label must be declared. Throws SyntaxError (with line/col),
// DuplicateHeader, UnknownCandidate, VoterCountTooSmall.
Election parse_election(std::istream& in);
Election parse_election_text(const std::string& text);
Election parse_election_file(const std::string& path);

// Canonical round-trippable rendering: parse(emit_election(e)) == e.
std::string emit_election(const Election& e);

enum class ReportFormat { Table, Machine };

// Winner report rendering. Machine format is line-oriented "key: value" with
// every numeric value as an exact p/q fraction; table format renders values
// with two decimals.
std::string render_winner_report(const Election& e, const WinnerReport& report,
                                 ReportFormat format, bool trace);

// Quotient grid with seat markers, plus per-list seat totals.
std::string render_apportionment(const Election& e, const ClosedListElection& cle,
                                 const Apportionment& app, ReportFormat format);

std::string render_verdict(const Election& e, const AxiomVerdict& verdict, ReportFormat format);

}  // namespace elect
