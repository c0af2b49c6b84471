#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "elect/election.hpp"
#include "elect/rational.hpp"
#include "elect/rules.hpp"

namespace elect {

enum class AxiomId { JR, EJR, LowerQuota, HouseMonotonicity, PopulationMonotonicity, ClosedListEquivalence };

// CLI-facing axiom names: "jr", "ejr", "lower-quota", "house-mono",
// "pop-mono", "closed-list".
const char* axiom_name(AxiomId axiom);
std::optional<AxiomId> axiom_from_name(const std::string& name);
const std::vector<AxiomId>& all_axioms();

enum class VerdictStatus { Satisfied, Violated, Inconclusive };

// Outcome of one axiom check. A Violated verdict always carries enough
// structure to replay the violation against the raw definition.
struct AxiomVerdict {
    AxiomId axiom{};
    VerdictStatus status = VerdictStatus::Satisfied;
    std::string detail;  // one-line human summary (reason for Inconclusive)

    // Representation axioms: the cohesive group's evidence.
    std::optional<CandidateSet> group;        // the commonly-backed candidate set
    std::vector<CandidateSet> family;         // the ballot-type family {y_1..y_n}
    std::optional<Rational> quota;            // q
    std::optional<long long> quota_floor;     // floor(q), or the EJR group size l
    std::optional<long long> achieved;        // |W ∩ union of the family|

    // Rule-parameterized axioms: the constructed election and both outcomes.
    std::optional<Election> counter_election;     // seats+1 / moved-voter / added-voter
    std::vector<CandidateSet> winners_before;
    std::vector<CandidateSet> winners_after;
};

struct AxiomOptions {
    int max_ell = 8;             // EJR group sizes checked: 1..min(S, max_ell)
    int max_ballot_types = 15;   // lower-quota family enumeration cap
    long long subset_cap = kDefaultSubsetCap;  // EJR T-enumeration cap
    RuleOptions rule_options;    // how rule-parameterized checks run the rule
};

// Justified representation of W: no candidate may have |V|/S voters whose
// ballots all contain it and all miss W. (Per-candidate reduction of the
// family definition; the two are equivalent.)
AxiomVerdict check_jr(const Election& e, const CandidateSet& w);

// Extended justified representation: for each group size l and each l-subset
// T of commonly approved candidates, the voters whose ballots contain T but
// hold fewer than l winners must number below l*|V|/S.
AxiomVerdict check_ejr(const Election& e, const CandidateSet& w, const AxiomOptions& options = {});

// Lower quota: any family of positive ballot-types sharing at least
// floor(q) common candidates, where q = (family mass / |V|) * S, must see
// floor(q) of its united candidates elected.
AxiomVerdict check_lower_quota(const Election& e, const CandidateSet& w,
                               const AxiomOptions& options = {});

// Reruns the rule at S and S+1; the S-winners must survive. Enumerated ties:
// violated only when no outcome pair is nested. Throws PreconditionFailed
// when S = |C|, RuleCannotRun when either run exceeds its caps.
AxiomVerdict check_house_monotonicity(RuleId rule, const Election& e,
                                      const AxiomOptions& options = {});

// Gaining support must not eject the favored group G: condition 1 moves one
// A-voter to the ballot A ∪ G (requires G ∩ A = ∅, B(A) >= 1), condition 2
// adds one new G-only voter. When `a` is absent only condition 2 runs.
// Violated only when G misses every tie outcome. Throws PreconditionFailed.
AxiomVerdict check_population_monotonicity(RuleId rule, const Election& e, const CandidateSet& g,
                                           const std::optional<CandidateSet>& a,
                                           const AxiomOptions& options = {});

// Both population-monotonicity conditions for every non-empty G within the
// rule's winner set and every admissible ballot-type A.
AxiomVerdict check_population_monotonicity_all(RuleId rule, const Election& e,
                                               const AxiomOptions& options = {});

// For closed-list-shaped elections: some tie outcome of the rule must give
// each list exactly the seats the divisor method hands it. Throws
// NotClosedListShaped.
AxiomVerdict check_closed_list_equivalence(RuleId rule, const Election& e,
                                           const AxiomOptions& options = {});

// Re-derives a Violated verdict from the raw definitions (no checker
// shortcuts): substitutes the witness family/group/elections literally.
// Returns false if the witness does not actually violate the axiom.
bool reverify_violation(const Election& e, const CandidateSet& w, const AxiomVerdict& verdict);

struct GeneratorBounds {
    int min_candidates = 2;
    int max_candidates = 6;
    int max_seats = 4;
    int max_ballot_types = 8;
    Count max_count = 50;
    bool seats_below_candidates = false;  // keep S < |C| (house-monotonicity runs)
    // Closed-list shape: disjoint roster-contiguous lists, each of size >= S.
    bool closed_list = false;
    int max_lists = 4;
};

// Deterministic seeded election stream: one seed + bounds always produce the
// same sequence, regardless of platform.
class ElectionGenerator {
public:
    explicit ElectionGenerator(std::uint64_t seed, GeneratorBounds bounds = {});
    Election next();
    const GeneratorBounds& bounds() const { return bounds_; }

private:
    std::uint64_t state_;
    GeneratorBounds bounds_;
};

struct SearchResult {
    long long trial = -1;  // index of the first violating trial
    Election election;     // greedily minimized
    AxiomVerdict verdict;  // re-checked on the minimized election
};

// Scans `trials` generated elections for a violation of (rule, axiom); the
// first hit (lowest trial index) is greedily shrunk while it keeps violating.
// Deterministic for a fixed generator seed.
std::optional<SearchResult> search_counterexample(RuleId rule, AxiomId axiom,
                                                  ElectionGenerator gen, long long trials,
                                                  const AxiomOptions& options = {});

}  // namespace elect
