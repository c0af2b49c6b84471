#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "elect/election.hpp"
#include "elect/rational.hpp"

namespace elect {

// Hall-ratio enumeration walks all 2^|A|-1 subsets; 20 keeps that near 10^6.
inline constexpr int kDefaultHallCap = 20;

// A fractional split of ballot weight among approved candidates inside a
// target set A. Legal when every share is >= 0, shares only flow to approved
// candidates, and each ballot touching A distributes exactly its count.
struct SupportDistribution {
    CandidateSet target;
    std::map<std::pair<CandidateSet, CandidateId>, Rational> shares;

    // Share for (ballot, candidate); zero when absent.
    Rational at(const CandidateSet& ballot, CandidateId c) const;
    void set(const CandidateSet& ballot, CandidateId c, const Rational& value);
};

// Total support routed to each member of the target set.
struct SupportVector {
    std::map<CandidateId, Rational> support;

    Rational min_value() const;
    // Members of `target` whose support equals the minimum.
    CandidateSet least_supported(const CandidateSet& target) const;
};

struct ValidationReport {
    bool ok = true;
    // Violated constraint id: "nonnegative-share", "share-outside-ballot",
    // "ballot-not-fully-distributed"; empty when ok.
    std::string violated;
    std::optional<std::pair<CandidateSet, CandidateId>> offending;
    std::string detail;
};

struct MaxMinResult {
    Rational value;
    SupportDistribution witness;
    std::optional<CandidateSet> kernel;
};

enum class MaxMinMethod {
    Auto,      // Hall enumeration + flow witness when |A| fits the cap, else simplex
    Simplex,   // exact rational simplex on the max-min program
    HallFlow,  // subset enumeration for the value, exact max-flow for the witness
};

struct SupportOptions {
    MaxMinMethod method = MaxMinMethod::Auto;
    int hall_cap = kDefaultHallCap;
    bool with_kernel = false;  // also derive the tight kernel of the witness
};

// Largest achievable minimum support over A, with a witness distribution
// attaining it. Throws EmptyTargetSet. If no ballot intersects A the value is
// 0 with the empty-share witness.
MaxMinResult maxmin_support(const Election& e, const CandidateSet& a,
                            const SupportOptions& options = {});

// Independent combinatorial path: min over non-empty K subset of A of
// supporters(K)/|K|, by explicit enumeration. Throws EmptyTargetSet,
// TargetSetTooLarge.
Rational hall_ratio_maxmin(const Election& e, const CandidateSet& a, int cap = kDefaultHallCap);

// Column sums of F over its target set.
SupportVector support_vector(const SupportDistribution& f);

// Checks the three defining constraints exactly; names the first violated one.
ValidationReport validate_distribution(const Election& e, const SupportDistribution& f);

// Closure starting from {least}: repeatedly adds any least-supported
// candidate that receives positive share on a ballot shared with the closure.
// Throws NotLeastSupported unless `least` has minimal support under f.
CandidateSet kernel_of(const Election& e, const SupportDistribution& f, CandidateId least);

// A kernel K of the witness with the two tightness conditions: every member
// sits exactly at result.value, and no candidate outside K takes any share
// from a ballot touching K. Exists iff the witness is optimal; otherwise
// throws NoTightKernel.
CandidateSet tight_kernel(const Election& e, const MaxMinResult& result);

// One strict-improvement step on the minimum support: transfers bounded
// slices of share from over-supported candidates along ballot-sharing paths
// into every least-supported candidate. Returns nothing iff a tight kernel
// already certifies optimality.
std::optional<SupportDistribution> improve_distribution(const Election& e,
                                                        const SupportDistribution& f);

}  // namespace elect
