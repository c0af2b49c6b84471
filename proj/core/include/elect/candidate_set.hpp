#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace elect {

// Dense candidate index, 0-based over the election's roster.
using CandidateId = std::int32_t;

// A set of candidates drawn from a fixed-size roster, packed into 64-bit
// words. Doubles as the ballot-type representation: a ballot is exactly the
// set of candidates it approves (possibly empty).
class CandidateSet {
public:
    CandidateSet() = default;
    explicit CandidateSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    static CandidateSet of(int universe, std::initializer_list<CandidateId> ids);
    static CandidateSet of(int universe, const std::vector<CandidateId>& ids);
    static CandidateSet full(int universe);

    int universe() const { return universe_; }
    bool empty() const;
    int size() const;
    bool contains(CandidateId c) const;
    void insert(CandidateId c);
    void erase(CandidateId c);

    bool intersects(const CandidateSet& other) const;
    bool is_subset_of(const CandidateSet& other) const;
    CandidateSet intersect(const CandidateSet& other) const;
    CandidateSet unite(const CandidateSet& other) const;
    CandidateSet difference(const CandidateSet& other) const;

    // Members in ascending id order.
    std::vector<CandidateId> members() const;
    // Smallest member, or -1 when empty.
    CandidateId first() const;

    bool operator==(const CandidateSet& other) const {
        return universe_ == other.universe_ && words_ == other.words_;
    }
    // Total order: lexicographic on the ascending member list, so
    // {0} < {0,1} < {0,2} < {1}. This is the canonical order used for profile
    // storage, tie families and the "lexicographically least subset" policy.
    bool operator<(const CandidateSet& other) const;

private:
    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace elect
