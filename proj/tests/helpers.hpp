#pragma once

#include <string>
#include <vector>

#include "elect/election.hpp"
#include "elect/io.hpp"

namespace elect::test {

inline std::string data_path(const std::string& name) {
    return std::string(ELECT_TEST_DATA) + "/" + name;
}

inline Election load(const std::string& name) { return parse_election_file(data_path(name)); }

inline CandidateSet ids(int universe, const std::vector<CandidateId>& members) {
    return CandidateSet::of(universe, members);
}

// Winner-set family as sorted member lists, for readable CHECK output.
inline std::vector<std::vector<CandidateId>> as_lists(const std::vector<CandidateSet>& sets) {
    std::vector<std::vector<CandidateId>> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(s.members());
    return out;
}

}  // namespace elect::test
