#include "elect/candidate_set.hpp"

#include <bit>
#include <cassert>

namespace elect {

CandidateSet CandidateSet::of(int universe, std::initializer_list<CandidateId> ids) {
    CandidateSet s(universe);
    for (CandidateId c : ids) s.insert(c);
    return s;
}

CandidateSet CandidateSet::of(int universe, const std::vector<CandidateId>& ids) {
    CandidateSet s(universe);
    for (CandidateId c : ids) s.insert(c);
    return s;
}

CandidateSet CandidateSet::full(int universe) {
    CandidateSet s(universe);
    for (size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~0ull;
    int spare = static_cast<int>(s.words_.size()) * 64 - universe;
    if (spare > 0 && !s.words_.empty()) s.words_.back() >>= spare;
    return s;
}

bool CandidateSet::empty() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

int CandidateSet::size() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
}

bool CandidateSet::contains(CandidateId c) const {
    assert(c >= 0 && c < universe_);
    return (words_[static_cast<size_t>(c) / 64] >> (c % 64)) & 1ull;
}

void CandidateSet::insert(CandidateId c) {
    assert(c >= 0 && c < universe_);
    words_[static_cast<size_t>(c) / 64] |= 1ull << (c % 64);
}

void CandidateSet::erase(CandidateId c) {
    assert(c >= 0 && c < universe_);
    words_[static_cast<size_t>(c) / 64] &= ~(1ull << (c % 64));
}

bool CandidateSet::intersects(const CandidateSet& other) const {
    assert(universe_ == other.universe_);
    for (size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & other.words_[w]) return true;
    return false;
}

bool CandidateSet::is_subset_of(const CandidateSet& other) const {
    assert(universe_ == other.universe_);
    for (size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & ~other.words_[w]) return false;
    return true;
}

CandidateSet CandidateSet::intersect(const CandidateSet& other) const {
    assert(universe_ == other.universe_);
    CandidateSet out(universe_);
    for (size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] & other.words_[w];
    return out;
}

CandidateSet CandidateSet::unite(const CandidateSet& other) const {
    assert(universe_ == other.universe_);
    CandidateSet out(universe_);
    for (size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] | other.words_[w];
    return out;
}

CandidateSet CandidateSet::difference(const CandidateSet& other) const {
    assert(universe_ == other.universe_);
    CandidateSet out(universe_);
    for (size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] & ~other.words_[w];
    return out;
}

std::vector<CandidateId> CandidateSet::members() const {
    std::vector<CandidateId> out;
    for (size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(static_cast<CandidateId>(w * 64 + static_cast<size_t>(b)));
            bits &= bits - 1;
        }
    }
    return out;
}

CandidateId CandidateSet::first() const {
    for (size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return static_cast<CandidateId>(w * 64 + static_cast<size_t>(std::countr_zero(words_[w])));
    return -1;
}

bool CandidateSet::operator<(const CandidateSet& other) const {
    if (universe_ != other.universe_) return universe_ < other.universe_;
    // Lexicographic on the ascending member lists: the first differing
    // candidate decides, and a strict prefix sorts before its extensions.
    auto has_above = [](const std::vector<std::uint64_t>& words, size_t w, int b) {
        std::uint64_t mask = (b == 63) ? 0ull : ~0ull << (b + 1);
        if (words[w] & mask) return true;
        for (size_t v = w + 1; v < words.size(); ++v)
            if (words[v]) return true;
        return false;
    };
    for (size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t diff = words_[w] ^ other.words_[w];
        if (!diff) continue;
        int b = std::countr_zero(diff);
        if ((words_[w] >> b) & 1ull) {
            // I hold the first differing candidate c. My list element here is c;
            // theirs is either some later candidate (c wins, I am smaller) or
            // nothing at all (they are a strict prefix of me, they are smaller).
            return has_above(other.words_, w, b);
        }
        // They hold c. I am smaller only if my list ends here (strict prefix).
        return !has_above(words_, w, b);
    }
    return false;
}

}  // namespace elect
