#pragma once

#include <functional>
#include <vector>

#include "elect/election.hpp"
#include "elect/rational.hpp"

namespace elect {

// Strictly increasing sequence of positive divisors d(0) < d(1) < ...; a
// list's next-seat score is votes / d(seats already won).
class DivisorSequence {
public:
    // d(i) = i + 1: divisors 1, 2, 3, ...
    static DivisorSequence dhondt();
    // Any strictly increasing positive sequence.
    static DivisorSequence from(std::function<Rational(int)> fn);

    Rational operator()(int i) const { return fn_(i); }

private:
    std::function<Rational(int)> fn_;
};

struct Apportionment {
    std::vector<int> seats;                        // per list
    std::vector<CandidateId> elected;              // per-list prefixes, list order
    std::vector<std::vector<Rational>> quotients;  // [list][0..S-1]: votes/d(j)
    // Award order: (list index, divisor index) per seat handed out.
    std::vector<std::pair<int, int>> awards;
};

// Highest-quotient seat allocation. Ties go to the smallest list index.
Apportionment divisor_apportionment(const ClosedListElection& cle,
                                    const DivisorSequence& divisors = DivisorSequence::dhondt());

}  // namespace elect
