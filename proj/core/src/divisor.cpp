#include "elect/divisor.hpp"

namespace elect {

DivisorSequence DivisorSequence::dhondt() {
    return from([](int i) { return Rational(i + 1); });
}

DivisorSequence DivisorSequence::from(std::function<Rational(int)> fn) {
    DivisorSequence d;
    d.fn_ = std::move(fn);
    return d;
}

Apportionment divisor_apportionment(const ClosedListElection& cle, const DivisorSequence& divisors) {
    int lists = static_cast<int>(cle.lists.size());
    Apportionment app;
    app.seats.assign(static_cast<size_t>(lists), 0);
    app.quotients.resize(static_cast<size_t>(lists));
    for (int l = 0; l < lists; ++l) {
        app.quotients[static_cast<size_t>(l)].reserve(static_cast<size_t>(cle.seats));
        for (int j = 0; j < cle.seats; ++j)
            app.quotients[static_cast<size_t>(l)].push_back(Rational(cle.votes[static_cast<size_t>(l)]) /
                                                            divisors(j));
    }
    for (int round = 0; round < cle.seats; ++round) {
        int winner = -1;
        Rational best;
        for (int l = 0; l < lists; ++l) {
            const Rational& score = app.quotients[static_cast<size_t>(l)]
                                                 [static_cast<size_t>(app.seats[static_cast<size_t>(l)])];
            if (winner < 0 || score > best) {
                winner = l;
                best = score;
            }
        }
        app.awards.emplace_back(winner, app.seats[static_cast<size_t>(winner)]);
        ++app.seats[static_cast<size_t>(winner)];
    }
    for (int l = 0; l < lists; ++l)
        for (int j = 0; j < app.seats[static_cast<size_t>(l)]; ++j)
            app.elected.push_back(cle.lists[static_cast<size_t>(l)][static_cast<size_t>(j)]);
    return app;
}

}  // namespace elect
