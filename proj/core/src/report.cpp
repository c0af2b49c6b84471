#include <sstream>

#include "elect/io.hpp"

namespace elect {

namespace {

std::string braced(const Election& e, const CandidateSet& s) {
    std::string out = "{";
    for (CandidateId c : s.members()) {
        if (out.size() > 1) out += ", ";
        out += e.label_of(c);
    }
    return out + "}";
}

std::string spaced(const Election& e, const CandidateSet& s) {
    std::string out;
    for (CandidateId c : s.members()) {
        if (!out.empty()) out += " ";
        out += e.label_of(c);
    }
    return out;
}

const char* status_name(VerdictStatus status) {
    switch (status) {
        case VerdictStatus::Satisfied: return "satisfied";
        case VerdictStatus::Violated: return "violated";
        case VerdictStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

}  // namespace

std::string render_winner_report(const Election& e, const WinnerReport& report,
                                 ReportFormat format, bool trace) {
    std::ostringstream out;
    if (format == ReportFormat::Machine) {
        out << "rule: " << rule_name(report.rule) << "\n";
        out << "seats: " << e.seats() << "\n";
        out << "tie_mode: " << (report.tie_mode == TieMode::Enumerated ? "enum" : "det") << "\n";
        for (const auto& w : report.winner_sets) out << "winner_set: " << spaced(e, w) << "\n";
        out << "all_tied: " << (report.all_tied ? "true" : "false") << "\n";
        out << "truncated: " << (report.truncated ? "true" : "false") << "\n";
        if (report.value) out << "value: " << fraction_string(*report.value) << "\n";
        if (trace)
            for (const auto& rec : report.trace) {
                out << "round: " << rec.iteration << " chosen=" << e.label_of(rec.chosen)
                    << " value=" << fraction_string(rec.chosen_value) << "\n";
                out << "considered: " << rec.iteration;
                for (const auto& [c, v] : rec.considered)
                    out << " " << e.label_of(c) << "=" << fraction_string(v);
                out << "\n";
            }
        return out.str();
    }

    out << "rule: " << rule_name(report.rule) << "\n";
    if (report.all_tied) {
        out << "every " << e.seats() << "-candidate set ties; deterministic representative: "
            << braced(e, report.winners()) << "\n";
    } else if (report.winner_sets.size() == 1) {
        out << "winners: " << braced(e, report.winners()) << "\n";
    } else {
        out << "tied winner sets (" << report.winner_sets.size()
            << (report.truncated ? ", truncated at cap" : "") << "):\n";
        for (const auto& w : report.winner_sets) out << "  " << braced(e, w) << "\n";
    }
    if (report.value) out << "value: " << decimal_string(*report.value) << "\n";
    if (trace)
        for (const auto& rec : report.trace) {
            out << "round " << rec.iteration << ": elected " << e.label_of(rec.chosen)
                << " with value " << decimal_string(rec.chosen_value) << "\n ";
            for (const auto& [c, v] : rec.considered)
                out << " " << e.label_of(c) << "=" << decimal_string(v);
            out << "\n";
        }
    return out.str();
}

std::string render_apportionment(const Election& e, const ClosedListElection& cle,
                                 const Apportionment& app, ReportFormat format) {
    std::ostringstream out;
    size_t lists = cle.lists.size();

    // Which (list, divisor-index) pairs won a seat.
    auto won = [&](size_t list, int index) {
        for (const auto& [l, i] : app.awards)
            if (static_cast<size_t>(l) == list && i == index) return true;
        return false;
    };

    if (format == ReportFormat::Machine) {
        for (size_t l = 0; l < lists; ++l) {
            out << "list: " << l << " first=" << e.label_of(cle.lists[l].front())
                << " votes=" << cle.votes[l] << " seats=" << app.seats[l] << "\n";
            for (int i = 0; i < cle.seats; ++i)
                out << "quotient: list=" << l << " index=" << i
                    << " value=" << fraction_string(app.quotients[l][static_cast<size_t>(i)])
                    << " seat=" << (won(l, i) ? "true" : "false") << "\n";
        }
        for (size_t seat = 0; seat < app.awards.size(); ++seat)
            out << "award: " << seat + 1 << " list=" << app.awards[seat].first
                << " divisor=" << app.awards[seat].second + 1 << "\n";
        out << "elected:";
        for (CandidateId c : app.elected) out << " " << e.label_of(c);
        out << "\n";
        return out.str();
    }

    out << "list        votes";
    for (int i = 0; i < cle.seats; ++i) out << "       /" << i + 1;
    out << "  seats\n";
    for (size_t l = 0; l < lists; ++l) {
        std::string name = e.label_of(cle.lists[l].front());
        if (cle.lists[l].size() > 1) name += ".." + e.label_of(cle.lists[l].back());
        out << name;
        for (size_t pad = name.size(); pad < 10; ++pad) out << " ";
        std::string votes = std::to_string(cle.votes[l]);
        for (size_t pad = votes.size(); pad < 7; ++pad) out << " ";
        out << votes;
        for (int i = 0; i < cle.seats; ++i) {
            std::string cell = decimal_string(app.quotients[l][static_cast<size_t>(i)]);
            cell += won(l, i) ? "*" : " ";
            for (size_t pad = cell.size(); pad < 9; ++pad) out << " ";
            out << cell;
        }
        out << "  " << app.seats[l] << "\n";
    }
    out << "award order:";
    for (const auto& [l, i] : app.awards)
        out << " " << e.label_of(cle.lists[static_cast<size_t>(l)].front());
    out << "\n";
    out << "elected: ";
    CandidateSet elected(e.num_candidates());
    for (CandidateId c : app.elected) elected.insert(c);
    out << braced(e, elected) << "\n";
    return out.str();
}

std::string render_verdict(const Election& e, const AxiomVerdict& verdict, ReportFormat format) {
    std::ostringstream out;
    bool machine = format == ReportFormat::Machine;
    out << "axiom: " << axiom_name(verdict.axiom) << "\n";
    out << "status: " << status_name(verdict.status) << "\n";
    if (!verdict.detail.empty()) out << "detail: " << verdict.detail << "\n";
    if (verdict.group)
        out << "group: " << (machine ? spaced(e, *verdict.group) : braced(e, *verdict.group))
            << "\n";
    for (const auto& ballot : verdict.family)
        out << "family: " << (machine ? spaced(e, ballot) : braced(e, ballot)) << "\n";
    if (verdict.quota)
        out << "quota: " << (machine ? fraction_string(*verdict.quota) : decimal_string(*verdict.quota))
            << "\n";
    if (verdict.quota_floor) out << "quota_floor: " << *verdict.quota_floor << "\n";
    if (verdict.achieved) out << "achieved: " << *verdict.achieved << "\n";
    if (!verdict.winners_before.empty()) {
        out << "winners_before:";
        for (const auto& w : verdict.winners_before)
            out << " " << (machine ? "[" + spaced(e, w) + "]" : braced(e, w));
        out << "\n";
    }
    if (!verdict.winners_after.empty()) {
        out << "winners_after:";
        for (const auto& w : verdict.winners_after)
            out << " " << (machine ? "[" + spaced(e, w) + "]" : braced(e, w));
        out << "\n";
    }
    if (verdict.counter_election) {
        out << (machine ? "counter_election_begin\n" : "modified election:\n");
        std::istringstream lines(emit_election(*verdict.counter_election));
        std::string line;
        while (std::getline(lines, line)) out << (machine ? "" : "  ") << line << "\n";
        if (machine) out << "counter_election_end\n";
    }
    return out.str();
}

}  // namespace elect
