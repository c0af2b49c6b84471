#include "elect/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace elect {

namespace {

struct Token {
    std::string text;
    int col = 0;  // 1-based start column
};

// Whitespace-split after stripping '#' comments.
std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    size_t end = line.find('#');
    if (end == std::string::npos) end = line.size();
    size_t i = 0;
    while (i < end) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < end && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

Count parse_count(const Token& token, int line_no) {
    const std::string& text = token.text;
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw SyntaxError(line_no, token.col, "expected a non-negative integer, got \"" + text + "\"");
    try {
        return std::stoll(text);
    } catch (const std::out_of_range&) {
        throw SyntaxError(line_no, token.col, "count \"" + text + "\" is out of range");
    }
}

}  // namespace

Election parse_election(std::istream& in) {
    std::optional<std::vector<std::string>> labels;
    std::optional<int> seats;
    std::optional<Count> voters;
    std::vector<BallotLine> ballots;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<Token> tokens = tokenize(line);
        if (tokens.empty()) continue;
        const Token& head = tokens.front();

        if (head.text == "candidates:") {
            if (labels) throw DuplicateHeader("line " + std::to_string(line_no) +
                                              ": candidates declared twice");
            if (tokens.size() < 2)
                throw SyntaxError(line_no, head.col, "candidates: needs at least one label");
            std::vector<std::string> names;
            for (size_t i = 1; i < tokens.size(); ++i) {
                for (const auto& seen : names)
                    if (seen == tokens[i].text)
                        throw SyntaxError(line_no, tokens[i].col,
                                          "duplicate candidate label \"" + tokens[i].text + "\"");
                names.push_back(tokens[i].text);
            }
            labels = std::move(names);
        } else if (head.text == "seats:") {
            if (seats) throw DuplicateHeader("line " + std::to_string(line_no) +
                                             ": seats declared twice");
            if (tokens.size() != 2)
                throw SyntaxError(line_no, head.col, "seats: needs exactly one number");
            Count value = parse_count(tokens[1], line_no);
            if (value > 10000)
                throw SyntaxError(line_no, tokens[1].col, "seat count is implausibly large");
            seats = static_cast<int>(value);
        } else if (head.text == "voters:") {
            if (voters) throw DuplicateHeader("line " + std::to_string(line_no) +
                                              ": voters declared twice");
            if (tokens.size() != 2)
                throw SyntaxError(line_no, head.col, "voters: needs exactly one number");
            voters = parse_count(tokens[1], line_no);
        } else if (head.text == "ballot") {
            if (tokens.size() < 2)
                throw SyntaxError(line_no, head.col, "ballot line needs a count");
            std::string count_text = tokens[1].text;
            if (count_text.empty() || count_text.back() != ':')
                throw SyntaxError(line_no, tokens[1].col,
                                  "ballot count must end with ':', got \"" + count_text + "\"");
            Token count_token{count_text.substr(0, count_text.size() - 1), tokens[1].col};
            BallotLine ballot;
            ballot.count = parse_count(count_token, line_no);
            if (ballot.count == 0)
                throw SyntaxError(line_no, tokens[1].col, "ballot count must be positive");
            for (size_t i = 2; i < tokens.size(); ++i) ballot.labels.push_back(tokens[i].text);
            ballots.push_back(std::move(ballot));
        } else {
            throw SyntaxError(line_no, head.col,
                              "expected candidates:, seats:, voters:, or ballot, got \"" +
                                  head.text + "\"");
        }
    }
    if (!labels) throw SyntaxError(line_no + 1, 1, "missing candidates: header");
    if (!seats) throw SyntaxError(line_no + 1, 1, "missing seats: header");
    return build_election(std::move(*labels), *seats, ballots, voters);
}

Election parse_election_text(const std::string& text) {
    std::istringstream in(text);
    return parse_election(in);
}

Election parse_election_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ElectError("cannot open election file: " + path);
    return parse_election(in);
}

std::string emit_election(const Election& e) {
    std::ostringstream out;
    out << "candidates:";
    for (const auto& label : e.labels()) out << " " << label;
    out << "\n";
    out << "seats: " << e.seats() << "\n";
    out << "voters: " << e.total_voters() << "\n";
    for (const auto& [ballot, count] : e.profile()) {
        out << "ballot " << count << ":";
        for (CandidateId c : ballot.members()) out << " " << e.label_of(c);
        out << "\n";
    }
    return out.str();
}

}  // namespace elect
