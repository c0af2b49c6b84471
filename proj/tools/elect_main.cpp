// elect: compute winners, check axioms, search for counterexamples, and
// compare rules on approval-ballot election files.
//
// Exit codes
//   compute:  0 ok, 2 input problem, 3 cap exceeded
//   check:    0 satisfied, 1 violated, 4 inconclusive, 2 input problem,
//             3 check could not run (caps/preconditions)
//   search:   1 violation found, 0 search exhausted, 2 input problem
//   compare:  0 ok, 2 input problem
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "elect/axioms.hpp"
#include "elect/divisor.hpp"
#include "elect/io.hpp"
#include "elect/rules.hpp"

using namespace elect;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitFound = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitInconclusive = 4;

long long env_longlong(const char* name, long long fallback) {
    const char* value = std::getenv(name);
    if (!value) return fallback;
    try {
        return std::stoll(value);
    } catch (const std::exception&) {
        return fallback;
    }
}

struct CommonOptions {
    std::string ties = "det";
    std::string format = "table";
    long long subset_cap = env_longlong("ELECT_SUBSET_CAP", kDefaultSubsetCap);
    int tie_cap = static_cast<int>(env_longlong("ELECT_TIE_CAP", kDefaultTieCap));
    int hall_cap = static_cast<int>(env_longlong("ELECT_HALL_CAP", kDefaultHallCap));

    RuleOptions rule_options() const {
        RuleOptions options;
        options.ties = ties == "enum" ? TieMode::Enumerated : TieMode::Deterministic;
        options.subset_cap = subset_cap;
        options.tie_cap = tie_cap;
        options.hall_cap = hall_cap;
        return options;
    }
    ReportFormat report_format() const {
        return format == "machine" ? ReportFormat::Machine : ReportFormat::Table;
    }
};

void add_common_flags(CLI::App* cmd, CommonOptions* common, bool with_ties = true) {
    if (with_ties)
        cmd->add_option("--ties", common->ties, "Tie handling: det or enum")
            ->check(CLI::IsMember({"det", "enum"}));
    cmd->add_option("--format", common->format, "Output format: table or machine")
        ->check(CLI::IsMember({"table", "machine"}));
    cmd->add_option("--subset-cap", common->subset_cap,
                    "Abort subset scans beyond this many subsets");
    cmd->add_option("--tie-cap", common->tie_cap, "Maximum enumerated tie family size");
    cmd->add_option("--hall-cap", common->hall_cap,
                    "Largest target set the combinatorial support oracle accepts");
}

Election load_election(const std::string& path) { return parse_election_file(path); }

CandidateSet parse_label_set(const Election& e, const std::string& csv) {
    CandidateSet out(e.num_candidates());
    std::istringstream in(csv);
    std::string label;
    while (std::getline(in, label, ','))
        if (!label.empty()) out.insert(e.id_of(label));
    return out;
}

// ---------------------------------------------------------------- compute --

int cmd_compute(const std::string& rule_name_arg, const std::string& path,
                const CommonOptions& common, bool trace) {
    Election e = load_election(path);
    ReportFormat format = common.report_format();

    if (rule_name_arg == "dhondt") {
        auto cle = as_closed_list(e);
        if (!cle) {
            std::cerr << "error: " << path << " is not closed-list shaped\n";
            return kExitInput;
        }
        std::cout << render_apportionment(e, *cle, divisor_apportionment(*cle), format);
        return kExitOk;
    }

    std::vector<RuleId> rules;
    if (rule_name_arg == "all") {
        rules = all_rules();
    } else {
        auto rule = rule_from_name(rule_name_arg);
        if (!rule) {
            std::cerr << "error: unknown rule \"" << rule_name_arg << "\"\n";
            return kExitInput;
        }
        rules.push_back(*rule);
    }

    bool capped = false;
    bool first = true;
    for (RuleId rule : rules) {
        if (!first) std::cout << "\n";
        first = false;
        try {
            WinnerReport report = run_rule(rule, e, common.rule_options());
            std::cout << render_winner_report(e, report, format, trace);
        } catch (const InstanceTooLarge& err) {
            capped = true;
            std::cout << "rule: " << rule_name(rule) << "\n";
            std::cout << "error: " << err.what() << "\n";
        }
    }
    return capped ? kExitCap : kExitOk;
}

// ------------------------------------------------------------------ check --

int verdict_exit(const AxiomVerdict& verdict) {
    switch (verdict.status) {
        case VerdictStatus::Satisfied: return kExitOk;
        case VerdictStatus::Violated: return kExitViolated;
        case VerdictStatus::Inconclusive: return kExitInconclusive;
    }
    return kExitInconclusive;
}

int cmd_check(const std::string& rule_name_arg, const std::string& axiom_name_arg,
              const std::string& path, const CommonOptions& common, int max_ell,
              int max_ballot_types, const std::string& group_csv, const std::string& moved_csv) {
    Election e = load_election(path);
    auto rule = rule_from_name(rule_name_arg);
    if (!rule) {
        std::cerr << "error: unknown rule \"" << rule_name_arg << "\"\n";
        return kExitInput;
    }
    auto axiom = axiom_from_name(axiom_name_arg);
    if (!axiom) {
        std::cerr << "error: unknown axiom \"" << axiom_name_arg << "\"\n";
        return kExitInput;
    }

    AxiomOptions options;
    options.max_ell = max_ell;
    options.max_ballot_types = max_ballot_types;
    options.subset_cap = common.subset_cap;
    options.rule_options = common.rule_options();

    AxiomVerdict verdict;
    switch (*axiom) {
        case AxiomId::JR:
        case AxiomId::EJR:
        case AxiomId::LowerQuota: {
            RuleOptions det = options.rule_options;
            det.ties = TieMode::Deterministic;
            CandidateSet w = run_rule(*rule, e, det).winners();
            if (*axiom == AxiomId::JR)
                verdict = check_jr(e, w);
            else if (*axiom == AxiomId::EJR)
                verdict = check_ejr(e, w, options);
            else
                verdict = check_lower_quota(e, w, options);
            break;
        }
        case AxiomId::HouseMonotonicity:
            verdict = check_house_monotonicity(*rule, e, options);
            break;
        case AxiomId::PopulationMonotonicity:
            if (group_csv.empty()) {
                verdict = check_population_monotonicity_all(*rule, e, options);
            } else {
                std::optional<CandidateSet> moved;
                if (!moved_csv.empty()) moved = parse_label_set(e, moved_csv);
                verdict = check_population_monotonicity(*rule, e, parse_label_set(e, group_csv),
                                                        moved, options);
            }
            break;
        case AxiomId::ClosedListEquivalence:
            verdict = check_closed_list_equivalence(*rule, e, options);
            break;
    }
    std::cout << render_verdict(e, verdict, common.report_format());
    return verdict_exit(verdict);
}

// ----------------------------------------------------------------- search --

int cmd_search(const std::string& rule_name_arg, const std::string& axiom_name_arg,
               const CommonOptions& common, std::uint64_t seed, long long trials,
               const GeneratorBounds& bounds, int max_ell, int max_ballot_types,
               const std::string& out_path) {
    auto rule = rule_from_name(rule_name_arg);
    if (!rule) {
        std::cerr << "error: unknown rule \"" << rule_name_arg << "\"\n";
        return kExitInput;
    }
    auto axiom = axiom_from_name(axiom_name_arg);
    if (!axiom) {
        std::cerr << "error: unknown axiom \"" << axiom_name_arg << "\"\n";
        return kExitInput;
    }

    AxiomOptions options;
    options.max_ell = max_ell;
    options.max_ballot_types = max_ballot_types;
    options.subset_cap = common.subset_cap;
    options.rule_options = common.rule_options();

    auto found = search_counterexample(*rule, *axiom, ElectionGenerator(seed, bounds), trials,
                                       options);
    bool machine = common.report_format() == ReportFormat::Machine;
    if (!found) {
        if (machine)
            std::cout << "found: false\ntrials: " << trials << "\n";
        else
            std::cout << "no violation of " << axiom_name(*axiom) << " by " << rule_name(*rule)
                      << " in " << trials << " trials\n";
        return kExitOk;
    }

    std::string text = emit_election(found->election);
    if (machine) {
        std::cout << "found: true\ntrial: " << found->trial << "\n";
        std::cout << render_verdict(found->election, found->verdict, ReportFormat::Machine);
        std::cout << "election_begin\n" << text << "election_end\n";
    } else {
        std::cout << "violation found at trial " << found->trial << "\n";
        std::cout << render_verdict(found->election, found->verdict, ReportFormat::Table);
        std::cout << "minimized election:\n";
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) std::cout << "  " << line << "\n";
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitInput;
        }
        out << text;
    }
    return kExitFound;
}

// ---------------------------------------------------------------- compare --

int cmd_compare(const std::string& path, const CommonOptions& common, int max_ell,
                int max_ballot_types) {
    Election e = load_election(path);
    AxiomOptions options;
    options.max_ell = max_ell;
    options.max_ballot_types = max_ballot_types;
    options.subset_cap = common.subset_cap;
    options.rule_options = common.rule_options();

    bool machine = common.report_format() == ReportFormat::Machine;
    bool closed_shaped = as_closed_list(e).has_value();

    // status per cell; "-" when the check cannot run on this instance
    auto cell = [&](RuleId rule, AxiomId axiom) -> std::string {
        try {
            AxiomVerdict verdict;
            switch (axiom) {
                case AxiomId::JR:
                case AxiomId::EJR:
                case AxiomId::LowerQuota: {
                    RuleOptions det = options.rule_options;
                    det.ties = TieMode::Deterministic;
                    CandidateSet w = run_rule(rule, e, det).winners();
                    if (axiom == AxiomId::JR)
                        verdict = check_jr(e, w);
                    else if (axiom == AxiomId::EJR)
                        verdict = check_ejr(e, w, options);
                    else
                        verdict = check_lower_quota(e, w, options);
                    break;
                }
                case AxiomId::HouseMonotonicity:
                    verdict = check_house_monotonicity(rule, e, options);
                    break;
                case AxiomId::PopulationMonotonicity:
                    verdict = check_population_monotonicity_all(rule, e, options);
                    break;
                case AxiomId::ClosedListEquivalence:
                    if (!closed_shaped) return "-";
                    verdict = check_closed_list_equivalence(rule, e, options);
                    break;
            }
            switch (verdict.status) {
                case VerdictStatus::Satisfied: return "satisfied";
                case VerdictStatus::Violated: return "violated";
                case VerdictStatus::Inconclusive: return "inconclusive";
            }
        } catch (const ElectError&) {
        }
        return "-";
    };

    if (machine) {
        for (RuleId rule : all_rules())
            for (AxiomId axiom : all_axioms())
                std::cout << "cell: rule=" << rule_name(rule) << " axiom=" << axiom_name(axiom)
                          << " status=" << cell(rule, axiom) << "\n";
        return kExitOk;
    }

    auto pad = [](const std::string& text, size_t width) {
        std::string out = text;
        while (out.size() < width) out += " ";
        return out;
    };
    std::cout << pad("rule", 8);
    for (AxiomId axiom : all_axioms()) std::cout << pad(axiom_name(axiom), 14);
    std::cout << "\n";
    for (RuleId rule : all_rules()) {
        std::cout << pad(rule_name(rule), 8);
        for (AxiomId axiom : all_axioms()) std::cout << pad(cell(rule, axiom), 14);
        std::cout << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"approval-ballot multi-winner election toolkit"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "Compute winners under a rule");
    std::string compute_rule, compute_file;
    CommonOptions compute_common;
    bool compute_trace = false;
    compute->add_option("rule", compute_rule,
                        "Rule name (odh, oodh, av, sav, mav, rav, pav, ccha, ccra, mha, mra), "
                        "\"all\", or \"dhondt\" for the closed-list quotient table")
        ->required();
    compute->add_option("file", compute_file, "Election file")->required();
    compute->add_flag("--trace", compute_trace, "Print per-round values for sequential rules");
    add_common_flags(compute, &compute_common);

    // check
    auto* check = app.add_subcommand("check", "Check one axiom for one rule");
    std::string check_rule, check_axiom, check_file, check_group, check_moved;
    CommonOptions check_common;
    int check_max_ell = 8;
    int check_max_types = 15;
    check->add_option("rule", check_rule, "Rule name")->required();
    check->add_option("axiom", check_axiom,
                      "Axiom name (jr, ejr, lower-quota, house-mono, pop-mono, closed-list)")
        ->required();
    check->add_option("file", check_file, "Election file")->required();
    check->add_option("--max-ell", check_max_ell, "Largest EJR group size checked");
    check->add_option("--max-types", check_max_types,
                      "Largest ballot-type count the lower-quota check enumerates");
    check->add_option("--group", check_group,
                      "pop-mono: comma-separated favored candidate labels (default: all subsets "
                      "of the winner set)");
    check->add_option("--moved", check_moved,
                      "pop-mono: comma-separated ballot-type labels for the moved-voter "
                      "condition (requires --group)");
    add_common_flags(check, &check_common);

    // search
    auto* search = app.add_subcommand("search", "Search random elections for a violation");
    std::string search_rule, search_axiom, search_out;
    CommonOptions search_common;
    std::uint64_t search_seed = 1;
    long long search_trials = 1000;
    int search_max_ell = 8;
    int search_max_types = 15;
    GeneratorBounds bounds;
    search->add_option("rule", search_rule, "Rule name")->required();
    search->add_option("axiom", search_axiom, "Axiom name")->required();
    search->add_option("--seed", search_seed, "Generator seed");
    search->add_option("--trials", search_trials, "Number of elections to try");
    search->add_option("--out", search_out, "Write the violating election to this file");
    search->add_option("--min-candidates", bounds.min_candidates, "Smallest roster generated");
    search->add_option("--max-candidates", bounds.max_candidates, "Largest roster generated");
    search->add_option("--max-seats", bounds.max_seats, "Largest seat count generated");
    search->add_option("--max-ballot-types", bounds.max_ballot_types,
                       "Largest ballot-type count generated");
    search->add_option("--max-count", bounds.max_count, "Largest per-ballot-type voter count");
    search->add_flag("--closed-list", bounds.closed_list,
                     "Generate closed-list-shaped elections");
    search->add_flag("--seats-below-candidates", bounds.seats_below_candidates,
                     "Keep S < |C| (required by house-mono)");
    search->add_option("--max-ell", search_max_ell, "Largest EJR group size checked");
    search->add_option("--max-types", search_max_types,
                       "Largest ballot-type count the lower-quota check enumerates");
    add_common_flags(search, &search_common);

    // compare
    auto* compare = app.add_subcommand("compare", "Render the rule-by-axiom verdict grid");
    std::string compare_file;
    CommonOptions compare_common;
    int compare_max_ell = 8;
    int compare_max_types = 15;
    compare->add_option("file", compare_file, "Election file")->required();
    compare->add_option("--max-ell", compare_max_ell, "Largest EJR group size checked");
    compare->add_option("--max-types", compare_max_types,
                        "Largest ballot-type count the lower-quota check enumerates");
    add_common_flags(compare, &compare_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return kExitInput;
    }

    try {
        if (*compute)
            return cmd_compute(compute_rule, compute_file, compute_common, compute_trace);
        if (*check)
            return cmd_check(check_rule, check_axiom, check_file, check_common, check_max_ell,
                             check_max_types, check_group, check_moved);
        if (*search) {
            if (search_axiom == "house-mono") bounds.seats_below_candidates = true;
            return cmd_search(search_rule, search_axiom, search_common, search_seed,
                              search_trials, bounds, search_max_ell, search_max_types,
                              search_out);
        }
        if (*compare)
            return cmd_compare(compare_file, compare_common, compare_max_ell, compare_max_types);
    } catch (const InstanceTooLarge& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitCap;
    } catch (const RuleCannotRun& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitCap;
    } catch (const PreconditionFailed& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitCap;
    } catch (const NotClosedListShaped& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitCap;
    } catch (const ElectError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInput;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
