// End-to-end runs of the elect binary. ELECT_TOOL points at the built
// executable; fixtures come from ELECT_TEST_DATA.
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "helpers.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
}

// Runs `elect <args>` through the shell, capturing both streams.
RunResult run_tool(const std::string& args, const std::string& env_prefix = "") {
    static int serial = 0;
    std::filesystem::path dir = std::filesystem::temp_directory_path();
    std::filesystem::path out_path = dir / ("elect_out_" + std::to_string(++serial) + ".txt");
    std::filesystem::path err_path = dir / ("elect_err_" + std::to_string(serial) + ".txt");

    std::string command = env_prefix + " \"" ELECT_TOOL "\" " + args + " > \"" +
                          out_path.string() + "\" 2> \"" + err_path.string() + "\"";
    int status = std::system(command.c_str());

    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::filesystem::remove(out_path);
    std::filesystem::remove(err_path);
    return result;
}

std::string fixture(const std::string& name) {
    return "\"" + elect::test::data_path(name) + "\"";
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    std::filesystem::path path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << text;
    return path;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("compute renders winners in both formats") {
    RunResult table = run_tool("compute odh " + fixture("sigma_a.elect") + " --trace");
    CHECK(table.exit_code == 0);
    CHECK(contains(table.out, "rule: odh"));
    CHECK(contains(table.out, "winners: {a, c, d}"));
    CHECK(contains(table.out, "value: 9500.00"));
    CHECK(contains(table.out, "round 1: elected a with value 16000.00"));
    CHECK(contains(table.out, "round 3: elected d with value 9500.00"));

    RunResult machine =
        run_tool("compute odh " + fixture("sigma_a.elect") + " --trace --format machine");
    CHECK(machine.exit_code == 0);
    CHECK(contains(machine.out, "winner_set: a c d"));
    CHECK(contains(machine.out, "value: 9500/1"));
    CHECK(contains(machine.out, "round: 3 chosen=d value=9500/1"));
    CHECK(contains(machine.out, "considered: 1 a=16000/1 b=14000/1"));
    CHECK(contains(machine.out, "all_tied: false"));
}

TEST_CASE("compute renders the quotient grid for closed lists") {
    RunResult table = run_tool("compute dhondt " + fixture("table1.elect"));
    CHECK(table.exit_code == 0);
    CHECK(contains(table.out, "583.33"));
    CHECK(contains(table.out, "award order: a1 b1 a1 c1 a1"));
    CHECK(contains(table.out, "elected: {a1, a2, a3, b1, c1}"));

    RunResult machine = run_tool("compute dhondt " + fixture("table1.elect") + " --format machine");
    CHECK(machine.exit_code == 0);
    CHECK(contains(machine.out, "list: 0 first=a1 votes=5100 seats=3"));
    CHECK(contains(machine.out, "quotient: list=2 index=2 value=1750/3 seat=false"));
    CHECK(contains(machine.out, "award: 1 list=0 divisor=1"));
    CHECK(contains(machine.out, "elected: a1 a2 a3 b1 c1"));

    RunResult not_shaped = run_tool("compute dhondt " + fixture("sigma_a.elect"));
    CHECK(not_shaped.exit_code == 2);
    CHECK(contains(not_shaped.err, "not closed-list shaped"));
}

TEST_CASE("compute all walks the full rule column") {
    RunResult all = run_tool("compute all " + fixture("sigma_f.elect") + " --ties enum");
    CHECK(all.exit_code == 0);
    for (const char* name : {"rule: av", "rule: sav", "rule: mav", "rule: rav", "rule: pav",
                             "rule: ccha", "rule: ccra", "rule: mha", "rule: mra", "rule: odh",
                             "rule: oodh"})
        CHECK(contains(all.out, name));
    CHECK(contains(all.out, "tied winner sets (3):"));  // the regret rule's family
    CHECK(contains(all.out, "every 2-candidate set ties; deterministic representative: {a, b}"));
}

TEST_CASE("compute reports input problems and cap aborts") {
    CHECK(run_tool("compute odh /no/such/file.elect").exit_code == 2);
    CHECK(run_tool("compute nope " + fixture("sigma_a.elect")).exit_code == 2);

    auto bad = write_temp("bad_count.elect", "candidates: a b\nseats: 1\nballot 0: a\n");
    RunResult parse = run_tool("compute odh \"" + bad.string() + "\"");
    CHECK(parse.exit_code == 2);
    CHECK(contains(parse.err, "line 3, col 8: ballot count must be positive"));

    RunResult capped = run_tool("compute oodh " + fixture("sigma_a.elect") + " --subset-cap 20");
    CHECK(capped.exit_code == 3);
    CHECK(contains(capped.out, "rule: oodh"));
    CHECK(contains(capped.out, "error:"));

    // caps default from the environment; explicit flags out-rank it
    RunResult env_capped =
        run_tool("compute oodh " + fixture("sigma_a.elect"), "ELECT_SUBSET_CAP=20");
    CHECK(env_capped.exit_code == 3);
    RunResult overridden = run_tool(
        "compute oodh " + fixture("sigma_a.elect") + " --subset-cap 1000000", "ELECT_SUBSET_CAP=20");
    CHECK(overridden.exit_code == 0);
}

TEST_CASE("check maps verdicts onto exit codes") {
    RunResult satisfied = run_tool("check av jr " + fixture("sigma_a.elect"));
    CHECK(satisfied.exit_code == 0);
    CHECK(contains(satisfied.out, "status: satisfied"));

    RunResult violated = run_tool("check oodh house-mono " + fixture("sigma_d1.elect"));
    CHECK(violated.exit_code == 1);
    CHECK(contains(violated.out, "status: violated"));
    CHECK(contains(violated.out, "winners_before: {b}"));
    CHECK(contains(violated.out, "winners_after: {a, c}"));
    CHECK(contains(violated.out, "modified election:"));

    // deterministic and enumerated readings may disagree (tie-family nesting)
    CHECK(run_tool("check ccra house-mono " + fixture("sigma_g1.elect")).exit_code == 1);
    CHECK(run_tool("check ccra house-mono " + fixture("sigma_g1.elect") + " --ties enum")
              .exit_code == 0);

    RunResult inconclusive =
        run_tool("check odh ejr " + fixture("sigma_a.elect") + " --subset-cap 5");
    CHECK(inconclusive.exit_code == 4);
    CHECK(contains(inconclusive.out, "status: inconclusive"));

    RunResult quota = run_tool("check mha lower-quota " + fixture("sigma_h.elect"));
    CHECK(quota.exit_code == 1);
    CHECK(contains(quota.out, "quota: 4.20"));
    CHECK(contains(quota.out, "quota_floor: 4"));
    CHECK(contains(quota.out, "achieved: 3"));

    RunResult machine_quota =
        run_tool("check mha lower-quota " + fixture("sigma_h.elect") + " --format machine");
    CHECK(machine_quota.exit_code == 1);
    CHECK(contains(machine_quota.out, "quota: 21/5"));

    CHECK(run_tool("check av nope " + fixture("sigma_a.elect")).exit_code == 2);
}

TEST_CASE("check surfaces precondition and shape problems as cap exits") {
    auto full = write_temp("full_roster.elect", "candidates: x y\nseats: 2\nballot 1: x y\n");
    CHECK(run_tool("check av house-mono \"" + full.string() + "\"").exit_code == 3);

    CHECK(run_tool("check odh closed-list " + fixture("sigma_a.elect")).exit_code == 3);

    // pop-mono: favored set must sit inside the winner set
    CHECK(run_tool("check av pop-mono " + fixture("sigma_a.elect") + " --group d").exit_code == 3);
    RunResult moved = run_tool("check odh pop-mono " + fixture("sigma_a.elect") +
                               " --group d --moved a,b");
    CHECK(moved.exit_code == 0);
    CHECK(contains(moved.out, "status: satisfied"));

    RunResult closed = run_tool("check av closed-list " + fixture("table1.elect"));
    CHECK(closed.exit_code == 1);
    CHECK(contains(closed.out, "winners_after: {a1, a2, a3, b1, c1}"));
}

TEST_CASE("search reports hits and exhaustion") {
    std::string bounds =
        " --seed 1 --trials 200 --max-candidates 4 --max-seats 3 --max-ballot-types 4"
        " --max-count 8";
    RunResult found = run_tool("search av jr" + bounds);
    CHECK(found.exit_code == 1);
    CHECK(contains(found.out, "violation found at trial 132"));
    CHECK(contains(found.out, "axiom: jr"));
    CHECK(contains(found.out, "status: violated"));
    CHECK(contains(found.out, "minimized election:"));

    auto out_file = std::filesystem::temp_directory_path() / "jr_violation.elect";
    std::filesystem::remove(out_file);
    RunResult machine =
        run_tool("search av jr" + bounds + " --format machine --out \"" + out_file.string() + "\"");
    CHECK(machine.exit_code == 1);
    CHECK(contains(machine.out, "found: true\ntrial: 132"));
    CHECK(contains(machine.out, "election_begin"));
    REQUIRE(std::filesystem::exists(out_file));
    CHECK(contains(slurp(out_file), "candidates:"));
    std::filesystem::remove(out_file);

    RunResult exhausted = run_tool("search odh lower-quota --seed 17 --trials 50"
                                   " --max-candidates 5 --max-seats 3 --seats-below-candidates");
    CHECK(exhausted.exit_code == 0);
    CHECK(contains(exhausted.out, "no violation of lower-quota by odh in 50 trials"));

    CHECK(run_tool("search nope jr --trials 1").exit_code == 2);
}

TEST_CASE("compare renders the verdict grid") {
    RunResult grid = run_tool("compare " + fixture("sigma_d1.elect"));
    CHECK(grid.exit_code == 0);
    CHECK(contains(grid.out, "rule"));
    CHECK(contains(grid.out, "house-mono"));

    RunResult machine = run_tool("compare " + fixture("sigma_d1.elect") + " --format machine");
    CHECK(machine.exit_code == 0);
    CHECK(contains(machine.out, "cell: rule=odh axiom=house-mono status=satisfied"));
    CHECK(contains(machine.out, "cell: rule=oodh axiom=house-mono status=violated"));
    CHECK(contains(machine.out, "cell: rule=odh axiom=closed-list status=-"));
    CHECK(contains(machine.out, "cell: rule=av axiom=jr status=satisfied"));

    RunResult lists = run_tool("compare " + fixture("table1.elect") + " --format machine");
    CHECK(lists.exit_code == 0);
    CHECK(contains(lists.out, "cell: rule=odh axiom=closed-list status=satisfied"));
    CHECK(contains(lists.out, "cell: rule=av axiom=closed-list status=violated"));

    CHECK(run_tool("compare /no/such/file.elect").exit_code == 2);
}
