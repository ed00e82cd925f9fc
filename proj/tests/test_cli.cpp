#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include "ybx/catalog.hpp"
#include "ybx/suite.hpp"

#include <cstdio>
#include <sstream>
#include <sys/wait.h>

using json = nlohmann::json;
using namespace ybx;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(YBX_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data_file(const std::string& name) {
    return std::string(YBX_TEST_DATA_DIR) + "/" + name;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST_CASE("catalog listing") {
    RunResult r = run_cli("catalog");
    CHECK(r.exit_code == 0);
    for (const char* id : {"adler", "soliton-rank1", "grassmann", "crystal", "f1", "f5",
                           "fv-negated"})
        CHECK(r.output.find(id) != std::string::npos);

    RunResult j = run_cli("catalog --format json");
    CHECK(j.exit_code == 0);
    json arr = json::parse(j.output);
    bool saw_crystal = false;
    for (const auto& e : arr) {
        if (e["id"] == "crystal") {
            saw_crystal = true;
            CHECK(e["yang_baxter"] == true);
            CHECK(e["reversible"].is_null());
        }
        if (e["id"] == "fv-negated") CHECK(e["yang_baxter"] == false);
    }
    CHECK(saw_crystal);
}

TEST_CASE("check: pass and fail exit codes") {
    RunResult ok = run_cli("check --map adler --property yb --samples 50 --seed 7 --format json");
    CHECK(ok.exit_code == 0);
    json r = json::parse(ok.output);
    CHECK(r["pass"] == true);
    CHECK(r["samples_checked"] == 50);
    CHECK(r["map"] == "adler");
    CHECK(r["property"] == "yb");
    CHECK(r["mode"].is_null());
    CHECK(r["seed"] == 7);

    RunResult bad =
        run_cli("check --map fv-negated --property yb --samples 100 --seed 7 --format json");
    CHECK(bad.exit_code == 1);
    json rb = json::parse(bad.output);
    CHECK(rb["pass"] == false);
    CHECK(rb["failures"].size() > 0);

    // a report is emitted regardless of outcome
    RunResult cr = run_cli("check --map crystal --n 3 --property transfer-comm --samples 10 "
                           "--seed 3 --dim 2 --format json");
    CHECK((cr.exit_code == 0 || cr.exit_code == 1));
    CHECK(json::parse(cr.output).contains("pass"));
}

TEST_CASE("check: config errors exit 2") {
    CHECK(run_cli("check --map no-such-map").exit_code == 2);
    CHECK(run_cli("check").exit_code == 2);
    CHECK(run_cli("check --map adler --property nonsense").exit_code == 2);
    CHECK(run_cli("check --map swap --property refactor").exit_code == 2); // no Lax family
    CHECK(run_cli("nonsense-subcommand").exit_code == 2);
    CHECK(run_cli("orbit --map adler --steps 0").exit_code == 2);
    CHECK(run_cli("orbit --map fv-negated --steps 3").exit_code == 2); // not YB per descriptor
}

TEST_CASE("check: json reports are byte-identical modulo the timestamp") {
    const char* args = "check --map f3 --property yb --property reversibility --samples 40 "
                       "--seed 11 --format json";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    json ja = json::parse(a.output), jb = json::parse(b.output);
    for (auto& e : ja) e.erase("timestamp");
    for (auto& e : jb) e.erase("timestamp");
    CHECK(ja.dump() == jb.dump());
}

TEST_CASE("check: multi-property run includes lax modes in the report") {
    RunResult r = run_cli("check --map adler --property refactor --property spectral --n 3 "
                          "--samples 10 --seed 5 --format json");
    CHECK(r.exit_code == 0);
    json arr = json::parse(r.output);
    REQUIRE(arr.is_array());
    for (const auto& e : arr) {
        CHECK(e["mode"] == "strict");
        CHECK(e["pass"] == true);
    }
}

TEST_CASE("orbit: swap T_1 is a 3-cycle and the csv shows it") {
    RunResult r = run_cli("orbit --map swap --n 3 --steps 3 --seed 5");
    REQUIRE(r.exit_code == 0);
    auto rows = parse_csv(r.output);
    REQUIRE(rows.size() == 1 + 9); // header + 3 steps x 3 slots x 1 component
    CHECK(rows[0][0] == "step");
    CHECK(rows[0][2] == "component_name");

    // recompute the seeded initial tuple in-process
    const CatalogEntry* e = find_map("swap");
    SplitMix64 rng(5);
    LabeledTuple t0 = sample_tuple(e->sampler({}), rng, 3);
    // after 3 cyclic shifts the tuple returns to its start
    for (int slot = 1; slot <= 3; ++slot) {
        for (const auto& row : rows) {
            if (row[0] == "3" && row[1] == std::to_string(slot))
                CHECK(row[3] == rat_str(std::get<Rat>(t0.values[slot - 1])));
        }
    }
}

TEST_CASE("orbit: adler invariant columns are constant") {
    RunResult r = run_cli("orbit --map adler --n 3 --steps 50 --seed 9");
    REQUIRE(r.exit_code == 0);
    auto rows = parse_csv(r.output);
    REQUIRE(rows.size() == 1 + 150);
    size_t cols = rows[0].size();
    REQUIRE(cols > 4);
    CHECK(rows[0][4] == "inv_0");
    for (size_t c = 4; c < cols; ++c)
        for (size_t i = 2; i < rows.size(); ++i) CHECK(rows[i][c] == rows[1][c]);
}

TEST_CASE("custom map files through the cli") {
    RunResult ok = run_cli("check --file " + data_file("identity.map") +
                           " --property yb --property reversibility --samples 30 --seed 2 "
                           "--format json");
    CHECK(ok.exit_code == 0);

    RunResult echoed = run_cli("catalog --file " + data_file("fv-2-1.map"));
    CHECK(echoed.exit_code == 0);
    CHECK(echoed.output.find("a: 0 1 0") != std::string::npos);
    CHECK(echoed.output.find("B: 1 0 1") != std::string::npos);

    // pinned-parameter F_V: the report contract holds whatever the verdict
    RunResult pinned = run_cli("check --file " + data_file("fv-2-1.map") +
                               " --property yb --samples 50 --seed 2 --format json");
    json r = json::parse(pinned.output);
    CHECK(pinned.exit_code == (r["pass"] == true ? 0 : 1));

    CHECK(run_cli("check --file /no/such/file.map --property yb").exit_code == 2);
}
