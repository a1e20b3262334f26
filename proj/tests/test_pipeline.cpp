#include "holo24/pipeline.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

using namespace holo24;

namespace {

const Step* find_step(const Report& r, const std::string& prefix) {
    for (const auto& s : r.steps)
        if (s.name.rfind(prefix, 0) == 0) return &s;
    return nullptr;
}

int cli(const std::string& args) {
    std::string cmd = std::string(HOLO24_CLI) + " " + args + " >/dev/null 2>&1";
    int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

}  // namespace

TEST_CASE("global verdict rules") {
    Report r;
    r.steps.push_back({"a", "", "1", "1", Verdict::pass, "reference", ""});
    r.steps.push_back({"b", "", "54", "66", Verdict::documented, "reference", ""});
    r.steps.push_back({"c", "", "7", std::nullopt, Verdict::computed, "none", ""});
    CHECK(r.global() == Verdict::pass);
    r.steps.push_back({"d", "", "1", "2", Verdict::fail, "reference", ""});
    CHECK(r.global() == Verdict::fail);
    Report aborted;
    aborted.aborted = true;
    CHECK(aborted.global() == Verdict::fail);
    CHECK(verdict_name(Verdict::documented) == "discrepancy-documented");
}

TEST_CASE("reports are byte-identical across runs") {
    RunOptions opt;
    CHECK(run_case(builtin_case("a5d4"), opt).json() == run_case(builtin_case("a5d4"), opt).json());
    CHECK(verify_tables("modular", opt).json() == verify_tables("modular", opt).json());
    auto a = reports_json(verify_all(opt)), b = reports_json(verify_all(opt));
    CHECK(a == b);
    auto j = nlohmann::json::parse(a);
    CHECK(j["verdict"] == "pass");
    CHECK(j["reports"].size() == 4);
}

TEST_CASE("built-in cases pass and carry assumptions") {
    for (const char* id : {"e6g2", "a2x6", "a5d4"}) {
        Report r = run_case(builtin_case(id));
        INFO(r.text());
        CHECK(r.global() == Verdict::pass);
        CHECK_FALSE(r.assumptions.empty());
        // every module is exercised: norms, category order, bounds, modular, candidates, lattice side
        for (const char* step : {"invariant norm", "order of sigma_h", "minimum twisted weight", "orbifold weight-one dimension",
                                 "candidates", "order-3 admissibility", "lattice-side fixed type", "Killing-form certificate"})
            CHECK(find_step(r, step) != nullptr);
    }
}

TEST_CASE("survivors per case") {
    CHECK(find_step(run_case(builtin_case("e6g2")), "order-3 admissibility")->computed == "E6,1 E6,1 E6,1 E6,1");
    CHECK(find_step(run_case(builtin_case("a2x6")), "order-3 admissibility")->computed ==
          "D4,1 D4,1 D4,1 D4,1 D4,1 D4,1");
}

TEST_CASE("documented discrepancies keep both values") {
    Report m = verify_tables("modular");
    const Step* s = nullptr;
    for (const auto& st : m.steps)
        if (st.verdict == Verdict::documented) s = &st;
    REQUIRE(s != nullptr);
    // (1-q)^12 (1-q^2)^12 to second order: 66 - 12 = 54
    CHECK(s->computed == "54");
    CHECK(s->expected == std::optional<std::string>("66"));

    Report c = candidates_report(168, 6, std::nullopt);
    const Step* d = find_step(c, "candidates: A5,1 C5,2 E6,2");
    REQUIRE(d != nullptr);
    CHECK(d->verdict == Verdict::documented);
    CHECK(d->computed == "A5,1 C5,1 E6,2");
    CHECK(c.global() == Verdict::pass);
}

TEST_CASE("custom cases carry no expectations") {
    CaseFile c = parse_case_file(R"({"id":"e6g2","ambient":["A2,3"],"h":[["1/3","1/3"]]})");
    CHECK(c.id == "custom");
    CHECK_FALSE(c.builtin);
    Report r = run_case(c);
    for (const auto& s : r.steps) CHECK((s.basis == "property" || s.basis == "oracle" || !s.expected));
    CHECK(find_step(r, "invariant norm")->computed == "2/3");
    CHECK(r.assumptions.empty());
    CHECK(r.global() == Verdict::pass);
}

TEST_CASE("case file errors") {
    CHECK_THROWS_AS(parse_case_file("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_case_file(R"({"ambient":["A2,3"]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_case_file(R"({"ambient":["A2,3"],"h":[]})"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_case("nope"), std::invalid_argument);
    CHECK_THROWS_AS(lattice_report("e6_4", "sigma4"), std::invalid_argument);
}

TEST_CASE("invalid twist aborts with a partial report") {
    // labels of the wrong length for A2
    CaseFile c = parse_case_file(R"({"ambient":["A2,3"],"h":[["1","0","0"]]})");
    Report r = run_case(c);
    CHECK(r.aborted);
    CHECK(r.global() == Verdict::fail);
    CHECK_FALSE(r.error.empty());
}

TEST_CASE("dimension report") {
    Report r = dimension_report(120, 102, 0, 0);
    CHECK(find_step(r, "orbifold weight-one dimension")->verdict == Verdict::pass);
    CHECK(find_step(r, "orbifold weight-one dimension")->computed == "312");
    Report q = dimension_report(10, 20, 1, 1);
    const Step* s = find_step(q, "orbifold weight-one dimension");
    REQUIRE(s != nullptr);
    CHECK(s->verdict == Verdict::computed);
    CHECK(s->computed == std::to_string(4 * 20 - 36 - 12 + 24 - 10));
    Report bad = dimension_report(10, 3, 1, 1);  // negative dimension
    CHECK(bad.aborted);
    CHECK(bad.global() == Verdict::fail);
}

TEST_CASE("cli exit codes") {
    CHECK(cli("--help") == 0);
    CHECK(cli("dimension --dimv1 120 --d0 102 --d13 0 --d23 0") == 0);
    CHECK(cli("dimension --d0 5") == 2);
    CHECK(cli("dimension --dimv1 -1 --d0 5 --d13 0 --d23 0") == 2);
    CHECK(cli("dimension --dimv1 10 --d0 3 --d13 1 --d23 1") == 1);
    CHECK(cli("lattice --name e6_4 --isometry sigma2") == 2);
    CHECK(cli("candidates --dim 168 --ratio x") == 2);
    CHECK(cli("twist-bound --case a2x6 --json") == 0);
    std::ofstream("bad_case.json") << R"({"ambient":["A2,3"],"h":[["1","0","0"]]})";
    CHECK(cli("run --case bad_case.json") == 1);
}
