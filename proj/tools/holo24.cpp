#include "holo24/pipeline.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace holo24;

namespace {

CaseFile load_case(const std::string& arg) {
    if (arg == "e6g2" || arg == "a2x6" || arg == "a5d4") return builtin_case(arg);
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("no built-in case or readable file named '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_case_file(ss.str());
}

int emit(const std::vector<Report>& reports, bool json) {
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.global() == Verdict::pass;
    if (json) {
        std::cout << (reports.size() == 1 ? reports[0].json() : reports_json(reports)) << "\n";
    } else {
        for (const auto& r : reports) std::cout << r.text();
        if (reports.size() > 1) std::cout << "overall: " << (ok ? "pass" : "fail") << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"holo24: order-3 orbifold uniqueness checks"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    RunOptions opt;
    app.add_flag("--json", json, "machine-readable output");
    app.add_option("--trunc", opt.trunc, "q-series truncation")->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "seed for randomized steps");

    auto* tables = app.add_subcommand("tables", "verify reference tables");
    std::string which = "all";
    tables->add_option("--which", which)
        ->check(CLI::IsMember({"all", "g2.1", "a2.3", "a1.1", "a5.3", "d4.3", "modular", "lattice"}));

    auto* twist = app.add_subcommand("twist-bound", "twisted weight bounds for a case");
    std::string case_arg;
    twist->add_option("--case", case_arg, "e6g2, a2x6, a5d4 or a JSON case file")->required();

    auto* run = app.add_subcommand("run", "full chain for a case");
    run->add_option("--case", case_arg, "e6g2, a2x6, a5d4 or a JSON case file")->required();

    auto* dim = app.add_subcommand("dimension", "weight-one dimension of the orbifold");
    long dimv1 = 0, d0 = 0, d13 = 0, d23 = 0;
    dim->add_option("--dimv1", dimv1)->required();
    dim->add_option("--d0", d0)->required();
    dim->add_option("--d13", d13)->required();
    dim->add_option("--d23", d23)->required();

    auto* cand = app.add_subcommand("candidates", "Schellekens-type candidates");
    long total = 0;
    std::string ratio_s, fixed_s;
    cand->add_option("--dim", total)->required();
    cand->add_option("--ratio", ratio_s)->required();
    auto* fixed_opt = cand->add_option("--fixed", fixed_s, "fixed-point type string");

    auto* lat = app.add_subcommand("lattice", "lattice-side checks");
    std::string name, iso;
    lat->add_option("--name", name)->required()->check(CLI::IsMember({"e6_4", "d4_6"}));
    lat->add_option("--isometry", iso)->required()->check(CLI::IsMember({"sigma6", "sigma2", "sigma4"}));

    auto* all = app.add_subcommand("verify-all", "tables plus the three built-in cases");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*tables) return emit({verify_tables(which, opt)}, json);
        if (*twist) return emit({twist_bound_report(load_case(case_arg))}, json);
        if (*run) return emit({run_case(load_case(case_arg), opt)}, json);
        if (*dim && std::min({dimv1, d0, d13, d23}) < 0) throw std::invalid_argument("dimensions must be non-negative");
        if (*dim) return emit({dimension_report(dimv1, d0, d13, d23, opt)}, json);
        if (*cand) {
            std::optional<std::string> fixed;
            if (*fixed_opt) fixed = parse_type_string(fixed_s).str();
            Rational ratio = parse_rational(ratio_s);
            if (sgn(ratio) <= 0 || total <= 0) throw std::invalid_argument("--dim and --ratio must be positive");
            return emit({candidates_report(total, ratio, fixed)}, json);
        }
        if (*lat) return emit({lattice_report(name, iso, opt)}, json);
        if (*all) return emit(verify_all(opt), json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
