#pragma once

#include "holo24/affinerep.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace holo24 {

enum class Verdict { pass, fail, documented, computed };

// "pass", "fail", "discrepancy-documented", "computed"
std::string verdict_name(Verdict v);

struct Step {
    std::string name;
    std::string inputs;
    std::string computed;
    std::optional<std::string> expected;
    Verdict verdict = Verdict::computed;
    std::string basis;  // "reference", "oracle", "property" or "none"
    std::string note;
};

struct Report {
    std::string title;
    std::vector<Step> steps;
    std::vector<std::string> assumptions;
    bool aborted = false;
    std::string error;

    // pass iff nothing failed and the run completed
    Verdict global() const;
    std::string json(int indent = 2) const;
    std::string text() const;
};

struct RunOptions {
    long trunc = 12;
    std::uint64_t seed = 1;
};

struct CaseFile {
    std::string id;  // e6g2, a2x6, a5d4 or custom
    std::vector<AffineAlgebra> ambient;
    std::vector<std::vector<Rational>> h;
    std::string lattice;   // optional for custom cases
    std::string isometry;  // optional for custom cases
    bool builtin = false;
};

CaseFile builtin_case(const std::string& id);
// JSON object with "ambient" (list of "X<n>,<k>") and "h" (list of label lists).
CaseFile parse_case_file(const std::string& json_text);

Report run_case(const CaseFile& c, const RunOptions& opt = {});
Report twist_bound_report(const CaseFile& c);
Report dimension_report(long dim_v1, long d0, long d13, long d23, const RunOptions& opt = {});
Report candidates_report(long total_dim, const Rational& ratio, const std::optional<std::string>& fixed);
Report lattice_report(const std::string& name, const std::string& isometry, const RunOptions& opt = {});
// which: all | g2.1 | a2.3 | a1.1 | a5.3 | d4.3 | modular | lattice
Report verify_tables(const std::string& which, const RunOptions& opt = {});
// Tables plus the three built-in cases, run concurrently.
std::vector<Report> verify_all(const RunOptions& opt = {});

std::string reports_json(const std::vector<Report>& reports, int indent = 2);

}  // namespace holo24
