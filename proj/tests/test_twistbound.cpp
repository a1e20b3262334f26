#include "doctest.h"
#include "holo24/golden.hpp"
#include "holo24/twistbound.hpp"

#include <map>

using namespace holo24;

namespace {

CaseSpec golden_case(const std::string& id) {
    const auto& g = golden::case_by_id(id);
    std::vector<AffineAlgebra> amb;
    std::vector<std::vector<Rational>> h;
    for (const auto& a : g.ambient) amb.push_back(parse_affine(a));
    for (const auto& comp : g.h) {
        h.emplace_back();
        for (const auto& x : comp) h.back().push_back(parse_rational(x));
    }
    return make_case(id, amb, h);
}

}  // namespace

TEST_CASE("invariant norm and shift condition") {
    for (const auto& g : golden::cases()) {
        CAPTURE(g.id);
        CaseSpec c = golden_case(g.id);
        auto n = invariant_norm(c);
        CHECK(n.norm == parse_rational(g.norm));
        CHECK(n.in_2z);
        CHECK(n.in_two_thirds_z);
        CHECK(shift_ok(c));
        CHECK(shift_ok(negated(c)));
    }
    const auto& g2 = build_root_system(simple_type('G', 2));
    CaseSpec bad = make_case("g2", {{g2.type, 1}}, {{0, 3}});
    CHECK_FALSE(shift_ok(bad));
    CHECK_THROWS(min_twisted_weight(bad));
    CaseSpec zero = make_case("g2", {{g2.type, 1}}, {{0, 0}});
    CHECK(shift_ok(zero));
    CHECK(invariant_norm(zero).norm == 0);
}

TEST_CASE("feasibility examples") {
    CaseSpec e6 = golden_case("e6g2");
    for (const auto& t : feasible_tuples(e6)) {
        bool g2_all_l1 = true;
        for (std::size_t i = 1; i < 4; ++i) g2_all_l1 = g2_all_l1 && !t.tuple[i].is_zero();
        if (t.tuple[0].is_zero()) CHECK_FALSE(g2_all_l1);  // 3 * 2/5 is not integral
        CHECK(t.feasible);
        CHECK(is_integer(t.conformal_sum));
        CHECK(Rational(t.ell_min) >= t.conformal_sum);
        if (!t.is_vacuum()) CHECK(t.ell_min >= 2);
    }
    auto all = feasible_tuples(e6);
    REQUIRE(!all.empty());
    CHECK(all.front().is_vacuum());
    CHECK(all.front().ell_min == 0);
    CHECK(all.front().bound == 1);

    CaseSpec a5 = golden_case("a5d4");
    const auto& sa5 = build_root_system(simple_type('A', 5));
    Weight bad = Weight::of_ints(sa5, {1, 0, 2, 0, 0});
    Weight top = Weight::of_ints(sa5, {0, 0, 3, 0, 0});
    bool found_top = false;
    for (const auto& t : feasible_tuples(a5)) {
        CHECK_FALSE(t.tuple[0] == bad);
        bool others = t.tuple[1].is_zero() && !t.tuple[2].is_zero() && !t.tuple[3].is_zero() && !t.tuple[4].is_zero();
        if (t.tuple[0] == top && others) {
            found_top = true;
            CHECK(t.ell_min == 3);
            CHECK(t.n_sum == -3);
            CHECK(t.bound == 1);
        }
    }
    CHECK(found_top);
}

TEST_CASE("untwisted bounds equal ell_min") {
    const auto& a2 = build_root_system(simple_type('A', 2));
    CaseSpec c = make_case("a2", {{a2.type, 3}, {a2.type, 3}}, {{0, 0}, {0, 0}});
    for (const auto& t : feasible_tuples(c)) CHECK(t.bound == Rational(t.ell_min));
}

TEST_CASE("minimum twisted weight is one for both signs") {
    for (const auto& g : golden::cases()) {
        CAPTURE(g.id);
        CaseSpec c = golden_case(g.id);
        for (const CaseSpec& s : {c, negated(c)}) {
            auto m = min_twisted_weight(s);
            CHECK(m.minimum == parse_rational(g.min_twisted));
            CHECK(m.witness.is_vacuum());
            CHECK(m.vacuum_bound_is_one);
            CHECK(m.all_bounds_in_third_z);
            std::size_t expected = 1;
            for (const auto& a : c.ambient) expected *= module_table(a).rows.size();
            CHECK(m.examined == expected);
        }
    }
}

TEST_CASE("bounds for h and -h agree under the dual tuple map") {
    for (const std::string id : {"e6g2", "a5d4"}) {
        CAPTURE(id);
        CaseSpec c = golden_case(id);
        CaseSpec n = negated(c);
        std::map<std::vector<std::size_t>, Rational> plus;
        for_each_feasible_bound(c, [&](const std::vector<std::size_t>& idx, const Rational& b) { plus[idx] = b; });
        // Index of the dual weight in each module table.
        std::vector<std::vector<std::size_t>> dual(c.ambient.size());
        for (std::size_t i = 0; i < c.ambient.size(); ++i) {
            const auto& rows = module_table(c.ambient[i]).rows;
            for (const auto& r : rows) {
                Weight d = dual_weight(r.lambda);
                auto it = std::find_if(rows.begin(), rows.end(), [&](const ModuleRow& x) { return x.lambda == d; });
                REQUIRE(it != rows.end());
                dual[i].push_back(static_cast<std::size_t>(it - rows.begin()));
            }
        }
        std::size_t count = 0;
        for_each_feasible_bound(n, [&](const std::vector<std::size_t>& idx, const Rational& b) {
            std::vector<std::size_t> d(idx.size());
            for (std::size_t i = 0; i < idx.size(); ++i) d[i] = dual[i][idx[i]];
            auto it = plus.find(d);
            REQUIRE(it != plus.end());
            CHECK(it->second == b);
            ++count;
        });
        CHECK(count == plus.size());
    }
}
