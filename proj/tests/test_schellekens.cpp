#include "doctest.h"
#include "holo24/golden.hpp"
#include "holo24/schellekens.hpp"

#include <set>

using namespace holo24;

namespace {

std::set<std::string> strings(const std::vector<IdealLevel>& v) {
    std::set<std::string> out;
    for (const auto& i : v) out.insert(i.type.str() + "," + to_string(i.level));
    return out;
}

std::set<std::string> strings(const std::vector<CandidateAlgebra>& v) {
    std::set<std::string> out;
    for (const auto& c : v) out.insert(c.value.str());
    return out;
}

std::string canon(const std::string& s) { return parse_type_string(s).str(); }

CandidateAlgebra cand(const std::string& s) {
    auto t = parse_type_string(s);
    return {t, t.dimension()};
}

}  // namespace

TEST_CASE("simple ideals with a given ratio") {
    CHECK(strings(simple_ideals_with_ratio(12, 312)) == std::set<std::string>{"A11,1", "C11,1", "D7,1", "E6,1"});
    // The ratio forces level 2 for A11 and level 1 for C5.
    CHECK(strings(simple_ideals_with_ratio(6, 168)) ==
          std::set<std::string>{"A5,1", "A11,2", "C5,1", "D4,1", "D7,2", "E6,2", "E7,3"});
    CHECK(simple_ideals_with_ratio(1000, 312).empty());
    for (const auto& i : simple_ideals_with_ratio(rat(3, 2), 400)) CHECK(Rational(dual_coxeter(i.type)) / i.level == rat(3, 2));
}

TEST_CASE("candidate enumeration") {
    auto c312 = enumerate_candidates(312, 12);
    CHECK(strings(c312) == std::set<std::string>{canon("A11,1 D7,1 E6,1"), canon("E6,1^4")});
    auto c168 = enumerate_candidates(168, 6);
    CHECK(c168.size() == 4);
    CHECK(strings(c168) == std::set<std::string>{canon("A5,1^4 D4,1"), canon("D4,1^6"), canon("A5,1 E7,3"),
                                                 canon("A5,1 C5,1 E6,2")});
    for (const auto& c : c168) {
        CHECK(c.value.dimension() == 168);
        CHECK(c.value.abelian_rank == 0);
        for (const auto& i : c.value.ideals) CHECK(Rational(dual_coxeter(i.type)) / i.level == 6);
    }
    auto zero = enumerate_candidates(0, 5);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].value.ideals.empty());
}

TEST_CASE("order-3 fixed options") {
    auto has = [](const std::vector<SemisimpleTypeWithLevels>& v, const std::string& s) {
        auto t = parse_type_string(s);
        return std::find(v.begin(), v.end(), t) != v.end();
    };
    auto d4 = order3_fixed_options(simple_type('D', 4), 1);
    CHECK(has(d4, "A2,3"));
    CHECK(has(d4, "G2,1"));
    CHECK(has(d4, "A1,1^3 U(1)"));
    CHECK(has(d4, "D4,1"));
    auto d4_inner = order3_fixed_options(simple_type('D', 4), 1, false);
    CHECK_FALSE(has(d4_inner, "A2,3"));
    auto e6 = order3_fixed_options(simple_type('E', 6), 1);
    CHECK(has(e6, "A2,1^3"));
    auto a1 = order3_fixed_options(simple_type('A', 1), 1);
    CHECK(a1.size() == 2);
    CHECK(has(a1, "U(1)"));
    CHECK(has(a1, "A1,1"));
    for (const auto& t : {simple_type('E', 6), simple_type('A', 5), simple_type('C', 5), simple_type('G', 2)})
        for (const auto& o : order3_fixed_options(t, 2, false)) CHECK(o.rank() == t.rank);
}

TEST_CASE("order-3 admissibility filter") {
    auto e6 = admits_order3_with_fixed(cand("E6,1^4"), parse_type_string("E6,3 A2,1^3"));
    REQUIRE(e6);
    CHECK(e6->cycles.size() == 1);
    CHECK_FALSE(admits_order3_with_fixed(cand("A11,1 D7,1 E6,1"), parse_type_string("E6,3 A2,1^3")));
    CHECK(admits_order3_with_fixed(cand("D4,1^6"), parse_type_string("A2,3^6")));
    CHECK_FALSE(admits_order3_with_fixed(cand("A5,1^4 D4,1"), parse_type_string("A2,3^6")));
    for (const auto& g : golden::cases()) {
        CAPTURE(g.id);
        auto target = parse_type_string(g.fixed_type);
        std::vector<std::string> survivors;
        for (const auto& c : enumerate_candidates(g.dim_tilde, parse_rational(g.ratio))) {
            auto a = admits_order3_with_fixed(c, target);
            if (!a) continue;
            survivors.push_back(c.value.str());
            int rank_sum = 0;
            for (const auto& i : c.value.ideals) rank_sum += i.type.rank;
            CHECK(target.rank() <= rank_sum);
        }
        REQUIRE(survivors.size() == 1);
        CHECK(survivors[0] == canon(g.survivor));
    }
}
