#include "doctest.h"
#include "holo24/affinerep.hpp"
#include "holo24/golden.hpp"

#include <numeric>

using namespace holo24;

namespace {

std::vector<Rational> parse_all(const std::vector<std::string>& v) {
    std::vector<Rational> out;
    for (const auto& s : v) out.push_back(parse_rational(s));
    return out;
}

// (lambda|lambda+2rho) for A_n in orthonormal coordinates of R^{n+1}.
Rational a_type_casimir(const IntVec& labels) {
    const std::size_t n = labels.size();
    std::vector<Rational> e(n + 1, Rational(0)), r(n + 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) e[j] += labels[i];
    Rational mean = std::accumulate(e.begin(), e.end(), Rational(0)) / Rational(static_cast<long>(n + 1));
    for (auto& x : e) x -= mean;
    for (std::size_t j = 0; j <= n; ++j) r[j] = Rational(static_cast<long>(n)) / 2 - Rational(static_cast<long>(j));
    Rational s = 0;
    for (std::size_t j = 0; j <= n; ++j) s += e[j] * (e[j] + 2 * r[j]);
    return s;
}

TwistVector twist_of(const golden::Case& c) {
    TwistVector h;
    auto alg = parse_affine_list([&] {
        std::string s;
        for (const auto& a : c.ambient) s += a + " ";
        return s;
    }());
    for (std::size_t i = 0; i < alg.size(); ++i)
        h.components.push_back(Weight::of(build_root_system(alg[i].type), parse_all(c.h[i])));
    return h;
}

std::vector<AffineAlgebra> ambient_of(const golden::Case& c) {
    std::vector<AffineAlgebra> out;
    for (const auto& a : c.ambient) out.push_back(parse_affine(a));
    return out;
}

}  // namespace

TEST_CASE("module table sizes") {
    for (const auto& t : golden::module_tables()) {
        CAPTURE(t.key);
        CHECK(module_table(parse_affine(t.algebra)).rows.size() == t.count);
        CHECK(t.rows.size() == t.count);
    }
}

TEST_CASE("module tables agree with the reference rows") {
    for (const auto& t : golden::module_tables()) {
        CAPTURE(t.key);
        AffineAlgebra a = parse_affine(t.algebra);
        const RootSystem& s = build_root_system(a.type);
        const auto& table = module_table(a);
        for (const auto& row : t.rows) {
            Weight lam = Weight::of_ints(s, row.labels);
            CAPTURE(lam.str());
            auto it = std::find_if(table.rows.begin(), table.rows.end(),
                                   [&](const ModuleRow& r) { return r.lambda == lam; });
            REQUIRE(it != table.rows.end());
            CHECK(it->conformal_weight == parse_rational(row.conformal_weight));
            if (!t.direction.empty()) {
                Weight dir = Weight::of(s, parse_all(t.direction));
                CHECK(inner_product(dir, lam) == parse_rational(row.pairing));
                CHECK(n_min(dir, lam) == parse_rational(row.n_min));
            }
        }
    }
}

TEST_CASE("conformal weights of type A match an orthonormal-coordinate oracle") {
    for (int n : {1, 2, 3, 5}) {
        for (long k : {1L, 2L, 3L}) {
            AffineAlgebra a{simple_type('A', n), k};
            for (const auto& row : module_table(a).rows) {
                Rational expect = a_type_casimir(row.lambda.integral_labels()) / (2 * (k + n + 1));
                CHECK(row.conformal_weight == expect);
            }
        }
    }
}

TEST_CASE("conformal weight examples and errors") {
    const auto& g2 = build_root_system(simple_type('G', 2));
    CHECK(conformal_weight(Weight::fundamental(g2, 1), {g2.type, 1}) == rat(2, 5));
    const auto& a5 = build_root_system(simple_type('A', 5));
    CHECK(conformal_weight(Weight::fundamental(a5, 3), {a5.type, 3}) == rat(7, 12));
    const auto& d4 = build_root_system(simple_type('D', 4));
    CHECK(conformal_weight(Weight::fundamental(d4, 2), {d4.type, 3}) == rat(2, 3));
    CHECK_THROWS(conformal_weight(Weight::fundamental(d4, 2), {d4.type, 1}));
    CHECK_THROWS(parse_affine("A2,0"));
    CHECK_THROWS(parse_affine("X2,1"));
}

TEST_CASE("n_min is non-positive and vanishes on the trivial module") {
    const auto& a2 = build_root_system(simple_type('A', 2));
    CHECK(n_min(Weight::fundamental(a2, 1), Weight::of_ints(a2, {0, 2})) == rat(-4, 3));
    const auto& a5 = build_root_system(simple_type('A', 5));
    Weight h = Weight::fundamental(a5, 3).scaled(rat(2, 3));
    CHECK(n_min(h, Weight::of_ints(a5, {0, 0, 3, 0, 0})) == -3);
    for (const auto& row : module_table({a5.type, 3}).rows) {
        Rational m = n_min(h, row.lambda);
        CHECK(sgn(m) <= 0);
        // Type A: the minimum sits at the lowest weight.
        CHECK(m == inner_product(h, lowest_weight(row.lambda)));
    }
    CHECK(n_min(h, Weight::zero(a5)) == 0);
}

TEST_CASE("order of the inner twist on the module category") {
    for (const auto& c : golden::cases()) {
        CAPTURE(c.id);
        CHECK(sigma_order_on_category(twist_of(c), ambient_of(c)) == 3);
    }
    const auto& a2 = build_root_system(simple_type('A', 2));
    CHECK(sigma_order_on_category({{Weight::zero(a2)}}, {{a2.type, 3}}) == 1);
    CHECK_THROWS(sigma_order_on_category({{}}, {{a2.type, 3}}));
}

TEST_CASE("inner fixed subalgebras of the three cases") {
    for (const auto& c : golden::cases()) {
        CAPTURE(c.id);
        auto ambient = ambient_of(c);
        auto r = inner_fixed_subalgebra(ambient, twist_of(c));
        CHECK(r.dimension == c.fixed_dim);
        CHECK(r.type == parse_type_string(c.fixed_type));
        CHECK(r.type.rank() == as_type(ambient).rank());  // rank() counts U(1) factors
        for (const auto& ideal : r.per_ideal) {
            char fam = ideal.ambient.type.family;
            if (fam == 'A' || fam == 'D' || fam == 'E')
                for (const auto& f : ideal.fixed.ideals) CHECK(f.level == ideal.ambient.level);
        }
    }
}

TEST_CASE("inner fixed subalgebra keeps everything for integral twists") {
    const auto& e6 = build_root_system(simple_type('E', 6));
    auto r = inner_fixed_subalgebra({{e6.type, 1}}, {{Weight::fundamental(e6, 2)}});
    CHECK(r.dimension == 78);
    CHECK(r.type == parse_type_string("E6,1"));
    // Lambda_4 / 3 cuts E6 down to A2^3.
    auto s = inner_fixed_subalgebra({{e6.type, 1}}, {{Weight::fundamental(e6, 4).scaled(rat(1, 3))}});
    CHECK(s.type == parse_type_string("A2,1^3"));
    CHECK(s.dimension == 24);
}
