#include "holo24/affinerep.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <regex>
#include <set>
#include <sstream>

namespace holo24 {

AffineAlgebra parse_affine(const std::string& s) {
    static const std::regex re("([A-G][0-9]+),([0-9]+)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw std::invalid_argument("cannot parse affine algebra '" + s + "'");
    AffineAlgebra a{parse_simple_type(m[1].str()), std::stol(m[2].str())};
    if (a.level < 1) throw std::invalid_argument("level must be positive: '" + s + "'");
    return a;
}

std::vector<AffineAlgebra> parse_affine_list(const std::string& s) {
    std::vector<AffineAlgebra> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(parse_affine(tok));
    return out;
}

SemisimpleTypeWithLevels as_type(const std::vector<AffineAlgebra>& ideals) {
    SemisimpleTypeWithLevels t;
    for (const auto& a : ideals) t.ideals.push_back({a.type, Rational(a.level)});
    t.normalize();
    return t;
}

namespace {

std::vector<Rational> comarks(const RootSystem& s) {
    std::vector<Rational> c;
    for (int i = 0; i < s.rank; ++i) c.push_back(s.theta[i] * s.half_norm[i]);
    return c;
}

}  // namespace

bool is_admissible(const Weight& lambda, const AffineAlgebra& a) {
    if (lambda.sys == nullptr || lambda.sys->type != a.type || !lambda.is_dominant_integral()) return false;
    auto c = comarks(*lambda.sys);
    Rational s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * lambda.coords[i];
    return s <= a.level;
}

Rational conformal_weight(const Weight& lambda, const AffineAlgebra& a) {
    if (!is_admissible(lambda, a))
        throw std::invalid_argument("weight " + lambda.str() + " is not admissible for " + a.str());
    const RootSystem& s = *lambda.sys;
    Weight two_rho = Weight::of_ints(s, IntVec(s.rank, 2));
    return inner_product(lambda, lambda + two_rho) / (2 * (a.level + s.dual_coxeter));
}

AffineModuleTable enumerate_level_weights(const AffineAlgebra& a) {
    if (a.level < 1) throw std::invalid_argument("level must be positive");
    const RootSystem& s = build_root_system(a.type);
    auto c = comarks(s);
    AffineModuleTable table;
    table.algebra = a;
    IntVec lab(s.rank, 0);
    std::function<void(int, Rational)> rec = [&](int i, Rational used) {
        if (i == s.rank) {
            Weight w = Weight::of_ints(s, lab);
            table.rows.push_back({w, conformal_weight(w, a), weyl_dim(w)});
            return;
        }
        for (long v = 0; used + c[i] * v <= a.level; ++v) {
            lab[i] = v;
            rec(i + 1, used + c[i] * v);
        }
        lab[i] = 0;
    };
    rec(0, Rational(0));
    std::sort(table.rows.begin(), table.rows.end(), [](const ModuleRow& x, const ModuleRow& y) {
        if (x.conformal_weight != y.conformal_weight) return x.conformal_weight < y.conformal_weight;
        return x.lambda.coords > y.lambda.coords;
    });
    return table;
}

const AffineModuleTable& module_table(const AffineAlgebra& a) {
    static std::mutex mu;
    static std::map<std::pair<SimpleType, long>, std::unique_ptr<AffineModuleTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(a.type, a.level);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<AffineModuleTable>(enumerate_level_weights(a))).first;
    return *it->second;
}

Rational n_min(const Weight& h, const Weight& lambda) {
    if (h.is_zero()) return 0;
    bool nonneg = std::all_of(h.coords.begin(), h.coords.end(), [](const Rational& x) { return sgn(x) >= 0; });
    return nonneg ? lin_min_over_weights(h, lambda) : min_pairing_over_weights(h, lambda);
}

int sigma_order_on_category(const TwistVector& h, const std::vector<AffineAlgebra>& algebras) {
    if (h.components.size() != algebras.size()) throw std::invalid_argument("twist vector and ambient differ in length");
    Integer order = 1;
    for (std::size_t i = 0; i < algebras.size(); ++i) {
        const Weight& hi = h.components[i];
        const RootSystem& s = build_root_system(algebras[i].type);
        if (hi.sys != &s) throw std::invalid_argument("twist component lives in the wrong root system");
        // Weights of every module differ from its highest weight by roots.
        for (int j = 0; j < s.rank; ++j) {
            IntVec e(s.rank, 0);
            e[j] = 1;
            order = lcm_int(order, s.pair(hi.coords, e).get_den());
        }
        for (const auto& row : module_table(algebras[i]).rows)
            order = lcm_int(order, inner_product(hi, row.lambda).get_den());
    }
    return static_cast<int>(order.get_si());
}

InnerFixedResult inner_fixed_subalgebra(const std::vector<AffineAlgebra>& ambient, const TwistVector& h) {
    if (h.components.size() != ambient.size()) throw std::invalid_argument("twist vector and ambient differ in length");
    InnerFixedResult out;
    for (std::size_t i = 0; i < ambient.size(); ++i) {
        const RootSystem& s = build_root_system(ambient[i].type);
        const Weight& hi = h.components[i];
        if (hi.sys != &s) throw std::invalid_argument("twist component lives in the wrong root system");
        std::vector<IntVec> kept;
        std::set<IntVec> kept_set;
        for (const auto& r : s.positive_roots)
            if (is_integer(s.pair(hi.coords, r))) {
                kept.push_back(r);
                kept_set.insert(r);
            }
        std::vector<IntVec> simple;
        for (const auto& r : kept) {
            bool decomposable = false;
            for (const auto& x : kept) {
                IntVec y(r);
                for (int j = 0; j < s.rank; ++j) y[j] -= x[j];
                if (kept_set.count(y)) {
                    decomposable = true;
                    break;
                }
            }
            if (!decomposable) simple.push_back(r);
        }
        InnerFixedIdeal ideal;
        ideal.ambient = ambient[i];
        ideal.simple_roots = simple;
        const int r = static_cast<int>(simple.size());
        QMatrix g(r, r);
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) g(a, b) = s.root_inner(simple[a], simple[b]);
        for (const auto& c : classify_gram(g))
            ideal.fixed.ideals.push_back({c.type, Rational(ambient[i].level) * 2 / c.max_norm});
        ideal.fixed.abelian_rank = s.rank - r;
        ideal.fixed.normalize();
        ideal.dimension = s.rank + 2 * static_cast<long>(kept.size());
        if (ideal.dimension != ideal.fixed.dimension())
            throw std::logic_error("retained root count disagrees with the identified fixed type");
        out.type = merge(out.type, ideal.fixed);
        out.dimension += ideal.dimension;
        out.per_ideal.push_back(std::move(ideal));
    }
    return out;
}

}  // namespace holo24
