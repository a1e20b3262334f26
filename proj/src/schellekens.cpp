#include "holo24/schellekens.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

namespace holo24 {

namespace {

std::vector<SimpleType> types_up_to_dim(long cap) {
    std::vector<SimpleType> out;
    auto add_family = [&](char fam, int first) {
        for (int n = first;; ++n) {
            SimpleType t = simple_type(fam, n);
            if (lie_dimension(t) > cap) break;
            out.push_back(t);
        }
    };
    add_family('A', 1);
    add_family('B', 2);
    add_family('C', 3);
    add_family('D', 4);
    for (auto [f, n] : std::vector<std::pair<char, int>>{{'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}})
        if (lie_dimension(simple_type(f, n)) <= cap) out.push_back(simple_type(f, n));
    return out;
}

long dim_of(const IdealLevel& i) { return lie_dimension(i.type); }

}  // namespace

std::vector<IdealLevel> simple_ideals_with_ratio(const Rational& r, long dim_cap) {
    if (sgn(r) <= 0) throw std::invalid_argument("ratio must be positive");
    std::vector<IdealLevel> out;
    for (const auto& t : types_up_to_dim(dim_cap)) {
        Rational k = Rational(dual_coxeter(t)) / r;
        if (is_integer(k) && sgn(k) > 0) out.push_back({t, k});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CandidateAlgebra> enumerate_candidates(long total_dim, const Rational& r) {
    std::vector<IdealLevel> ideals = simple_ideals_with_ratio(r, total_dim);
    std::vector<CandidateAlgebra> out;
    std::vector<IdealLevel> cur;
    std::function<void(std::size_t, long)> rec = [&](std::size_t from, long left) {
        if (left == 0) {
            CandidateAlgebra c{{cur, 0}, total_dim};
            c.value.normalize();
            out.push_back(c);
            return;
        }
        for (std::size_t i = from; i < ideals.size(); ++i) {
            if (dim_of(ideals[i]) > left) continue;
            cur.push_back(ideals[i]);
            rec(i, left - dim_of(ideals[i]));
            cur.pop_back();
        }
    };
    if (total_dim >= 0) rec(0, total_dim);
    std::sort(out.begin(), out.end(),
              [](const CandidateAlgebra& a, const CandidateAlgebra& b) { return a.value.str() < b.value.str(); });
    return out;
}

std::vector<SemisimpleTypeWithLevels> order3_fixed_options(SimpleType t, long k, bool include_outer) {
    std::map<std::string, SemisimpleTypeWithLevels> found;
    auto collect = [&](int twist, int target_sum) {
        AffineDiagram d = affine_diagram(t, twist);
        std::vector<int> s(d.marks.size(), 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int sum) {
            if (i == s.size()) {
                if (sum != target_sum) return;
                KacFixed f = kac_fixed_subalgebra(t, s, twist);
                SemisimpleTypeWithLevels v;
                v.abelian_rank = f.type.abelian_rank;
                for (std::size_t c = 0; c < f.components.size(); ++c)
                    v.ideals.push_back({f.components[c].type, f.level_factor[c] * k});
                v.normalize();
                found.emplace(v.str(), v);
                return;
            }
            for (int x = 0; sum + x * d.marks[i] <= target_sum; ++x) {
                s[i] = x;
                rec(i + 1, sum + x * d.marks[i]);
            }
            s[i] = 0;
        };
        rec(0, 0);
    };
    collect(1, 3);
    if (include_outer && t == simple_type('D', 4)) collect(3, 1);
    std::vector<SemisimpleTypeWithLevels> out;
    for (auto& [key, v] : found) out.push_back(v);
    return out;
}

namespace {

using Bag = std::map<IdealLevel, int>;

bool take(Bag& bag, int& abelian, const SemisimpleTypeWithLevels& part) {
    if (part.abelian_rank > abelian) return false;
    Bag need;
    for (const auto& i : part.ideals) ++need[i];
    for (const auto& [i, n] : need) {
        auto it = bag.find(i);
        if (it == bag.end() || it->second < n) return false;
    }
    for (const auto& [i, n] : need) bag[i] -= n;
    abelian -= part.abelian_rank;
    return true;
}

void give(Bag& bag, int& abelian, const SemisimpleTypeWithLevels& part) {
    for (const auto& i : part.ideals) ++bag[i];
    abelian += part.abelian_rank;
}

}  // namespace

std::optional<Order3Assignment> admits_order3_with_fixed(const CandidateAlgebra& c,
                                                         const SemisimpleTypeWithLevels& target) {
    const auto& ideals = c.value.ideals;
    const std::size_t n = ideals.size();
    Bag bag;
    for (const auto& i : target.ideals) ++bag[i];
    int abelian = target.abelian_rank;
    std::vector<bool> used(n, false);
    Order3Assignment cur;
    std::map<IdealLevel, std::vector<SemisimpleTypeWithLevels>> options;
    for (const auto& i : ideals)
        if (!options.count(i)) options[i] = order3_fixed_options(i.type, i.level.get_num().get_si());

    std::function<bool()> rec = [&]() -> bool {
        std::size_t i = 0;
        while (i < n && used[i]) ++i;
        if (i == n) {
            if (abelian != 0) return false;
            for (const auto& [k, m] : bag)
                if (m != 0) return false;
            return true;
        }
        used[i] = true;
        for (const auto& opt : options[ideals[i]]) {
            if (!take(bag, abelian, opt)) continue;
            cur.singletons.push_back({i, opt});
            if (rec()) return true;
            cur.singletons.pop_back();
            give(bag, abelian, opt);
        }
        SemisimpleTypeWithLevels diag;
        diag.ideals.push_back({ideals[i].type, ideals[i].level * 3});
        for (std::size_t j = i + 1; j < n; ++j) {
            if (used[j] || !(ideals[j] == ideals[i])) continue;
            for (std::size_t k = j + 1; k < n; ++k) {
                if (used[k] || !(ideals[k] == ideals[i])) continue;
                if (!take(bag, abelian, diag)) continue;
                used[j] = used[k] = true;
                cur.cycles.push_back({i, j, k});
                if (rec()) return true;
                cur.cycles.pop_back();
                used[j] = used[k] = false;
                give(bag, abelian, diag);
            }
        }
        used[i] = false;
        return false;
    };
    if (rec()) return cur;
    return std::nullopt;
}

}  // namespace holo24
