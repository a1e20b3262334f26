#include "holo24/twistbound.hpp"

#include <algorithm>
#include <stdexcept>

namespace holo24 {

CaseSpec make_case(const std::string& name, const std::vector<AffineAlgebra>& ambient,
                   const std::vector<std::vector<Rational>>& h_labels) {
    if (ambient.size() != h_labels.size()) throw std::invalid_argument("twist vector and ambient differ in length");
    CaseSpec c{name, ambient, {}};
    for (std::size_t i = 0; i < ambient.size(); ++i)
        c.h.components.push_back(Weight::of(build_root_system(ambient[i].type), h_labels[i]));
    return c;
}

CaseSpec negated(const CaseSpec& c) {
    CaseSpec out = c;
    out.name = c.name + "(-h)";
    for (auto& w : out.h.components) w = -w;
    return out;
}

NormReport invariant_norm(const CaseSpec& c) {
    NormReport r;
    for (std::size_t i = 0; i < c.ambient.size(); ++i)
        r.norm += Rational(c.ambient[i].level) * inner_product(c.h.components[i], c.h.components[i]);
    r.in_2z = is_integer(r.norm / 2);
    r.in_two_thirds_z = is_integer(r.norm * 3 / 2);
    return r;
}

bool shift_ok(const CaseSpec& c) {
    for (std::size_t i = 0; i < c.ambient.size(); ++i) {
        const RootSystem& s = build_root_system(c.ambient[i].type);
        for (const auto& a : s.roots)
            if (s.pair(c.h.components[i].coords, a) < -1) return false;
    }
    return true;
}

bool TupleBound::is_vacuum() const {
    return std::all_of(rows.begin(), rows.end(), [](std::size_t r) { return r == 0; });
}

namespace {

// Integer-scaled per-row data so the hot loop runs on machine integers.
struct ScaledTables {
    long scale = 1;
    long half_norm = 0;
    std::vector<std::vector<long>> cw, nm;
    std::vector<std::size_t> vacuum_row;
};

ScaledTables scaled_tables(const CaseSpec& c) {
    if (c.h.components.size() != c.ambient.size())
        throw std::invalid_argument("twist vector and ambient differ in length");
    std::vector<std::vector<Rational>> cw, nm;
    Rational half = invariant_norm(c).norm / 2;
    Integer den = half.get_den();
    ScaledTables t;
    for (std::size_t i = 0; i < c.ambient.size(); ++i) {
        const auto& rows = module_table(c.ambient[i]).rows;
        cw.emplace_back();
        nm.emplace_back();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            cw.back().push_back(rows[r].conformal_weight);
            nm.back().push_back(n_min(c.h.components[i], rows[r].lambda));
            den = lcm_int(den, cw.back().back().get_den());
            den = lcm_int(den, nm.back().back().get_den());
            if (rows[r].lambda.is_zero()) t.vacuum_row.push_back(r);
        }
    }
    if (!den.fits_slong_p()) throw std::overflow_error("common denominator too large");
    t.scale = den.get_si();
    auto scaled = [&](const Rational& x) {
        Rational y = x * Rational(den);
        return y.get_num().get_si();
    };
    t.half_norm = scaled(half);
    for (std::size_t i = 0; i < cw.size(); ++i) {
        t.cw.emplace_back();
        t.nm.emplace_back();
        for (std::size_t r = 0; r < cw[i].size(); ++r) {
            t.cw[i].push_back(scaled(cw[i][r]));
            t.nm[i].push_back(scaled(nm[i][r]));
        }
    }
    return t;
}

// Odometer over row indices, last ideal fastest, so visits are lexicographic.
template <class Fn>
void enumerate(const ScaledTables& t, Fn&& fn) {
    const std::size_t n = t.cw.size();
    std::vector<std::size_t> idx(n, 0);
    if (n == 0) {
        fn(idx, 0L, 0L);
        return;
    }
    for (;;) {
        long cw = 0, nm = 0;
        for (std::size_t i = 0; i < n; ++i) {
            cw += t.cw[i][idx[i]];
            nm += t.nm[i][idx[i]];
        }
        fn(idx, cw, nm);
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++idx[k] < t.cw[k].size()) break;
            idx[k] = 0;
            if (k == 0) return;
        }
    }
}

bool vacuum(const ScaledTables& t, const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < idx.size(); ++i)
        if (idx[i] != t.vacuum_row[i]) return false;
    return true;
}

long ell_min_scaled(const ScaledTables& t, const std::vector<std::size_t>& idx, long cw) {
    if (vacuum(t, idx)) return cw;
    return std::max(2 * t.scale, cw);
}

TupleBound make_bound(const CaseSpec& c, const std::vector<std::size_t>& idx) {
    TupleBound b;
    b.rows = idx;
    bool is_vac = true;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const auto& row = module_table(c.ambient[i]).rows[idx[i]];
        b.tuple.push_back(row.lambda);
        b.conformal_sum += row.conformal_weight;
        b.n_sum += n_min(c.h.components[i], row.lambda);
        is_vac = is_vac && row.lambda.is_zero();
    }
    b.feasible = is_integer(b.conformal_sum);
    if (b.feasible) {
        b.ell_min = is_vac ? b.conformal_sum.get_num() : Integer(std::max(Integer(2), Integer(b.conformal_sum.get_num())));
        b.bound = twisted_weight_lower_bound(b, c);
    }
    return b;
}

}  // namespace

Rational twisted_weight_lower_bound(const TupleBound& t, const CaseSpec& c) {
    if (!shift_ok(c)) throw std::invalid_argument("twist vector violates (h|alpha) >= -1");
    if (!t.feasible) throw std::invalid_argument("tuple has non-integral conformal weight sum");
    return Rational(t.ell_min) + t.n_sum + invariant_norm(c).norm / 2;
}

std::vector<TupleBound> feasible_tuples(const CaseSpec& c) {
    ScaledTables t = scaled_tables(c);
    std::vector<TupleBound> out;
    enumerate(t, [&](const std::vector<std::size_t>& idx, long cw, long) {
        if (cw % t.scale == 0) out.push_back(make_bound(c, idx));
    });
    return out;
}

void for_each_feasible_bound(const CaseSpec& c,
                             const std::function<void(const std::vector<std::size_t>&, const Rational&)>& fn) {
    if (!shift_ok(c)) throw std::invalid_argument("twist vector violates (h|alpha) >= -1");
    ScaledTables t = scaled_tables(c);
    enumerate(t, [&](const std::vector<std::size_t>& idx, long cw, long nm) {
        if (cw % t.scale != 0) return;
        long b = ell_min_scaled(t, idx, cw) + nm + t.half_norm;
        fn(idx, rat(b, t.scale));
    });
}

TwistedMinimum min_twisted_weight(const CaseSpec& c) {
    if (!shift_ok(c)) throw std::invalid_argument("twist vector violates (h|alpha) >= -1");
    ScaledTables t = scaled_tables(c);
    TwistedMinimum out;
    bool have = false;
    long best = 0;
    std::vector<std::size_t> best_idx;
    enumerate(t, [&](const std::vector<std::size_t>& idx, long cw, long nm) {
        ++out.examined;
        if (cw % t.scale != 0) return;
        ++out.feasible;
        long b = ell_min_scaled(t, idx, cw) + nm + t.half_norm;
        if ((3 * b) % t.scale != 0) out.all_bounds_in_third_z = false;
        if (vacuum(t, idx)) out.vacuum_bound_is_one = (b == t.scale);
        if (!have || b < best) {
            have = true;
            best = b;
            best_idx = idx;
        }
    });
    out.minimum = rat(best, t.scale);
    out.witness = make_bound(c, best_idx);
    return out;
}

}  // namespace holo24
