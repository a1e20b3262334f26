#include "holo24/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <regex>
#include <set>
#include <sstream>

namespace holo24 {

bool is_valid_type(char family, int rank) {
    switch (family) {
        case 'A': return rank >= 1;
        case 'B':
        case 'C': return rank >= 2;
        case 'D': return rank >= 3;
        case 'E': return rank >= 6 && rank <= 8;
        case 'F': return rank == 4;
        case 'G': return rank == 2;
        default: return false;
    }
}

SimpleType simple_type(char family, int rank) {
    if (!is_valid_type(family, rank))
        throw std::invalid_argument("invalid simple type " + std::string(1, family) + std::to_string(rank));
    return SimpleType{family, rank};
}

SimpleType parse_simple_type(const std::string& s) {
    static const std::regex re("([A-G])([0-9]+)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw std::invalid_argument("cannot parse simple type '" + s + "'");
    return simple_type(m[1].str()[0], std::stoi(m[2].str()));
}

namespace {

QMatrix simple_gram(SimpleType t) {
    const int n = t.rank;
    QMatrix g(n, n);
    auto link = [&](int i, int j, const Rational& v) {  // 1-based node labels
        g(i - 1, j - 1) = v;
        g(j - 1, i - 1) = v;
    };
    switch (t.family) {
        case 'A':
            for (int i = 1; i <= n; ++i) g(i - 1, i - 1) = 2;
            for (int i = 1; i < n; ++i) link(i, i + 1, -1);
            break;
        case 'B':
            for (int i = 1; i < n; ++i) g(i - 1, i - 1) = 2;
            g(n - 1, n - 1) = 1;
            for (int i = 1; i < n; ++i) link(i, i + 1, -1);
            break;
        case 'C':
            for (int i = 1; i < n; ++i) g(i - 1, i - 1) = 1;
            g(n - 1, n - 1) = 2;
            for (int i = 1; i < n - 1; ++i) link(i, i + 1, rat(-1, 2));
            link(n - 1, n, -1);
            break;
        case 'D':
            for (int i = 1; i <= n; ++i) g(i - 1, i - 1) = 2;
            for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
            link(n - 2, n, -1);
            break;
        case 'E':
            for (int i = 1; i <= n; ++i) g(i - 1, i - 1) = 2;
            link(1, 3, -1);
            link(2, 4, -1);
            for (int i = 3; i < n; ++i) link(i, i + 1, -1);
            break;
        case 'F':
            g(0, 0) = 2;
            g(1, 1) = 2;
            g(2, 2) = 1;
            g(3, 3) = 1;
            link(1, 2, -1);
            link(2, 3, -1);
            link(3, 4, rat(-1, 2));
            break;
        case 'G':
            g(0, 0) = rat(2, 3);
            g(1, 1) = 2;
            link(1, 2, -1);
            break;
    }
    return g;
}

std::vector<IntVec> cartan_of_gram(const QMatrix& g) {
    const std::size_t n = g.rows();
    std::vector<IntVec> a(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational v = 2 * g(i, j) / g(j, j);
            if (!is_integer(v)) throw std::domain_error("Gram matrix does not give integral Cartan entries");
            a[i][j] = v.get_num().get_si();
        }
    return a;
}

long height(const IntVec& x) {
    long h = 0;
    for (long c : x) h += c;
    return h;
}

bool root_order(const IntVec& x, const IntVec& y) {
    long hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x < y;
}

std::unique_ptr<RootSystem> make_root_system(SimpleType t) {
    auto rs = std::make_unique<RootSystem>();
    rs->type = t;
    rs->rank = t.rank;
    rs->gram = simple_gram(t);
    rs->cartan = cartan_of_gram(rs->gram);
    const int n = t.rank;
    for (int i = 0; i < n; ++i) rs->half_norm.push_back(rs->gram(i, i) / 2);
    QMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = rs->cartan[i][j];
    QMatrix ainv = inverse(a);
    rs->weight_gram = QMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) rs->weight_gram(i, l) = ainv(i, l) * rs->half_norm[l];
    rs->positive_roots = positive_roots_from_cartan(rs->cartan);
    std::sort(rs->positive_roots.begin(), rs->positive_roots.end(), root_order);
    rs->roots = rs->positive_roots;
    for (const auto& r : rs->positive_roots) {
        IntVec neg(r);
        for (auto& c : neg) c = -c;
        rs->roots.push_back(neg);
    }
    for (std::size_t i = 0; i < rs->roots.size(); ++i) rs->root_index[rs->roots[i]] = i;
    rs->theta = rs->positive_roots.back();
    for (const auto& r : rs->positive_roots)
        if (height(r) == height(rs->theta) && r != rs->theta)
            throw std::logic_error("highest root is not unique for " + t.str());
    Rational maxnorm = 0;
    for (const auto& r : rs->roots) maxnorm = std::max(maxnorm, Rational(rs->root_norm(r)));
    if (maxnorm != 2) throw std::logic_error("long roots of " + t.str() + " do not have norm 2");
    if (rs->root_norm(rs->theta) != 2) throw std::logic_error("highest root of " + t.str() + " is not long");
    Rational rho_theta = 0;
    for (int i = 0; i < n; ++i) rho_theta += rs->theta[i] * rs->half_norm[i];
    Rational hv = 1 + rho_theta;
    if (!is_integer(hv)) throw std::logic_error("non-integral dual Coxeter number");
    rs->dual_coxeter = static_cast<int>(hv.get_num().get_si());
    return rs;
}

}  // namespace

Rational RootSystem::root_inner(const IntVec& x, const IntVec& y) const {
    Rational s = 0;
    for (int i = 0; i < rank; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < rank; ++j)
            if (y[j] != 0) s += gram(i, j) * (x[i] * y[j]);
    }
    return s;
}

Rational RootSystem::pair(const std::vector<Rational>& w, const IntVec& x) const {
    Rational s = 0;
    for (int j = 0; j < rank; ++j)
        if (x[j] != 0 && sgn(w[j]) != 0) s += w[j] * x[j] * half_norm[j];
    return s;
}

IntVec RootSystem::root_to_dynkin(const IntVec& x) const {
    IntVec out(rank, 0);
    for (int j = 0; j < rank; ++j)
        if (x[j] != 0)
            for (int k = 0; k < rank; ++k) out[k] += x[j] * cartan[j][k];
    return out;
}

bool RootSystem::is_root(const IntVec& x) const { return root_index.count(x) > 0; }

std::vector<IntVec> positive_roots_from_cartan(const std::vector<IntVec>& cartan) {
    const std::size_t n = cartan.size();
    std::vector<IntVec> pos;
    std::set<IntVec> seen;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        pos.push_back(e);
        seen.insert(e);
    }
    for (std::size_t idx = 0; idx < pos.size(); ++idx) {
        const IntVec beta = pos[idx];
        for (std::size_t i = 0; i < n; ++i) {
            long p = 0;
            IntVec t = beta;
            while (true) {
                t[i] -= 1;
                if (seen.count(t)) ++p;
                else break;
            }
            long pairing = 0;
            for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * cartan[j][i];
            if (p - pairing > 0) {
                IntVec up = beta;
                up[i] += 1;
                if (seen.insert(up).second) pos.push_back(up);
            }
        }
        if (pos.size() > 100000) throw std::domain_error("Cartan matrix is not of finite type");
    }
    return pos;
}

const RootSystem& build_root_system(SimpleType t) {
    static std::mutex mu;
    static std::map<SimpleType, std::unique_ptr<RootSystem>> cache;
    simple_type(t.family, t.rank);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, make_root_system(t)).first;
    return *it->second;
}

int dual_coxeter(SimpleType t) { return build_root_system(t).dual_coxeter; }

long lie_dimension(SimpleType t) { return static_cast<long>(build_root_system(t).dimension()); }

Weight Weight::zero(const RootSystem& s) { return Weight{&s, std::vector<Rational>(s.rank, Rational(0))}; }

Weight Weight::fundamental(const RootSystem& s, int i) {
    if (i < 1 || i > s.rank) throw std::out_of_range("fundamental weight index");
    Weight w = zero(s);
    w.coords[i - 1] = 1;
    return w;
}

Weight Weight::of(const RootSystem& s, const std::vector<Rational>& labels) {
    if (static_cast<int>(labels.size()) != s.rank) throw std::invalid_argument("weight has wrong number of labels");
    return Weight{&s, labels};
}

Weight Weight::of_ints(const RootSystem& s, const IntVec& labels) {
    std::vector<Rational> q;
    for (long v : labels) q.emplace_back(v);
    return of(s, q);
}

bool Weight::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool Weight::is_dominant_integral() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& x) { return is_integer(x) && sgn(x) >= 0; });
}

IntVec Weight::integral_labels() const {
    IntVec out;
    for (const auto& c : coords) {
        if (!is_integer(c)) throw std::invalid_argument("weight is not integral: " + str());
        out.push_back(c.get_num().get_si());
    }
    return out;
}

std::string Weight::str() const {
    std::string s;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const Rational& c = coords[i];
        if (sgn(c) == 0) continue;
        std::string term = "L" + std::to_string(i + 1);
        if (c == 1) {
            if (!s.empty()) s += "+";
        } else if (c == -1) {
            s += "-";
        } else {
            if (!s.empty() && sgn(c) > 0) s += "+";
            term = to_string(c) + "*" + term;
        }
        s += term;
    }
    return s.empty() ? "0" : s;
}

Weight Weight::operator+(const Weight& o) const {
    if (sys != o.sys) throw std::invalid_argument("weights from different root systems");
    Weight w = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) w.coords[i] += o.coords[i];
    return w;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const { return scaled(-1); }

Weight Weight::scaled(const Rational& c) const {
    Weight w = *this;
    for (auto& x : w.coords) x *= c;
    return w;
}

Rational inner_product(const Weight& x, const Weight& y) {
    if (x.sys == nullptr || x.sys != y.sys) throw std::invalid_argument("inner_product: system mismatch");
    const auto& f = x.sys->weight_gram;
    Rational s = 0;
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (sgn(x.coords[i]) == 0) continue;
        for (std::size_t j = 0; j < y.coords.size(); ++j)
            if (sgn(y.coords[j]) != 0) s += x.coords[i] * f(i, j) * y.coords[j];
    }
    return s;
}

Integer WeightSystem::total() const {
    Integer t = 0;
    for (const auto& e : entries) t += e.second;
    return t;
}

namespace {

void require_dominant(const Weight& w, const char* what) {
    if (w.sys == nullptr) throw std::invalid_argument(std::string(what) + ": weight without root system");
    if (!w.is_dominant_integral())
        throw std::invalid_argument(std::string(what) + ": weight is not dominant integral: " + w.str());
}

struct Saturated {
    std::vector<IntVec> weights;  // sorted by depth, then labels descending
    std::vector<long> depth;
};

Saturated saturate(const RootSystem& s, const IntVec& top) {
    const int n = s.rank;
    std::map<IntVec, long> depth{{top, 0}};
    std::deque<IntVec> queue{top};
    while (!queue.empty()) {
        IntVec mu = queue.front();
        queue.pop_front();
        long d = depth[mu];
        for (int i = 0; i < n; ++i) {
            for (long k = 1; k <= mu[i]; ++k) {
                IntVec nu = mu;
                for (int j = 0; j < n; ++j) nu[j] -= k * s.cartan[i][j];
                if (depth.emplace(nu, d + k).second) queue.push_back(nu);
            }
        }
    }
    std::vector<std::pair<long, IntVec>> order;
    for (const auto& [w, d] : depth) order.emplace_back(d, w);
    std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second > y.second;
    });
    Saturated out;
    for (auto& [d, w] : order) {
        out.depth.push_back(d);
        out.weights.push_back(w);
    }
    return out;
}

Rational pair_labels(const RootSystem& s, const IntVec& w, const IntVec& root) {
    Rational r = 0;
    for (int j = 0; j < s.rank; ++j)
        if (root[j] != 0 && w[j] != 0) r += s.half_norm[j] * (w[j] * root[j]);
    return r;
}

Rational weight_norm_labels(const RootSystem& s, const IntVec& w) {
    Rational r = 0;
    for (int i = 0; i < s.rank; ++i) {
        if (w[i] == 0) continue;
        for (int j = 0; j < s.rank; ++j)
            if (w[j] != 0) r += s.weight_gram(i, j) * (w[i] * w[j]);
    }
    return r;
}

}  // namespace

std::vector<IntVec> weight_set(const RootSystem& s, const IntVec& highest) {
    for (long v : highest)
        if (v < 0) throw std::invalid_argument("weight_set: highest weight is not dominant");
    return saturate(s, highest).weights;
}

WeightSystem weight_system(const Weight& lambda) {
    require_dominant(lambda, "weight_system");
    const RootSystem& s = *lambda.sys;
    const IntVec top = lambda.integral_labels();
    Saturated sat = saturate(s, top);
    std::vector<IntVec> pos_dynkin;
    for (const auto& r : s.positive_roots) pos_dynkin.push_back(s.root_to_dynkin(r));
    IntVec rho(s.rank, 1);
    auto shifted_norm = [&](const IntVec& w) {
        IntVec x = w;
        for (int i = 0; i < s.rank; ++i) x[i] += rho[i];
        return weight_norm_labels(s, x);
    };
    const Rational top_norm = shifted_norm(top);
    std::map<IntVec, Integer> mult;
    WeightSystem ws;
    for (const auto& mu : sat.weights) {
        Integer m;
        if (mu == top) {
            m = 1;
        } else {
            Rational num = 0;
            for (std::size_t a = 0; a < s.positive_roots.size(); ++a) {
                IntVec nu = mu;
                while (true) {
                    for (int i = 0; i < s.rank; ++i) nu[i] += pos_dynkin[a][i];
                    auto it = mult.find(nu);
                    if (it == mult.end()) break;
                    num += Rational(it->second) * pair_labels(s, nu, s.positive_roots[a]);
                }
            }
            Rational den = top_norm - shifted_norm(mu);
            if (sgn(den) <= 0) throw std::logic_error("Freudenthal denominator vanished");
            Rational q = 2 * num / den;
            if (!is_integer(q) || sgn(q) <= 0) throw std::logic_error("Freudenthal multiplicity is not a positive integer");
            m = q.get_num();
        }
        mult[mu] = m;
        ws.entries.emplace_back(Weight::of_ints(s, mu), m);
    }
    return ws;
}

Weight lowest_weight(const Weight& lambda) {
    require_dominant(lambda, "lowest_weight");
    const RootSystem& s = *lambda.sys;
    Weight mu = lambda;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < s.rank; ++i) {
            if (sgn(mu.coords[i]) > 0) {
                Rational c = mu.coords[i];
                for (int j = 0; j < s.rank; ++j) mu.coords[j] -= c * s.cartan[i][j];
                changed = true;
            }
        }
    }
    return mu;
}

Weight dual_weight(const Weight& lambda) { return -lowest_weight(lambda); }

Integer weyl_dim(const Weight& lambda) {
    require_dominant(lambda, "weyl_dim");
    const RootSystem& s = *lambda.sys;
    Rational d = 1;
    for (const auto& r : s.positive_roots) {
        Rational num = 0, den = 0;
        for (int j = 0; j < s.rank; ++j) {
            num += (lambda.coords[j] + 1) * r[j] * s.half_norm[j];
            den += r[j] * s.half_norm[j];
        }
        d *= num / den;
    }
    if (!is_integer(d)) throw std::logic_error("Weyl dimension is not integral");
    return d.get_num();
}

Rational min_pairing_over_weights(const Weight& big_lambda, const Weight& lambda) {
    require_dominant(lambda, "min_pairing_over_weights");
    if (big_lambda.sys != lambda.sys) throw std::invalid_argument("min_pairing_over_weights: system mismatch");
    const RootSystem& s = *lambda.sys;
    bool first = true;
    Rational best;
    for (const auto& mu : weight_set(s, lambda.integral_labels())) {
        Rational v = inner_product(big_lambda, Weight::of_ints(s, mu));
        if (first || v < best) best = v;
        first = false;
    }
    return best;
}

Rational lin_min_over_weights(const Weight& big_lambda, const Weight& lambda) {
    for (const auto& c : big_lambda.coords)
        if (sgn(c) < 0)
            throw std::invalid_argument("lin_min_over_weights: direction is not a non-negative combination of fundamental weights");
    Rational brute = min_pairing_over_weights(big_lambda, lambda);
    Weight low = lowest_weight(lambda);
    Rational shortcut = inner_product(big_lambda, low);
    if (brute != shortcut) throw std::logic_error("lin_min_over_weights: brute force disagrees with w0 shortcut");
    if (lambda.sys->type.family == 'A') {
        // For type A the lowest weight is the reversed, negated label vector.
        const auto n = lambda.coords.size();
        for (std::size_t i = 0; i < n; ++i)
            if (low.coords[i] != -lambda.coords[n - 1 - i])
                throw std::logic_error("lin_min_over_weights: type-A lowest weight mismatch");
    }
    return brute;
}

void SemisimpleTypeWithLevels::normalize() { std::sort(ideals.begin(), ideals.end()); }

SemisimpleTypeWithLevels SemisimpleTypeWithLevels::normalized() const {
    SemisimpleTypeWithLevels c = *this;
    c.normalize();
    return c;
}

long SemisimpleTypeWithLevels::dimension() const {
    long d = abelian_rank;
    for (const auto& i : ideals) d += lie_dimension(i.type);
    return d;
}

int SemisimpleTypeWithLevels::rank() const {
    int r = abelian_rank;
    for (const auto& i : ideals) r += i.type.rank;
    return r;
}

std::string SemisimpleTypeWithLevels::str() const {
    auto c = normalized();
    std::string s;
    for (const auto& i : c.ideals) {
        if (!s.empty()) s += " ";
        s += i.type.str();
        if (sgn(i.level) != 0) s += "," + to_string(i.level);
    }
    if (c.abelian_rank > 0) {
        if (!s.empty()) s += " ";
        s += "U(1)";
        if (c.abelian_rank > 1) s += "^" + std::to_string(c.abelian_rank);
    }
    return s.empty() ? "0" : s;
}

bool SemisimpleTypeWithLevels::operator==(const SemisimpleTypeWithLevels& o) const {
    return abelian_rank == o.abelian_rank && normalized().ideals == o.normalized().ideals;
}

SemisimpleTypeWithLevels parse_type_string(const std::string& s) {
    static const std::regex ideal_re("([A-G])([0-9]+)(?:,([0-9]+(?:/[0-9]+)?))?(?:\\^([0-9]+))?");
    static const std::regex u1_re("U\\(1\\)(?:\\^([0-9]+))?");
    SemisimpleTypeWithLevels out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        std::smatch m;
        if (std::regex_match(tok, m, u1_re)) {
            out.abelian_rank += m[1].matched ? std::stoi(m[1].str()) : 1;
        } else if (std::regex_match(tok, m, ideal_re)) {
            SimpleType t = simple_type(m[1].str()[0], std::stoi(m[2].str()));
            Rational level = m[3].matched ? parse_rational(m[3].str()) : Rational(0);
            int copies = m[4].matched ? std::stoi(m[4].str()) : 1;
            for (int c = 0; c < copies; ++c) out.ideals.push_back({t, level});
        } else if (tok != "0") {
            throw std::invalid_argument("cannot parse type token '" + tok + "'");
        }
    }
    out.normalize();
    return out;
}

SemisimpleTypeWithLevels merge(const SemisimpleTypeWithLevels& x, const SemisimpleTypeWithLevels& y) {
    SemisimpleTypeWithLevels out = x;
    out.ideals.insert(out.ideals.end(), y.ideals.begin(), y.ideals.end());
    out.abelian_rank += y.abelian_rank;
    out.normalize();
    return out;
}

QMatrix gram_from_cartan(const std::vector<IntVec>& cartan) {
    const std::size_t n = cartan.size();
    std::vector<Rational> norm(n, Rational(0));
    std::vector<bool> done(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (done[start]) continue;
        std::vector<std::size_t> comp{start};
        norm[start] = 1;
        done[start] = true;
        for (std::size_t k = 0; k < comp.size(); ++k) {
            std::size_t i = comp[k];
            for (std::size_t j = 0; j < n; ++j) {
                if (done[j] || cartan[i][j] == 0) continue;
                // A_ij / A_ji = (a_i|a_i)/(a_j|a_j)
                norm[j] = norm[i] * rat(cartan[j][i], cartan[i][j]);
                done[j] = true;
                comp.push_back(j);
            }
        }
        Rational mx = 0;
        for (auto i : comp) mx = std::max(mx, norm[i]);
        for (auto i : comp) norm[i] = norm[i] * 2 / mx;
    }
    QMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = Rational(cartan[i][j]) * norm[j] / 2;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g(i, j) != g(j, i)) throw std::domain_error("Cartan matrix is not symmetrizable");
    return g;
}

std::vector<DiagramComponent> classify_gram(const QMatrix& gram) {
    const std::size_t n = gram.rows();
    std::vector<bool> seen(n, false);
    std::vector<DiagramComponent> out;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<int> nodes{static_cast<int>(start)};
        seen[start] = true;
        for (std::size_t k = 0; k < nodes.size(); ++k)
            for (std::size_t j = 0; j < n; ++j)
                if (!seen[j] && sgn(gram(nodes[k], j)) != 0) {
                    seen[j] = true;
                    nodes.push_back(static_cast<int>(j));
                }
        std::sort(nodes.begin(), nodes.end());
        const int r = static_cast<int>(nodes.size());
        QMatrix sub(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) sub(i, j) = gram(nodes[i], nodes[j]);
        auto pos = positive_roots_from_cartan(cartan_of_gram(sub));
        const long np = static_cast<long>(pos.size());
        Rational mx = 0;
        for (int i = 0; i < r; ++i) mx = std::max(mx, sub(i, i));
        int short_count = 0;
        for (int i = 0; i < r; ++i)
            if (sub(i, i) < mx) ++short_count;
        char fam = 0;
        if (short_count == 0) {
            if (np == static_cast<long>(r) * (r + 1) / 2) fam = 'A';
            else if (r >= 4 && np == static_cast<long>(r) * (r - 1)) fam = 'D';
            else if ((r == 6 && np == 36) || (r == 7 && np == 63) || (r == 8 && np == 120)) fam = 'E';
        } else {
            if (r == 2 && np == 6) fam = 'G';
            else if (r == 4 && np == 24) fam = 'F';
            else if (np == static_cast<long>(r) * r) fam = short_count == 1 ? 'B' : 'C';
        }
        if (fam == 0) throw std::domain_error("Gram matrix component of rank " + std::to_string(r) + " is not of finite type");
        out.push_back({simple_type(fam, r), nodes, mx});
    }
    return out;
}

AffineDiagram affine_diagram(SimpleType t, int twist) {
    AffineDiagram d;
    d.type = t;
    d.twist = twist;
    if (twist == 3) {
        if (t != SimpleType{'D', 4}) throw std::invalid_argument("only the D4 twisted diagram of order 3 is supported");
        d.gram = QMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, rat(2, 3)}};
        d.marks = {1, 2, 1};
        return d;
    }
    if (twist != 1) throw std::invalid_argument("twist order must be 1 or 3");
    const RootSystem& s = build_root_system(t);
    const int n = s.rank;
    d.gram = QMatrix(n + 1, n + 1);
    d.gram(0, 0) = 2;
    for (int i = 0; i < n; ++i) {
        Rational v = 0;
        for (int j = 0; j < n; ++j) v -= s.theta[j] * s.gram(j, i);
        d.gram(0, i + 1) = v;
        d.gram(i + 1, 0) = v;
        for (int j = 0; j < n; ++j) d.gram(i + 1, j + 1) = s.gram(i, j);
    }
    d.marks.push_back(1);
    for (int i = 0; i < n; ++i) d.marks.push_back(static_cast<int>(s.theta[i]));
    return d;
}

KacFixed kac_fixed_subalgebra(SimpleType t, const std::vector<int>& s, int twist) {
    AffineDiagram d = affine_diagram(t, twist);
    const std::size_t nodes = d.marks.size();
    if (s.size() != nodes) throw std::invalid_argument("Kac coordinates have the wrong length");
    int nonzero = 0, weighted = 0;
    std::vector<int> kept;
    for (std::size_t i = 0; i < nodes; ++i) {
        if (s[i] < 0) throw std::invalid_argument("Kac coordinates must be non-negative");
        if (s[i] == 0) kept.push_back(static_cast<int>(i));
        else ++nonzero;
        weighted += d.marks[i] * s[i];
    }
    if (nonzero == 0) throw std::invalid_argument("Kac coordinates are all zero");
    KacFixed out;
    out.order = twist * weighted;
    const int r = static_cast<int>(kept.size());
    QMatrix sub(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) sub(i, j) = d.gram(kept[i], kept[j]);
    for (auto c : classify_gram(sub)) {
        for (auto& node : c.nodes) node = kept[node];
        Rational factor = 2 / c.max_norm;
        if (twist == 3) {
            // Fixed points of the D4 triality twist: {1,2} is G2 containing D4 long roots;
            // {0,1} is A2 built from orbit sums whose roots have ambient norm 2/3.
            if (c.nodes == std::vector<int>{1, 2}) factor = 1;
            else if (c.nodes == std::vector<int>{0, 1}) factor = 3;
            else factor = 0;
        }
        out.type.ideals.push_back({c.type, Rational(0)});
        out.level_factor.push_back(factor);
        out.components.push_back(c);
    }
    out.type.abelian_rank = nonzero - 1;
    return out;
}

}  // namespace holo24
