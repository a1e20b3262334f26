#include "holo24/latticevoa.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>

namespace holo24 {

namespace {

using IRow = std::vector<Integer>;

// Unimodular row reduction to echelon form on the first `cols` columns.
void echelon_rows(std::vector<IRow>& m, std::size_t cols) {
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        for (;;) {
            std::size_t best = m.size();
            for (std::size_t r = row; r < m.size(); ++r)
                if (m[r][c] != 0 && (best == m.size() || abs(m[r][c]) < abs(m[best][c]))) best = r;
            if (best == m.size()) break;
            std::swap(m[row], m[best]);
            bool rest = false;
            for (std::size_t r = row + 1; r < m.size(); ++r) {
                if (m[r][c] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[row][c].get_mpz_t());
                for (std::size_t j = 0; j < m[r].size(); ++j) m[r][j] -= q * m[row][j];
                if (m[r][c] != 0) rest = true;
            }
            if (!rest) break;
        }
        if (row >= m.size() || m[row][c] == 0) continue;
        if (m[row][c] < 0)
            for (auto& x : m[row]) x = -x;
        for (std::size_t r = 0; r < row; ++r) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[row][c].get_mpz_t());
            if (q != 0)
                for (std::size_t j = 0; j < m[r].size(); ++j) m[r][j] -= q * m[row][j];
        }
        ++row;
    }
}

// Z-basis of {x in Z^n : A x = 0} for an integer matrix A.
std::vector<IntVec> integer_kernel(const QMatrix& a) {
    const std::size_t r = a.rows(), n = a.cols();
    std::vector<IRow> m(n, IRow(r + n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            if (!is_integer(a(j, i))) throw std::invalid_argument("integer_kernel: non-integral matrix");
            m[i][j] = a(j, i).get_num();
        }
        m[i][r + i] = 1;
    }
    echelon_rows(m, r);
    std::vector<IntVec> out;
    for (const auto& row : m) {
        bool zero = true;
        for (std::size_t j = 0; j < r; ++j) zero = zero && row[j] == 0;
        if (!zero) continue;
        IntVec v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = row[r + j].get_si();
        out.push_back(v);
    }
    return out;
}

std::vector<std::vector<long>> to_long(const QMatrix& m) {
    std::vector<std::vector<long>> out(m.rows(), std::vector<long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!is_integer(m(i, j))) throw std::domain_error("matrix is not integral");
            out[i][j] = m(i, j).get_num().get_si();
        }
    return out;
}

IntVec apply_long(const std::vector<std::vector<long>>& g, const IntVec& x) {
    IntVec y(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += g[i][j] * x[j];
    return y;
}

long mod2(long x) { return ((x % 2) + 2) % 2; }

// Cartan rows: Dynkin labels of the simple roots.
QMatrix cartan_q(const RootSystem& s) {
    QMatrix c(s.rank, s.rank);
    for (int i = 0; i < s.rank; ++i)
        for (int j = 0; j < s.rank; ++j) c(i, j) = s.cartan[i][j];
    return c;
}

struct ClassVector {
    std::vector<Rational> dynkin;
    Rational norm;
};

// Vectors of norm <= 2 in each class of Q*/Q for one component.
std::vector<std::vector<ClassVector>> short_class_vectors(SimpleType t) {
    const RootSystem& s = build_root_system(t);
    const int r = s.rank;
    QMatrix cinv = inverse(cartan_q(s));
    const int classes = discriminant_order(t);
    auto digit = [&](const std::vector<Rational>& w) {
        for (int d = 0; d < classes; ++d) {
            IntVec rep = glue_representative(t, d);
            bool in_q = true;
            for (int j = 0; j < r && in_q; ++j) {
                Rational x = 0;
                for (int i = 0; i < r; ++i) x += (w[i] - rep[i]) * cinv(i, j);
                in_q = is_integer(x);
            }
            if (in_q) return d;
        }
        throw std::logic_error("weight outside the weight lattice");
    };
    auto norm = [&](const std::vector<Rational>& w) {
        Rational n = 0;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) n += w[i] * w[j] * s.weight_gram(i, j);
        return n;
    };
    std::vector<long> bound(r);
    for (int i = 0; i < r; ++i) {
        long b = 0;
        while (Rational((b + 1) * (b + 1)) * s.weight_gram(i, i) <= 2) ++b;
        bound[i] = b;
    }
    std::vector<std::vector<ClassVector>> out(classes);
    std::set<std::vector<Rational>> seen;
    std::vector<Rational> mu(r, Rational(0));
    std::function<void(int)> rec = [&](int i) {
        if (i == r) {
            if (norm(mu) > 2) return;
            // Weyl orbit by simple reflections.
            std::vector<std::vector<Rational>> orbit{mu};
            std::set<std::vector<Rational>> in_orbit{mu};
            for (std::size_t k = 0; k < orbit.size(); ++k)
                for (int a = 0; a < r; ++a) {
                    std::vector<Rational> w = orbit[k];
                    Rational wa = w[a];
                    if (sgn(wa) == 0) continue;
                    for (int j = 0; j < r; ++j) w[j] -= wa * s.cartan[a][j];
                    if (in_orbit.insert(w).second) orbit.push_back(w);
                }
            Rational n = norm(mu);
            int d = digit(mu);
            for (auto& w : orbit) out[d].push_back({w, n});
            return;
        }
        for (long v = 0; v <= bound[i]; ++v) {
            mu[i] = v;
            rec(i + 1);
        }
        mu[i] = 0;
    };
    rec(0);
    return out;
}

}  // namespace

Rational EvenLattice::inner(const IntVec& x, const IntVec& y) const {
    Rational v = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            if (x[i] && y[j]) v += gram(i, j) * (x[i] * y[j]);
    return v;
}

void EvenLattice::index_roots() {
    std::sort(roots.begin(), roots.end());
    root_index.clear();
    for (std::size_t i = 0; i < roots.size(); ++i) root_index[roots[i]] = i;
}

EvenLattice root_lattice(SimpleType t) {
    const RootSystem& s = build_root_system(t);
    if (t.family != 'A' && t.family != 'D' && t.family != 'E')
        throw std::invalid_argument("root lattice of " + t.str() + " is not even with norm-2 roots");
    EvenLattice l;
    l.gram = s.gram;
    l.roots = s.roots;
    l.index_roots();
    return l;
}

// ---- glue codes -------------------------------------------------------------

int discriminant_order(SimpleType t) {
    if (t == SimpleType{'E', 6}) return 3;
    if (t == SimpleType{'D', 4}) return 4;
    throw std::invalid_argument("glue data only for E6 and D4, not " + t.str());
}

int digit_add(SimpleType t, int x, int y) {
    if (t == SimpleType{'E', 6}) return (x + y) % 3;
    if (t == SimpleType{'D', 4}) return x ^ y;
    throw std::invalid_argument("glue data only for E6 and D4, not " + t.str());
}

std::vector<std::vector<int>> discriminant_automorphisms(SimpleType t) {
    if (t == SimpleType{'E', 6}) return {{0, 1, 2}, {0, 2, 1}};
    if (t == SimpleType{'D', 4}) {
        std::vector<std::vector<int>> out;
        std::vector<int> p{1, 2, 3};
        do out.push_back({0, p[0], p[1], p[2]});
        while (std::next_permutation(p.begin(), p.end()));
        return out;
    }
    throw std::invalid_argument("glue data only for E6 and D4, not " + t.str());
}

IntVec glue_representative(SimpleType t, int digit) {
    const int r = t.rank;
    IntVec v(r, 0);
    if (digit == 0) return v;
    if (t == SimpleType{'E', 6}) {
        if (digit == 1) v[0] = 1;
        else if (digit == 2) v[5] = 1;
        else throw std::invalid_argument("E6 digit out of range");
        return v;
    }
    if (t == SimpleType{'D', 4}) {
        static const int node[] = {0, 0, 2, 3};
        if (digit < 1 || digit > 3) throw std::invalid_argument("D4 digit out of range");
        v[node[digit]] = 1;
        return v;
    }
    throw std::invalid_argument("glue data only for E6 and D4, not " + t.str());
}

std::vector<std::vector<int>> GlueCode::words() const {
    std::set<std::vector<int>> w{std::vector<int>(components.size(), 0)};
    std::vector<std::vector<int>> frontier(w.begin(), w.end());
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& x : frontier)
            for (const auto& g : generators) {
                std::vector<int> y(x.size());
                for (std::size_t i = 0; i < x.size(); ++i) y[i] = digit_add(components[i], x[i], g[i]);
                if (w.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {w.begin(), w.end()};
}

GlueCode glue_code_e6_4() {
    return {std::vector<SimpleType>(4, SimpleType{'E', 6}), {{1, 0, 1, 2}, {1, 1, 2, 0}, {1, 2, 0, 1}}};
}

GlueCode glue_code_d4_6() {
    return {std::vector<SimpleType>(6, SimpleType{'D', 4}),
            {{1, 1, 1, 1, 1, 1},
             {2, 2, 2, 2, 2, 2},
             {0, 0, 2, 3, 3, 2},
             {0, 2, 3, 3, 2, 0},
             {0, 3, 2, 0, 2, 3},
             {0, 2, 0, 2, 3, 3}}};
}

// ---- Niemeier lattice ---------------------------------------------------------

std::vector<Rational> NiemeierLattice::to_dynkin(const IntVec& x) const {
    std::vector<Rational> v(dim, Rational(0));
    for (int a = 0; a < dim; ++a)
        if (x[a])
            for (int k = 0; k < dim; ++k) v[k] += basis(a, k) * x[a];
    return v;
}

IntVec NiemeierLattice::from_dynkin(const std::vector<Rational>& v) const {
    IntVec x(dim);
    for (int j = 0; j < dim; ++j) {
        Rational s = 0;
        for (int i = 0; i < dim; ++i)
            if (sgn(v[i])) s += v[i] * basis_inv(i, j);
        if (!is_integer(s)) throw std::domain_error("vector is not in the lattice");
        x[j] = s.get_num().get_si();
    }
    return x;
}

int NiemeierLattice::digit_of(std::size_t component, const std::vector<Rational>& v) const {
    SimpleType t = code.components[component];
    const RootSystem& s = build_root_system(t);
    QMatrix cinv = inverse(cartan_q(s));
    const int o = offset[component];
    for (int d = 0; d < discriminant_order(t); ++d) {
        IntVec rep = glue_representative(t, d);
        bool in_q = true;
        for (int j = 0; j < s.rank && in_q; ++j) {
            Rational x = 0;
            for (int i = 0; i < s.rank; ++i) x += (v[o + i] - rep[i]) * cinv(i, j);
            in_q = is_integer(x);
        }
        if (in_q) return d;
    }
    throw std::domain_error("component is not in the weight lattice");
}

NiemeierLattice assemble_niemeier(const GlueCode& code) {
    NiemeierLattice n;
    n.code = code;
    int dim = 0;
    for (auto t : code.components) {
        n.offset.push_back(dim);
        dim += t.rank;
    }
    n.dim = dim;
    n.form = QMatrix(dim, dim);
    std::vector<IRow> gens;
    Integer root_det = 1;
    for (std::size_t c = 0; c < code.components.size(); ++c) {
        const RootSystem& s = build_root_system(code.components[c]);
        const int o = n.offset[c];
        for (int i = 0; i < s.rank; ++i) {
            for (int j = 0; j < s.rank; ++j) n.form(o + i, o + j) = s.weight_gram(i, j);
            IRow g(dim, 0);
            for (int j = 0; j < s.rank; ++j) g[o + j] = s.cartan[i][j];
            gens.push_back(g);
        }
        root_det *= determinant(cartan_q(s)).get_num();
    }
    for (const auto& w : code.generators) {
        if (w.size() != code.components.size()) throw std::invalid_argument("glue word has the wrong length");
        IRow g(dim, 0);
        for (std::size_t c = 0; c < w.size(); ++c) {
            IntVec rep = glue_representative(code.components[c], w[c]);
            for (std::size_t j = 0; j < rep.size(); ++j) g[n.offset[c] + j] = rep[j];
        }
        gens.push_back(g);
    }
    echelon_rows(gens, static_cast<std::size_t>(dim));
    n.basis = QMatrix(dim, dim);
    for (int a = 0; a < dim; ++a)
        for (int k = 0; k < dim; ++k) n.basis(a, k) = Rational(gens[a][k]);
    n.basis_inv = inverse(n.basis);
    Integer bdet = determinant(n.basis).get_num();
    n.glue_index = root_det / abs(bdet);
    n.lattice.gram = n.basis * n.form * n.basis.transpose();
    n.det = determinant(n.lattice.gram);
    n.even = true;
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            if (!is_integer(n.lattice.gram(a, b))) n.even = false;
    for (int a = 0; a < dim && n.even; ++a)
        if (n.lattice.gram(a, a).get_num() % 2 != 0) n.even = false;

    // Norm-2 vectors coset by coset.
    std::map<SimpleType, std::vector<std::vector<ClassVector>>> short_vecs;
    for (auto t : code.components)
        if (!short_vecs.count(t)) short_vecs[t] = short_class_vectors(t);
    const std::size_t k = code.components.size();
    std::set<IntVec> roots;
    for (const auto& w : code.words()) {
        std::vector<Rational> v(dim, Rational(0));
        std::function<void(std::size_t, Rational)> rec = [&](std::size_t c, Rational budget) {
            if (c == k) {
                if (sgn(budget) == 0) roots.insert(n.from_dynkin(v));
                return;
            }
            const auto& list = short_vecs[code.components[c]][w[c]];
            const int o = n.offset[c];
            for (const auto& cv : list) {
                if (cv.norm > budget) continue;
                for (std::size_t j = 0; j < cv.dynkin.size(); ++j) v[o + j] = cv.dynkin[j];
                rec(c + 1, budget - cv.norm);
            }
            for (int j = 0; j < code.components[c].rank; ++j) v[o + j] = 0;
        };
        rec(0, 2);
    }
    n.lattice.roots.assign(roots.begin(), roots.end());
    n.lattice.index_roots();
    return n;
}

const NiemeierLattice& niemeier(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, NiemeierLattice> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    GlueCode code;
    if (name == "e6_4") code = glue_code_e6_4();
    else if (name == "d4_6") code = glue_code_d4_6();
    else throw std::invalid_argument("unknown lattice '" + name + "'");
    return cache.emplace(name, assemble_niemeier(code)).first->second;
}

// ---- isometries ----------------------------------------------------------------

QMatrix simple_reflection(const RootSystem& s, int i) {
    QMatrix m = QMatrix::identity(s.rank);
    for (int k = 0; k < s.rank; ++k) m(k, i) -= s.cartan[i][k];
    return m;
}

QMatrix root_reflection(const RootSystem& s, const IntVec& root) {
    IntVec beta = s.root_to_dynkin(root);
    Rational nb = s.root_norm(root);
    QMatrix m = QMatrix::identity(s.rank);
    for (int k = 0; k < s.rank; ++k)
        for (int l = 0; l < s.rank; ++l) m(k, l) -= 2 * s.half_norm[l] * root[l] * beta[k] / nb;
    return m;
}

QMatrix diagram_automorphism(const std::vector<int>& perm) {
    QMatrix m(perm.size(), perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) m(perm[i], i) = 1;
    return m;
}

namespace {

bool satisfies_order3_cyclotomic(const QMatrix& g) {
    QMatrix id = QMatrix::identity(g.rows());
    QMatrix z = g * g + g + id;
    return z == QMatrix(g.rows(), g.rows());
}

}  // namespace

QMatrix e6_fixed_point_free() {
    const RootSystem& s = build_root_system(simple_type('E', 6));
    // Coxeter elements of the three A2 pieces {a1,a3}, {a5,a6}, {a2,-theta}.
    QMatrix g = simple_reflection(s, 0) * simple_reflection(s, 2) * simple_reflection(s, 4) *
                simple_reflection(s, 5) * simple_reflection(s, 1) * root_reflection(s, s.theta);
    if (!satisfies_order3_cyclotomic(g)) throw std::logic_error("E6 Coxeter product is not fixed-point free of order 3");
    return g;
}

QMatrix d4_fixed_point_free() {
    static const QMatrix cached = [] {
        const RootSystem& s = build_root_system(simple_type('D', 4));
        std::vector<QMatrix> gens;
        for (int i = 0; i < 4; ++i) gens.push_back(simple_reflection(s, i));
        std::vector<QMatrix> group{QMatrix::identity(4)};
        std::set<std::vector<Rational>> seen;
        auto key = [](const QMatrix& m) {
            std::vector<Rational> k;
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (auto& x : m.row(i)) k.push_back(x);
            return k;
        };
        seen.insert(key(group[0]));
        for (std::size_t i = 0; i < group.size(); ++i)
            for (const auto& g : gens) {
                QMatrix h = group[i] * g;
                if (seen.insert(key(h)).second) group.push_back(h);
            }
        if (group.size() != 192) throw std::logic_error("W(D4) enumeration failed");
        QMatrix tau = diagram_automorphism({2, 1, 3, 0});  // a1 -> a3 -> a4 -> a1
        for (const auto& w : group) {
            QMatrix g = tau * w;
            if (satisfies_order3_cyclotomic(g)) return g;
        }
        throw std::logic_error("no fixed-point-free outer isometry of order 3 in D4");
    }();
    return cached;
}

QMatrix d4_weyl_order3() {
    const RootSystem& s = build_root_system(simple_type('D', 4));
    return simple_reflection(s, 0) * simple_reflection(s, 1);
}

QMatrix lattice_matrix(const NiemeierLattice& n, const QMatrix& dynkin) {
    QMatrix g = n.basis_inv.transpose() * dynkin * n.basis.transpose();
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (!is_integer(g(i, j))) throw std::domain_error("map does not preserve the lattice");
    return g;
}

QMatrix lattice_reflection(const EvenLattice& l, const IntVec& root) {
    const int r = l.rank();
    QMatrix m = QMatrix::identity(r);
    std::vector<Rational> gb(r, Rational(0));
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) gb[a] += l.gram(a, b) * root[b];
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) m(a, b) -= Rational(root[a]) * gb[b];
    return m;
}

LatticeIsometry block_isometry(const NiemeierLattice& n, const std::vector<int>& src, const std::vector<QMatrix>& maps,
                               const std::string& description) {
    const std::size_t k = n.code.components.size();
    if (src.size() != k || maps.size() != k) throw std::invalid_argument("block isometry needs one map per component");
    LatticeIsometry g;
    g.description = description;
    g.dynkin = QMatrix(n.dim, n.dim);
    for (std::size_t j = 0; j < k; ++j) {
        std::size_t from = static_cast<std::size_t>(src[j]);
        if (n.code.components[from] != n.code.components[j]) throw std::invalid_argument("component types differ");
        const int r = n.code.components[j].rank;
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) g.dynkin(n.offset[j] + a, n.offset[from] + b) = maps[j](a, b);
    }
    g.matrix = lattice_matrix(n, g.dynkin);
    return g;
}

bool preserves_lattice(const NiemeierLattice& n, const LatticeIsometry& g) {
    for (std::size_t i = 0; i < g.matrix.rows(); ++i)
        for (std::size_t j = 0; j < g.matrix.cols(); ++j)
            if (!is_integer(g.matrix(i, j))) return false;
    if (g.dynkin.transpose() * n.form * g.dynkin != n.form) return false;
    return g.matrix.transpose() * n.lattice.gram * g.matrix == n.lattice.gram;
}

std::vector<Rational> glue_vector(const NiemeierLattice& n, const std::vector<int>& digits) {
    std::vector<Rational> v(n.dim, Rational(0));
    for (std::size_t c = 0; c < digits.size(); ++c) {
        IntVec rep = glue_representative(n.code.components[c], digits[c]);
        for (std::size_t j = 0; j < rep.size(); ++j) v[n.offset[c] + j] = rep[j];
    }
    return v;
}

bool preserves_code(const NiemeierLattice& n, const LatticeIsometry& g) {
    auto words = n.code.words();
    std::set<std::vector<int>> code(words.begin(), words.end());
    for (const auto& w : words) {
        std::vector<Rational> img = g.dynkin * glue_vector(n, w);
        std::vector<int> d(w.size());
        for (std::size_t c = 0; c < w.size(); ++c) d[c] = n.digit_of(c, img);
        if (!code.count(d)) return false;
    }
    return true;
}

int matrix_order(const QMatrix& m, int cap) {
    QMatrix id = QMatrix::identity(m.rows());
    QMatrix p = m;
    for (int k = 1; k <= cap; ++k) {
        if (p == id) return k;
        p = p * m;
    }
    throw std::domain_error("matrix order exceeds cap");
}

namespace {

QMatrix power(const QMatrix& m, int e) {
    QMatrix p = QMatrix::identity(m.rows());
    for (int i = 0; i < ((e % 3) + 3) % 3; ++i) p = p * m;
    return p;
}

}  // namespace

LatticeIsometry build_isometry(const std::string& name) {
    if (name == "sigma6") {
        const auto& n = niemeier("e6_4");
        QMatrix id = QMatrix::identity(6);
        return block_isometry(n, {0, 3, 1, 2}, {e6_fixed_point_free(), id, id, id}, "(phi g1, g4, g2, g3)");
    }
    if (name == "sigma2") {
        const auto& n = niemeier("d4_6");
        QMatrix phi = d4_fixed_point_free();
        return block_isometry(n, {0, 1, 2, 3, 4, 5}, std::vector<QMatrix>(6, phi), "(phi g1, ..., phi g6)");
    }
    if (name == "sigma4") {
        const auto& n = niemeier("d4_6");
        QMatrix phi = d4_fixed_point_free(), psi = d4_weyl_order3();
        // Shape (psi g1, phi^a g2, phi^b g3, phi^c g6, phi^d g4, phi^e g5) with the
        // 3-cycle closing up to the identity; the first exponent set is tried first.
        std::vector<std::array<int, 4>> order{{1, 2, 0, 2}};
        for (int a = 1; a < 3; ++a)
            for (int b = 1; b < 3; ++b)
                for (int c = 0; c < 3; ++c)
                    for (int d = 0; d < 3; ++d) order.push_back({a, b, c, d});
        for (const auto& [a, b, c, d] : order) {
            int e = ((-(c + d)) % 3 + 3) % 3;
            std::vector<QMatrix> maps{psi, power(phi, a), power(phi, b), power(phi, c), power(phi, d), power(phi, e)};
            auto label = [](int x) { return x == 0 ? std::string("") : x == 1 ? std::string("phi ") : std::string("phi^-1 "); };
            std::string desc = "(psi g1, " + label(a) + "g2, " + label(b) + "g3, " + label(c) + "g6, " + label(d) +
                               "g4, " + label(e) + "g5)";
            LatticeIsometry g;
            try {
                g = block_isometry(n, {0, 1, 2, 5, 3, 4}, maps, desc);
            } catch (const std::domain_error&) {
                continue;
            }
            if (preserves_code(n, g) && matrix_order(g.dynkin) == 3) return g;
        }
        throw std::logic_error("no order-3 isometry of the required shape preserves the glue code");
    }
    throw std::invalid_argument("unknown isometry '" + name + "'");
}

// ---- weight-one Lie algebra ------------------------------------------------------

LatticeLieAlgebra::LatticeLieAlgebra(const EvenLattice& l) : lat_(&l), gram_(to_long(l.gram)) {
    neg_.resize(l.roots.size());
    for (std::size_t i = 0; i < l.roots.size(); ++i) {
        IntVec m = l.roots[i];
        for (auto& x : m) x = -x;
        auto it = l.root_index.find(m);
        if (it == l.root_index.end()) throw std::logic_error("root set is not symmetric");
        neg_[i] = it->second;
    }
}

int LatticeLieAlgebra::epsilon(const IntVec& a, const IntVec& b) const {
    long s = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k])
            for (std::size_t j = 0; j < k; ++j)
                if (b[j]) s += a[k] * b[j] * gram_[k][j];
    return mod2(s) ? -1 : 1;
}

SparseVec LatticeLieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    const std::size_t r = rank();
    SparseVec out;
    auto pair_with = [&](std::size_t a, const IntVec& beta) {
        long v = 0;
        for (std::size_t b = 0; b < r; ++b) v += gram_[a][b] * beta[b];
        return v;
    };
    if (i < r && j < r) return out;
    if (i < r) {
        long v = pair_with(i, lat_->roots[j - r]);
        if (v) out[j] = v;
        return out;
    }
    if (j < r) {
        long v = pair_with(j, lat_->roots[i - r]);
        if (v) out[i] = -v;
        return out;
    }
    const IntVec& a = lat_->roots[i - r];
    const IntVec& b = lat_->roots[j - r];
    if (neg_[i - r] == j - r) {
        int e = epsilon(a, b);
        for (std::size_t k = 0; k < r; ++k)
            if (a[k]) out[k] = e * a[k];
        return out;
    }
    long ip = 0;
    for (std::size_t k = 0; k < r; ++k)
        if (a[k]) ip += a[k] * pair_with(k, b);
    if (ip != -1) return out;
    IntVec s(r);
    for (std::size_t k = 0; k < r; ++k) s[k] = a[k] + b[k];
    out[r + lat_->root_index.at(s)] = epsilon(a, b);
    return out;
}

SparseVec LatticeLieAlgebra::bracket(const SparseVec& x, const SparseVec& y) const {
    SparseVec out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y)
            for (const auto& [k, c] : bracket_basis(i, j)) out[k] += a * b * c;
    for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    return out;
}

Rational LatticeLieAlgebra::form_basis(std::size_t i, std::size_t j) const {
    const std::size_t r = rank();
    if (i < r && j < r) return gram_[i][j];
    if (i < r || j < r) return 0;
    if (neg_[i - r] != j - r) return 0;
    return epsilon(lat_->roots[i - r], lat_->roots[j - r]);
}

Rational LatticeLieAlgebra::form(const SparseVec& x, const SparseVec& y) const {
    Rational v = 0;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) v += a * b * form_basis(i, j);
    return v;
}

// ---- lifts -----------------------------------------------------------------------

SparseVec LiftedAutomorphism::apply(const SparseVec& x) const {
    const std::size_t r = cartan.rows();
    SparseVec out;
    for (const auto& [i, a] : x) {
        if (i < r) {
            for (std::size_t k = 0; k < r; ++k)
                if (sgn(cartan(k, i))) out[k] += a * cartan(k, i);
        } else {
            out[r + root_image[i - r]] += a * sign[i - r];
        }
    }
    for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    return out;
}

LiftedAutomorphism lift_isometry(const EvenLattice& l, const QMatrix& gq, bool standard) {
    const std::size_t r = static_cast<std::size_t>(l.rank());
    if (gq.transpose() * l.gram * gq != l.gram) throw std::invalid_argument("matrix is not an isometry");
    auto g = to_long(gq);
    auto gram = to_long(l.gram);
    auto e = [&](const IntVec& x, const IntVec& y) {
        long s = 0;
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t j = 0; j < k; ++j) s += x[k] * y[j] * gram[k][j];
        return mod2(s);
    };
    std::vector<IntVec> gb(r);
    for (std::size_t i = 0; i < r; ++i) {
        IntVec bi(r, 0);
        bi[i] = 1;
        gb[i] = apply_long(g, bi);
    }
    // b(x, y) = e(gx, gy) + e(x, y) on basis vectors.
    std::vector<std::vector<long>> bmat(r, std::vector<long>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            IntVec bi(r, 0), bj(r, 0);
            bi[i] = 1;
            bj[j] = 1;
            bmat[i][j] = mod2(e(gb[i], gb[j]) + e(bi, bj));
        }
    std::vector<long> q(r, 0);
    auto quad = [&](const IntVec& x) {
        long s = 0;
        for (std::size_t i = 0; i < r; ++i) {
            if (!x[i]) continue;
            s += mod2(x[i] * (x[i] - 1) / 2) * bmat[i][i] + x[i] * q[i];
            for (std::size_t j = i + 1; j < r; ++j) s += x[i] * x[j] * bmat[i][j];
        }
        return mod2(s);
    };
    LiftedAutomorphism out;
    out.cartan = gq;
    int order = 1;
    if (standard) {
        order = matrix_order(gq);
        // Phase 1 on the fixed sublattice: solve sum f_i q_i = Q0(f) over GF(2).
        auto fixed = integer_kernel(gq - QMatrix::identity(r));
        std::vector<std::vector<long>> rows;
        for (const auto& f : fixed) {
            std::vector<long> row(r + 1);
            for (std::size_t i = 0; i < r; ++i) row[i] = mod2(f[i]);
            row[r] = quad(f);
            rows.push_back(row);
        }
        std::size_t pr = 0;
        std::vector<std::size_t> piv;
        for (std::size_t c = 0; c < r && pr < rows.size(); ++c) {
            std::size_t p = pr;
            while (p < rows.size() && rows[p][c] == 0) ++p;
            if (p == rows.size()) continue;
            std::swap(rows[p], rows[pr]);
            for (std::size_t k = 0; k < rows.size(); ++k)
                if (k != pr && rows[k][c])
                    for (std::size_t j = 0; j <= r; ++j) rows[k][j] ^= rows[pr][j];
            piv.push_back(c);
            ++pr;
        }
        for (std::size_t k = pr; k < rows.size(); ++k)
            if (rows[k][r]) throw std::logic_error("no standard lift: fixed sublattice is not primitive");
        for (std::size_t k = 0; k < piv.size(); ++k) q[piv[k]] = rows[k][r];
        // An odd-order isometry lifts with the same order after a character correction.
        if (order % 2 == 1) {
            std::vector<long> psi(r, 0);
            for (std::size_t i = 0; i < r; ++i) {
                IntVec x(r, 0);
                x[i] = 1;
                long s = 0;
                for (int k = 0; k < order; ++k) {
                    s += quad(x);
                    x = apply_long(g, x);
                }
                psi[i] = mod2(s);
            }
            if (std::any_of(psi.begin(), psi.end(), [](long v) { return v != 0; })) {
                for (std::size_t i = 0; i < r; ++i) q[i] = mod2(q[i] + psi[i]);
                out.character_adjusted_for_order = true;
            }
        }
    }
    out.character.assign(q.begin(), q.end());
    out.root_image.resize(l.roots.size());
    out.sign.resize(l.roots.size());
    for (std::size_t k = 0; k < l.roots.size(); ++k) {
        IntVec img = apply_long(g, l.roots[k]);
        auto it = l.root_index.find(img);
        if (it == l.root_index.end()) throw std::logic_error("isometry does not permute roots");
        out.root_image[k] = it->second;
        out.sign[k] = quad(l.roots[k]) ? -1 : 1;
    }
    return out;
}

LiftedAutomorphism standard_lift(const NiemeierLattice& n, const LatticeIsometry& g) {
    return lift_isometry(n.lattice, g.matrix, true);
}

LiftedAutomorphism compose(const LiftedAutomorphism& a, const LiftedAutomorphism& b) {
    LiftedAutomorphism c;
    c.cartan = a.cartan * b.cartan;
    c.root_image.resize(b.root_image.size());
    c.sign.resize(b.sign.size());
    for (std::size_t k = 0; k < b.root_image.size(); ++k) {
        c.root_image[k] = a.root_image[b.root_image[k]];
        c.sign[k] = b.sign[k] * a.sign[b.root_image[k]];
    }
    return c;
}

LiftedAutomorphism inverse(const LiftedAutomorphism& a) {
    LiftedAutomorphism c;
    c.cartan = inverse(a.cartan);
    c.root_image.resize(a.root_image.size());
    c.sign.resize(a.sign.size());
    for (std::size_t k = 0; k < a.root_image.size(); ++k) {
        c.root_image[a.root_image[k]] = k;
        c.sign[a.root_image[k]] = a.sign[k];
    }
    return c;
}

int lift_order(const LiftedAutomorphism& a, int cap) {
    LiftedAutomorphism p = a;
    QMatrix id = QMatrix::identity(a.cartan.rows());
    for (int k = 1; k <= cap; ++k) {
        bool ident = p.cartan == id;
        for (std::size_t i = 0; ident && i < p.root_image.size(); ++i) ident = p.root_image[i] == i && p.sign[i] == 1;
        if (ident) return k;
        p = compose(a, p);
    }
    throw std::domain_error("lift order exceeds cap");
}

bool preserves_brackets(const LatticeLieAlgebra& g, const LiftedAutomorphism& a) {
    const std::size_t n = g.dim();
    std::vector<SparseVec> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = a.apply({{i, Rational(1)}});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a.apply(g.bracket_basis(i, j)) != g.bracket(img[i], img[j])) return false;
    return true;
}

bool preserves_form(const LatticeLieAlgebra& g, const LiftedAutomorphism& a) {
    const std::size_t n = g.dim();
    std::vector<SparseVec> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = a.apply({{i, Rational(1)}});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (g.form(img[i], img[j]) != g.form_basis(i, j)) return false;
    return true;
}

// ---- structure constants and fixed points ------------------------------------------

std::vector<Rational> StructureConstants::bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
    std::vector<Rational> out(dim, Rational(0));
    for (std::size_t i = 0; i < dim; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (sgn(y[j]) == 0) continue;
            Rational s = x[i] * y[j];
            for (const auto& [k, c] : this->c[i][j]) out[k] += s * c;
        }
    }
    return out;
}

QMatrix StructureConstants::ad(const std::vector<Rational>& x) const {
    QMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < dim; ++j)
            for (const auto& [k, c] : this->c[i][j]) m(k, j) += x[i] * c;
    }
    return m;
}

FixedSubalgebra fixed_subalgebra(const LatticeLieAlgebra& g, const LiftedAutomorphism& a) {
    const std::size_t r = g.rank();
    FixedSubalgebra out;
    std::vector<std::size_t> pivot;
    auto ker = kernel(a.cartan - QMatrix::identity(r));
    out.cartan_fixed_rank = ker.size();
    {
        // Free columns of the echelon form carry a 1 in exactly one kernel vector.
        std::vector<bool> used(r, false);
        for (const auto& v : ker) {
            SparseVec s;
            std::size_t p = r;
            for (std::size_t i = 0; i < r; ++i)
                if (sgn(v[i])) {
                    s[i] = v[i];
                    if (p == r && v[i] == 1 && !used[i]) {
                        bool unique = true;
                        for (const auto& w : ker)
                            if (&w != &v && sgn(w[i])) unique = false;
                        if (unique) p = i;
                    }
                }
            if (p == r) throw std::logic_error("kernel basis lacks a pivot");
            used[p] = true;
            out.basis.push_back(s);
            pivot.push_back(p);
        }
    }
    const std::size_t nr = a.root_image.size();
    std::vector<bool> seen(nr, false);
    for (std::size_t k = 0; k < nr; ++k) {
        if (seen[k]) continue;
        std::vector<std::size_t> orbit{k};
        seen[k] = true;
        for (std::size_t x = a.root_image[k]; x != k; x = a.root_image[x]) {
            orbit.push_back(x);
            seen[x] = true;
        }
        SparseVec v;
        int c = 1;
        for (auto x : orbit) {
            v[r + x] = c;
            c *= a.sign[x];
        }
        if (c != 1) continue;  // the orbit carries a nontrivial phase
        out.basis.push_back(v);
        pivot.push_back(r + k);
    }
    const std::size_t n = out.basis.size();
    StructureConstants& sc = out.algebra;
    sc.dim = n;
    sc.c.assign(n, std::vector<std::vector<StructureConstants::Entry>>(n));
    sc.form = QMatrix(n, n);
    auto coords = [&](const SparseVec& w) {
        std::vector<StructureConstants::Entry> e;
        SparseVec check;
        for (std::size_t b = 0; b < n; ++b) {
            auto it = w.find(pivot[b]);
            if (it == w.end()) continue;
            e.emplace_back(b, it->second);
            for (const auto& [i, x] : out.basis[b]) check[i] += it->second * x;
        }
        for (auto it = check.begin(); it != check.end();) it = sgn(it->second) == 0 ? check.erase(it) : std::next(it);
        if (check != w) throw std::logic_error("bracket leaves the fixed subalgebra");
        return e;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            sc.form(i, j) = sc.form(j, i) = g.form(out.basis[i], out.basis[j]);
            if (i == j) continue;
            auto e = coords(g.bracket(out.basis[i], out.basis[j]));
            sc.c[i][j] = e;
            for (auto& [b, x] : e) x = -x;
            sc.c[j][i] = e;
        }
    return out;
}

// ---- twisted sector and projections ------------------------------------------------------

namespace {

using IPoly = std::vector<Integer>;  // low degree first

IPoly cyclotomic(int d) {
    IPoly num(static_cast<std::size_t>(d + 1), 0);
    num[0] = -1;
    num[static_cast<std::size_t>(d)] = 1;
    for (int e = 1; e < d; ++e) {
        if (d % e) continue;
        IPoly den = cyclotomic(e);
        // Exact division by a monic polynomial.
        IPoly q(num.size() - den.size() + 1, 0);
        for (std::size_t k = q.size(); k-- > 0;) {
            q[k] = num[k + den.size() - 1];
            for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= q[k] * den[j];
        }
        num = q;
    }
    return num;
}

QMatrix eval_poly(const IPoly& p, const QMatrix& m) {
    QMatrix acc(m.rows(), m.cols());
    for (std::size_t k = p.size(); k-- > 0;) {
        acc = acc * m;
        for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += Rational(p[k]);
    }
    return acc;
}

int euler_phi(int d) {
    int c = 0;
    for (int k = 1; k <= d; ++k)
        if (std::gcd(k, d) == 1) ++c;
    return c;
}

}  // namespace

Rational twisted_ground_energy(const QMatrix& g) {
    const int n = matrix_order(g);
    const std::size_t dim = g.rows();
    std::map<int, Rational> mult;  // per primitive d-th root
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        std::size_t k = dim - rank(eval_poly(cyclotomic(d), g));
        mult[d] = rat(static_cast<long>(k), euler_phi(d));
    }
    Rational rho = 0;
    for (int j = 1; j < n; ++j) {
        int d = n / std::gcd(j, n);
        Rational x = rat(j, n);
        rho += x * (1 - x) * mult[d];
    }
    return rho / 4;
}

std::vector<Rational> fixed_projection(const QMatrix& g, const std::vector<Rational>& u) {
    const int n = matrix_order(g);
    std::vector<Rational> acc(u.size(), Rational(0)), v = u;
    for (int k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < u.size(); ++i) acc[i] += v[i];
        v = g * v;
    }
    for (auto& x : acc) x /= n;
    return acc;
}

Rational fixed_projection_norm(const NiemeierLattice& n, const LatticeIsometry& g, const std::vector<Rational>& u) {
    auto p = fixed_projection(g.dynkin, u);
    auto fp = n.form * p;
    Rational s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += p[i] * fp[i];
    return s;
}

// ---- sublattice and code counts --------------------------------------------------------

std::size_t count_pattern_sublattices(SimpleType ambient, const std::vector<SimpleType>& pattern) {
    const RootSystem& s = build_root_system(ambient);
    const std::size_t nr = s.roots.size();
    std::vector<std::vector<Rational>> ip(nr, std::vector<Rational>(nr));
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nr; ++j) ip[i][j] = s.root_inner(s.roots[i], s.roots[j]);

    struct Sub {
        std::vector<std::size_t> simple;
        std::vector<std::size_t> roots;  // sorted closure
    };
    auto closure = [&](const std::vector<std::size_t>& simple) {
        std::set<std::size_t> out(simple.begin(), simple.end());
        std::vector<std::size_t> work(simple.begin(), simple.end());
        for (std::size_t k = 0; k < work.size(); ++k)
            for (auto a : simple) {
                // s_a(x) = x - 2(x|a)/(a|a) a
                Rational c = 2 * ip[work[k]][a] / ip[a][a];
                if (sgn(c) == 0) continue;
                IntVec y = s.roots[work[k]];
                for (std::size_t t = 0; t < y.size(); ++t) y[t] -= c.get_num().get_si() * s.roots[a][t];
                std::size_t idx = s.root_index.at(y);
                if (out.insert(idx).second) work.push_back(idx);
            }
        return std::vector<std::size_t>(out.begin(), out.end());
    };
    std::map<SimpleType, std::vector<Sub>> subs;
    for (auto t : pattern) {
        if (subs.count(t)) continue;
        const RootSystem& p = build_root_system(t);
        std::set<std::vector<std::size_t>> seen;
        std::vector<Sub>& list = subs[t];
        std::vector<std::size_t> pick;
        std::function<void()> rec = [&]() {
            const std::size_t m = pick.size();
            if (m == static_cast<std::size_t>(p.rank)) {
                auto c = closure(pick);
                if (seen.insert(c).second) list.push_back({pick, c});
                return;
            }
            for (std::size_t x = 0; x < nr; ++x) {
                bool ok = ip[x][x] == p.gram(m, m);
                for (std::size_t k = 0; ok && k < m; ++k) ok = ip[pick[k]][x] == p.gram(k, m);
                if (!ok) continue;
                pick.push_back(x);
                rec();
                pick.pop_back();
            }
        };
        rec();
    }
    std::vector<SimpleType> order = pattern;
    std::sort(order.begin(), order.end());
    std::set<std::vector<std::size_t>> found;
    std::vector<const Sub*> chosen;
    std::vector<std::size_t> chosen_idx;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == order.size()) {
            std::vector<std::size_t> u;
            for (auto* c : chosen) u.insert(u.end(), c->roots.begin(), c->roots.end());
            std::sort(u.begin(), u.end());
            found.insert(u);
            return;
        }
        const auto& list = subs[order[k]];
        std::size_t start = (k > 0 && order[k] == order[k - 1]) ? chosen_idx.back() + 1 : 0;
        for (std::size_t i = start; i < list.size(); ++i) {
            bool orth = true;
            for (auto* c : chosen)
                for (auto a : c->simple)
                    for (auto b : list[i].simple) orth = orth && sgn(ip[a][b]) == 0;
            if (!orth) continue;
            chosen.push_back(&list[i]);
            chosen_idx.push_back(i);
            rec(k + 1);
            chosen.pop_back();
            chosen_idx.pop_back();
        }
    };
    rec(0);
    return found.size();
}

std::size_t glue_automorphism_group_order(const GlueCode& code) {
    const std::size_t k = code.components.size();
    auto words = code.words();
    std::vector<std::set<std::vector<int>>> prefixes(k + 1);
    for (const auto& w : words)
        for (std::size_t m = 0; m <= k; ++m) prefixes[m].insert(std::vector<int>(w.begin(), w.begin() + m));
    std::vector<std::vector<std::vector<int>>> autos(k);
    for (std::size_t c = 0; c < k; ++c) autos[c] = discriminant_automorphisms(code.components[c]);
    std::vector<int> src(k, -1);
    std::vector<const std::vector<int>*> act(k, nullptr);
    std::vector<bool> used(k, false);
    std::size_t count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == k) {
            ++count;
            return;
        }
        for (std::size_t from = 0; from < k; ++from) {
            if (used[from] || code.components[from] != code.components[j]) continue;
            for (const auto& a : autos[j]) {
                src[j] = static_cast<int>(from);
                act[j] = &a;
                bool ok = true;
                for (const auto& w : words) {
                    std::vector<int> img(j + 1);
                    for (std::size_t t = 0; t <= j; ++t) img[t] = (*act[t])[w[src[t]]];
                    if (!prefixes[j + 1].count(img)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                used[from] = true;
                rec(j + 1);
                used[from] = false;
            }
        }
    };
    rec(0);
    return count;
}

}  // namespace holo24
