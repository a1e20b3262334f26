#include "holo24/latticevoa.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

namespace holo24 {

namespace {

using cd = std::complex<double>;
using CVec = std::vector<cd>;

std::vector<std::vector<double>> to_double(const QMatrix& m) {
    std::vector<std::vector<double>> out(m.rows(), std::vector<double>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_d();
    return out;
}

CVec mat_vec(const std::vector<std::vector<double>>& m, const CVec& v) {
    CVec out(m.size(), 0.0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0.0) out[i] += m[i][j] * v[j];
    return out;
}

double cdist(const CVec& a, const CVec& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

// Killing form tr(ad x_i ad x_j) from sparse structure constants.
QMatrix killing_form(const StructureConstants& sc) {
    const std::size_t n = sc.dim;
    // ad_i(k, l) = coefficient of x_k in [x_i, x_l]
    std::vector<std::map<std::pair<std::size_t, std::size_t>, Rational>> ad(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l)
            for (const auto& [k, c] : sc.c[i][l]) ad[i][{k, l}] += c;
    QMatrix kf(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rational s = 0;
            for (const auto& [kl, a] : ad[i]) {
                auto it = ad[j].find({kl.second, kl.first});
                if (it != ad[j].end()) s += a * it->second;
            }
            kf(i, j) = kf(j, i) = s;
        }
    return kf;
}

Rational round_rational(double x, long max_den) {
    for (long d = 1; d <= max_den; ++d) {
        double nu = std::round(x * d);
        if (std::abs(x * d - nu) < 1e-6 * d) return rat(static_cast<long>(nu), d);
    }
    throw RoundingUnverified("value " + std::to_string(x) + " is not a small rational");
}

}  // namespace

Identification identify_type(const StructureConstants& sc, std::uint64_t seed) {
    const std::size_t n = sc.dim;
    Identification out;
    if (n == 0) return out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> small(-5, 5), wide(-60, 60);

    auto gram_of = [&](const std::vector<Vec<Rational>>& c) {
        QMatrix g(c.size(), c.size());
        for (std::size_t a = 0; a < c.size(); ++a) {
            auto fb = sc.form * c[a];
            for (std::size_t b = 0; b < c.size(); ++b) {
                Rational s = 0;
                for (std::size_t i = 0; i < n; ++i) s += c[b][i] * fb[i];
                g(a, b) = s;
            }
        }
        return g;
    };

    // Cartan subalgebra: centralizer of a random element, smallest of a few tries.
    // A degenerate form on the centralizer means the element was not semisimple.
    std::vector<Vec<Rational>> cartan;
    QMatrix gc;
    for (int attempt = 0; attempt < 12 && (attempt < 6 || cartan.empty()); ++attempt) {
        std::vector<Rational> x(n);
        for (auto& v : x) v = small(rng);
        auto c = kernel(sc.ad(x));
        if (!cartan.empty() && c.size() >= cartan.size()) continue;
        bool abelian = true;
        for (std::size_t a = 0; a < c.size() && abelian; ++a)
            for (std::size_t b = a + 1; b < c.size() && abelian; ++b) {
                auto br = sc.bracket(c[a], c[b]);
                abelian = std::all_of(br.begin(), br.end(), [](const Rational& v) { return sgn(v) == 0; });
            }
        if (!abelian) continue;
        QMatrix g = gram_of(c);
        if (rank(g) != c.size()) continue;
        cartan = c;
        gc = g;
    }
    if (cartan.empty()) throw RoundingUnverified("no toral centralizer found");
    const std::size_t rk = cartan.size();
    out.cartan_dim = rk;

    auto gc_inv = to_double(inverse(gc));
    std::vector<std::vector<std::vector<double>>> ad_c(rk);
    for (std::size_t a = 0; a < rk; ++a) ad_c[a] = to_double(sc.ad(cartan[a]));

    // Root functionals from eigenvectors of ad(h) for a generic h in the Cartan.
    std::vector<CVec> roots;
    for (int attempt = 0; attempt < 5 && roots.empty(); ++attempt) {
        std::vector<Rational> h(n, Rational(0));
        for (std::size_t a = 0; a < rk; ++a) {
            long w = wide(rng);
            for (std::size_t i = 0; i < n; ++i) h[i] += w * cartan[a][i];
        }
        FloatEigen fe = float_eigen(sc.ad(h));
        std::vector<CVec> found;
        bool good = true;
        for (std::size_t e = 0; e < fe.values.size() && good; ++e) {
            if (std::abs(fe.values[e]) < 1e-7) continue;
            const CVec& v = fe.vectors[e];
            CVec beta(rk);
            for (std::size_t a = 0; a < rk; ++a) {
                CVec w = mat_vec(ad_c[a], v);
                cd num = 0, den = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    num += std::conj(v[i]) * w[i];
                    den += std::conj(v[i]) * v[i];
                }
                beta[a] = num / den;
                CVec bv(n);
                for (std::size_t i = 0; i < n; ++i) bv[i] = beta[a] * v[i];
                if (cdist(w, bv) > 1e-6) good = false;  // eigenvalue collision
            }
            found.push_back(beta);
        }
        if (good && found.size() == n - rk) roots = found;
    }
    if (roots.empty() && n > rk) throw RoundingUnverified("root decomposition failed");

    auto ip = [&](const CVec& x, const CVec& y) {
        cd s = 0;
        for (std::size_t a = 0; a < rk; ++a)
            for (std::size_t b = 0; b < rk; ++b) s += x[a] * gc_inv[a][b] * y[b];
        return s;
    };
    // Positive system from a generic real functional.
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    CVec ell(rk);
    for (auto& x : ell) x = cd(unif(rng), unif(rng));
    auto height = [&](const CVec& b) {
        cd s = 0;
        for (std::size_t a = 0; a < rk; ++a) s += ell[a] * b[a];
        return s.real();
    };
    std::vector<CVec> pos;
    for (const auto& b : roots) {
        double h = height(b);
        if (std::abs(h) < 1e-9) throw RoundingUnverified("degenerate positivity functional");
        if (h > 0) pos.push_back(b);
    }
    std::sort(pos.begin(), pos.end(), [&](const CVec& x, const CVec& y) { return height(x) < height(y); });
    std::vector<CVec> simple;
    for (std::size_t k = 0; k < pos.size(); ++k) {
        bool decomposable = false;
        for (std::size_t i = 0; i < k && !decomposable; ++i)
            for (std::size_t j = i; j < k && !decomposable; ++j) {
                CVec s(rk);
                for (std::size_t a = 0; a < rk; ++a) s[a] = pos[i][a] + pos[j][a];
                decomposable = cdist(s, pos[k]) < 1e-6;
            }
        if (!decomposable) simple.push_back(pos[k]);
    }
    const std::size_t ns = simple.size();
    std::vector<IntVec> cartan_int(ns, IntVec(ns));
    std::vector<double> norms(ns);
    for (std::size_t i = 0; i < ns; ++i) norms[i] = ip(simple[i], simple[i]).real();
    for (std::size_t i = 0; i < ns; ++i)
        for (std::size_t j = 0; j < ns; ++j) {
            cd a = 2.0 * ip(simple[i], simple[j]) / norms[j];
            double r = std::round(a.real());
            if (std::abs(a - cd(r, 0)) > 1e-6) throw RoundingUnverified("Cartan integer does not round cleanly");
            cartan_int[i][j] = static_cast<long>(r);
        }

    SemisimpleTypeWithLevels type;
    type.abelian_rank = static_cast<int>(rk - ns);
    if (ns > 0) {
        for (const auto& comp : classify_gram(gram_from_cartan(cartan_int))) {
            double mx = 0;
            for (int v : comp.nodes) mx = std::max(mx, norms[static_cast<std::size_t>(v)]);
            type.ideals.push_back({comp.type, round_rational(2.0 / mx, 12)});
        }
    }
    type.normalize();
    out.type = type;

    // Exact certificate: on an ideal of type X at level k the Killing form is
    // (2 h/k) times the invariant form, and it vanishes on the centre.
    QMatrix kf = killing_form(sc);
    std::map<Rational, long> expected;
    long total = type.abelian_rank;
    for (const auto& id : type.ideals) {
        Rational c = Rational(2 * dual_coxeter(id.type)) / id.level;
        expected[c] += lie_dimension(id.type);
        total += lie_dimension(id.type);
    }
    bool ok = total == static_cast<long>(n);
    ok = ok && static_cast<long>(n - rank(kf)) == type.abelian_rank;
    for (const auto& [c, d] : expected) {
        if (!ok) break;
        QMatrix m = kf;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) -= c * sc.form(i, j);
        ok = static_cast<long>(n - rank(m)) == d;
    }
    out.exact_check = ok;
    if (!ok) out.note = "Killing-form certificate failed";
    return out;
}

}  // namespace holo24
