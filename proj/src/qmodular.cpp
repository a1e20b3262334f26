#include "holo24/qmodular.hpp"

#include <mutex>
#include <optional>
#include <vector>

namespace holo24 {

namespace {

using Poly = std::vector<Integer>;  // coefficients of x^0 .. x^(N-1)

Poly mul_trunc(const Poly& a, const Poly& b, std::size_t n) {
    Poly out(n, 0);
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// prod_{n>=1} (1 - x^n) modulo x^N.
Poly euler_poly(std::size_t n) {
    Poly e(n, 0);
    if (n == 0) return e;
    e[0] = 1;
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = n - 1; i >= k; --i) {
            e[i] -= e[i - k];
            if (i == k) break;
        }
    return e;
}

// Inverse of a unit power series modulo x^N.
Poly inverse_unit(const Poly& a, std::size_t n) {
    Poly b(n, 0);
    b[0] = 1;  // a[0] = 1 for every Euler product power
    for (std::size_t k = 1; k < n; ++k) {
        Integer acc = 0;
        for (std::size_t j = 1; j <= k && j < a.size(); ++j) acc -= a[j] * b[k - j];
        b[k] = acc;
    }
    return b;
}

Poly power_trunc(Poly base, long m, std::size_t n) {
    if (m < 0) {
        base = inverse_unit(base, n);
        m = -m;
    }
    Poly result(n, 0);
    if (n) result[0] = 1;
    while (m > 0) {
        if (m & 1) result = mul_trunc(result, base, n);
        m >>= 1;
        if (m) base = mul_trunc(base, base, n);
    }
    return result;
}

// prod (1 - q^(s n))^m to absolute precision prec in q.
QSeries euler_product(const Rational& s, long m, const Rational& prec) {
    if (sgn(s) <= 0) throw std::invalid_argument("eta scale must be positive");
    std::size_t n = 0;
    if (sgn(prec) > 0) n = static_cast<std::size_t>(ceil_of(prec / s).get_si());
    Poly p = power_trunc(euler_poly(n), m, n);
    const long d = s.get_den().get_si(), step = s.get_num().get_si();
    QSeries out(d, prec);
    for (std::size_t i = 0; i < n; ++i) out.set(static_cast<long>(i) * step, Rational(p[i]));
    return out;
}

Rational pow3(long e) {
    Rational r = 1;
    for (long i = 0; i < std::abs(e); ++i) r *= 3;
    return e < 0 ? Rational(1) / r : r;
}

template <class C>
Puiseux<C> twist_generic(const Puiseux<C>& s, int i, const std::function<C(const C&, const Cyclo3&)>& mul) {
    Puiseux<C> out(s.denom(), s.precision());
    for (const auto& [n, c] : s.terms()) {
        Rational thirds = s.exponent(n) * 3;
        if (!is_integer(thirds)) throw std::invalid_argument("T-twist needs exponents in (1/3)Z");
        long k = thirds.get_num().get_si() * i;
        out.set(n, mul(c, Cyclo3::omega_pow(k)));
    }
    return out;
}

}  // namespace

QSeries eta_expansion(const Rational& s, long m, const Rational& trunc) {
    if (sgn(trunc) <= 0) throw std::invalid_argument("truncation must be positive");
    Rational lead = s * m / 24;
    return euler_product(s, m, trunc - lead).shifted(lead);
}

QSeries hauptmodul_f(const Rational& trunc) {
    if (sgn(trunc) <= 0) throw std::invalid_argument("truncation must be positive");
    Rational p = trunc + 1;
    return (euler_product(1, 12, p) * euler_product(3, -12, p)).shifted(-1);
}

QSeries f_power_at_S(long n, const Rational& trunc) {
    if (sgn(trunc) <= 0) throw std::invalid_argument("truncation must be positive");
    Rational lead = rat(n, 3);
    Rational p = trunc - lead;
    QSeries unit = euler_product(1, 12 * n, p) * euler_product(rat(1, 3), -12 * n, p);
    return unit.shifted(lead).scaled(pow3(6 * n));
}

Puiseux<Cyclo3> t_twist(const QSeries& s, int i) {
    Puiseux<Cyclo3> lifted(s.denom(), s.precision());
    for (const auto& [n, c] : s.terms()) lifted.set(n, Cyclo3(c));
    return twist_generic<Cyclo3>(lifted, i, [](const Cyclo3& c, const Cyclo3& w) { return c * w; });
}

Puiseux<Symbolic> t_twist(const Puiseux<Symbolic>& s, int i) {
    return twist_generic<Symbolic>(s, i, [](const Symbolic& c, const Cyclo3& w) { return Symbolic(w) * c; });
}

namespace {

// Unknown order (c1, c0, c-1, c-2, c-3); equations pin the q^-1 and constant
// terms of Z(tau) and the polar terms of Z(S tau).
struct FitSystem {
    QMatrix a;
    std::vector<QSeries> f_tau, f_s;  // f^k(tau), f^k(S tau) for k = 1, 0, -1, -2, -3
};

const std::vector<long> kPowers = {1, 0, -1, -2, -3};

FitSystem fit_system(const Rational& trunc) {
    FitSystem fs;
    QSeries f = hauptmodul_f(trunc + 4);
    for (long k : kPowers) {
        fs.f_tau.push_back(f.pow(k).truncated(trunc));
        fs.f_s.push_back(f_power_at_S(k, trunc));
    }
    const std::vector<Rational> rows_tau = {-1, 0};
    const std::vector<Rational> rows_s = {-1, rat(-2, 3), rat(-1, 3)};
    fs.a = QMatrix(5, 5);
    for (std::size_t j = 0; j < kPowers.size(); ++j) {
        fs.a(0, j) = fs.f_tau[j].coeff(rows_tau[0]);
        fs.a(1, j) = fs.f_tau[j].coeff(rows_tau[1]);
        for (std::size_t r = 0; r < rows_s.size(); ++r) fs.a(2 + r, j) = fs.f_s[j].coeff(rows_s[r]);
    }
    return fs;
}

const FitSystem& cached_fit_system(const Rational& trunc) {
    static std::mutex mu;
    static std::map<Rational, FitSystem> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(trunc);
    if (it == cache.end()) it = cache.emplace(trunc, fit_system(trunc)).first;
    return it->second;
}

}  // namespace

LaurentFit fit_character(const Rational& d0, const Rational& d13, const Rational& d23, const Rational& trunc) {
    const FitSystem& fs = cached_fit_system(trunc);
    Vec<Rational> rhs = {1, d0, rat(1, 3), d13 / 3, d23 / 3};
    auto sol = solve_linear(fs.a, rhs);
    if (!sol || !sol->kernel.empty()) throw std::logic_error("character fit is not uniquely solvable");
    const auto& x = sol->particular;
    return {x[0], x[1], x[2], x[3], x[4]};
}

std::array<Rational, 4> derive_dimension_formula(const Rational& trunc) {
    const FitSystem& fs = cached_fit_system(trunc);
    QMatrix ainv = inverse(fs.a);
    // Right-hand side as affine forms in (d0, d13, d23, 1).
    std::vector<Symbolic> rhs = {Symbolic(1), Symbolic::variable(0), Symbolic(Cyclo3(rat(1, 3))),
                                 Symbolic(Cyclo3(rat(1, 3))) * Symbolic::variable(1),
                                 Symbolic(Cyclo3(rat(1, 3))) * Symbolic::variable(2)};
    std::vector<Symbolic> c(5);
    for (std::size_t k = 0; k < 5; ++k)
        for (std::size_t j = 0; j < 5; ++j) c[k] += Symbolic(Cyclo3(ainv(k, j))) * rhs[j];

    auto lift = [](const QSeries& s) {
        Puiseux<Symbolic> out(s.denom(), s.precision());
        for (const auto& [n, v] : s.terms()) out.set(n, Symbolic(Cyclo3(v)));
        return out;
    };
    Puiseux<Symbolic> z_tau = Puiseux<Symbolic>::constant(Symbolic(0), trunc);
    Puiseux<Symbolic> z_s = Puiseux<Symbolic>::constant(Symbolic(0), trunc);
    for (std::size_t k = 0; k < 5; ++k) {
        z_tau = z_tau + lift(fs.f_tau[k]).scaled(c[k]);
        z_s = z_s + lift(fs.f_s[k]).scaled(c[k]);
    }
    Symbolic total = z_tau.coeff(0);
    for (int i = 0; i < 3; ++i) total += t_twist(z_s, i).coeff(0);
    std::array<Rational, 4> out;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!total.c[i].is_rational()) throw std::logic_error("constant term is not rational");
        out[i] = total.c[i].a;
    }
    return out;
}

long dim_tilde_v1(long dim_v1, long d0, long d13, long d23) {
    if (dim_v1 < 0 || d0 < 0 || d13 < 0 || d23 < 0) throw std::invalid_argument("dimensions must be non-negative");
    static const std::array<Rational, 4> f = derive_dimension_formula();
    Rational v = f[0] * d0 + f[1] * d13 + f[2] * d23 + f[3] - dim_v1;
    if (!is_integer(v) || sgn(v) < 0) throw std::domain_error("inconsistent inputs: orbifold dimension " + to_string(v));
    return v.get_num().get_si();
}

}  // namespace holo24
