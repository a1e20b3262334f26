#pragma once

#include "holo24/exactmath.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>

namespace holo24 {

// Affine form a0*d0 + a1*d13 + a2*d23 + a3 with scalars S. Products are
// allowed only when one factor is constant.
template <class S>
struct AffineForm {
    std::array<S, 4> c{S(0), S(0), S(0), S(0)};

    AffineForm() = default;
    AffineForm(long x) { c[3] = S(x); }
    AffineForm(const S& x) { c[3] = x; }
    static AffineForm variable(int i) {
        AffineForm f;
        f.c[static_cast<std::size_t>(i)] = S(1);
        return f;
    }
    bool is_constant() const { return is_zero(c[0]) && is_zero(c[1]) && is_zero(c[2]); }
    bool zero() const { return is_constant() && is_zero(c[3]); }

    AffineForm& operator+=(const AffineForm& o) {
        for (std::size_t i = 0; i < 4; ++i) c[i] += o.c[i];
        return *this;
    }
    AffineForm& operator-=(const AffineForm& o) {
        for (std::size_t i = 0; i < 4; ++i) c[i] -= o.c[i];
        return *this;
    }
    friend AffineForm operator+(AffineForm x, const AffineForm& y) { return x += y; }
    friend AffineForm operator-(AffineForm x, const AffineForm& y) { return x -= y; }
    friend AffineForm operator-(const AffineForm& x) { return AffineForm() - x; }
    friend AffineForm operator*(const AffineForm& x, const AffineForm& y) {
        if (!x.is_constant() && !y.is_constant()) throw std::domain_error("product of two non-constant affine forms");
        const AffineForm& k = x.is_constant() ? x : y;
        const AffineForm& v = x.is_constant() ? y : x;
        AffineForm out;
        for (std::size_t i = 0; i < 4; ++i) out.c[i] = k.c[3] * v.c[i];
        return out;
    }
    friend bool operator==(const AffineForm& x, const AffineForm& y) { return x.c == y.c; }
};

template <class S>
bool is_zero(const AffineForm<S>& f) { return f.zero(); }

using Symbolic = AffineForm<Cyclo3>;

// Truncated series sum_n a_n q^(n/denom); coefficients with exponent below
// `precision` are exact, the rest are unknown and never stored.
template <class C>
class Puiseux {
public:
    Puiseux() = default;
    Puiseux(long denom, const Rational& precision) : denom_(denom), precision_(precision) {
        if (denom < 1) throw std::invalid_argument("exponent denominator must be positive");
    }
    static Puiseux constant(const C& c, const Rational& precision) {
        Puiseux p(1, precision);
        p.set(0, c);
        return p;
    }

    long denom() const { return denom_; }
    const Rational& precision() const { return precision_; }
    const std::map<long, C>& terms() const { return terms_; }

    // Exponent as a rational number for the stored numerator n.
    Rational exponent(long n) const { return rat(n, denom_); }

    C coeff(const Rational& e) const {
        if (e >= precision_) throw std::out_of_range("coefficient beyond truncation");
        Rational scaled = e * denom_;
        if (!is_integer(scaled)) return C(0);
        auto it = terms_.find(scaled.get_num().get_si());
        return it == terms_.end() ? C(0) : it->second;
    }

    void set(long n, const C& c) {
        if (exponent(n) >= precision_) return;
        if (is_zero(c)) terms_.erase(n);
        else terms_[n] = c;
    }

    // Lowest exponent with a nonzero coefficient; precision if none.
    Rational valuation() const { return terms_.empty() ? precision_ : exponent(terms_.begin()->first); }

    Puiseux refined(long d) const {
        if (d % denom_ != 0) throw std::invalid_argument("refinement must be a multiple of the denominator");
        Puiseux out(d, precision_);
        for (const auto& [n, c] : terms_) out.terms_[n * (d / denom_)] = c;
        return out;
    }

    Puiseux truncated(const Rational& p) const {
        Puiseux out(denom_, std::min(p, precision_));
        for (const auto& [n, c] : terms_) out.set(n, c);
        return out;
    }

    // Multiply by q^e.
    Puiseux shifted(const Rational& e) const {
        long d = lcm_int(denom_, e.get_den()).get_si();
        Puiseux r = refined(d);
        Rational en = e * d;
        long k = en.get_num().get_si();
        Puiseux out(d, precision_ + e);
        for (const auto& [n, c] : r.terms_) out.terms_[n + k] = c;
        return out;
    }

    Puiseux scaled(const C& s) const {
        Puiseux out(denom_, precision_);
        for (const auto& [n, c] : terms_) out.set(n, s * c);
        return out;
    }

    friend Puiseux operator+(const Puiseux& x, const Puiseux& y) {
        long d = lcm_int(x.denom_, y.denom_).get_si();
        Puiseux a = x.refined(d), b = y.refined(d);
        Puiseux out(d, std::min(x.precision_, y.precision_));
        for (const auto& [n, c] : a.terms_) out.set(n, c);
        for (const auto& [n, c] : b.terms_) {
            auto it = out.terms_.find(n);
            out.set(n, it == out.terms_.end() ? c : it->second + c);
        }
        return out;
    }
    friend Puiseux operator-(const Puiseux& x) { return x.scaled(C(-1)); }
    friend Puiseux operator-(const Puiseux& x, const Puiseux& y) { return x + (-y); }

    friend Puiseux operator*(const Puiseux& x, const Puiseux& y) {
        long d = lcm_int(x.denom_, y.denom_).get_si();
        Puiseux a = x.refined(d), b = y.refined(d);
        Rational p = std::min(x.precision_ + y.valuation(), y.precision_ + x.valuation());
        Puiseux out(d, p);
        for (const auto& [i, ci] : a.terms_)
            for (const auto& [j, cj] : b.terms_) {
                if (out.exponent(i + j) >= p) break;
                auto it = out.terms_.find(i + j);
                C v = ci * cj;
                if (it == out.terms_.end()) out.terms_.emplace(i + j, v);
                else it->second = it->second + v;
            }
        for (auto it = out.terms_.begin(); it != out.terms_.end();)
            it = is_zero(it->second) ? out.terms_.erase(it) : std::next(it);
        return out;
    }

    // Multiplicative inverse; precision drops to precision - 2*valuation.
    Puiseux inverse() const {
        if (terms_.empty()) throw std::domain_error("series has no known nonzero term");
        const long v = terms_.begin()->first;
        const C lead_inv = inv(terms_.begin()->second);
        Rational vq = exponent(v);
        Rational p = precision_ - 2 * vq;
        Puiseux out(denom_, p);
        // Unit part u = 1 + ..., solve b_k = -sum_{j>=1} u_j b_{k-j}.
        std::map<long, C> b;
        for (long k = 0; exponent(k - v) < p; ++k) {
            C acc = k == 0 ? C(1) : C(0);
            for (long j = 1; j <= k; ++j) {
                auto it = terms_.find(v + j);
                auto bt = b.find(k - j);
                if (it != terms_.end() && bt != b.end()) acc = acc - it->second * lead_inv * bt->second;
            }
            if (!is_zero(acc)) b[k] = acc;
        }
        for (const auto& [k, c] : b) out.set(k - v, c * lead_inv);
        return out;
    }

    Puiseux pow(long n) const {
        if (n < 0) return inverse().pow(-n);
        if (n == 0) return constant(C(1), precision_ - valuation());
        Puiseux result;
        Puiseux base = *this;
        bool first = true;
        while (n > 0) {
            if (n & 1) {
                result = first ? base : result * base;
                first = false;
            }
            n >>= 1;
            if (n) base = base * base;
        }
        return result;
    }

    bool equal_up_to(const Puiseux& o, const Rational& p) const {
        long d = lcm_int(denom_, o.denom_).get_si();
        Puiseux a = refined(d).truncated(p), b = o.refined(d).truncated(p);
        return a.terms_ == b.terms_;
    }

private:
    long denom_ = 1;
    Rational precision_ = 0;
    std::map<long, C> terms_;
};

using QSeries = Puiseux<Rational>;

// eta(s tau)^m to absolute precision trunc in q.
QSeries eta_expansion(const Rational& s, long m, const Rational& trunc);
// f = eta(tau)^12 / eta(3 tau)^12.
QSeries hauptmodul_f(const Rational& trunc = 12);
// f^n(S tau) = (3^6 eta(tau)^12 / eta(tau/3)^12)^n.
QSeries f_power_at_S(long n, const Rational& trunc = 12);

struct LaurentFit {
    Rational c1, c0, cm1, cm2, cm3;
};

LaurentFit fit_character(const Rational& d0, const Rational& d13, const Rational& d23, const Rational& trunc = 12);

// Coefficients of (d0, d13, d23, 1) in dim V_1 + dim of the orbifold V_1.
std::array<Rational, 4> derive_dimension_formula(const Rational& trunc = 12);
long dim_tilde_v1(long dim_v1, long d0, long d13, long d23);

// Evaluate a rational series on q -> omega^i q over Q(omega).
Puiseux<Cyclo3> t_twist(const QSeries& s, int i);
Puiseux<Symbolic> t_twist(const Puiseux<Symbolic>& s, int i);

}  // namespace holo24
