#include "holo24/exactmath.hpp"

#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wmaybe-uninitialized"
#include <Eigen/Eigenvalues>
#pragma GCC diagnostic pop

#include <algorithm>
#include <cmath>

namespace holo24 {

Rational rat(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer floor_of(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Integer ceil_of(const Rational& x) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Rational frac_part(const Rational& x) { return x - Rational(floor_of(x)); }

Integer lcm_int(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Cyclo3 Cyclo3::omega_pow(long k) {
    switch (((k % 3) + 3) % 3) {
        case 0: return Cyclo3(1);
        case 1: return Cyclo3(0, 1);
        default: return Cyclo3(-1, -1);
    }
}

Cyclo3 Cyclo3::inverse() const {
    Rational n = norm();
    if (sgn(n) == 0) throw std::domain_error("Cyclo3: inverse of zero");
    Cyclo3 c = conj();
    return Cyclo3(c.a / n, c.b / n);
}

std::complex<double> Cyclo3::to_complex() const {
    const std::complex<double> w(-0.5, std::sqrt(3.0) / 2.0);
    return a.get_d() + b.get_d() * w;
}

std::string Cyclo3::str() const {
    if (sgn(b) == 0) return to_string(a);
    std::string s = sgn(a) == 0 ? "" : to_string(a) + (sgn(b) > 0 ? "+" : "");
    return s + to_string(b) + "w";
}

Cyclo3& Cyclo3::operator+=(const Cyclo3& o) {
    a += o.a;
    b += o.b;
    return *this;
}

Cyclo3& Cyclo3::operator-=(const Cyclo3& o) {
    a -= o.a;
    b -= o.b;
    return *this;
}

Cyclo3& Cyclo3::operator*=(const Cyclo3& o) {
    if (sgn(b) == 0 && sgn(o.b) == 0) {
        a *= o.a;
        return *this;
    }
    // (a + b w)(c + d w) = (ac - bd) + (ad + bc - bd) w
    Rational bd = b * o.b;
    Rational na = a * o.a - bd;
    Rational nb = a * o.b + b * o.a - bd;
    a = std::move(na);
    b = std::move(nb);
    return *this;
}

Cyclo3& Cyclo3::operator/=(const Cyclo3& o) { return *this *= o.inverse(); }

Cyclo3 operator+(Cyclo3 x, const Cyclo3& y) { return x += y; }
Cyclo3 operator-(Cyclo3 x, const Cyclo3& y) { return x -= y; }
Cyclo3 operator*(Cyclo3 x, const Cyclo3& y) { return x *= y; }
Cyclo3 operator/(Cyclo3 x, const Cyclo3& y) { return x /= y; }
Cyclo3 operator-(const Cyclo3& x) { return Cyclo3(-x.a, -x.b); }
bool operator==(const Cyclo3& x, const Cyclo3& y) { return x.a == y.a && x.b == y.b; }

ExactMatrix to_exact(const QMatrix& m) {
    ExactMatrix e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = Cyclo3(m(i, j));
    return e;
}

namespace {

FloatEigen eigen_of(const Eigen::MatrixXcd& a, double tol) {
    if (a.rows() != a.cols()) throw std::invalid_argument("float_eigen: not square");
    FloatEigen out;
    const auto n = a.rows();
    if (n == 0) return out;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, true);
    if (solver.info() != Eigen::Success) throw ResidualExceeded("float_eigen: solver did not converge");
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    for (Eigen::Index k = 0; k < n; ++k) {
        std::complex<double> lam = solver.eigenvalues()(k);
        Eigen::VectorXcd v = solver.eigenvectors().col(k);
        double nv = v.norm();
        if (nv == 0) throw ResidualExceeded("float_eigen: zero eigenvector");
        v /= nv;
        double res = (a * v - lam * v).norm();
        if (res >= tol * scale) throw ResidualExceeded("float_eigen: residual exceeded");
        out.values.push_back(lam);
        out.vectors.emplace_back(v.data(), v.data() + v.size());
    }
    // Sort for determinism: by real part, then imaginary part.
    std::vector<std::size_t> order(out.values.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        const auto& p = out.values[x];
        const auto& q = out.values[y];
        if (std::abs(p.real() - q.real()) > tol * scale) return p.real() < q.real();
        return p.imag() < q.imag();
    });
    FloatEigen sorted;
    for (auto i : order) {
        sorted.values.push_back(out.values[i]);
        sorted.vectors.push_back(out.vectors[i]);
    }
    for (const auto& v : sorted.values) {
        bool placed = false;
        for (auto& c : sorted.clusters) {
            if (std::abs(c.value - v) < tol * scale) {
                c.value = (c.value * double(c.multiplicity) + v) / double(c.multiplicity + 1);
                ++c.multiplicity;
                placed = true;
                break;
            }
        }
        if (!placed) sorted.clusters.push_back({v, 1});
    }
    return sorted;
}

}  // namespace

FloatEigen float_eigen(const ExactMatrix& a, double tol) {
    Eigen::MatrixXcd m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).to_complex();
    return eigen_of(m, tol);
}

FloatEigen float_eigen(const QMatrix& a, double tol) {
    Eigen::MatrixXcd m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).get_d();
    return eigen_of(m, tol);
}

}  // namespace holo24
