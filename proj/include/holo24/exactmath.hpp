#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace holo24 {

using Integer = mpz_class;
using Rational = mpq_class;

Rational rat(long num, long den = 1);
Rational rat(const Integer& num, const Integer& den = 1);
std::string to_string(const Rational& x);
Rational parse_rational(const std::string& s);
bool is_integer(const Rational& x);
Integer floor_of(const Rational& x);
Integer ceil_of(const Rational& x);
Rational frac_part(const Rational& x);
Integer lcm_int(const Integer& a, const Integer& b);

// a + b*w with w a primitive cube root of unity, w^2 = -1 - w.
class Cyclo3 {
public:
    Rational a, b;

    Cyclo3() : a(0), b(0) {}
    Cyclo3(long x) : a(x), b(0) {}
    Cyclo3(const Rational& x) : a(x), b(0) {}
    Cyclo3(const Rational& x, const Rational& y) : a(x), b(y) {}

    static Cyclo3 omega() { return Cyclo3(0, 1); }
    static Cyclo3 omega_pow(long k);

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    bool is_rational() const { return sgn(b) == 0; }
    Cyclo3 conj() const { return Cyclo3(a - b, -b); }
    Rational norm() const { return a * a - a * b + b * b; }
    Cyclo3 inverse() const;
    std::complex<double> to_complex() const;
    std::string str() const;

    Cyclo3& operator+=(const Cyclo3& o);
    Cyclo3& operator-=(const Cyclo3& o);
    Cyclo3& operator*=(const Cyclo3& o);
    Cyclo3& operator/=(const Cyclo3& o);
};

Cyclo3 operator+(Cyclo3 x, const Cyclo3& y);
Cyclo3 operator-(Cyclo3 x, const Cyclo3& y);
Cyclo3 operator*(Cyclo3 x, const Cyclo3& y);
Cyclo3 operator/(Cyclo3 x, const Cyclo3& y);
Cyclo3 operator-(const Cyclo3& x);
bool operator==(const Cyclo3& x, const Cyclo3& y);
inline bool operator!=(const Cyclo3& x, const Cyclo3& y) { return !(x == y); }

// Scalar traits shared by the dense routines below.
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Cyclo3& x) { return x.is_zero(); }
inline Rational inv(const Rational& x) { return Rational(1) / x; }
inline Cyclo3 inv(const Cyclo3& x) { return x.inverse(); }

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), d_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows);

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    T& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(d_.begin() + i * c_, d_.begin() + (i + 1) * c_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> v(r_);
        for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    Matrix transpose() const {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> d_;
};

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    for (const auto& row : rows) {
        if (row.size() != c_) throw std::invalid_argument("ragged matrix literal");
        for (const auto& x : row) d_.push_back(x);
    }
}

using QMatrix = Matrix<Rational>;
using ExactMatrix = Matrix<Cyclo3>;
template <class T>
using Vec = std::vector<T>;

template <class T>
Matrix<T> operator*(const Matrix<T>& x, const Matrix<T>& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix<T> z(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            if (is_zero(x(i, k))) continue;
            for (std::size_t j = 0; j < y.cols(); ++j) z(i, j) += x(i, k) * y(k, j);
        }
    return z;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& x, const Matrix<T>& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("matrix sum: dimension mismatch");
    Matrix<T> z = x;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) z(i, j) += y(i, j);
    return z;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& x, const Matrix<T>& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("matrix difference: dimension mismatch");
    Matrix<T> z = x;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) z(i, j) -= y(i, j);
    return z;
}

template <class T>
Vec<T> operator*(const Matrix<T>& x, const Vec<T>& v) {
    if (x.cols() != v.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
    Vec<T> out(x.rows(), T(0));
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (!is_zero(v[j])) out[i] += x(i, j) * v[j];
    return out;
}

// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        T pinv = inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= pinv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            T f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
    return rref(m).size();
}

template <class T>
std::vector<Vec<T>> kernel(const Matrix<T>& a) {
    Matrix<T> m = a;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec<T>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec<T> v(m.cols(), T(0));
        v[f] = T(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class T>
struct LinearSolution {
    Vec<T> particular;
    std::vector<Vec<T>> kernel;
};

// Returns nullopt when A x = b has no solution.
template <class T>
std::optional<LinearSolution<T>> solve_linear(const Matrix<T>& a, const Vec<T>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: dimension mismatch");
    Matrix<T> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    LinearSolution<T> sol;
    sol.particular.assign(a.cols(), T(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = aug(i, a.cols());
    sol.kernel = kernel(a);
    return sol;
}

template <class T>
T determinant(Matrix<T> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    T det(1);
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m(p, c))) ++p;
        if (p == n) return T(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        T pinv = inv(m(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            T f = m(i, c) * pinv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("inverse: not square");
    Matrix<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = T(1);
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
    Matrix<T> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

ExactMatrix to_exact(const QMatrix& m);

struct EigenCluster {
    std::complex<double> value;
    std::size_t multiplicity = 0;
};

struct FloatEigen {
    std::vector<std::complex<double>> values;
    std::vector<std::vector<std::complex<double>>> vectors;  // unit-norm, one per value
    std::vector<EigenCluster> clusters;
};

class ResidualExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Complex eigen-decomposition in doubles; throws ResidualExceeded when some
// eigenpair fails |Av - lv| < tol |v|.
FloatEigen float_eigen(const ExactMatrix& a, double tol = 1e-9);
FloatEigen float_eigen(const QMatrix& a, double tol = 1e-9);

}  // namespace holo24
