/**
 * @file linalg.hpp
 * @brief Dense matrices over the library's scalar types, with exact Gaussian
 *        elimination over Q(i) (and QScalar) and tolerance-based elimination
 *        over complex doubles.
 */
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qso/gaussian.hpp"
#include "qso/qscalar.hpp"

namespace qso {

template <class T>
struct ScalarOps;

template <>
struct ScalarOps<GRat> {
    static GRat zero() { return GRat(0L); }
    static GRat one() { return GRat(1L); }
    static bool is_zero(const GRat& x, double) { return x.is_zero(); }
    static double pivot_size(const GRat& x) { return x.is_zero() ? 0.0 : 1.0; }
    static GRat inv(const GRat& x) { return x.inverse(); }
};

template <>
struct ScalarOps<QScalar> {
    static QScalar zero() { return QScalar::zero(); }
    static QScalar one() { return QScalar::one(); }
    static bool is_zero(const QScalar& x, double) { return x.is_zero(); }
    static double pivot_size(const QScalar& x) { return x.is_zero() ? 0.0 : 1.0; }
    static QScalar inv(const QScalar& x) { return x.inverse(); }
};

template <>
struct ScalarOps<std::complex<double>> {
    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static bool is_zero(const std::complex<double>& x, double tol) { return std::abs(x) <= tol; }
    static double pivot_size(const std::complex<double>& x) { return std::abs(x); }
    static std::complex<double> inv(const std::complex<double>& x) { return 1.0 / x; }
};

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows, std::vector<T>(cols, ScalarOps<T>::zero())) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = ScalarOps<T>::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i][j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }
    std::vector<T>& row(std::size_t i) { return a_[i]; }
    const std::vector<T>& row(std::size_t i) const { return a_[i]; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const T& v = x(i, k);
                if (ScalarOps<T>::is_zero(v, 0.0)) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += v * y(k, j);
            }
        return r;
    }
    friend Matrix operator+(Matrix x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw std::invalid_argument("Matrix: shape mismatch in sum");
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j) x(i, j) += y(i, j);
        return x;
    }
    friend Matrix operator-(Matrix x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw std::invalid_argument("Matrix: shape mismatch in difference");
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j) x(i, j) = x(i, j) - y(i, j);
        return x;
    }
    Matrix scaled(const T& c) const {
        Matrix r = *this;
        for (auto& row : r.a_)
            for (auto& v : row) v = v * c;
        return r;
    }
    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = a_[i][j];
        return r;
    }
    Matrix pow(unsigned e) const {
        Matrix r = identity(rows_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            if (e >>= 1) b = b * b;
        }
        return r;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<T>> a_;
};

/// In-place reduced row echelon form; returns the pivot column list.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m, double tol = 0.0) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t best = r;
        double best_size = ScalarOps<T>::pivot_size(m(r, c));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            double s = ScalarOps<T>::pivot_size(m(i, c));
            if (s > best_size) {
                best = i;
                best_size = s;
            }
        }
        if (ScalarOps<T>::is_zero(m(best, c), tol)) continue;
        std::swap(m.row(r), m.row(best));
        T inv = ScalarOps<T>::inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            T f = m(i, c);
            if (ScalarOps<T>::is_zero(f, tol)) continue;
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m, double tol = 0.0) {
    return rref(m, tol).size();
}

/// Basis of the null space, one column vector per basis element.
template <class T>
std::vector<std::vector<T>> kernel(Matrix<T> m, double tol = 0.0) {
    auto pivots = rref(m, tol);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<T> v(m.cols(), ScalarOps<T>::zero());
        v[c] = ScalarOps<T>::one();
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = ScalarOps<T>::zero() - m(r, c);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/**
 * Incremental row space: keeps an echelonized spanning set and answers
 * membership queries.  Used for ideal closures and quotient bases.
 */
template <class T>
class RowSpace {
public:
    explicit RowSpace(std::size_t dim, double tol = 0.0) : dim_(dim), tol_(tol) {}

    std::size_t dim_ambient() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduces v against the current rows in place.
    void reduce(std::vector<T>& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const T& coef = v[lead_[r]];
            if (ScalarOps<T>::is_zero(coef, tol_)) continue;
            T f = coef;
            for (std::size_t j = 0; j < dim_; ++j) v[j] = v[j] - f * rows_[r][j];
        }
    }

    /// Inserts v if independent; returns true when the rank grew.
    bool insert(std::vector<T> v) {
        if (v.size() != dim_) throw std::invalid_argument("RowSpace: wrong vector length");
        reduce(v);
        std::size_t lead = dim_;
        double best = 0.0;
        for (std::size_t j = 0; j < dim_; ++j) {
            double s = ScalarOps<T>::pivot_size(v[j]);
            if (s > best) {
                best = s;
                lead = j;
            }
        }
        if (lead == dim_ || ScalarOps<T>::is_zero(v[lead], tol_)) return false;
        T inv = ScalarOps<T>::inv(v[lead]);
        for (auto& x : v) x = x * inv;
        // eliminate the new lead from existing rows
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            T f = rows_[r][lead];
            if (ScalarOps<T>::is_zero(f, tol_)) continue;
            for (std::size_t j = 0; j < dim_; ++j) rows_[r][j] = rows_[r][j] - f * v[j];
        }
        rows_.push_back(std::move(v));
        lead_.push_back(lead);
        return true;
    }

    bool contains(std::vector<T> v) const {
        reduce(v);
        for (std::size_t j = 0; j < dim_; ++j)
            if (!ScalarOps<T>::is_zero(v[j], tol_)) return false;
        return true;
    }

    const std::vector<std::vector<T>>& rows() const { return rows_; }
    const std::vector<std::size_t>& leads() const { return lead_; }

private:
    std::size_t dim_;
    double tol_;
    std::vector<std::vector<T>> rows_;
    std::vector<std::size_t> lead_;
};

inline Matrix<std::complex<double>> to_complex(const Matrix<GRat>& m) {
    Matrix<std::complex<double>> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = {m(i, j).real_double(), m(i, j).imag_double()};
    return r;
}

inline double max_abs(const Matrix<std::complex<double>>& m) {
    double peak = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) peak = std::max(peak, std::abs(m(i, j)));
    return peak;
}

}  // namespace qso
