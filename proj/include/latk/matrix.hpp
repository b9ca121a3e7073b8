// Dense matrices over Rational and the Gaussian elimination core:
// rank, kernel, affine solve, inverse. Everything exact, no pivot tolerance.
#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace latk {

using Vec = std::vector<Rational>;

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }
    Matrix(int rows, int cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != static_cast<std::size_t>(rows) * cols)
            throw std::invalid_argument("matrix entry count does not match shape");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
    static Matrix column(const Vec& v) {
        Matrix m(static_cast<int>(v.size()), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i];
        return m;
    }
    static Matrix from_columns(int rows, const std::vector<Vec>& cols) {
        Matrix m(rows, static_cast<int>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != static_cast<std::size_t>(rows))
                throw std::invalid_argument("column length mismatch");
            for (int i = 0; i < rows; ++i) m(i, static_cast<int>(j)) = cols[j][i];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int r, int c) { return entries_[index(r, c)]; }
    const Rational& operator()(int r, int c) const { return entries_[index(r, c)]; }

    Vec col(int c) const {
        Vec v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
        return v;
    }
    Vec row(int r) const {
        Vec v(cols_);
        for (int j = 0; j < cols_; ++j) v[j] = (*this)(r, j);
        return v;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }
    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != Rational(i == j ? 1 : 0)) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i)
            r.entries_[i] = a.entries_[i] + b.entries_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i)
            r.entries_[i] = a.entries_[i] - b.entries_[i];
        return r;
    }
    friend Matrix operator*(const Rational& s, const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i) r.entries_[i] = s * a.entries_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const Rational& bkj = b(k, j);
                    if (!bkj.is_zero()) r(i, j) += aik * bkj;
                }
            }
        return r;
    }
    friend Vec operator*(const Matrix& a, const Vec& v) {
        if (a.cols_ != static_cast<int>(v.size()))
            throw std::invalid_argument("matrix-vector shape mismatch");
        Vec r(a.rows_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j)
                if (!a(i, j).is_zero() && !v[j].is_zero()) r[i] += a(i, j) * v[j];
        return r;
    }

private:
    static void check_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }
    std::size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("matrix index out of range");
        return static_cast<std::size_t>(r) * cols_ + c;
    }

    int rows_;
    int cols_;
    std::vector<Rational> entries_;
};

inline Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline Vec vec_scale(const Rational& s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}
inline bool vec_is_zero(const Vec& a) {
    for (const auto& e : a)
        if (!e.is_zero()) return false;
    return true;
}

/// Reduced row echelon form together with the pivot column list.
struct Echelon {
    Matrix reduced;
    std::vector<int> pivot_cols;
};

inline Echelon rref(Matrix m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        // pick the pivot with smallest magnitude to keep fractions tame
        int best = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (m(i, c).is_zero()) continue;
            if (best == -1) best = i;
            else if (m(i, c).is_one()) { best = i; break; }
        }
        if (best == -1) continue;
        if (best != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(best, j));
        Rational inv = m(r, c).inverse();
        for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline int rank(const Matrix& m) { return static_cast<int>(rref(m).pivot_cols.size()); }

/// Columns form a basis of the right null space; column count = cols - rank.
inline Matrix kernel_basis(const Matrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec x(m.cols());
        x[f] = Rational(1);
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            x[e.pivot_cols[r]] = -e.reduced(static_cast<int>(r), f);
        basis.push_back(std::move(x));
    }
    return Matrix::from_columns(m.cols(), basis);
}

struct AffineSolution {
    Vec particular;
    Matrix kernel; // columns parameterize the full solution set
};

/// Solve a x = b exactly; no solution is a value, not an error.
inline std::optional<AffineSolution> solve_affine(const Matrix& a, const Vec& b) {
    if (a.rows() != static_cast<int>(b.size()))
        throw std::invalid_argument("solve_affine: rhs length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    Echelon e = rref(std::move(aug));
    for (int c : e.pivot_cols)
        if (c == a.cols()) return std::nullopt;
    Vec x(a.cols());
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
        x[e.pivot_cols[r]] = e.reduced(static_cast<int>(r), a.cols());
    return AffineSolution{std::move(x), kernel_basis(a)};
}

inline std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Rational(1);
    }
    Echelon e = rref(std::move(aug));
    if (static_cast<int>(e.pivot_cols.size()) != n || (n > 0 && e.pivot_cols[n - 1] != n - 1))
        return std::nullopt;
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

inline bool is_invertible(const Matrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

inline Rational determinant(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    int n = m.rows();
    Rational det(1);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!m(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv == -1) return Rational(0);
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
            det = -det;
        }
        det *= m(c, c);
        Rational inv = m(c, c).inverse();
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            Rational f = m(i, c) * inv;
            for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

inline Matrix inverse_or_throw(const Matrix& m) {
    auto inv = inverse(m);
    if (!inv) throw std::domain_error("matrix is not invertible");
    return *inv;
}

/// Echelonized basis of the column space, as columns.
inline Matrix column_space_basis(const Matrix& m) {
    Echelon e = rref(m.transpose());
    std::vector<Vec> cols;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
        cols.push_back(e.reduced.row(static_cast<int>(r)));
    return Matrix::from_columns(m.rows(), cols);
}

} // namespace latk
