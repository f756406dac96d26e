#pragma once

#include "scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crossext {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(std::size_t n) { return Vector(n); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

inline bool is_zero(std::span<const Scalar> v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

inline Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vector operator-(const Vector& a) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline Vector operator*(const Scalar& c, const Vector& a) {
    Vector r(a.size());
    if (c.is_zero()) return r;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

/// y += c * x
inline void axpy(Vector& y, const Scalar& c, std::span<const Scalar> x) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_zero()) y[i] += c * x[i];
    }
}

inline Vector concat(const Vector& a, const Vector& b) {
    Vector r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

/// Dense row-major matrix of exact scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
            std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
        }
        return m;
    }
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    [[nodiscard]] std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    [[nodiscard]] Vector row_vector(std::size_t i) const {
        auto r = row(i);
        return {r.begin(), r.end()};
    }
    [[nodiscard]] Vector column(std::size_t j) const {
        Vector c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    [[nodiscard]] bool is_zero() const { return crossext::is_zero(data_); }

    [[nodiscard]] Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    [[nodiscard]] Vector apply(std::span<const Scalar> v) const {
        if (v.size() != cols_) {
            throw std::invalid_argument("matrix-vector shape mismatch: " + std::to_string(rows_) + "x" +
                                        std::to_string(cols_) + " * " + std::to_string(v.size()));
        }
        Vector r(rows_);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (v[j].is_zero()) continue;
            for (std::size_t i = 0; i < rows_; ++i) {
                const Scalar& a = (*this)(i, j);
                if (!a.is_zero()) r[i] += a * v[j];
            }
        }
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                                        std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                                        std::to_string(b.cols_));
        }
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Scalar& y = b(k, j);
                    if (!y.is_zero()) c(i, j) += x * y;
                }
            }
        }
        return c;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
        return c;
    }
    friend Matrix operator*(const Scalar& s, const Matrix& a) {
        Matrix c = a;
        for (auto& x : c.data_) x = s * x;
        return c;
    }
    Matrix operator-() const { return Scalar(-1) * *this; }
    Matrix& operator+=(const Matrix& o) { return *this = *this + o; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// [a | b]
    friend Matrix hstack(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw std::invalid_argument("hstack row mismatch");
        Matrix c(a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) c(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, a.cols_ + j) = b(i, j);
        }
        return c;
    }
    /// [a ; b]
    friend Matrix vstack(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_) throw std::invalid_argument("vstack column mismatch");
        Matrix c(a.rows_ + b.rows_, a.cols_);
        std::copy(a.data_.begin(), a.data_.end(), c.data_.begin());
        std::copy(b.data_.begin(), b.data_.end(), c.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
        return c;
    }
    /// diag(a, b)
    friend Matrix block_diagonal(const Matrix& a, const Matrix& b) {
        Matrix c(a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) c(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) c(a.rows_ + i, a.cols_ + j) = b(i, j);
        return c;
    }

    /// Rows [r0, r0+nr) and columns [c0, c0+nc).
    [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Matrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    [[nodiscard]] Matrix in_field(const FieldSpec& f) const {
        Matrix m = *this;
        for (auto& x : m.data_) x = x.in_field(f);
        return m;
    }

private:
    static void check_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Column-compressed sparse matrix; used for coboundary operators on large
/// cochain spaces where dense storage is wasteful.
class SparseMatrix {
public:
    using Column = std::vector<std::pair<std::size_t, Scalar>>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return columns_.size(); }
    [[nodiscard]] const Column& column(std::size_t j) const { return columns_[j]; }

    /// Replaces column j; entries are merged, sorted and zero-free afterwards.
    void set_column(std::size_t j, std::map<std::size_t, Scalar> entries) {
        Column c;
        c.reserve(entries.size());
        for (auto& [i, v] : entries) {
            if (i >= rows_) throw std::out_of_range("sparse row index out of range");
            if (!v.is_zero()) c.emplace_back(i, std::move(v));
        }
        columns_.at(j) = std::move(c);
    }

    [[nodiscard]] std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& c : columns_) n += c.size();
        return n;
    }
    [[nodiscard]] bool is_zero() const {
        return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
    }

    [[nodiscard]] Vector apply(std::span<const Scalar> v) const {
        if (v.size() != cols()) throw std::invalid_argument("sparse matrix-vector shape mismatch");
        Vector r(rows_);
        for (std::size_t j = 0; j < cols(); ++j) {
            if (v[j].is_zero()) continue;
            for (const auto& [i, a] : columns_[j]) r[i] += a * v[j];
        }
        return r;
    }

    [[nodiscard]] Matrix to_dense() const {
        Matrix m(rows_, cols());
        for (std::size_t j = 0; j < cols(); ++j)
            for (const auto& [i, a] : columns_[j]) m(i, j) = a;
        return m;
    }

    static SparseMatrix from_dense(const Matrix& m) {
        SparseMatrix s(m.rows(), m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (std::size_t i = 0; i < m.rows(); ++i)
                if (!m(i, j).is_zero()) s.columns_[j].emplace_back(i, m(i, j));
        return s;
    }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.cols() != b.rows()) throw std::invalid_argument("sparse product shape mismatch");
        SparseMatrix c(a.rows(), b.cols());
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::map<std::size_t, Scalar> acc;
            for (const auto& [k, y] : b.columns_[j])
                for (const auto& [i, x] : a.columns_[k]) acc[i] += x * y;
            c.set_column(j, std::move(acc));
        }
        return c;
    }

private:
    std::size_t rows_ = 0;
    std::vector<Column> columns_;
};

}  // namespace crossext
