#pragma once

#include "matrix.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace crossext {

/// A linear map is stored as its matrix: codomain_dim rows, domain_dim columns.
using LinearMap = Matrix;

inline std::size_t domain_dim(const LinearMap& f) { return f.cols(); }
inline std::size_t codomain_dim(const LinearMap& f) { return f.rows(); }

/// Reduced row-echelon form together with the pivot column of each nonzero row.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;

    [[nodiscard]] std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination to the canonical reduced row-echelon form.
/// Only the first `limit` columns are used as pivot candidates (all by default);
/// the remaining columns are carried along, which is how augmented systems are
/// solved.
inline Echelon rref(Matrix m, std::size_t limit = static_cast<std::size_t>(-1)) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    limit = std::min(limit, cols);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < limit && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r) {
            auto a = m.row(p);
            auto b = m.row(r);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        auto pivot_row = m.row(r);
        if (!pivot_row[c].is_one()) {
            Scalar inv = pivot_row[c].inverse();
            for (std::size_t j = c; j < cols; ++j) {
                if (!pivot_row[j].is_zero()) pivot_row[j] *= inv;
            }
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar factor = m(i, c);
            auto target = m.row(i);
            for (std::size_t j = c; j < cols; ++j) {
                if (!pivot_row[j].is_zero()) target[j] -= factor * pivot_row[j];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank(); }

/// Subspace of K^n carried by its canonical RREF basis; two subspaces are
/// equal iff their basis matrices are identical.
class Subspace {
public:
    Subspace() = default;

    /// Span of the rows of `generators`.
    static Subspace span(const Matrix& generators) {
        Echelon e = rref(generators);
        Subspace s;
        s.ambient_ = generators.cols();
        s.basis_ = e.reduced.block(0, 0, e.rank(), generators.cols());
        s.pivots_ = std::move(e.pivots);
        return s;
    }
    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient) {
        return span(Matrix::from_rows(vectors, ambient));
    }
    static Subspace zero(std::size_t ambient) {
        Subspace s;
        s.ambient_ = ambient;
        s.basis_ = Matrix(0, ambient);
        return s;
    }
    static Subspace full(std::size_t ambient) { return span(Matrix::identity(ambient)); }

    [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
    [[nodiscard]] std::size_t dim() const { return pivots_.size(); }
    [[nodiscard]] const Matrix& basis() const { return basis_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
    [[nodiscard]] Vector basis_vector(std::size_t k) const { return basis_.row_vector(k); }

    /// Canonical representative of v modulo this subspace: the unique vector in
    /// v + U with zeros at every pivot column.
    [[nodiscard]] Vector reduce(Vector v) const {
        check_length(v.size());
        for (std::size_t k = 0; k < pivots_.size(); ++k) {
            Scalar c = v[pivots_[k]];
            if (!c.is_zero()) axpy(v, -c, basis_.row(k));
        }
        return v;
    }

    [[nodiscard]] bool contains(const Vector& v) const { return crossext::is_zero(reduce(v)); }

    /// Coordinates of v in the RREF basis; v must lie in the subspace.
    [[nodiscard]] Vector coordinates(const Vector& v) const {
        if (!contains(v)) throw std::invalid_argument("vector is not in the subspace");
        Vector c(pivots_.size());
        for (std::size_t k = 0; k < pivots_.size(); ++k) c[k] = v[pivots_[k]];
        return c;
    }

    /// Vector with the given coordinates in the RREF basis.
    [[nodiscard]] Vector combine(const Vector& coords) const {
        if (coords.size() != dim()) throw std::invalid_argument("coordinate length mismatch");
        Vector v(ambient_);
        for (std::size_t k = 0; k < coords.size(); ++k) axpy(v, coords[k], basis_.row(k));
        return v;
    }

    /// Inclusion map as an ambient_dim x dim matrix.
    [[nodiscard]] Matrix inclusion() const { return basis_.transpose(); }

    [[nodiscard]] bool is_subspace_of(const Subspace& other) const {
        for (std::size_t k = 0; k < dim(); ++k) {
            if (!other.contains(basis_vector(k))) return false;
        }
        return true;
    }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw std::invalid_argument("subspace ambient mismatch");
        return span(vstack(a.basis_, b.basis_));
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    void check_length(std::size_t n) const {
        if (n != ambient_) throw std::invalid_argument("vector length does not match subspace ambient dimension");
    }

    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// {v : f(v) = 0}
inline Subspace kernel(const LinearMap& f) {
    Echelon e = rref(f);
    const std::size_t n = f.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> gens;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        Vector v(n);
        v[j] = 1;
        for (std::size_t k = 0; k < e.rank(); ++k) v[e.pivots[k]] = -e.reduced(k, j);
        gens.push_back(std::move(v));
    }
    if (gens.empty()) return Subspace::zero(n);
    return Subspace::span(gens, n);
}

/// Column span of f.
inline Subspace image(const LinearMap& f) { return Subspace::span(f.transpose()); }

inline Subspace intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspace ambient mismatch");
    // x A = y B  <=>  (x, -y) in ker [A ; -B]^T
    Matrix stacked = vstack(a.basis(), -b.basis());
    Subspace rel = kernel(stacked.transpose());
    std::vector<Vector> gens;
    for (std::size_t k = 0; k < rel.dim(); ++k) {
        Vector x = rel.basis_vector(k);
        x.resize(a.dim());
        gens.push_back(a.combine(x));
    }
    if (gens.empty()) return Subspace::zero(a.ambient_dim());
    return Subspace::span(gens, a.ambient_dim());
}

struct Quotient {
    LinearMap projection;  // dim x ambient
    LinearMap section;     // ambient x dim
    std::size_t dim = 0;
};

/// K^n / sub with the complement spanned by the non-pivot standard basis vectors.
inline Quotient quotient(std::size_t ambient_dim, const Subspace& sub) {
    if (sub.ambient_dim() != ambient_dim) throw std::invalid_argument("quotient: ambient dimension mismatch");
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto p : sub.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> free;
    std::vector<std::size_t> position(ambient_dim, 0);
    for (std::size_t j = 0; j < ambient_dim; ++j) {
        if (!is_pivot[j]) {
            position[j] = free.size();
            free.push_back(j);
        }
    }
    Quotient q;
    q.dim = free.size();
    q.projection = Matrix(q.dim, ambient_dim);
    q.section = Matrix(ambient_dim, q.dim);
    for (std::size_t a = 0; a < free.size(); ++a) {
        q.projection(a, free[a]) = 1;
        q.section(free[a], a) = 1;
    }
    for (std::size_t k = 0; k < sub.dim(); ++k) {
        for (std::size_t a = 0; a < free.size(); ++a) q.projection(a, sub.pivots()[k]) = -sub.basis()(k, free[a]);
    }
    return q;
}

/// Reusable solver for f(x) = t. The row reduction of [f | I] is done once;
/// each solve is a matrix-vector product.
class LinearSolver {
public:
    explicit LinearSolver(const LinearMap& f) : domain_(f.cols()), codomain_(f.rows()) {
        Echelon e = rref(hstack(f, Matrix::identity(f.rows())), f.cols());
        pivots_ = std::move(e.pivots);
        transform_ = e.reduced.block(0, f.cols(), f.rows(), f.rows());
    }

    [[nodiscard]] std::size_t rank() const { return pivots_.size(); }

    [[nodiscard]] std::optional<Vector> solve(const Vector& target) const {
        if (target.size() != codomain_) throw std::invalid_argument("solve: target length mismatch");
        Vector c = transform_.apply(target);
        for (std::size_t k = pivots_.size(); k < c.size(); ++k) {
            if (!c[k].is_zero()) return std::nullopt;
        }
        Vector x(domain_);
        for (std::size_t k = 0; k < pivots_.size(); ++k) x[pivots_[k]] = c[k];
        return x;
    }

    [[nodiscard]] Vector solve_or_throw(const Vector& target) const {
        auto x = solve(target);
        if (!x) throw std::invalid_argument("solve: target is not in the image");
        return *x;
    }

    /// X with f X = B, or nullopt if some column of B is outside the image.
    [[nodiscard]] std::optional<Matrix> solve_columns(const Matrix& b) const {
        std::vector<Vector> cols;
        cols.reserve(b.cols());
        for (std::size_t j = 0; j < b.cols(); ++j) {
            auto x = solve(b.column(j));
            if (!x) return std::nullopt;
            cols.push_back(std::move(*x));
        }
        return Matrix::from_columns(cols, domain_);
    }

private:
    std::size_t domain_;
    std::size_t codomain_;
    std::vector<std::size_t> pivots_;
    Matrix transform_;
};

inline std::optional<Vector> solve(const LinearMap& f, const Vector& target) { return LinearSolver(f).solve(target); }

/// Right inverse of f on its image: a map q from the codomain back to the
/// domain with f(q(w)) = w for every w in image(f). On the RREF basis b_k of
/// the image (pivot column p_k), q sends e_{p_k} to the preimage of b_k and all
/// other standard vectors to zero.
inline LinearMap linear_section(const LinearMap& f) {
    Subspace im = image(f);
    LinearSolver solver(f);
    LinearMap q(f.cols(), f.rows());
    for (std::size_t k = 0; k < im.dim(); ++k) {
        Vector pre = solver.solve_or_throw(im.basis_vector(k));
        for (std::size_t i = 0; i < f.cols(); ++i) q(i, im.pivots()[k]) = pre[i];
    }
    return q;
}

inline bool is_injective(const LinearMap& f) { return rank(f) == f.cols(); }
inline bool is_surjective(const LinearMap& f) { return rank(f) == f.rows(); }

}  // namespace crossext
