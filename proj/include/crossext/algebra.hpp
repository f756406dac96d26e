#pragma once

#include "errors.hpp"
#include "linalg.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace crossext {

enum class Flavor { Lie, Leibniz };

inline std::string flavor_name(Flavor f) { return f == Flavor::Lie ? "CE" : "Leibniz"; }

/// Coefficients c^k_{ij} of [e_i, e_j] = sum_k c^k_{ij} e_k, stored for every
/// ordered pair (no symmetry is implied by the storage).
class StructureConstants {
public:
    StructureConstants() = default;
    explicit StructureConstants(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

    [[nodiscard]] std::size_t dim() const { return dim_; }

    Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return c_.at(index(i, j, k)); }
    [[nodiscard]] const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[index(i, j, k)];
    }

    /// Sets [e_i, e_j] = value e_k and, when `antisymmetric`, [e_j, e_i] = -value e_k.
    StructureConstants& set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value, bool antisymmetric = true) {
        at(i, j, k) = value;
        if (antisymmetric && i != j) at(j, i, k) = -value;
        return *this;
    }

    [[nodiscard]] Vector bracket(std::size_t i, std::size_t j) const {
        Vector v(dim_);
        for (std::size_t k = 0; k < dim_; ++k) v[k] = (*this)(i, j, k);
        return v;
    }

    [[nodiscard]] Vector bracket(const Vector& x, const Vector& y) const {
        Vector v(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                Scalar xy = x[i] * y[j];
                for (std::size_t k = 0; k < dim_; ++k) {
                    const Scalar& c = (*this)(i, j, k);
                    if (!c.is_zero()) v[k] += xy * c;
                }
            }
        }
        return v;
    }

    /// Matrix of [e_i, -].
    [[nodiscard]] Matrix left_multiplication(std::size_t i) const {
        Matrix m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) m(k, j) = (*this)(i, j, k);
        return m;
    }

    /// Matrix of [-, e_i].
    [[nodiscard]] Matrix right_multiplication(std::size_t i) const {
        Matrix m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) m(k, j) = (*this)(j, i, k);
        return m;
    }

    /// Structure constants of the same bracket in the basis given by the
    /// columns of `basis` (an invertible dim x dim matrix).
    [[nodiscard]] StructureConstants change_basis(const Matrix& basis) const {
        LinearSolver solver(basis);
        if (solver.rank() != dim_) throw std::invalid_argument("change_basis: matrix is not invertible");
        StructureConstants out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                Vector b = solver.solve_or_throw(bracket(basis.column(i), basis.column(j)));
                for (std::size_t k = 0; k < dim_; ++k) out.at(i, j, k) = b[k];
            }
        }
        return out;
    }

    [[nodiscard]] StructureConstants in_field(const FieldSpec& f) const {
        StructureConstants out = *this;
        for (auto& x : out.c_) x = x.in_field(f);
        return out;
    }

    friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

private:
    [[nodiscard]] std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
        return (i * dim_ + j) * dim_ + k;
    }

    std::size_t dim_ = 0;
    std::vector<Scalar> c_;
};

inline CheckResult check_lie(const StructureConstants& c) {
    const std::size_t n = c.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (!(c(i, j, k) + c(j, i, k)).is_zero()) {
                    return Violation{ErrorCode::AntisymFail, {i, j}, "[e_i,e_j] != -[e_j,e_i]"};
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                Vector ei = unit_vector(n, i);
                Vector ej = unit_vector(n, j);
                Vector ek = unit_vector(n, k);
                Vector sum = c.bracket(ei, c.bracket(ej, ek)) + c.bracket(ej, c.bracket(ek, ei)) +
                             c.bracket(ek, c.bracket(ei, ej));
                if (!is_zero(sum)) return Violation{ErrorCode::JacobiFail, {i, j, k}, "Jacobi identity fails"};
            }
        }
    }
    return std::nullopt;
}

/// Right Leibniz identity [x,[y,z]] = [[x,y],z] - [[x,z],y] on all basis triples.
inline CheckResult check_leibniz(const StructureConstants& c) {
    const std::size_t n = c.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                Vector x = unit_vector(n, i);
                Vector y = unit_vector(n, j);
                Vector z = unit_vector(n, k);
                Vector lhs = c.bracket(x, c.bracket(y, z));
                Vector rhs = c.bracket(c.bracket(x, y), z) - c.bracket(c.bracket(x, z), y);
                if (lhs != rhs) return Violation{ErrorCode::LeibnizFail, {i, j, k}, "Leibniz identity fails"};
            }
        }
    }
    return std::nullopt;
}

/// Validated Lie (F = Lie) or right Leibniz (F = Leibniz) algebra.
template <Flavor F>
class Algebra {
public:
    static constexpr Flavor flavor = F;

    Algebra() = default;

    /// Throws Error on the first violated axiom.
    static Algebra validate(StructureConstants c) {
        throw_if(F == Flavor::Lie ? check_lie(c) : check_leibniz(c));
        Algebra a;
        a.c_ = std::move(c);
        return a;
    }

    [[nodiscard]] std::size_t dim() const { return c_.dim(); }
    [[nodiscard]] const StructureConstants& constants() const { return c_; }
    [[nodiscard]] Vector bracket(std::size_t i, std::size_t j) const { return c_.bracket(i, j); }
    [[nodiscard]] Vector bracket(const Vector& x, const Vector& y) const { return c_.bracket(x, y); }

    friend bool operator==(const Algebra&, const Algebra&) = default;

private:
    StructureConstants c_;
};

using LieAlgebra = Algebra<Flavor::Lie>;
using LeibnizAlgebra = Algebra<Flavor::Leibniz>;

inline LieAlgebra validate_lie(StructureConstants c) { return LieAlgebra::validate(std::move(c)); }
inline LeibnizAlgebra validate_leibniz(StructureConstants c) { return LeibnizAlgebra::validate(std::move(c)); }

inline LeibnizAlgebra as_leibniz(const LieAlgebra& g) { return validate_leibniz(g.constants()); }

inline LieAlgebra abelian_lie(std::size_t dim) { return validate_lie(StructureConstants(dim)); }

/// Checks that `beta` (target.dim x source.dim) preserves brackets on basis pairs.
template <Flavor F>
CheckResult check_algebra_map(const Algebra<F>& source, const Algebra<F>& target, const Matrix& beta) {
    if (beta.rows() != target.dim() || beta.cols() != source.dim()) {
        return Violation{ErrorCode::ShapeMismatch, {}, "algebra map has the wrong shape"};
    }
    for (std::size_t i = 0; i < source.dim(); ++i) {
        for (std::size_t j = 0; j < source.dim(); ++j) {
            if (F == Flavor::Lie && j <= i) continue;
            Vector lhs = beta.apply(source.bracket(i, j));
            Vector rhs = target.bracket(beta.column(i), beta.column(j));
            if (lhs != rhs) return Violation{ErrorCode::NotLieMap, {i, j}, "bracket not preserved"};
        }
    }
    return std::nullopt;
}

/// Module over an algebra, given by one action matrix per basis vector.
/// Lie modules carry the left action [x, m] only; Leibniz modules carry both
/// the left action [x, m] and the right action [m, x].
template <Flavor F>
class Representation {
public:
    Representation() = default;

    /// Throws Error on the first violated module axiom.
    static Representation validate(const Algebra<F>& algebra, std::size_t dim, std::vector<Matrix> left,
                                   std::vector<Matrix> right = {}) {
        Representation r;
        r.dim_ = dim;
        r.left_ = std::move(left);
        r.right_ = std::move(right);
        if constexpr (F == Flavor::Lie) {
            if (!r.right_.empty()) throw Error(ErrorCode::ShapeMismatch, "Lie modules carry no right action");
        }
        throw_if(check(algebra, r));
        return r;
    }

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t algebra_dim() const { return left_.size(); }
    [[nodiscard]] const std::vector<Matrix>& left() const { return left_; }
    [[nodiscard]] const std::vector<Matrix>& right() const { return right_; }
    [[nodiscard]] const Matrix& left(std::size_t i) const { return left_.at(i); }
    [[nodiscard]] const Matrix& right(std::size_t i) const { return right_.at(i); }

    /// Matrix of [x, -] for an algebra element x.
    [[nodiscard]] Matrix left_action(const Vector& x) const { return combine(left_, x); }
    /// Matrix of [-, x].
    [[nodiscard]] Matrix right_action(const Vector& x) const { return combine(right_, x); }

    static CheckResult check(const Algebra<F>& g, const Representation& r) {
        const std::size_t n = g.dim();
        if (r.left_.size() != n || (F == Flavor::Leibniz && r.right_.size() != n)) {
            return Violation{ErrorCode::ShapeMismatch, {}, "need one action matrix per algebra basis vector"};
        }
        for (const auto* family : {&r.left_, &r.right_}) {
            for (const auto& m : *family) {
                if (m.rows() != r.dim_ || m.cols() != r.dim_) {
                    return Violation{ErrorCode::ShapeMismatch, {}, "action matrices must be dim x dim"};
                }
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Vector ij = g.bracket(i, j);
                const Matrix& li = r.left_[i];
                const Matrix& lj = r.left_[j];
                if constexpr (F == Flavor::Lie) {
                    if (j <= i) continue;
                    // [[x,y],m] = [x,[y,m]] - [y,[x,m]]
                    if (r.left_action(ij) != li * lj - lj * li) {
                        return Violation{ErrorCode::ModuleAxiomFail, {i, j}, "rho([x,y]) != [rho(x), rho(y)]"};
                    }
                } else {
                    const Matrix& ri = r.right_[i];
                    const Matrix& rj = r.right_[j];
                    // [x,[y,m]] = [[x,y],m] - [[x,m],y]
                    if (li * lj != r.left_action(ij) - rj * li) {
                        return Violation{ErrorCode::ModuleAxiomFail, {i, j}, "[x,[y,m]] identity fails"};
                    }
                    // [x,[m,y]] = [[x,m],y] - [[x,y],m]
                    if (li * rj != rj * li - r.left_action(ij)) {
                        return Violation{ErrorCode::ModuleAxiomFail, {i, j}, "[x,[m,y]] identity fails"};
                    }
                    // [m,[x,y]] = [[m,x],y] - [[m,y],x]
                    if (r.right_action(ij) != rj * ri - ri * rj) {
                        return Violation{ErrorCode::ModuleAxiomFail, {i, j}, "[m,[x,y]] identity fails"};
                    }
                }
            }
        }
        return std::nullopt;
    }

    friend bool operator==(const Representation&, const Representation&) = default;

private:
    [[nodiscard]] Matrix combine(const std::vector<Matrix>& family, const Vector& x) const {
        if (x.size() != family.size()) throw std::invalid_argument("algebra element has the wrong length");
        Matrix m(dim_, dim_);
        for (std::size_t i = 0; i < family.size(); ++i) {
            if (!x[i].is_zero()) m += x[i] * family[i];
        }
        return m;
    }

    std::size_t dim_ = 0;
    std::vector<Matrix> left_;
    std::vector<Matrix> right_;
};

using LieModule = Representation<Flavor::Lie>;
using LeibnizModule = Representation<Flavor::Leibniz>;

inline LieModule validate_module(const LieAlgebra& g, std::size_t dim, std::vector<Matrix> actions) {
    return LieModule::validate(g, dim, std::move(actions));
}

inline LeibnizModule validate_module(const LeibnizAlgebra& h, std::size_t dim, std::vector<Matrix> left,
                                     std::vector<Matrix> right) {
    return LeibnizModule::validate(h, dim, std::move(left), std::move(right));
}

template <Flavor F>
Representation<F> trivial_module(const Algebra<F>& g, std::size_t dim) {
    std::vector<Matrix> zeros(g.dim(), Matrix(dim, dim));
    if constexpr (F == Flavor::Lie) {
        return Representation<F>::validate(g, dim, zeros);
    } else {
        return Representation<F>::validate(g, dim, zeros, zeros);
    }
}

/// The algebra acting on itself by the bracket.
template <Flavor F>
Representation<F> adjoint(const Algebra<F>& g) {
    std::vector<Matrix> left;
    std::vector<Matrix> right;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        left.push_back(g.constants().left_multiplication(i));
        if constexpr (F == Flavor::Leibniz) right.push_back(g.constants().right_multiplication(i));
    }
    return Representation<F>::validate(g, g.dim(), std::move(left), std::move(right));
}

/// A Lie module seen as a Leibniz module over the same bracket: [m, x] = -[x, m].
inline LeibnizModule as_leibniz(const LieAlgebra& g, const LieModule& m) {
    std::vector<Matrix> right;
    for (const auto& a : m.left()) right.push_back(-a);
    return LeibnizModule::validate(as_leibniz(g), m.dim(), m.left(), std::move(right));
}

template <Flavor F>
Representation<F> direct_sum(const Algebra<F>& g, const Representation<F>& a, const Representation<F>& b) {
    std::vector<Matrix> left;
    std::vector<Matrix> right;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        left.push_back(block_diagonal(a.left(i), b.left(i)));
        if constexpr (F == Flavor::Leibniz) right.push_back(block_diagonal(a.right(i), b.right(i)));
    }
    return Representation<F>::validate(g, a.dim() + b.dim(), std::move(left), std::move(right));
}

/// Transports the action along an invertible change of module basis
/// (columns of `basis` are the new basis vectors in old coordinates).
template <Flavor F>
Representation<F> change_module_basis(const Algebra<F>& g, const Representation<F>& m, const Matrix& basis) {
    LinearSolver solver(basis);
    if (solver.rank() != m.dim() || basis.rows() != m.dim()) throw std::invalid_argument("basis change is not invertible");
    auto conj = [&](const Matrix& a) { return *solver.solve_columns(a * basis); };
    std::vector<Matrix> left;
    std::vector<Matrix> right;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        left.push_back(conj(m.left(i)));
        if constexpr (F == Flavor::Leibniz) right.push_back(conj(m.right(i)));
    }
    return Representation<F>::validate(g, m.dim(), std::move(left), std::move(right));
}

/// Checks that `f` (target.dim x source.dim) commutes with the actions.
template <Flavor F>
CheckResult check_module_morphism(const Algebra<F>& g, const Representation<F>& source,
                                  const Representation<F>& target, const Matrix& f) {
    if (f.rows() != target.dim() || f.cols() != source.dim()) {
        return Violation{ErrorCode::ShapeMismatch, {}, "module map has the wrong shape"};
    }
    for (std::size_t i = 0; i < g.dim(); ++i) {
        if (f * source.left(i) != target.left(i) * f) {
            return Violation{ErrorCode::NotEquivariant, {i}, "left action not preserved"};
        }
        if constexpr (F == Flavor::Leibniz) {
            if (f * source.right(i) != target.right(i) * f) {
                return Violation{ErrorCode::NotEquivariant, {i}, "right action not preserved"};
            }
        }
    }
    return std::nullopt;
}

/// Whether a subspace is stable under every action matrix.
template <Flavor F>
bool is_submodule(const Representation<F>& m, const Subspace& u) {
    for (std::size_t k = 0; k < u.dim(); ++k) {
        Vector v = u.basis_vector(k);
        for (std::size_t i = 0; i < m.algebra_dim(); ++i) {
            if (!u.contains(m.left(i).apply(v))) return false;
            if constexpr (F == Flavor::Leibniz) {
                if (!u.contains(m.right(i).apply(v))) return false;
            }
        }
    }
    return true;
}

template <Flavor F>
struct Submodule {
    Representation<F> module;
    Matrix inclusion;  // ambient x dim, columns = RREF basis of the subspace
};

template <Flavor F>
Submodule<F> submodule(const Algebra<F>& g, const Representation<F>& m, const Subspace& u) {
    if (!is_submodule(m, u)) throw Error(ErrorCode::NotEquivariant, "subspace is not a submodule");
    Matrix incl = u.inclusion();
    LinearSolver solver(incl);
    auto restrict = [&](const Matrix& a) { return *solver.solve_columns(a * incl); };
    std::vector<Matrix> left;
    std::vector<Matrix> right;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        left.push_back(restrict(m.left(i)));
        if constexpr (F == Flavor::Leibniz) right.push_back(restrict(m.right(i)));
    }
    return {Representation<F>::validate(g, u.dim(), std::move(left), std::move(right)), incl};
}

template <Flavor F>
struct QuotientModule {
    Representation<F> module;
    Matrix projection;  // dim x ambient
    Matrix section;     // ambient x dim
};

template <Flavor F>
QuotientModule<F> quotient_module(const Algebra<F>& g, const Representation<F>& m, const Subspace& u) {
    if (!is_submodule(m, u)) throw Error(ErrorCode::NotEquivariant, "subspace is not a submodule");
    Quotient q = quotient(m.dim(), u);
    std::vector<Matrix> left;
    std::vector<Matrix> right;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        left.push_back(q.projection * m.left(i) * q.section);
        if constexpr (F == Flavor::Leibniz) right.push_back(q.projection * m.right(i) * q.section);
    }
    return {Representation<F>::validate(g, q.dim, std::move(left), std::move(right)), q.projection, q.section};
}

/// Module over `source` obtained through the algebra map beta : source -> target.
template <Flavor F>
Representation<F> pullback(const Algebra<F>& source, const Matrix& beta, const Representation<F>& m) {
    std::vector<Matrix> left;
    std::vector<Matrix> right;
    for (std::size_t k = 0; k < source.dim(); ++k) {
        Vector image = beta.column(k);
        left.push_back(m.left_action(image));
        if constexpr (F == Flavor::Leibniz) right.push_back(m.right_action(image));
    }
    return Representation<F>::validate(source, m.dim(), std::move(left), std::move(right));
}

/// Subspace of invariants {m : [x, m] = 0 (and [m, x] = 0) for all x}.
template <Flavor F>
Subspace invariants(const Representation<F>& m) {
    Matrix stacked(0, m.dim());
    for (const auto& a : m.left()) stacked = vstack(stacked, a);
    for (const auto& a : m.right()) stacked = vstack(stacked, a);
    return kernel(stacked);
}

}  // namespace crossext
