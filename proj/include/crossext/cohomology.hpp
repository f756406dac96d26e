#pragma once

#include "cochains.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace crossext {

namespace detail {

struct Triplet {
    std::size_t row;
    std::size_t col;
    Scalar value;
};

inline SparseMatrix assemble(std::size_t rows, std::size_t cols, std::vector<Triplet> entries) {
    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return std::tie(a.col, a.row) < std::tie(b.col, b.row);
    });
    SparseMatrix m(rows, cols);
    std::size_t k = 0;
    while (k < entries.size()) {
        std::size_t col = entries[k].col;
        std::map<std::size_t, Scalar> column;
        for (; k < entries.size() && entries[k].col == col; ++k) column[entries[k].row] += entries[k].value;
        m.set_column(col, std::move(column));
    }
    return m;
}

/// Adds sign * block at (row block X, column block t) where blocks are module_dim wide.
inline void add_block(std::vector<Triplet>& out, std::size_t row_block, std::size_t col_block, std::size_t m,
                      const Matrix& block, int sign) {
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) {
            const Scalar& a = block(r, c);
            if (!a.is_zero()) out.push_back({row_block * m + r, col_block * m + c, sign > 0 ? a : -a});
        }
    }
}

inline void add_identity(std::vector<Triplet>& out, std::size_t row_block, std::size_t col_block, std::size_t m,
                         const Scalar& coeff) {
    for (std::size_t r = 0; r < m; ++r) out.push_back({row_block * m + r, col_block * m + r, coeff});
}

inline int parity_sign(std::size_t k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace detail

/// Coboundary C^n -> C^{n+1} as a sparse matrix on the canonical tuple bases.
///
/// CE:      (df)(x_1..x_{n+1}) = sum_i (-1)^{i+1} [x_i, f(..^x_i..)]
///                              + sum_{i<j} (-1)^{i+j} f([x_i,x_j], ..^x_i..^x_j..)
/// Leibniz: (df)(x_1..x_{n+1}) = [x_1, f(x_2..)] + sum_{i>=2} (-1)^i [f(..^x_i..), x_i]
///                              + sum_{i<j} (-1)^{j+1} f(.., x_{i-1}, [x_i,x_j], x_{i+1}, ..^x_j..)
template <Flavor F>
SparseMatrix coboundary_sparse(const Algebra<F>& g, const Representation<F>& module, std::size_t n) {
    const std::size_t d = g.dim();
    const std::size_t m = module.dim();
    const StructureConstants& c = g.constants();
    TupleBasis source(F, d, n);
    TupleBasis target(F, d, n + 1);
    std::vector<detail::Triplet> entries;

    for (std::size_t row = 0; row < target.size(); ++row) {
        const auto& x = target.tuple(row);
        const std::size_t len = x.size();
        if constexpr (F == Flavor::Lie) {
            for (std::size_t a = 0; a < len; ++a) {
                std::vector<std::size_t> rest;
                for (std::size_t p = 0; p < len; ++p)
                    if (p != a) rest.push_back(x[p]);
                detail::add_block(entries, row, source.index_of(rest), m, module.left(x[a]), detail::parity_sign(a));
            }
            for (std::size_t a = 0; a < len; ++a) {
                for (std::size_t b = a + 1; b < len; ++b) {
                    std::vector<std::size_t> rest;
                    for (std::size_t p = 0; p < len; ++p)
                        if (p != a && p != b) rest.push_back(x[p]);
                    for (std::size_t l = 0; l < d; ++l) {
                        const Scalar& coeff = c(x[a], x[b], l);
                        if (coeff.is_zero()) continue;
                        std::vector<std::size_t> t{l};
                        t.insert(t.end(), rest.begin(), rest.end());
                        auto norm = source.normalize(t);
                        if (!norm) continue;
                        int sign = detail::parity_sign(a + b) * norm->first;
                        detail::add_identity(entries, row, norm->second, m, sign > 0 ? coeff : -coeff);
                    }
                }
            }
        } else {
            {
                std::vector<std::size_t> rest(x.begin() + 1, x.end());
                detail::add_block(entries, row, source.index_of(rest), m, module.left(x[0]), 1);
            }
            for (std::size_t a = 1; a < len; ++a) {
                std::vector<std::size_t> rest;
                for (std::size_t p = 0; p < len; ++p)
                    if (p != a) rest.push_back(x[p]);
                detail::add_block(entries, row, source.index_of(rest), m, module.right(x[a]),
                                  detail::parity_sign(a + 1));
            }
            for (std::size_t a = 0; a < len; ++a) {
                for (std::size_t b = a + 1; b < len; ++b) {
                    for (std::size_t l = 0; l < d; ++l) {
                        const Scalar& coeff = c(x[a], x[b], l);
                        if (coeff.is_zero()) continue;
                        std::vector<std::size_t> t;
                        for (std::size_t p = 0; p < len; ++p) {
                            if (p == b) continue;
                            t.push_back(p == a ? l : x[p]);
                        }
                        int sign = detail::parity_sign(b);
                        detail::add_identity(entries, row, source.index_of(t), m, sign > 0 ? coeff : -coeff);
                    }
                }
            }
        }
    }
    return detail::assemble(target.size() * m, source.size() * m, std::move(entries));
}

inline LinearMap ce_coboundary_matrix(const LieAlgebra& g, const LieModule& module, std::size_t n) {
    return coboundary_sparse(g, module, n).to_dense();
}

inline LinearMap leibniz_coboundary_matrix(const LeibnizAlgebra& h, const LeibnizModule& module, std::size_t n) {
    return coboundary_sparse(h, module, n).to_dense();
}

template <Flavor F>
Cochain<F> coboundary(const Algebra<F>& g, const Representation<F>& module, const Cochain<F>& f) {
    SparseMatrix d = coboundary_sparse(g, module, f.degree);
    return {f.degree + 1, f.algebra_dim, f.module_dim, d.apply(f.values)};
}

/// Cohomology class with its canonical form: the representative reduced
/// modulo the RREF basis of the coboundary space. Two classes in the same
/// cohomology space are equal iff their canonical forms are identical.
template <Flavor F>
struct CohomologyClass {
    std::size_t degree = 0;
    Cochain<F> representative;
    Subspace coboundaries;
    Vector canonical;

    [[nodiscard]] bool is_zero() const { return crossext::is_zero(canonical); }

    friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
        check_same_space(a, b);
        return a.canonical == b.canonical;
    }
    friend CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b) {
        check_same_space(a, b);
        return make(a.representative + b.representative, a.coboundaries);
    }
    friend CohomologyClass operator-(const CohomologyClass& a, const CohomologyClass& b) {
        check_same_space(a, b);
        return make(a.representative - b.representative, a.coboundaries);
    }
    CohomologyClass operator-() const { return make(-representative, coboundaries); }
    friend CohomologyClass operator*(const Scalar& s, const CohomologyClass& a) {
        return make(s * a.representative, a.coboundaries);
    }

    static CohomologyClass make(Cochain<F> rep, Subspace coboundaries) {
        CohomologyClass c;
        c.degree = rep.degree;
        c.canonical = coboundaries.reduce(rep.values);
        c.representative = std::move(rep);
        c.coboundaries = std::move(coboundaries);
        return c;
    }

private:
    static void check_same_space(const CohomologyClass& a, const CohomologyClass& b) {
        if (a.degree != b.degree || !(a.coboundaries == b.coboundaries)) {
            throw std::invalid_argument("cohomology classes live in different spaces");
        }
    }
};

using CEClass = CohomologyClass<Flavor::Lie>;
using LeibnizClass = CohomologyClass<Flavor::Leibniz>;

/// H^n together with the data needed to reduce cochains to classes.
template <Flavor F>
struct CohomologySpace {
    std::size_t degree = 0;
    std::size_t algebra_dim = 0;
    std::size_t module_dim = 0;
    std::size_t cochain_dim = 0;
    std::size_t rank_in = 0;   // rank of d_{n-1}
    std::size_t rank_out = 0;  // rank of d_n
    Subspace cocycles;
    Subspace coboundaries;
    SparseMatrix differential;  // d_n
    std::vector<CohomologyClass<F>> basis;

    [[nodiscard]] std::size_t dim() const { return basis.size(); }

    /// Throws NOT_A_COCYCLE if d(z) != 0.
    [[nodiscard]] CohomologyClass<F> class_of(const Cochain<F>& z) const {
        if (z.degree != degree || z.values.size() != cochain_dim) {
            throw Error(ErrorCode::ShapeMismatch, "cochain does not belong to this cohomology space");
        }
        if (!crossext::is_zero(differential.apply(z.values))) {
            throw Error(ErrorCode::NotACocycle, "d(z) != 0 in degree " + std::to_string(degree));
        }
        return CohomologyClass<F>::make(z, coboundaries);
    }

    [[nodiscard]] CohomologyClass<F> zero_class() const {
        return CohomologyClass<F>::make(Cochain<F>::zero(degree, algebra_dim, module_dim), coboundaries);
    }
};

template <Flavor F>
CohomologySpace<F> cohomology(const Algebra<F>& g, const Representation<F>& module, std::size_t n) {
    CohomologySpace<F> h;
    h.degree = n;
    h.algebra_dim = g.dim();
    h.module_dim = module.dim();
    h.cochain_dim = Cochain<F>::space_dim(n, g.dim(), module.dim());
    h.differential = coboundary_sparse(g, module, n);
    h.cocycles = kernel(h.differential.to_dense());
    h.rank_out = h.cochain_dim - h.cocycles.dim();
    if (n == 0) {
        h.coboundaries = Subspace::zero(h.cochain_dim);
    } else {
        h.coboundaries = image(coboundary_sparse(g, module, n - 1).to_dense());
    }
    h.rank_in = h.coboundaries.dim();

    // Reduce the cocycle basis modulo coboundaries; the nonzero rows of the
    // RREF of the reduced vectors span a complement of B^n in Z^n.
    std::vector<Vector> reduced;
    for (std::size_t k = 0; k < h.cocycles.dim(); ++k) reduced.push_back(h.coboundaries.reduce(h.cocycles.basis_vector(k)));
    if (!reduced.empty()) {
        Subspace complement = Subspace::span(reduced, h.cochain_dim);
        for (std::size_t k = 0; k < complement.dim(); ++k) {
            Cochain<F> rep{n, g.dim(), module.dim(), complement.basis_vector(k)};
            h.basis.push_back(CohomologyClass<F>::make(std::move(rep), h.coboundaries));
        }
    }
    return h;
}

template <Flavor F>
CohomologyClass<F> class_of(const Algebra<F>& g, const Representation<F>& module, const Cochain<F>& z) {
    return cohomology(g, module, z.degree).class_of(z);
}

/// dim H^n for n = 0..max_degree; entries are (dim C^n, rank d_n, dim H^n).
struct CohomologyRow {
    std::size_t degree;
    std::size_t cochain_dim;
    std::size_t rank;
    std::size_t dim;
};

template <Flavor F>
std::vector<CohomologyRow> cohomology_table(const Algebra<F>& g, const Representation<F>& module,
                                            std::size_t max_degree) {
    std::vector<CohomologyRow> rows;
    std::size_t previous_rank = 0;
    for (std::size_t n = 0; n <= max_degree; ++n) {
        std::size_t cdim = Cochain<F>::space_dim(n, g.dim(), module.dim());
        std::size_t r = rank(coboundary_sparse(g, module, n).to_dense());
        rows.push_back({n, cdim, r, cdim - r - previous_rank});
        previous_rank = r;
    }
    return rows;
}

/// H^0 of a Lie module: {m : [x, m] = 0 for all x}.
inline Subspace h0_invariants(const LieAlgebra& /*g*/, const LieModule& module) { return invariants(module); }

/// b with d(b) = z when [z] = 0; nullopt when z represents a nonzero class.
/// Throws NOT_A_COCYCLE if d(z) != 0. For degree 0 only z = 0 is exact.
template <Flavor F>
std::optional<Cochain<F>> coboundary_witness(const Algebra<F>& g, const Representation<F>& module,
                                             const Cochain<F>& z) {
    if (!crossext::is_zero(coboundary_sparse(g, module, z.degree).apply(z.values))) {
        throw Error(ErrorCode::NotACocycle, "coboundary_witness: d(z) != 0");
    }
    if (z.degree == 0) {
        if (z.is_zero()) return Cochain<F>::zero(0, g.dim(), module.dim());
        return std::nullopt;
    }
    auto b = solve(coboundary_sparse(g, module, z.degree - 1).to_dense(), z.values);
    if (!b) return std::nullopt;
    return Cochain<F>{z.degree - 1, g.dim(), module.dim(), std::move(*b)};
}

/// 0 -> sub --alpha--> mid --beta--> quot -> 0, exact and equivariant.
template <Flavor F>
struct ShortExactSequence {
    Representation<F> sub;
    Representation<F> mid;
    Representation<F> quot;
    Matrix alpha;  // mid x sub
    Matrix beta;   // quot x mid

    static CheckResult check(const Algebra<F>& g, const ShortExactSequence& s) {
        if (auto v = check_module_morphism(g, s.sub, s.mid, s.alpha)) return v;
        if (auto v = check_module_morphism(g, s.mid, s.quot, s.beta)) return v;
        if (!is_injective(s.alpha)) return Violation{ErrorCode::NotExact, {0}, "alpha is not injective"};
        if (!(image(s.alpha) == kernel(s.beta))) return Violation{ErrorCode::NotExact, {1}, "im(alpha) != ker(beta)"};
        if (!is_surjective(s.beta)) return Violation{ErrorCode::NotExact, {2}, "beta is not surjective"};
        return std::nullopt;
    }

    static ShortExactSequence validate(const Algebra<F>& g, Representation<F> sub, Representation<F> mid,
                                       Representation<F> quot, Matrix alpha, Matrix beta) {
        ShortExactSequence s{std::move(sub), std::move(mid), std::move(quot), std::move(alpha), std::move(beta)};
        throw_if(check(g, s));
        return s;
    }

    /// 0 -> U -> M -> M/U -> 0 for a submodule U of M.
    static ShortExactSequence from_submodule(const Algebra<F>& g, const Representation<F>& m, const Subspace& u) {
        auto s = submodule(g, m, u);
        auto q = quotient_module(g, m, u);
        return validate(g, s.module, m, q.module, s.inclusion, q.projection);
    }

    /// 0 -> A -> A + B -> B -> 0
    static ShortExactSequence split(const Algebra<F>& g, const Representation<F>& a, const Representation<F>& b) {
        Matrix alpha = vstack(Matrix::identity(a.dim()), Matrix(b.dim(), a.dim()));
        Matrix beta = hstack(Matrix(b.dim(), a.dim()), Matrix::identity(b.dim()));
        return validate(g, a, direct_sum(g, a, b), b, alpha, beta);
    }
};

using LieSES = ShortExactSequence<Flavor::Lie>;
using LeibnizSES = ShortExactSequence<Flavor::Leibniz>;

/// Cochain-level snake lemma: lift the representative through beta with the
/// given section, apply d in the middle module, and pull back through alpha.
template <Flavor F>
CohomologyClass<F> connecting_hom(const Algebra<F>& g, const ShortExactSequence<F>& ses, const CohomologyClass<F>& c,
                                  const Matrix& lift_section) {
    if (c.representative.module_dim != ses.quot.dim()) {
        throw Error(ErrorCode::ShapeMismatch, "connecting_hom: class does not take values in the quotient module");
    }
    if (ses.beta * lift_section != Matrix::identity(ses.quot.dim())) {
        throw Error(ErrorCode::SectionMismatch, "connecting_hom: lift is not a section of beta");
    }
    Cochain<F> lifted = c.representative.push(lift_section);
    Cochain<F> d = coboundary(g, ses.mid, lifted);
    LinearSolver pull(ses.alpha);
    Cochain<F> out = Cochain<F>::zero(d.degree, g.dim(), ses.sub.dim());
    const std::size_t tuples = Cochain<F>::tuple_count(d.degree, g.dim());
    for (std::size_t t = 0; t < tuples; ++t) {
        auto v = pull.solve(d.value_at(t));
        if (!v) throw Error(ErrorCode::NotExact, "connecting_hom: d(lift) does not land in alpha(M)");
        out.set_value_at(t, *v);
    }
    return cohomology(g, ses.sub, out.degree).class_of(out);
}

template <Flavor F>
CohomologyClass<F> connecting_hom(const Algebra<F>& g, const ShortExactSequence<F>& ses, const CohomologyClass<F>& c) {
    return connecting_hom(g, ses, c, linear_section(ses.beta));
}

/// Abelian extension 0 -> M -> e -> g -> 0 built from a 2-cocycle. The basis of
/// e lists the module basis first, then the algebra basis. Brackets:
///   Lie:     [(m,x),(n,y)] = ([x,n] - [y,m] + a(x,y), [x,y])
///   Leibniz: [(m,x),(n,y)] = ([x,n] + [m,y] + a(x,y), [x,y])
template <Flavor F>
struct AbelianExtension {
    Algebra<F> algebra;
    Matrix inclusion;   // e x M
    Matrix projection;  // g x e
};

template <Flavor F>
AbelianExtension<F> abelian_extension_from_2cocycle(const Algebra<F>& g, const Representation<F>& module,
                                                     const Cochain<F>& alpha) {
    if (alpha.degree != 2 || alpha.algebra_dim != g.dim() || alpha.module_dim != module.dim()) {
        throw Error(ErrorCode::ShapeMismatch, "abelian extension needs a 2-cochain with values in the module");
    }
    if (!coboundary(g, module, alpha).is_zero()) {
        throw Error(ErrorCode::NotACocycle, "abelian extension: d(alpha) != 0");
    }
    const std::size_t m = module.dim();
    const std::size_t d = g.dim();
    StructureConstants c(m + d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t r = 0; r < m; ++r) {
                // [(m_a, 0), (0, x_j)] and [(0, x_j), (m_a, 0)]
                if constexpr (F == Flavor::Lie) {
                    c.at(a, m + j, r) = -module.left(j)(r, a);
                } else {
                    c.at(a, m + j, r) = module.right(j)(r, a);
                }
                c.at(m + j, a, r) = module.left(j)(r, a);
            }
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Vector a = alpha.value({i, j});
            for (std::size_t r = 0; r < m; ++r) c.at(m + i, m + j, r) = a[r];
            for (std::size_t k = 0; k < d; ++k) c.at(m + i, m + j, m + k) = g.constants()(i, j, k);
        }
    }
    AbelianExtension<F> e;
    e.algebra = Algebra<F>::validate(std::move(c));
    e.inclusion = vstack(Matrix::identity(m), Matrix(d, m));
    e.projection = hstack(Matrix(d, m), Matrix::identity(d));
    return e;
}

/// The 2-cocycle of an abelian extension with respect to a linear section s of
/// the projection: (x, y) -> [s x, s y] - s[x, y], read back in the kernel.
template <Flavor F>
Cochain<F> extension_cocycle(const Algebra<F>& g, const AbelianExtension<F>& e, const Matrix& section) {
    LinearSolver pull(e.inclusion);
    const std::size_t m = e.inclusion.cols();
    Cochain<F> out = Cochain<F>::zero(2, g.dim(), m);
    TupleBasis basis(F, g.dim(), 2);
    for (std::size_t t = 0; t < basis.size(); ++t) {
        const auto& x = basis.tuple(t);
        Vector v = e.algebra.bracket(section.column(x[0]), section.column(x[1])) - section.apply(g.bracket(x[0], x[1]));
        out.set_value_at(t, pull.solve_or_throw(v));
    }
    return out;
}

}  // namespace crossext
