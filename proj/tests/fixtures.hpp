#pragma once

// Shared test fixtures: small algebras, modules, random basis changes and
// crossed modules built from them.

#include "crossext/extensions.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace fx {

using namespace crossext;

struct Entry {
    std::size_t i, j, k;
    std::int64_t value;
};

inline StructureConstants constants(std::size_t dim, std::initializer_list<Entry> entries, bool antisym = true) {
    StructureConstants c(dim);
    for (const auto& e : entries) c.set(e.i, e.j, e.k, Scalar(e.value), antisym);
    return c;
}

inline Matrix mat(std::size_t rows, std::size_t cols, std::initializer_list<std::int64_t> values) {
    Matrix m(rows, cols);
    std::size_t idx = 0;
    for (auto v : values) {
        m(idx / cols, idx % cols) = Scalar(v);
        ++idx;
    }
    return m;
}

inline Vector vec(std::initializer_list<std::int64_t> values) {
    Vector v;
    for (auto x : values) v.emplace_back(x);
    return v;
}

// Lie algebras -------------------------------------------------------------

inline LieAlgebra abelian(std::size_t n) { return abelian_lie(n); }

/// [x, y] = y
inline LieAlgebra r2() { return validate_lie(constants(2, {{0, 1, 1, 1}})); }

/// [x, y] = z
inline LieAlgebra heisenberg() { return validate_lie(constants(3, {{0, 1, 2, 1}})); }

/// basis e, f, h: [e,f] = h, [h,e] = 2e, [h,f] = -2f
inline LieAlgebra sl2() { return validate_lie(constants(3, {{0, 1, 2, 1}, {2, 0, 0, 2}, {2, 1, 1, -2}})); }

/// upper triangular 2x2 matrices, basis E11, E12, E22
inline LieAlgebra borel() { return validate_lie(constants(3, {{0, 1, 1, 1}, {1, 2, 1, 1}})); }

/// gl2, basis E11, E12, E21, E22
inline LieAlgebra gl2() {
    return validate_lie(constants(4, {{0, 1, 1, 1},
                                      {0, 2, 2, -1},
                                      {1, 2, 0, 1},
                                      {1, 2, 3, -1},
                                      {1, 3, 1, 1},
                                      {2, 3, 2, -1}}));
}

template <Flavor F>
Algebra<F> direct_sum_algebra(const Algebra<F>& a, const Algebra<F>& b) {
    const std::size_t n = a.dim() + b.dim();
    StructureConstants c(n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k) c.at(i, j, k) = a.constants()(i, j, k);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            for (std::size_t k = 0; k < b.dim(); ++k) c.at(a.dim() + i, a.dim() + j, a.dim() + k) = b.constants()(i, j, k);
    return Algebra<F>::validate(std::move(c));
}

// Leibniz algebras ---------------------------------------------------------

/// [x, x] = y, everything else zero
inline LeibnizAlgebra leibniz_square() { return validate_leibniz(constants(2, {{0, 0, 1, 1}}, false)); }

/// [x, x] = z, [y, x] = z (non-Lie, nilpotent)
inline LeibnizAlgebra leibniz_three() { return validate_leibniz(constants(3, {{0, 0, 2, 1}, {1, 0, 2, 1}}, false)); }

// Modules ------------------------------------------------------------------

/// Defining representation of sl2 on K^2.
inline LieModule sl2_defining(const LieAlgebra& g) {
    return validate_module(g, 2, {mat(2, 2, {0, 1, 0, 0}), mat(2, 2, {0, 0, 1, 0}), mat(2, 2, {1, 0, 0, -1})});
}

/// Defining representation of gl2 on K^2.
inline LieModule gl2_defining(const LieAlgebra& g) {
    return validate_module(g, 2, {mat(2, 2, {1, 0, 0, 0}), mat(2, 2, {0, 1, 0, 0}), mat(2, 2, {0, 0, 1, 0}),
                                  mat(2, 2, {0, 0, 0, 1})});
}

/// Dual module: x acts by -transpose.
inline LieModule dual(const LieAlgebra& g, const LieModule& m) {
    std::vector<Matrix> acts;
    for (const auto& a : m.left()) acts.push_back(Scalar(-1) * a.transpose());
    return validate_module(g, m.dim(), std::move(acts));
}

/// Abelian K^d acting on K^2 through the first coordinate by N = [[0,1],[0,0]].
inline LieModule nilpotent_module(const LieAlgebra& abelian_d) {
    std::vector<Matrix> acts(abelian_d.dim(), Matrix(2, 2));
    acts[0] = mat(2, 2, {0, 1, 0, 0});
    return validate_module(abelian_d, 2, std::move(acts));
}

/// r2 acting on K^2 with x = diag(1, 0), y = E12 (a faithful representation).
inline LieModule r2_defining(const LieAlgebra& g) {
    return validate_module(g, 2, {mat(2, 2, {1, 0, 0, 0}), mat(2, 2, {0, 1, 0, 0})});
}

/// Heisenberg acting on K^3 by strictly upper triangular matrices.
inline LieModule heisenberg_defining(const LieAlgebra& g) {
    return validate_module(g, 3, {mat(3, 3, {0, 1, 0, 0, 0, 0, 0, 0, 0}), mat(3, 3, {0, 0, 0, 0, 0, 1, 0, 0, 0}),
                                  mat(3, 3, {0, 0, 1, 0, 0, 0, 0, 0, 0})});
}

// Randomness ---------------------------------------------------------------

using Rng = std::mt19937_64;

inline std::int64_t small(Rng& rng, std::int64_t lo = -3, std::int64_t hi = 3) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Random integer matrix with determinant +-1 (product of elementary moves).
inline Matrix unimodular(std::size_t n, Rng& rng) {
    Matrix m = Matrix::identity(n);
    if (n < 2) {
        if (n == 1 && small(rng, 0, 1) == 1) m(0, 0) = Scalar(-1);
        return m;
    }
    for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
        auto a = static_cast<std::size_t>(small(rng, 0, static_cast<std::int64_t>(n) - 1));
        auto b = static_cast<std::size_t>(small(rng, 0, static_cast<std::int64_t>(n) - 2));
        if (b >= a) ++b;
        Scalar c(small(rng, -2, 2));
        for (std::size_t r = 0; r < n; ++r) m(r, a) += c * m(r, b);
    }
    return m;
}

inline Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng, std::int64_t lo = -3, std::int64_t hi = 3) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(small(rng, lo, hi));
    return m;
}

inline Vector random_vector(std::size_t n, Rng& rng) {
    Vector v(n);
    for (auto& x : v) x = Scalar(small(rng));
    return v;
}

inline Matrix inverse(const Matrix& m) { return *LinearSolver(m).solve_columns(Matrix::identity(m.rows())); }

/// The same algebra in the basis given by the columns of t.
template <Flavor F>
Algebra<F> rebase(const Algebra<F>& g, const Matrix& t) {
    return Algebra<F>::validate(g.constants().change_basis(t));
}

/// The module m over g, viewed over rebase(g, t) and in the module basis s.
template <Flavor F>
Representation<F> rebase(const Algebra<F>& g, const Representation<F>& m, const Matrix& t, const Matrix& s) {
    Algebra<F> g2 = rebase(g, t);
    Matrix si = inverse(s);
    std::vector<Matrix> left;
    std::vector<Matrix> right;
    for (std::size_t k = 0; k < g.dim(); ++k) {
        left.push_back(si * m.left_action(t.column(k)) * s);
        if constexpr (F == Flavor::Leibniz) right.push_back(si * m.right_action(t.column(k)) * s);
    }
    return Representation<F>::validate(g2, m.dim(), std::move(left), std::move(right));
}

/// A random cocycle in Z^n(g, M): a random combination of a kernel basis.
template <Flavor F>
Cochain<F> random_cocycle(const Algebra<F>& g, const Representation<F>& m, std::size_t n, Rng& rng) {
    auto h = cohomology(g, m, n);
    Cochain<F> z = Cochain<F>::zero(n, g.dim(), m.dim());
    for (std::size_t k = 0; k < h.cocycles.dim(); ++k) z.values = z.values + Scalar(small(rng)) * h.cocycles.basis_vector(k);
    return z;
}

template <Flavor F>
Cochain<F> random_cochain(std::size_t n, std::size_t gdim, std::size_t mdim, Rng& rng) {
    Cochain<F> c = Cochain<F>::zero(n, gdim, mdim);
    for (auto& x : c.values) x = Scalar(small(rng));
    return c;
}

// Pairs (g, M) -------------------------------------------------------------

struct LiePair {
    std::string name;
    LieAlgebra g;
    LieModule m;
};

/// Hand-made (g, M) pairs with dim g <= 5 and dim M <= 4.
inline std::vector<LiePair> lie_pairs() {
    std::vector<LiePair> out;
    auto add = [&](std::string name, const LieAlgebra& g, const LieModule& m) { out.push_back({std::move(name), g, m}); };
    for (std::size_t n = 1; n <= 5; ++n) add("abelian" + std::to_string(n) + "/K", abelian(n), trivial_module(abelian(n), 1));
    add("abelian3/nilpotent", abelian(3), nilpotent_module(abelian(3)));
    add("r2/K", r2(), trivial_module(r2(), 1));
    add("r2/ad", r2(), adjoint(r2()));
    add("r2/defining", r2(), r2_defining(r2()));
    add("heisenberg/K", heisenberg(), trivial_module(heisenberg(), 1));
    add("heisenberg/ad", heisenberg(), adjoint(heisenberg()));
    add("heisenberg/defining", heisenberg(), heisenberg_defining(heisenberg()));
    add("sl2/K", sl2(), trivial_module(sl2(), 1));
    add("sl2/ad", sl2(), adjoint(sl2()));
    add("sl2/defining", sl2(), sl2_defining(sl2()));
    add("sl2/defining+K2", sl2(), direct_sum(sl2(), sl2_defining(sl2()), trivial_module(sl2(), 2)));
    add("borel/ad", borel(), adjoint(borel()));
    add("gl2/defining", gl2(), gl2_defining(gl2()));
    add("gl2/dual", gl2(), dual(gl2(), gl2_defining(gl2())));
    add("gl2/ad", gl2(), adjoint(gl2()));
    auto r2h = direct_sum_algebra(r2(), heisenberg());
    add("r2+heis/K", r2h, trivial_module(r2h, 1));
    auto r2a = direct_sum_algebra(r2(), abelian(3));
    add("r2+ab3/K2", r2a, trivial_module(r2a, 2));
    return out;
}

struct LeibnizPair {
    std::string name;
    LeibnizAlgebra g;
    LeibnizModule m;
};

/// [x, x] = y acting on K^2 through x by N, with right action -left.
inline LeibnizModule leibniz_square_module(const LeibnizAlgebra& h) {
    Matrix n = mat(2, 2, {0, 1, 0, 0});
    return validate_module(h, 2, {n, Matrix(2, 2)}, {Scalar(-1) * n, Matrix(2, 2)});
}

inline std::vector<LeibnizPair> leibniz_pairs() {
    std::vector<LeibnizPair> out;
    auto add = [&](std::string name, const LeibnizAlgebra& g, const LeibnizModule& m) { out.push_back({std::move(name), g, m}); };
    auto sq = leibniz_square();
    add("square/K", sq, trivial_module(sq, 1));
    add("square/ad", sq, adjoint(sq));
    add("square/N", sq, leibniz_square_module(sq));
    auto three = leibniz_three();
    add("three/K", three, trivial_module(three, 1));
    add("three/ad", three, adjoint(three));
    add("sl2/K", as_leibniz(sl2()), trivial_module(as_leibniz(sl2()), 1));
    add("sl2/defining", as_leibniz(sl2()), as_leibniz(sl2(), sl2_defining(sl2())));
    add("r2/ad", as_leibniz(r2()), as_leibniz(r2(), adjoint(r2())));
    add("heisenberg/K", as_leibniz(heisenberg()), trivial_module(as_leibniz(heisenberg()), 1));
    auto sqr2 = direct_sum_algebra(sq, as_leibniz(r2()));
    add("square+r2/K", sqr2, trivial_module(sqr2, 1));
    add("square+r2/ad", sqr2, adjoint(sqr2));
    return out;
}

// Short exact sequences ----------------------------------------------------

struct SesFixture {
    std::string name;
    LieAlgebra g;
    LieSES ses;
};

/// Sequences 0 -> M -> M' -> M'' -> 0 with dim M' <= 3.
inline std::vector<SesFixture> ses_fixtures() {
    std::vector<SesFixture> out;
    auto add = [&](std::string name, const LieAlgebra& g, LieSES s) { out.push_back({std::move(name), g, std::move(s)}); };
    auto ab2 = abelian(2);
    auto ab3 = abelian(3);
    // Non-split: x1 acts by N, the invariant line is a submodule.
    add("ab2/N", ab2, LieSES::from_submodule(ab2, nilpotent_module(ab2), Subspace::span({vec({1, 0})}, 2)));
    add("ab3/N", ab3, LieSES::from_submodule(ab3, nilpotent_module(ab3), Subspace::span({vec({1, 0})}, 2)));
    auto h = heisenberg();
    auto hd = heisenberg_defining(h);
    add("heis/defining>line", h, LieSES::from_submodule(h, hd, Subspace::span({vec({1, 0, 0})}, 3)));
    add("heis/defining>plane", h, LieSES::from_submodule(h, hd, Subspace::span({vec({1, 0, 0}), vec({0, 1, 0})}, 3)));
    add("heis/ad>center", h, LieSES::from_submodule(h, adjoint(h), Subspace::span({vec({0, 0, 1})}, 3)));
    add("heis/K+K split", h, LieSES::split(h, trivial_module(h, 1), trivial_module(h, 1)));
    auto r = r2();
    add("r2/ad>ideal", r, LieSES::from_submodule(r, adjoint(r), Subspace::span({vec({0, 1})}, 2)));
    add("r2/defining>line", r, LieSES::from_submodule(r, r2_defining(r), Subspace::span({vec({1, 0})}, 2)));
    add("r2/K+K split", r, LieSES::split(r, trivial_module(r, 1), trivial_module(r, 1)));
    auto b = borel();
    add("borel/ad>derived", b, LieSES::from_submodule(b, adjoint(b), Subspace::span({vec({0, 1, 0})}, 3)));
    add("ab2/K+K split", ab2, LieSES::split(ab2, trivial_module(ab2, 1), trivial_module(ab2, 1)));
    add("ab3/K+K split", ab3, LieSES::split(ab3, trivial_module(ab3, 1), trivial_module(ab3, 1)));
    return out;
}

// Crossed modules ----------------------------------------------------------

/// c(gamma x, gamma y, ...) for a linear map gamma : g' -> g (g.dim x g'.dim).
template <Flavor F>
Cochain<F> pull_cochain(const Cochain<F>& c, const Matrix& gamma) {
    const std::size_t n = c.degree;
    const std::size_t d2 = gamma.cols();
    Cochain<F> out = Cochain<F>::zero(n, d2, c.module_dim);
    TupleBasis target(F, d2, n);
    TupleBasis source(F, c.algebra_dim, n);
    for (std::size_t t = 0; t < target.size(); ++t) {
        const auto& x = target.tuple(t);
        Vector v(c.module_dim);
        // Sum over all index tuples of the source, weighting by gamma entries.
        std::vector<std::size_t> idx(n, 0);
        for (bool more = true; more;) {
            Scalar w(1);
            for (std::size_t k = 0; k < n && !w.is_zero(); ++k) w *= gamma(idx[k], x[k]);
            if (!w.is_zero()) axpy(v, w, c.value(idx));
            more = false;
            for (std::size_t k = 0; k < n; ++k) {
                if (++idx[k] < c.algebra_dim) {
                    more = true;
                    break;
                }
                idx[k] = 0;
            }
        }
        out.set_value_at(t, v);
    }
    return out;
}

/// The crossed module in new bases: columns of t for L, columns of s for V.
template <Flavor F>
CrossedModule<F> transport(const CrossedModule<F>& cm, const Matrix& t, const Matrix& s) {
    return CrossedModule<F>::validate(rebase(cm.L, t), rebase(cm.L, cm.V, t, s), inverse(t) * cm.partial * s);
}

struct NamedCrossed {
    std::string name;
    LieCrossedModule cm;
};

/// Ideal I of g with the adjoint action and d the inclusion.
inline LieCrossedModule ideal_inclusion(const LieAlgebra& g, const Subspace& ideal) {
    auto sub = submodule(g, adjoint(g), ideal);
    return LieCrossedModule::validate(g, sub.module, sub.inclusion);
}

/// Crossed modules of several shapes: d = 0, d = id, ideal inclusions and
/// Yoneda splices of the short exact sequences with random 2-cocycles.
inline std::vector<NamedCrossed> crossed_fixtures() {
    std::vector<NamedCrossed> out;
    for (const auto& p : lie_pairs()) {
        if (p.g.dim() <= 4) out.push_back({"zero:" + p.name, zero_crossed_module(p.g, p.m).cm});
    }
    for (const auto& g : {sl2(), r2(), heisenberg(), gl2(), borel()}) {
        out.push_back({"identity", LieCrossedModule::validate(g, adjoint(g), Matrix::identity(g.dim()))});
    }
    out.push_back({"heisenberg>center", ideal_inclusion(heisenberg(), Subspace::span({vec({0, 0, 1})}, 3))});
    out.push_back({"r2>derived", ideal_inclusion(r2(), Subspace::span({vec({0, 1})}, 2))});
    out.push_back({"gl2>sl2", ideal_inclusion(gl2(), Subspace::span({vec({0, 1, 0, 0}), vec({0, 0, 1, 0}), vec({1, 0, 0, -1})}, 4))});
    out.push_back({"borel>derived", ideal_inclusion(borel(), Subspace::span({vec({0, 1, 0})}, 3))});
    Rng rng(17);
    for (const auto& s : ses_fixtures()) {
        auto z = random_cocycle(s.g, s.ses.quot, 2, rng);
        out.push_back({"yoneda:" + s.name, yoneda_crossed_module(s.g, s.ses, z).cm});
    }
    return out;
}

}  // namespace fx
