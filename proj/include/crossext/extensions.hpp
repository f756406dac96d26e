#pragma once

#include "crossed.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crossext {

/// Pushout of vector spaces B <-f- A -g-> C: D = (B + C)/S with
/// S = {(f(a), -g(a))}, i(b) = [b, 0], j(c) = [0, c].
struct VectorPushout {
    Matrix f;  // B x A
    Matrix g;  // C x A
    Quotient quotient;
    Matrix i;  // D x B
    Matrix j;  // D x C

    [[nodiscard]] std::size_t dim() const { return quotient.dim; }
};

inline VectorPushout pushout_spaces(const Matrix& f, const Matrix& g) {
    if (f.cols() != g.cols()) throw Error(ErrorCode::ShapeMismatch, "pushout: maps have different sources");
    const std::size_t b = f.rows();
    const std::size_t c = g.rows();
    Subspace s = image(vstack(f, -g));
    VectorPushout po{f, g, quotient(b + c, s), {}, {}};
    po.i = po.quotient.projection * vstack(Matrix::identity(b), Matrix(c, b));
    po.j = po.quotient.projection * vstack(Matrix(b, c), Matrix::identity(c));
    return po;
}

/// The unique map D -> D' with theta i = i' and theta j = j', namely
/// theta([b, c]) = i'(b) + j'(c). Throws COCONE_MISMATCH unless j' g = i' f.
inline Matrix mediate(const VectorPushout& po, const Matrix& i2, const Matrix& j2) {
    if (i2.cols() != po.f.rows() || j2.cols() != po.g.rows() || i2.rows() != j2.rows()) {
        throw Error(ErrorCode::ShapeMismatch, "mediate: cocone has the wrong shape");
    }
    Matrix lhs = j2 * po.g;
    Matrix rhs = i2 * po.f;
    for (std::size_t a = 0; a < lhs.cols(); ++a) {
        if (lhs.column(a) != rhs.column(a)) throw Error(ErrorCode::CoconeMismatch, "j' g != i' f", {a});
    }
    Matrix theta = hstack(i2, j2) * po.quotient.section;
    // i and j jointly span D, so these two identities pin theta down.
    if (theta * po.i != i2 || theta * po.j != j2) {
        throw Error(ErrorCode::ValidationFail, "mediate: triangle identities fail");
    }
    return theta;
}

template <Flavor F>
struct Pushout {
    VectorPushout maps;
    Representation<F> module;
};

/// Pushout in the category of modules over `algebra`.
template <Flavor F>
Pushout<F> pushout(const Algebra<F>& algebra, const Representation<F>& a, const Representation<F>& b,
                   const Representation<F>& c, const Matrix& f, const Matrix& g) {
    throw_if(check_module_morphism(algebra, a, b, f));
    throw_if(check_module_morphism(algebra, a, c, g));
    VectorPushout po = pushout_spaces(f, g);
    Subspace s = image(vstack(f, -g));
    QuotientModule<F> d = quotient_module(algebra, direct_sum(algebra, b, c), s);
    return {std::move(po), std::move(d.module)};
}

/// 0 -> M -f-> M_{n-1} -> ... -> M_2 -> M_1 -d_1-> L -pi-> g -> 0
///
/// upper[k] is M_{k+2} and maps[k] is d_{k+2} : M_{k+2} -> M_{k+1}. For n = 2
/// there are no upper modules and f lands in M_1 = base.V.
struct CrossedExtension {
    std::size_t n = 2;
    LieAlgebra g;
    LieModule M;
    Matrix f;
    std::vector<LieModule> upper;
    std::vector<Matrix> maps;
    LieCrossedModule base;
    Matrix pi;  // g.dim x L.dim

    [[nodiscard]] const LieAlgebra& L() const { return base.L; }

    /// dim M_i for 1 <= i <= n - 1.
    [[nodiscard]] std::size_t dim_at(std::size_t i) const { return i == 1 ? base.V.dim() : upper.at(i - 2).dim(); }

    /// d_i : M_i -> M_{i-1} (i >= 2) or d_1 : M_1 -> L.
    [[nodiscard]] const Matrix& d(std::size_t i) const { return i == 1 ? base.partial : maps.at(i - 2); }

    /// The map out of M_{n-1}.
    [[nodiscard]] const Matrix& top() const { return d(n - 1); }

    friend bool operator==(const CrossedExtension&, const CrossedExtension&) = default;
};

namespace detail {

/// h : X -> M_1 commutes with the actions, X being a g-module and M_1 an
/// L-module: h[pi(x), v] = [x, h(v)] for x in L.
inline CheckResult check_into_base(const CrossedExtension& e, const LieModule& x, const Matrix& h, std::size_t label) {
    for (std::size_t k = 0; k < e.L().dim(); ++k) {
        if (h * x.left_action(e.pi.column(k)) != e.base.V.left(k) * h) {
            return Violation{ErrorCode::NotGModuleMap, {label, k}, "map into M_1 is not equivariant"};
        }
    }
    return std::nullopt;
}

inline CheckResult check_exact(const Matrix& in, const Matrix& out, std::size_t node, const std::string& label) {
    if (!(image(in) == kernel(out))) {
        return Violation{ErrorCode::ExactnessFail, {node}, "image != kernel at " + label};
    }
    return std::nullopt;
}

inline std::string node_label(std::size_t i) { return i == 0 ? std::string("L") : "M_" + std::to_string(i); }

}  // namespace detail

/// One line of a validation report.
struct NodeCheck {
    std::string label;
    CheckResult result;
};

/// Every check of the definition, in order: base crossed module, pi, the
/// module maps, then exactness from M_{n-1} down to L. The exactness node at
/// M_{n-1} includes injectivity of f; the node at L includes surjectivity of pi.
inline std::vector<NodeCheck> extension_report(const CrossedExtension& e) {
    std::vector<NodeCheck> out;
    auto shape = [&]() -> CheckResult {
        if (e.n < 2) return Violation{ErrorCode::ShapeMismatch, {}, "length must be at least 2"};
        if (e.upper.size() != e.n - 2 || e.maps.size() != e.n - 2) {
            return Violation{ErrorCode::ShapeMismatch, {}, "need n - 2 upper modules and maps"};
        }
        if (e.M.algebra_dim() != e.g.dim() || e.pi.rows() != e.g.dim() || e.pi.cols() != e.L().dim()) {
            return Violation{ErrorCode::ShapeMismatch, {}, "g, M and pi do not fit"};
        }
        for (const auto& m : e.upper) {
            if (m.algebra_dim() != e.g.dim()) return Violation{ErrorCode::ShapeMismatch, {}, "module is not over g"};
        }
        if (e.f.cols() != e.M.dim() || e.f.rows() != e.dim_at(e.n - 1)) {
            return Violation{ErrorCode::ShapeMismatch, {e.n}, "f has the wrong shape"};
        }
        for (std::size_t i = 2; i < e.n; ++i) {
            if (e.d(i).cols() != e.dim_at(i) || e.d(i).rows() != e.dim_at(i - 1)) {
                return Violation{ErrorCode::ShapeMismatch, {i}, "d_" + std::to_string(i) + " has the wrong shape"};
            }
        }
        return std::nullopt;
    };
    out.push_back({"shape", shape()});
    if (out.back().result) return out;

    CheckResult base = CrossedModule<Flavor::Lie>::check(e.base);
    if (base) base = Violation{ErrorCode::BaseNotCrossed, base->witness, base->to_string()};
    out.push_back({"base", base});
    out.push_back({"pi", check_algebra_map(e.L(), e.g, e.pi)});

    auto g_map = [&](const LieModule& src, std::size_t target, const Matrix& h, std::size_t label) -> CheckResult {
        if (target == 1) return detail::check_into_base(e, src, h, label);
        if (auto v = check_module_morphism(e.g, src, e.upper[target - 2], h)) {
            return Violation{ErrorCode::NotGModuleMap, {label}, v->to_string()};
        }
        return std::nullopt;
    };
    out.push_back({"f", g_map(e.M, e.n - 1, e.f, e.n)});
    for (std::size_t i = e.n - 1; i >= 2; --i) {
        out.push_back({"d_" + std::to_string(i), g_map(e.upper[i - 2], i - 1, e.d(i), i)});
    }

    for (std::size_t i = e.n - 1; i >= 1; --i) {
        CheckResult r;
        const std::string label = detail::node_label(i);
        if (i == e.n - 1 && !is_injective(e.f)) {
            r = Violation{ErrorCode::ExactnessFail, {i}, "f is not injective"};
        } else {
            const Matrix& in = i == e.n - 1 ? e.f : e.d(i + 1);
            r = detail::check_exact(in, e.d(i), i, label);
        }
        out.push_back({"exact at " + label, r});
    }
    CheckResult at_l = detail::check_exact(e.base.partial, e.pi, 0, "L");
    if (!at_l && !is_surjective(e.pi)) at_l = Violation{ErrorCode::ExactnessFail, {0}, "pi is not surjective"};
    out.push_back({"exact at L", at_l});
    return out;
}

inline CheckResult validate_extension(const CrossedExtension& e) {
    for (auto& node : extension_report(e)) {
        if (node.result) return node.result;
    }
    return std::nullopt;
}

inline CrossedExtension checked(CrossedExtension e) {
    throw_if(validate_extension(e));
    return e;
}

/// Opext^2 = Cross: a crossed module over (g, M) is a 2-fold extension.
inline CrossedExtension from_crossed(const CrossedModuleOver<Flavor::Lie>& x) {
    CrossedExtension e;
    e.n = 2;
    e.g = x.pair.g;
    e.M = x.pair.module;
    e.f = x.pair.inclusion;
    e.base = x.cm;
    e.pi = x.pair.projection;
    return checked(std::move(e));
}

inline CrossedModuleOver<Flavor::Lie> as_crossed(const CrossedExtension& e) {
    if (e.n != 2) throw Error(ErrorCode::LengthMismatch, "only 2-fold extensions are crossed modules");
    return CrossedModuleOver<Flavor::Lie>::validate(e.base, {e.g, e.pi, e.M, e.f});
}

inline CohomologyClass<Flavor::Lie> classify2(const CrossedExtension& e) { return classify2(as_crossed(e)); }

/// 0 -> M = M -> 0 -> ... -> 0 -> g = g -> 0; for n = 2 this is
/// 0 -> M = M -0-> g = g -> 0.
inline CrossedExtension zero_extension(const LieAlgebra& g, const LieModule& m, std::size_t n) {
    if (n < 2) throw Error(ErrorCode::LengthMismatch, "extensions have length at least 2");
    if (n == 2) return from_crossed(zero_crossed_module(g, m));
    CrossedExtension e;
    e.n = n;
    e.g = g;
    e.M = m;
    e.f = Matrix::identity(m.dim());
    LieModule zero = trivial_module(g, 0);
    e.base = LieCrossedModule::validate(g, zero, Matrix(g.dim(), 0));
    for (std::size_t i = 2; i < n; ++i) {
        e.upper.push_back(i == n - 1 ? m : zero);
        e.maps.push_back(Matrix(e.dim_at(i - 1), e.upper.back().dim()));
    }
    e.pi = Matrix::identity(g.dim());
    return checked(std::move(e));
}

/// The same sequence with head map -f.
inline CrossedExtension negate(const CrossedExtension& e) {
    CrossedExtension out = e;
    out.f = Scalar(-1) * e.f;
    return checked(std::move(out));
}

/// (alpha, d_{n-1}, ..., d_1, beta) between extensions over the same g.
/// delta[i - 1] is the component at M_i.
struct ExtensionMorphism {
    Matrix alpha;
    std::vector<Matrix> delta;
    Matrix beta;
};

inline CheckResult check_extension_morphism(const CrossedExtension& a, const CrossedExtension& b,
                                            const ExtensionMorphism& phi) {
    if (a.n != b.n) return Violation{ErrorCode::LengthMismatch, {a.n, b.n}, "extensions have different lengths"};
    if (!(a.g == b.g)) return Violation{ErrorCode::BaseMismatch, {}, "extensions are over different algebras"};
    const std::size_t n = a.n;
    if (phi.delta.size() != n - 1 || phi.alpha.rows() != b.M.dim() || phi.alpha.cols() != a.M.dim()) {
        return Violation{ErrorCode::ShapeMismatch, {}, "morphism has the wrong shape"};
    }
    for (std::size_t i = 1; i < n; ++i) {
        const Matrix& di = phi.delta[i - 1];
        if (di.rows() != b.dim_at(i) || di.cols() != a.dim_at(i)) {
            return Violation{ErrorCode::ShapeMismatch, {i}, "delta has the wrong shape"};
        }
    }
    if (auto v = check_module_morphism(a.g, a.M, b.M, phi.alpha)) {
        return Violation{ErrorCode::NotGModuleMap, {n}, v->to_string()};
    }
    for (std::size_t i = 2; i < n; ++i) {
        if (auto v = check_module_morphism(a.g, a.upper[i - 2], b.upper[i - 2], phi.delta[i - 1])) {
            return Violation{ErrorCode::NotGModuleMap, {i}, v->to_string()};
        }
    }
    if (b.f * phi.alpha != phi.delta[n - 2] * a.f) return Violation{ErrorCode::SquareFail, {n}, "f' alpha != delta f"};
    for (std::size_t i = n - 1; i >= 2; --i) {
        if (b.d(i) * phi.delta[i - 1] != phi.delta[i - 2] * a.d(i)) {
            return Violation{ErrorCode::SquareFail, {i}, "d' delta != delta d"};
        }
    }
    if (auto v = check_crossed_morphism(a.base, b.base, {phi.delta[0], phi.beta})) return v;
    if (b.pi * phi.beta != a.pi) return Violation{ErrorCode::NotIdentityOnG, {}, "pi' beta != pi"};
    return std::nullopt;
}

struct PushForward {
    CrossedExtension extension;
    ExtensionMorphism morphism;  // (alpha, i, id, ..., id) : E -> alpha E
    VectorPushout square;        // the pushout of f and alpha
};

/// alpha E: the head M -> M_{n-1} is replaced by M' -> pushout of (f, alpha).
/// For n = 2 the pushout is taken over L, with M and M' acted on through pi.
inline PushForward push_forward_with_morphism(const Matrix& alpha, const LieModule& target, const CrossedExtension& e) {
    throw_if(validate_extension(e));
    throw_if(check_module_morphism(e.g, e.M, target, alpha));
    const std::size_t n = e.n;
    CrossedExtension out = e;
    out.M = target;
    PushForward res;
    if (n == 2) {
        auto po = pushout(e.L(), pullback(e.L(), e.pi, e.M), e.base.V, pullback(e.L(), e.pi, target), e.f, alpha);
        Matrix partial = mediate(po.maps, e.base.partial, Matrix(e.L().dim(), target.dim()));
        out.base = LieCrossedModule::validate(e.L(), po.module, std::move(partial));
        out.f = po.maps.j;
        res.square = std::move(po.maps);
    } else {
        auto po = pushout(e.g, e.M, e.upper[n - 3], target, e.f, alpha);
        out.maps[n - 3] = mediate(po.maps, e.top(), Matrix(e.dim_at(n - 2), target.dim()));
        out.upper[n - 3] = po.module;
        out.f = po.maps.j;
        res.square = std::move(po.maps);
    }
    res.extension = checked(std::move(out));
    res.morphism.alpha = alpha;
    for (std::size_t i = 1; i < n; ++i) {
        res.morphism.delta.push_back(i == n - 1 ? res.square.i : Matrix::identity(e.dim_at(i)));
    }
    res.morphism.beta = Matrix::identity(e.L().dim());
    throw_if(check_extension_morphism(e, res.extension, res.morphism));
    return res;
}

inline CrossedExtension push_forward(const Matrix& alpha, const LieModule& target, const CrossedExtension& e) {
    return push_forward_with_morphism(alpha, target, e).extension;
}

/// Given phi : E -> E' with first component alpha, the induced morphism
/// (1, j, delta_{n-2}, ..., delta_1, beta) : alpha E -> E'.
inline ExtensionMorphism factor_through_push_forward(const PushForward& pf, const CrossedExtension& target,
                                                     const ExtensionMorphism& phi) {
    const std::size_t n = target.n;
    ExtensionMorphism out;
    out.alpha = Matrix::identity(target.M.dim());
    out.delta = phi.delta;
    out.delta[n - 2] = mediate(pf.square, phi.delta[n - 2], target.f);
    out.beta = phi.beta;
    throw_if(check_extension_morphism(pf.extension, target, out));
    return out;
}

/// L x_g L' = ker(pi, -pi') inside L + L', with the componentwise bracket.
struct FiberProduct {
    LieAlgebra algebra;
    Subspace space;      // inside L + L'
    Matrix inclusion;    // (L + L') x dim
    Matrix projection;   // g x dim
};

inline FiberProduct fiber_product(const LieAlgebra& l1, const Matrix& pi1, const LieAlgebra& l2, const Matrix& pi2) {
    const std::size_t a = l1.dim();
    const std::size_t b = l2.dim();
    FiberProduct fp;
    fp.space = kernel(hstack(pi1, Scalar(-1) * pi2));
    fp.inclusion = fp.space.inclusion();
    const std::size_t k = fp.space.dim();
    auto split = [&](const Vector& v) {
        return std::make_pair(Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(a)),
                              Vector(v.begin() + static_cast<std::ptrdiff_t>(a), v.end()));
    };
    StructureConstants c(k);
    for (std::size_t p = 0; p < k; ++p) {
        auto [x1, x2] = split(fp.space.basis_vector(p));
        for (std::size_t q = 0; q < k; ++q) {
            auto [y1, y2] = split(fp.space.basis_vector(q));
            Vector coords = fp.space.coordinates(concat(l1.bracket(x1, y1), l2.bracket(x2, y2)));
            for (std::size_t r = 0; r < k; ++r) c.at(p, q, r) = coords[r];
        }
    }
    fp.algebra = validate_lie(std::move(c));
    fp.projection = hstack(pi1, Matrix(pi1.rows(), b)) * fp.inclusion;
    return fp;
}

/// E +_g E': the componentwise sum over the fiber product of the bases.
inline CrossedExtension sum_over_g(const CrossedExtension& a, const CrossedExtension& b) {
    if (a.n != b.n) throw Error(ErrorCode::LengthMismatch, "sum over g needs equal lengths", {a.n, b.n});
    if (!(a.g == b.g)) throw Error(ErrorCode::BaseMismatch, "sum over g needs the same algebra g");
    FiberProduct fp = fiber_product(a.L(), a.pi, b.L(), b.pi);
    const std::size_t la = a.L().dim();
    std::vector<Matrix> acts;
    for (std::size_t p = 0; p < fp.space.dim(); ++p) {
        Vector v = fp.space.basis_vector(p);
        Vector x1(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(la));
        Vector x2(v.begin() + static_cast<std::ptrdiff_t>(la), v.end());
        acts.push_back(block_diagonal(a.base.V.left_action(x1), b.base.V.left_action(x2)));
    }
    const std::size_t v_dim = a.base.V.dim() + b.base.V.dim();
    LieModule v = LieModule::validate(fp.algebra, v_dim, std::move(acts));
    Matrix stacked = block_diagonal(a.base.partial, b.base.partial);
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < v_dim; ++j) cols.push_back(fp.space.coordinates(stacked.column(j)));
    Matrix partial = Matrix::from_columns(cols, fp.space.dim());

    CrossedExtension out;
    out.n = a.n;
    out.g = a.g;
    out.M = direct_sum(a.g, a.M, b.M);
    out.f = block_diagonal(a.f, b.f);
    for (std::size_t i = 2; i < a.n; ++i) {
        out.upper.push_back(direct_sum(a.g, a.upper[i - 2], b.upper[i - 2]));
        out.maps.push_back(block_diagonal(a.d(i), b.d(i)));
    }
    out.base = LieCrossedModule::validate(fp.algebra, std::move(v), std::move(partial));
    out.pi = fp.projection;
    return checked(std::move(out));
}

/// (m_1, m_2) -> m_1 + m_2
inline Matrix codiagonal(std::size_t dim) { return hstack(Matrix::identity(dim), Matrix::identity(dim)); }

/// E + E' = codiagonal_*(E +_g E').
inline CrossedExtension baer_sum(const CrossedExtension& a, const CrossedExtension& b) {
    if (!(a.M == b.M)) throw Error(ErrorCode::BaseMismatch, "Baer sum needs the same module M");
    CrossedExtension s = sum_over_g(a, b);
    return push_forward(codiagonal(a.M.dim()), a.M, s);
}

/// Baer sum of crossed modules over (g, M) built as a pushout of vector
/// spaces: V + V' = (V + V' + M)/{(i m_1, i' m_2, -(m_1 + m_2))}, acted on by
/// L x_g L' through the quotient map r, with d~ induced by (d, d').
inline CrossedExtension baer_sum_n2(const CrossedExtension& a, const CrossedExtension& b) {
    if (a.n != 2 || b.n != 2) throw Error(ErrorCode::LengthMismatch, "baer_sum_n2 takes crossed modules");
    if (!(a.g == b.g) || !(a.M == b.M)) throw Error(ErrorCode::BaseMismatch, "crossed modules over different (g, M)");
    FiberProduct fp = fiber_product(a.L(), a.pi, b.L(), b.pi);
    const std::size_t m = a.M.dim();
    VectorPushout po = pushout_spaces(block_diagonal(a.f, b.f), codiagonal(m));
    const Matrix& r = po.i;
    Matrix r_section = linear_section(r);
    const std::size_t la = a.L().dim();
    std::vector<Matrix> acts;
    for (std::size_t p = 0; p < fp.space.dim(); ++p) {
        Vector v = fp.space.basis_vector(p);
        Vector x1(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(la));
        Vector x2(v.begin() + static_cast<std::ptrdiff_t>(la), v.end());
        Matrix on_sum = block_diagonal(a.base.V.left_action(x1), b.base.V.left_action(x2));
        Matrix act = r * on_sum * r_section;
        if (act * r != r * on_sum) throw Error(ErrorCode::ValidationFail, "action does not descend to V + V'", {p});
        acts.push_back(std::move(act));
    }
    LieModule v = LieModule::validate(fp.algebra, po.dim(), std::move(acts));
    Matrix pair_partial = block_diagonal(a.base.partial, b.base.partial);
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < pair_partial.cols(); ++j) cols.push_back(fp.space.coordinates(pair_partial.column(j)));
    Matrix into_fiber = Matrix::from_columns(cols, fp.space.dim());
    Matrix partial = mediate(po, into_fiber, Matrix(fp.space.dim(), m));
    auto cm = LieCrossedModule::validate(fp.algebra, std::move(v), std::move(partial));
    return from_crossed(CrossedModuleOver<Flavor::Lie>::validate(std::move(cm), {a.g, fp.projection, a.M, po.j}));
}

struct SplitWitness {
    Matrix retraction;            // G : M_{n-1} -> M with G f = id
    ExtensionMorphism to_zero;    // (id, G, 0, ..., 0, pi) : E -> 0
};

/// Looks for an equivariant G : M_{n-1} -> M with G f = id_M. When one exists,
/// the morphism (id, G, 0, ..., 0, pi) to the zero extension is built and
/// checked, certifying that E is 0. For n = 2, G must be L-equivariant.
inline std::optional<SplitWitness> split_detect(const CrossedExtension& e) {
    throw_if(validate_extension(e));
    const std::size_t m = e.M.dim();
    const std::size_t top = e.dim_at(e.n - 1);
    // Unknowns: G(r, c) at index r * top + c.
    std::vector<std::pair<Matrix, Matrix>> actions;  // (on M_{n-1}, on M)
    if (e.n == 2) {
        for (std::size_t k = 0; k < e.L().dim(); ++k) {
            actions.emplace_back(e.base.V.left(k), e.M.left_action(e.pi.column(k)));
        }
    } else {
        for (std::size_t k = 0; k < e.g.dim(); ++k) actions.emplace_back(e.upper[e.n - 3].left(k), e.M.left(k));
    }
    const std::size_t unknowns = m * top;
    const std::size_t eqs = m * m + actions.size() * m * top;
    Matrix sys(eqs, unknowns);
    Vector rhs(eqs);
    std::size_t row = 0;
    // (G f)(r, c) = sum_t G(r, t) f(t, c)
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c, ++row) {
            for (std::size_t t = 0; t < top; ++t) sys(row, r * top + t) = e.f(t, c);
            rhs[row] = r == c ? Scalar(1) : Scalar(0);
        }
    }
    // G X - Y G = 0
    for (const auto& [x, y] : actions) {
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < top; ++c, ++row) {
                for (std::size_t t = 0; t < top; ++t) sys(row, r * top + t) += x(t, c);
                for (std::size_t t = 0; t < m; ++t) sys(row, t * top + c) -= y(r, t);
            }
        }
    }
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    Matrix g(m, top);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < top; ++c) g(r, c) = (*sol)[r * top + c];
    }
    CrossedExtension zero = zero_extension(e.g, e.M, e.n);
    ExtensionMorphism phi;
    phi.alpha = Matrix::identity(m);
    for (std::size_t i = 1; i < e.n; ++i) {
        phi.delta.push_back(i == e.n - 1 ? g : Matrix(zero.dim_at(i), e.dim_at(i)));
    }
    phi.beta = e.pi;
    throw_if(check_extension_morphism(e, zero, phi));
    return SplitWitness{std::move(g), std::move(phi)};
}

/// delta E for 0 -> M -alpha-> M' -beta-> M'' -> 0 and E over M'':
/// 0 -> M -alpha-> M' -f beta-> M_{n-1} -> ... -> L -> g -> 0.
inline CrossedExtension opext_connecting(const LieSES& ses, const CrossedExtension& e) {
    throw_if(validate_extension(e));
    if (!(ses.quot == e.M)) throw Error(ErrorCode::BaseMismatch, "extension is not over the quotient module");
    throw_if(LieSES::check(e.g, ses));
    CrossedExtension out = e;
    out.n = e.n + 1;
    out.M = ses.sub;
    out.f = ses.alpha;
    out.upper.push_back(ses.mid);
    out.maps.push_back(e.f * ses.beta);
    return checked(std::move(out));
}

}  // namespace crossext
