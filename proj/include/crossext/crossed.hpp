#pragma once

#include "cohomology.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace crossext {

/// Crossed module (V, L, d): L acts on V, d : V -> L is a map of L-modules, and
///   Lie:     [d v, w] = -[d w, v]
///   Leibniz: [d v, w] =  [v, d w]
template <Flavor F>
struct CrossedModule {
    Algebra<F> L;
    Representation<F> V;
    Matrix partial;  // L.dim x V.dim

    static CheckResult check(const CrossedModule& cm) {
        const std::size_t nl = cm.L.dim();
        const std::size_t nv = cm.V.dim();
        if (cm.partial.rows() != nl || cm.partial.cols() != nv || cm.V.algebra_dim() != nl) {
            return Violation{ErrorCode::ShapeMismatch, {}, "partial must be dim L x dim V"};
        }
        for (std::size_t i = 0; i < nl; ++i) {
            Matrix lhs = cm.partial * cm.V.left(i);
            Matrix rhs = cm.L.constants().left_multiplication(i) * cm.partial;
            for (std::size_t j = 0; j < nv; ++j) {
                if (lhs.column(j) != rhs.column(j)) {
                    return Violation{ErrorCode::EquivarianceFail, {i, j}, "d[x,v] != [x,dv]"};
                }
            }
            if constexpr (F == Flavor::Leibniz) {
                Matrix lhs_r = cm.partial * cm.V.right(i);
                Matrix rhs_r = cm.L.constants().right_multiplication(i) * cm.partial;
                for (std::size_t j = 0; j < nv; ++j) {
                    if (lhs_r.column(j) != rhs_r.column(j)) {
                        return Violation{ErrorCode::EquivarianceFail, {i, j}, "d[v,x] != [dv,x]"};
                    }
                }
            }
        }
        for (std::size_t a = 0; a < nv; ++a) {
            Matrix act_a = cm.V.left_action(cm.partial.column(a));
            for (std::size_t b = (F == Flavor::Lie ? a : 0); b < nv; ++b) {
                Vector lhs = act_a.column(b);
                if constexpr (F == Flavor::Lie) {
                    Vector rhs = -cm.V.left_action(cm.partial.column(b)).column(a);
                    if (lhs != rhs) return Violation{ErrorCode::PeifferFail, {a, b}, "[dv,w] != -[dw,v]"};
                } else {
                    Vector rhs = cm.V.right_action(cm.partial.column(b)).column(a);
                    if (lhs != rhs) return Violation{ErrorCode::PeifferFail, {a, b}, "[dv,w] != [v,dw]"};
                }
            }
        }
        // Derived: im(d) acts trivially on ker(d).
        Subspace ker = kernel(cm.partial);
        for (std::size_t a = 0; a < nv; ++a) {
            Vector x = cm.partial.column(a);
            for (std::size_t k = 0; k < ker.dim(); ++k) {
                bool moved = !is_zero(cm.V.left_action(x).apply(ker.basis_vector(k)));
                if constexpr (F == Flavor::Leibniz) moved = moved || !is_zero(cm.V.right_action(x).apply(ker.basis_vector(k)));
                if (moved) return Violation{ErrorCode::PeifferFail, {a, k}, "im(d) acts nontrivially on ker(d)"};
            }
        }
        return std::nullopt;
    }

    static CrossedModule validate(Algebra<F> L, Representation<F> V, Matrix partial) {
        CrossedModule cm{std::move(L), std::move(V), std::move(partial)};
        throw_if(check(cm));
        return cm;
    }

    friend bool operator==(const CrossedModule&, const CrossedModule&) = default;
};

using LieCrossedModule = CrossedModule<Flavor::Lie>;
using LeibnizCrossedModule = CrossedModule<Flavor::Leibniz>;

template <Flavor F>
CheckResult validate_crossed(const CrossedModule<F>& cm) {
    return CrossedModule<F>::check(cm);
}

inline LeibnizCrossedModule as_leibniz(const LieCrossedModule& cm) {
    return LeibnizCrossedModule::validate(as_leibniz(cm.L), as_leibniz(cm.L, cm.V), cm.partial);
}

/// The data (g, pi, M, i) that exhibits a crossed module as one over g with
/// kernel M: 0 -> M -i-> V -d-> L -pi-> g -> 0.
template <Flavor F>
struct InducedPair {
    Algebra<F> g;
    Matrix projection;  // g.dim x L.dim
    Representation<F> module;
    Matrix inclusion;  // V.dim x M.dim
};

/// Checks that (g, pi, M, i) fits the crossed module: exactness at every node,
/// pi a Lie map, and i intertwining [pi(x), m] with [x, i(m)].
template <Flavor F>
CheckResult check_pair(const CrossedModule<F>& cm, const InducedPair<F>& p) {
    if (p.projection.rows() != p.g.dim() || p.projection.cols() != cm.L.dim() ||
        p.inclusion.rows() != cm.V.dim() || p.inclusion.cols() != p.module.dim()) {
        return Violation{ErrorCode::ShapeMismatch, {}, "induced pair has the wrong shape"};
    }
    if (!is_injective(p.inclusion)) return Violation{ErrorCode::ExactnessFail, {0}, "M -> V is not injective"};
    if (!(image(p.inclusion) == kernel(cm.partial))) return Violation{ErrorCode::ExactnessFail, {1}, "im(i) != ker(d)"};
    if (!(image(cm.partial) == kernel(p.projection))) return Violation{ErrorCode::ExactnessFail, {2}, "im(d) != ker(pi)"};
    if (!is_surjective(p.projection)) return Violation{ErrorCode::ExactnessFail, {3}, "pi is not surjective"};
    if (auto v = check_algebra_map(cm.L, p.g, p.projection)) return v;
    for (std::size_t k = 0; k < cm.L.dim(); ++k) {
        Vector x = p.projection.column(k);
        if (p.inclusion * p.module.left_action(x) != cm.V.left(k) * p.inclusion) {
            return Violation{ErrorCode::NotGModuleMap, {k}, "i[pi(x), m] != [x, i(m)]"};
        }
        if constexpr (F == Flavor::Leibniz) {
            if (p.inclusion * p.module.right_action(x) != cm.V.right(k) * p.inclusion) {
                return Violation{ErrorCode::NotGModuleMap, {k}, "i[m, pi(x)] != [i(m), x]"};
            }
        }
    }
    return std::nullopt;
}

/// g = coker(d) with the induced bracket [pi x, pi y] = pi[x, y] and
/// M = ker(d) with [pi x, m] = [x, m].
template <Flavor F>
InducedPair<F> induced_pair(const CrossedModule<F>& cm) {
    throw_if(CrossedModule<F>::check(cm));
    const std::size_t nl = cm.L.dim();
    Subspace im = image(cm.partial);
    for (std::size_t i = 0; i < nl; ++i) {
        for (std::size_t k = 0; k < im.dim(); ++k) {
            Vector b = im.basis_vector(k);
            if (!im.contains(cm.L.bracket(unit_vector(nl, i), b)) || !im.contains(cm.L.bracket(b, unit_vector(nl, i)))) {
                throw Error(ErrorCode::PeifferFail, "image of d is not an ideal", {i, k});
            }
        }
    }
    Quotient q = quotient(nl, im);
    StructureConstants c(q.dim);
    for (std::size_t a = 0; a < q.dim; ++a) {
        for (std::size_t b = 0; b < q.dim; ++b) {
            Vector v = q.projection.apply(cm.L.bracket(q.section.column(a), q.section.column(b)));
            for (std::size_t k = 0; k < q.dim; ++k) c.at(a, b, k) = v[k];
        }
    }
    Algebra<F> g = Algebra<F>::validate(std::move(c));

    Subspace ker = kernel(cm.partial);
    Matrix incl = ker.inclusion();
    LinearSolver coords(incl);
    std::vector<Matrix> left;
    std::vector<Matrix> right;
    for (std::size_t a = 0; a < q.dim; ++a) {
        Vector x = q.section.column(a);
        left.push_back(*coords.solve_columns(cm.V.left_action(x) * incl));
        if constexpr (F == Flavor::Leibniz) right.push_back(*coords.solve_columns(cm.V.right_action(x) * incl));
    }
    Representation<F> m = Representation<F>::validate(g, ker.dim(), std::move(left), std::move(right));
    InducedPair<F> pair{std::move(g), q.projection, std::move(m), incl};
    throw_if(check_pair(cm, pair));
    return pair;
}

/// A crossed module together with its identification as one over (g, M).
template <Flavor F>
struct CrossedModuleOver {
    CrossedModule<F> cm;
    InducedPair<F> pair;

    static CrossedModuleOver validate(CrossedModule<F> cm, InducedPair<F> pair) {
        throw_if(CrossedModule<F>::check(cm));
        throw_if(check_pair(cm, pair));
        return {std::move(cm), std::move(pair)};
    }
    static CrossedModuleOver canonical(CrossedModule<F> cm) {
        InducedPair<F> p = induced_pair(cm);
        return {std::move(cm), std::move(p)};
    }
};

/// 0 -> M = M -0-> g = g -> 0
template <Flavor F>
CrossedModuleOver<F> zero_crossed_module(const Algebra<F>& g, const Representation<F>& m) {
    auto cm = CrossedModule<F>::validate(g, m, Matrix(g.dim(), m.dim()));
    InducedPair<F> p{g, Matrix::identity(g.dim()), m, Matrix::identity(m.dim())};
    return CrossedModuleOver<F>::validate(std::move(cm), std::move(p));
}

/// Linear sections s : g -> L with pi s = id, and q : L -> V with d q = id on im(d).
struct Sections {
    Matrix s;  // L.dim x g.dim
    Matrix q;  // V.dim x L.dim
};

/// Deterministic pivot-order sections.
template <Flavor F>
Sections choose_sections(const CrossedModule<F>& cm, const InducedPair<F>& p) {
    return {linear_section(p.projection), linear_section(cm.partial)};
}

template <Flavor F>
CheckResult check_sections(const CrossedModule<F>& cm, const InducedPair<F>& p, const Sections& sec) {
    if (sec.s.rows() != cm.L.dim() || sec.s.cols() != p.g.dim() || sec.q.rows() != cm.V.dim() ||
        sec.q.cols() != cm.L.dim()) {
        return Violation{ErrorCode::SectionMismatch, {}, "sections have the wrong shape"};
    }
    if (p.projection * sec.s != Matrix::identity(p.g.dim())) {
        return Violation{ErrorCode::SectionMismatch, {0}, "pi s != id"};
    }
    Subspace im = image(cm.partial);
    for (std::size_t k = 0; k < im.dim(); ++k) {
        Vector b = im.basis_vector(k);
        if (cm.partial.apply(sec.q.apply(b)) != b) {
            return Violation{ErrorCode::SectionMismatch, {1, k}, "d q != id on im(d)"};
        }
    }
    return std::nullopt;
}

/// Evaluates the classifying 3-cochain on basis triples, before reading the
/// values back in M. With g(x,y) = q([s x, s y] - s[x,y]):
///   Lie:     [sx,g(y,z)] - [sy,g(x,z)] + [sz,g(x,y)] - g([x,y],z) + g([x,z],y) - g([y,z],x)
///   Leibniz: [sx,g(y,z)] + [g(x,z),sy] - [g(x,y),sz] - g([x,y],z) + g([x,z],y) + g(x,[y,z])
template <Flavor F>
class ThetaEvaluator {
public:
    ThetaEvaluator(const CrossedModule<F>& cm, const InducedPair<F>& p, const Sections& sec)
        : cm_(cm), p_(p), sec_(sec), n_(p.g.dim()) {
        throw_if(check_sections(cm, p, sec));
        gtab_.resize(n_ * n_);
        for (std::size_t a = 0; a < n_; ++a) {
            for (std::size_t b = 0; b < n_; ++b) {
                Vector defect = cm.L.bracket(sec.s.column(a), sec.s.column(b)) - sec.s.apply(p.g.bracket(a, b));
                gtab_[a * n_ + b] = sec.q.apply(defect);
            }
        }
    }

    /// g(x, y) for basis x = e_a, y = e_b (a vector in V).
    [[nodiscard]] const Vector& defect(std::size_t a, std::size_t b) const { return gtab_[a * n_ + b]; }

    /// g(u, e_b) for an arbitrary element u of g.
    [[nodiscard]] Vector defect_left(const Vector& u, std::size_t b) const {
        Vector v(cm_.V.dim());
        for (std::size_t l = 0; l < n_; ++l) axpy(v, u[l], defect(l, b));
        return v;
    }
    /// g(e_a, u)
    [[nodiscard]] Vector defect_right(std::size_t a, const Vector& u) const {
        Vector v(cm_.V.dim());
        for (std::size_t l = 0; l < n_; ++l) axpy(v, u[l], defect(a, l));
        return v;
    }

    /// Value in V on (e_x, e_y, e_z).
    [[nodiscard]] Vector value_in_v(std::size_t x, std::size_t y, std::size_t z) const {
        auto act = [&](std::size_t a, const Vector& v) { return cm_.V.left_action(sec_.s.column(a)).apply(v); };
        const auto& g = p_.g;
        if constexpr (F == Flavor::Lie) {
            return act(x, defect(y, z)) - act(y, defect(x, z)) + act(z, defect(x, y)) -
                   defect_left(g.bracket(x, y), z) + defect_left(g.bracket(x, z), y) - defect_left(g.bracket(y, z), x);
        } else {
            auto ract = [&](const Vector& v, std::size_t a) { return cm_.V.right_action(sec_.s.column(a)).apply(v); };
            return act(x, defect(y, z)) + ract(defect(x, z), y) - ract(defect(x, y), z) -
                   defect_left(g.bracket(x, y), z) + defect_left(g.bracket(x, z), y) + defect_right(x, g.bracket(y, z));
        }
    }

    /// The cochain with values in M (CE: increasing triples; Leibniz: all triples).
    [[nodiscard]] Cochain<F> cochain() const {
        LinearSolver pull(p_.inclusion);
        Cochain<F> out = Cochain<F>::zero(3, n_, p_.module.dim());
        TupleBasis basis(F, n_, 3);
        for (std::size_t t = 0; t < basis.size(); ++t) {
            const auto& x = basis.tuple(t);
            auto m = pull.solve(value_in_v(x[0], x[1], x[2]));
            if (!m) throw Error(ErrorCode::ValidationFail, "theta value is not in ker(d)", x);
            out.set_value_at(t, *m);
        }
        return out;
    }

private:
    const CrossedModule<F>& cm_;
    const InducedPair<F>& p_;
    const Sections& sec_;
    std::size_t n_;
    std::vector<Vector> gtab_;
};

template <Flavor F>
Cochain<F> theta(const CrossedModule<F>& cm, const InducedPair<F>& p, const Sections& sec) {
    return ThetaEvaluator<F>(cm, p, sec).cochain();
}

inline LeibnizCochain leibniz_theta(const LeibnizCrossedModule& cm, const InducedPair<Flavor::Leibniz>& p,
                                    const Sections& sec) {
    return theta(cm, p, sec);
}

/// Class of theta in H^3(g, M) computed with the deterministic sections.
template <Flavor F>
CohomologyClass<F> classify2(const CrossedModule<F>& cm, const InducedPair<F>& p) {
    return cohomology(p.g, p.module, 3).class_of(theta(cm, p, choose_sections(cm, p)));
}

template <Flavor F>
CohomologyClass<F> classify2(const CrossedModuleOver<F>& x) {
    return classify2(x.cm, x.pair);
}

template <Flavor F>
CohomologyClass<F> classify2(const CrossedModule<F>& cm) {
    return classify2(cm, induced_pair(cm));
}

/// (alpha, beta) : (V, L, d) -> (V', L', d')
struct CrossedMorphism {
    Matrix alpha;  // V'.dim x V.dim
    Matrix beta;   // L'.dim x L.dim
};

template <Flavor F>
CheckResult check_crossed_morphism(const CrossedModule<F>& a, const CrossedModule<F>& b, const CrossedMorphism& phi) {
    if (phi.alpha.rows() != b.V.dim() || phi.alpha.cols() != a.V.dim() || phi.beta.rows() != b.L.dim() ||
        phi.beta.cols() != a.L.dim()) {
        return Violation{ErrorCode::ShapeMismatch, {}, "crossed morphism has the wrong shape"};
    }
    if (auto v = check_algebra_map(a.L, b.L, phi.beta)) return v;
    Matrix lhs = b.partial * phi.alpha;
    Matrix rhs = phi.beta * a.partial;
    for (std::size_t j = 0; j < a.V.dim(); ++j) {
        if (lhs.column(j) != rhs.column(j)) return Violation{ErrorCode::SquareFail, {j}, "d' alpha != beta d"};
    }
    for (std::size_t i = 0; i < a.L.dim(); ++i) {
        Matrix l = phi.alpha * a.V.left(i);
        Matrix r = b.V.left_action(phi.beta.column(i)) * phi.alpha;
        for (std::size_t j = 0; j < a.V.dim(); ++j) {
            if (l.column(j) != r.column(j)) {
                return Violation{ErrorCode::EquivarianceFail, {i, j}, "alpha[x,v] != [beta x, alpha v]"};
            }
        }
        if constexpr (F == Flavor::Leibniz) {
            Matrix lr = phi.alpha * a.V.right(i);
            Matrix rr = b.V.right_action(phi.beta.column(i)) * phi.alpha;
            for (std::size_t j = 0; j < a.V.dim(); ++j) {
                if (lr.column(j) != rr.column(j)) {
                    return Violation{ErrorCode::EquivarianceFail, {i, j}, "alpha[v,x] != [alpha v, beta x]"};
                }
            }
        }
    }
    return std::nullopt;
}

/// Additionally checks that the morphism induces the identity on g and on M,
/// which is what makes it an equivalence of crossed modules over (g, M).
template <Flavor F>
CheckResult check_crossed_morphism(const CrossedModuleOver<F>& a, const CrossedModuleOver<F>& b,
                                   const CrossedMorphism& phi) {
    if (auto v = check_crossed_morphism(a.cm, b.cm, phi)) return v;
    if (!(a.pair.g == b.pair.g) || !(a.pair.module == b.pair.module)) {
        return Violation{ErrorCode::BaseMismatch, {}, "crossed modules are over different (g, M)"};
    }
    if (b.pair.projection * phi.beta != a.pair.projection) {
        return Violation{ErrorCode::NotIdentityOnG, {}, "pi' beta != pi"};
    }
    if (phi.alpha * a.pair.inclusion != b.pair.inclusion) {
        return Violation{ErrorCode::NotIdentityOnM, {}, "alpha i != i'"};
    }
    return std::nullopt;
}

/// Splices 0 -> M -> M' -> M'' -> 0 with the abelian extension of g by M''
/// defined by a 2-cocycle: 0 -> M -> M' -mu-> e -> g -> 0 with
/// mu(m') = (beta m', 0) and e acting on M' through g.
template <Flavor F>
CrossedModuleOver<F> yoneda_crossed_module(const Algebra<F>& g, const ShortExactSequence<F>& ses,
                                           const Cochain<F>& ext2) {
    AbelianExtension<F> e = abelian_extension_from_2cocycle(g, ses.quot, ext2);
    const std::size_t mq = ses.quot.dim();
    const std::size_t d = g.dim();
    std::vector<Matrix> left;
    std::vector<Matrix> right;
    for (std::size_t k = 0; k < mq + d; ++k) {
        left.push_back(k < mq ? Matrix(ses.mid.dim(), ses.mid.dim()) : ses.mid.left(k - mq));
        if constexpr (F == Flavor::Leibniz) {
            right.push_back(k < mq ? Matrix(ses.mid.dim(), ses.mid.dim()) : ses.mid.right(k - mq));
        }
    }
    Representation<F> v = Representation<F>::validate(e.algebra, ses.mid.dim(), std::move(left), std::move(right));
    Matrix mu = vstack(ses.beta, Matrix(d, ses.mid.dim()));
    auto cm = CrossedModule<F>::validate(e.algebra, std::move(v), std::move(mu));
    InducedPair<F> p{g, e.projection, ses.sub, ses.alpha};
    return CrossedModuleOver<F>::validate(std::move(cm), std::move(p));
}

}  // namespace crossext
