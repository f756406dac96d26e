#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace fx;

namespace {

struct Built {
    std::string name;
    LieSES ses;
    LieAlgebra g;
    CrossedExtension e;
    CEClass cls;
};

SesFixture named(const std::string& name) {
    for (auto& s : ses_fixtures())
        if (s.name == name) return s;
    throw std::runtime_error("no fixture " + name);
}

// One 2-fold extension per short exact sequence, with a random cocycle.
std::vector<Built> two_fold(std::uint64_t seed) {
    std::vector<Built> out;
    Rng rng(seed);
    for (const auto& s : ses_fixtures()) {
        auto z = random_cocycle(s.g, s.ses.quot, 2, rng);
        auto x = yoneda_crossed_module(s.g, s.ses, z);
        out.push_back({s.name, s.ses, s.g, from_crossed(x), classify2(x)});
    }
    return out;
}

LieModule module_in(const LieAlgebra& g, const LieModule& m, const FieldSpec& f) {
    std::vector<Matrix> acts;
    for (const auto& a : m.left()) acts.push_back(a.in_field(f));
    return validate_module(g, m.dim(), std::move(acts));
}

}  // namespace

// Pushouts of vector spaces ----------------------------------------------

TEST(Pushout, ZeroSourceIsDirectSum) {
    auto po = pushout_spaces(Matrix(2, 0), Matrix(3, 0));
    EXPECT_EQ(po.dim(), 5u);
    EXPECT_EQ(rank(hstack(po.i, po.j)), 5u);
}

TEST(Pushout, IdentityLegGivesOtherSpace) {
    Matrix g = mat(3, 2, {1, 0, 0, 1, 1, 1});
    auto po = pushout_spaces(Matrix::identity(2), g);
    EXPECT_EQ(po.dim(), 3u);
    EXPECT_TRUE(is_injective(po.j) && is_surjective(po.j));
    EXPECT_EQ(po.j * g, po.i);
}

TEST(Pushout, IdentityAgainstZero) {
    auto po = pushout_spaces(Matrix::identity(2), Matrix(1, 2));
    EXPECT_EQ(po.dim(), 1u);
    EXPECT_TRUE(po.i.is_zero());
    EXPECT_EQ(rank(po.j), 1u);
}

TEST(Pushout, SquareCommutes) {
    Rng rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix f = random_matrix(3, 2, rng);
        Matrix g = random_matrix(2, 2, rng);
        auto po = pushout_spaces(f, g);
        EXPECT_EQ(po.i * f, po.j * g);
        EXPECT_EQ(po.dim(), 5u - rank(vstack(f, g)));
    }
}

TEST(Pushout, MediateIsUnique) {
    Matrix f = mat(2, 1, {1, 0});
    Matrix g = mat(1, 1, {1});
    auto po = pushout_spaces(f, g);
    // Cocone into K: i' = (1, 5), j' = (1).
    Matrix i2 = mat(1, 2, {1, 5});
    Matrix j2 = mat(1, 1, {1});
    Matrix theta = mediate(po, i2, j2);
    EXPECT_EQ(theta * po.i, i2);
    EXPECT_EQ(theta * po.j, j2);
}

TEST(Pushout, MediateRejectsNonCocone) {
    Matrix f = mat(2, 1, {1, 0});
    Matrix g = mat(1, 1, {1});
    auto po = pushout_spaces(f, g);
    try {
        mediate(po, mat(1, 2, {1, 0}), mat(1, 1, {2}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CoconeMismatch);
        EXPECT_EQ(e.violation().witness, (std::vector<std::size_t>{0}));
    }
}

TEST(Pushout, OfModules) {
    auto g = sl2();
    auto k = trivial_module(g, 1);
    auto m = direct_sum(g, k, sl2_defining(g));
    auto po = pushout(g, k, m, k, mat(3, 1, {1, 0, 0}), Matrix::identity(1));
    EXPECT_EQ(po.module.dim(), 3u);
    EXPECT_FALSE(check_module_morphism(g, m, po.module, po.maps.i));
    EXPECT_FALSE(check_module_morphism(g, k, po.module, po.maps.j));
    EXPECT_THROW(pushout(g, k, m, k, mat(3, 1, {0, 1, 0}), Matrix::identity(1)), Error);
}

// Validation -------------------------------------------------------------

TEST(Extension, FixturesValidate) {
    for (const auto& b : two_fold(1)) {
        EXPECT_FALSE(validate_extension(b.e)) << b.name;
        EXPECT_FALSE(validate_extension(opext_connecting(b.ses, zero_extension(b.g, b.ses.quot, 2)))) << b.name;
    }
}

TEST(Extension, ZeroHeadIsNotExact) {
    auto b = two_fold(2).front();
    if (b.e.M.dim() == 0) GTEST_SKIP();
    CrossedExtension bad = b.e;
    bad.f = Matrix(bad.f.rows(), bad.f.cols());
    auto r = validate_extension(bad);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->code, ErrorCode::ExactnessFail);
    EXPECT_EQ(r->witness, (std::vector<std::size_t>{1}));
}

TEST(Extension, ReportNamesEveryNode) {
    auto s = ses_fixtures().front();
    auto e = opext_connecting(s.ses, zero_extension(s.g, s.ses.quot, 3));
    std::vector<std::string> labels;
    for (const auto& node : extension_report(e)) labels.push_back(node.label);
    EXPECT_EQ(labels, (std::vector<std::string>{"shape", "base", "pi", "f", "d_3", "d_2", "exact at M_3", "exact at M_2",
                                                "exact at M_1", "exact at L"}));
}

TEST(Extension, BaseNotCrossed) {
    // Replacing the action on M_1 by the trivial one breaks equivariance
    // whenever im(d) is not central in L.
    std::size_t broken = 0;
    for (const auto& b : two_fold(3)) {
        CrossedExtension bad = b.e;
        bad.base.V = trivial_module(bad.L(), bad.base.V.dim());
        auto report = extension_report(bad);
        ASSERT_EQ(report[1].label, "base");
        if (report[1].result) {
            EXPECT_EQ(report[1].result->code, ErrorCode::BaseNotCrossed) << b.name;
            EXPECT_EQ(validate_extension(bad)->code, ErrorCode::BaseNotCrossed) << b.name;
            ++broken;
        }
    }
    EXPECT_GT(broken, 0u);
}

TEST(Extension, CrossedModuleRoundTrip) {
    for (const auto& b : two_fold(4)) {
        auto x = as_crossed(b.e);
        EXPECT_EQ(from_crossed(x), b.e) << b.name;
    }
    auto s = ses_fixtures().front();
    EXPECT_THROW(as_crossed(zero_extension(s.g, s.ses.quot, 3)), Error);
}

// Group structure --------------------------------------------------------

TEST(Zero, ClassIsZeroAndSplits) {
    for (const auto& p : lie_pairs()) {
        if (p.g.dim() > 4) continue;
        for (std::size_t n = 2; n <= 4; ++n) {
            auto z = zero_extension(p.g, p.m, n);
            EXPECT_TRUE(split_detect(z).has_value()) << p.name << " n=" << n;
            if (n == 2) {
                EXPECT_TRUE(classify2(z).is_zero()) << p.name;
            }
        }
    }
}

TEST(Negate, ClassAndInvolution) {
    for (const auto& b : two_fold(5)) {
        EXPECT_EQ(classify2(negate(b.e)), -b.cls) << b.name;
        EXPECT_EQ(negate(negate(b.e)), b.e) << b.name;
    }
}

TEST(Negate, CharacteristicTwoIsIdentity) {
    FieldSpec f2{2};
    auto h = validate_lie(heisenberg().constants().in_field(f2));
    auto ad = module_in(h, adjoint(heisenberg()), f2);
    Vector z{Scalar(0).in_field(f2), Scalar(0).in_field(f2), Scalar(1).in_field(f2)};
    auto ses = LieSES::from_submodule(h, ad, Subspace::span({z}, 3));
    auto h2 = cohomology(h, ses.quot, 2);
    ASSERT_GT(h2.dim(), 0u);
    for (const auto& c : h2.basis) {
        auto e = from_crossed(yoneda_crossed_module(h, ses, c.representative));
        EXPECT_EQ(negate(e), e);
        EXPECT_EQ(classify2(e), connecting_hom(h, ses, c));
    }
}

TEST(SumOverG, Dimensions) {
    auto all = two_fold(6);
    for (const auto& b : all) {
        auto s = sum_over_g(b.e, b.e);
        EXPECT_EQ(s.L().dim(), 2 * b.e.L().dim() - b.g.dim()) << b.name;
        EXPECT_EQ(s.base.V.dim(), 2 * b.e.base.V.dim()) << b.name;
        EXPECT_EQ(s.M.dim(), 2 * b.e.M.dim()) << b.name;
    }
    EXPECT_THROW(sum_over_g(all[0].e, all[6].e), Error);
}

TEST(BaerSum, ClassesAdd) {
    auto first = two_fold(7);
    auto second = two_fold(8);
    for (std::size_t k = 0; k < first.size(); ++k) {
        const auto& a = first[k];
        const auto& b = second[k];
        EXPECT_EQ(classify2(baer_sum(a.e, b.e)), a.cls + b.cls) << a.name;
        EXPECT_EQ(classify2(baer_sum_n2(a.e, b.e)), a.cls + b.cls) << a.name;
    }
}

TEST(BaerSum, InverseAndZero) {
    for (const auto& b : two_fold(9)) {
        EXPECT_TRUE(classify2(baer_sum(b.e, negate(b.e))).is_zero()) << b.name;
        EXPECT_EQ(classify2(baer_sum(b.e, zero_extension(b.g, b.e.M, 2))), b.cls) << b.name;
    }
}

TEST(BaerSum, HigherLengthStaysValid) {
    for (const auto& b : two_fold(10)) {
        auto d = opext_connecting(b.ses, zero_extension(b.g, b.ses.quot, 2));
        auto s = baer_sum(d, zero_extension(b.g, b.ses.sub, 3));
        EXPECT_FALSE(validate_extension(s)) << b.name;
        EXPECT_EQ(s.n, 3u);
    }
}

// Push-forward -----------------------------------------------------------

TEST(PushForward, IdentityKeepsClass) {
    for (const auto& b : two_fold(11)) {
        auto pf = push_forward_with_morphism(Matrix::identity(b.e.M.dim()), b.e.M, b.e);
        EXPECT_EQ(classify2(pf.extension), b.cls) << b.name;
        EXPECT_FALSE(check_extension_morphism(b.e, pf.extension, pf.morphism)) << b.name;
    }
}

TEST(PushForward, ScalarMultiplies) {
    for (const auto& b : two_fold(12)) {
        auto e3 = push_forward(Scalar(3) * Matrix::identity(b.e.M.dim()), b.e.M, b.e);
        EXPECT_EQ(classify2(e3), Scalar(3) * b.cls) << b.name;
    }
}

TEST(PushForward, ZeroSplits) {
    for (const auto& b : two_fold(13)) {
        auto e0 = push_forward(Matrix(b.e.M.dim(), b.e.M.dim()), b.e.M, b.e);
        EXPECT_TRUE(classify2(e0).is_zero()) << b.name;
        EXPECT_TRUE(split_detect(e0).has_value()) << b.name;
    }
}

TEST(PushForward, AlongHeadSplits) {
    // For E over M'' of length 3 with head alpha : M -> M', alpha E splits.
    for (const auto& s : ses_fixtures()) {
        auto d = opext_connecting(s.ses, zero_extension(s.g, s.ses.quot, 2));
        auto pushed = push_forward(s.ses.alpha, s.ses.mid, d);
        auto w = split_detect(pushed);
        ASSERT_TRUE(w.has_value()) << s.name;
        EXPECT_EQ(w->retraction * pushed.f, Matrix::identity(s.ses.mid.dim())) << s.name;
    }
}

TEST(PushForward, FactorsMorphisms) {
    for (const auto& b : two_fold(14)) {
        Matrix a = Scalar(2) * Matrix::identity(b.e.M.dim());
        auto pf = push_forward_with_morphism(a, b.e.M, b.e);
        auto phi = factor_through_push_forward(pf, pf.extension, pf.morphism);
        EXPECT_EQ(phi.alpha, Matrix::identity(b.e.M.dim())) << b.name;
        EXPECT_FALSE(check_extension_morphism(pf.extension, pf.extension, phi)) << b.name;
    }
}

TEST(PushForward, RejectsNonEquivariantMap) {
    auto s = named("r2/ad>ideal");
    auto b = two_fold(15)[6];
    ASSERT_EQ(b.name, s.name);
    auto target = trivial_module(b.g, b.e.M.dim());
    ASSERT_FALSE(b.e.M == target);
    EXPECT_THROW(push_forward(Matrix::identity(b.e.M.dim()), target, b.e), Error);
}

// Splitting --------------------------------------------------------------

TEST(Split, DetectsExactlySplitSequences) {
    for (const auto& s : ses_fixtures()) {
        auto d = opext_connecting(s.ses, zero_extension(s.g, s.ses.quot, 2));
        bool split_ses = s.name.find("split") != std::string::npos;
        EXPECT_EQ(split_detect(d).has_value(), split_ses) << s.name;
    }
}

TEST(Split, WitnessIsCheckedMorphism) {
    for (const auto& b : two_fold(16)) {
        auto w = split_detect(b.e);
        if (!w) {
            EXPECT_FALSE(b.cls.is_zero() && b.e.base.partial.is_zero()) << b.name;
            continue;
        }
        EXPECT_TRUE(b.cls.is_zero()) << b.name;
        EXPECT_FALSE(check_extension_morphism(b.e, zero_extension(b.g, b.e.M, 2), w->to_zero)) << b.name;
    }
}

TEST(Split, NonzeroClassNeverSplits) {
    for (const auto& b : two_fold(17)) {
        if (!b.cls.is_zero()) {
            EXPECT_FALSE(split_detect(b.e).has_value()) << b.name;
        }
    }
}

// Connecting morphism ----------------------------------------------------

TEST(Opext, ConnectingRequiresMatchingModule) {
    auto s = named("r2/ad>ideal");
    ASSERT_FALSE(s.ses.sub == s.ses.quot);
    EXPECT_THROW(opext_connecting(s.ses, zero_extension(s.g, s.ses.sub, 2)), Error);
}

TEST(Opext, ConnectingLengthensByOne) {
    for (const auto& b : two_fold(18)) {
        auto d = opext_connecting(b.ses, b.e.M == b.ses.quot ? b.e : zero_extension(b.g, b.ses.quot, 2));
        EXPECT_EQ(d.n, 3u);
        EXPECT_EQ(d.M, b.ses.sub);
        EXPECT_EQ(d.upper.back(), b.ses.mid);
    }
}

TEST(ExtensionMorphism, LengthAndBaseMismatch) {
    auto s = ses_fixtures().front();
    auto a = zero_extension(s.g, s.ses.quot, 2);
    auto b = zero_extension(s.g, s.ses.quot, 3);
    EXPECT_EQ(check_extension_morphism(a, b, {})->code, ErrorCode::LengthMismatch);
    auto c = zero_extension(abelian(1), trivial_module(abelian(1), 1), 2);
    EXPECT_EQ(check_extension_morphism(a, c, {})->code, ErrorCode::BaseMismatch);
}
