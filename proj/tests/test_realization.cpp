#include "mforge/realization.hpp"

#include <gtest/gtest.h>

using namespace mforge;
using namespace mforge::real;

namespace {

Expression gexpr(const Generator& f, int g) { return Expression::generator(f, g); }

}  // namespace

TEST(AbelianModel, DimensionsAndGuards) {
    AbelianModel m = abelian_model(4);
    EXPECT_EQ(m.space.dim(3), 56);
    EXPECT_EQ(m.space.dim(0), 1);
    EXPECT_EQ(m.space.dim(8), 1);
    EXPECT_EQ(m.space.total_dim(), 256);
    EXPECT_THROW(abelian_model(1), DomainError);
    EXPECT_THROW(abelian_model(7), DomainError);
}

TEST(AbelianModel, ThetaVectorHasGSupport) {
    for (int g : {2, 3, 4}) {
        AbelianModel m = abelian_model(g);
        const Matrix& L0 = m.L.block(0);
        ASSERT_EQ(L0.cols(), 1);
        int nonzero = 0;
        for (int r = 0; r < L0.rows(); ++r)
            if (L0(r, 0) != 0) {
                EXPECT_EQ(L0(r, 0), Rational(1));
                ++nonzero;
            }
        EXPECT_EQ(nonzero, g);
    }
}

TEST(AbelianModel, TopIntegralIsFactorial) {
    // L^g applied to 1 equals g! times the top class, up to the orientation
    // sign (-1)^{g(g-1)/2} of the lex-ordered basis against the pairing.
    for (int g : {2, 3, 4}) {
        AbelianModel m = abelian_model(g);
        Matrix v = Matrix::identity(1);
        for (int t = 0; t < g; ++t) v = m.L.block(2 * t) * v;
        ASSERT_EQ(v.rows(), 1);
        long long fact = 1;
        for (int i = 2; i <= g; ++i) fact *= i;
        const long long orient = (g * (g - 1) / 2) % 2 == 0 ? 1 : -1;
        EXPECT_EQ(v(0, 0), Rational(orient * fact)) << "g=" << g;
    }
}

TEST(PrimitiveDecomposition, Dimensions) {
    AbelianModel m4 = abelian_model(4);
    PrimitiveDecomposition d4 = primitive_decomposition(m4);
    EXPECT_EQ(d4.prim[1].cols(), 8);  // C(8,1) - C(8,-1)
    EXPECT_EQ(d4.prim[3].cols(), binomial(8, 3) - binomial(8, 1));  // 56 - 8 = 48

    AbelianModel m2 = abelian_model(2);
    PrimitiveDecomposition d2 = primitive_decomposition(m2);
    EXPECT_EQ(d2.prim[2].cols(), 5);  // 6 - 1

    // independent oracle: kernel rank of the explicit L^2 block product on H^3
    Matrix power = m4.L.block(5) * m4.L.block(3);
    EXPECT_EQ(kernel_basis(power).cols(), 48);
}

TEST(Lambda, LoweringRelations) {
    for (int g : {2, 3, 4}) {
        AbelianModel m = abelian_model(g);
        PrimitiveDecomposition d = primitive_decomposition(m);
        GradedMap lam = lambda_matrix(m, d);

        // Lam(theta) = 1
        const Matrix& lam2 = lam.block(2);
        Matrix theta = m.L.block(0);
        Matrix back = lam2 * theta;
        EXPECT_TRUE(back.is_identity());

        // Lam vanishes on primitive vectors
        for (int j = 0; j <= g; ++j) {
            if (j < 2) continue;
            Matrix img = lam.block(j) * d.prim[static_cast<std::size_t>(j)];
            EXPECT_TRUE(img.is_zero()) << "g=" << g << " j=" << j;
        }

        // Lam L = id on H^j for j <= g-1 and L Lam = id on H^j for j >= g+1
        for (int j = 0; j <= g - 1; ++j) {
            Matrix ll = lam.block(j + 2) * m.L.block(j);
            EXPECT_TRUE(ll.is_identity()) << "LamL g=" << g << " j=" << j;
        }
        for (int j = g + 1; j <= 2 * g; ++j) {
            Matrix ll = m.L.block(j - 2) * lam.block(j);
            EXPECT_TRUE(ll.is_identity()) << "LLam g=" << g << " j=" << j;
        }

        // hard Lefschetz contraction on H^1: Lam^{g-1} L^{g-1} = id
        Matrix acc = Matrix::identity(m.space.dim(1));
        for (int t = 0; t < g - 1; ++t) acc = m.L.block(1 + 2 * t) * acc;
        for (int t = g - 1; t >= 1; --t) acc = lam.block(1 + 2 * t) * acc;
        EXPECT_TRUE(acc.is_identity()) << "g=" << g;
    }
}

TEST(HardLefschetz, PowerIsomorphisms) {
    for (int g : {2, 3, 4}) {
        AbelianModel m = abelian_model(g);
        for (int j = 0; j <= g; ++j) {
            Matrix acc = Matrix::identity(m.space.dim(j));
            for (int t = 0; t < g - j; ++t) acc = m.L.block(j + 2 * t) * acc;
            EXPECT_EQ(rank(acc), m.space.dim(j)) << "g=" << g << " j=" << j;
            EXPECT_EQ(m.space.dim(j), m.space.dim(2 * g - j));
        }
    }
}

TEST(ThetaModel, GradedDimensions) {
    CohomologyModel m4 = theta_model(4);
    EXPECT_EQ(m4.k, 10);
    EXPECT_EQ(m4.spaceTheta.dim(3), 66);
    EXPECT_EQ(m4.spaceTheta.dim(0), 1);
    EXPECT_EQ(m4.spaceTheta.dim(4), 28);

    CohomologyModel m2 = theta_model(2);
    EXPECT_EQ(m2.k, 0);
    std::vector<int> dims = {1, 4, 1};
    EXPECT_EQ(m2.spaceTheta.dims, dims);

    EXPECT_THROW(theta_model(4, -1), DomainError);
}

TEST(ThetaModel, GysinRestrictionFactorization) {
    for (int g : {2, 3, 4}) {
        CohomologyModel m = theta_model(g);
        GradedMap composite = m.Gamma.compose_after(m.TGamma);
        EXPECT_EQ(composite, m.L) << "g=" << g;

        // kernel of the Gysin map in the middle is exactly 0 (+) K
        Matrix mid = m.Gamma.block(g - 1);
        Matrix ker = kernel_basis(mid);
        EXPECT_EQ(ker.cols(), m.k);
        const int c = m.spaceA.dim(g - 1);
        for (int col = 0; col < ker.cols(); ++col)
            for (int row = 0; row < c; ++row) EXPECT_EQ(ker(row, col), Rational(0));
    }
}

TEST(Realize, IdentityAndGysin) {
    CohomologyModel m = theta_model(3);
    EXPECT_TRUE(realize(Expression::identity(obj_Theta(3)), m).is_identity());
    Expression gt = compose(gexpr(gen_gamma(), 3), gexpr(gen_tgamma(), 3));
    EXPECT_EQ(realize(gt, m), m.L);
    EXPECT_TRUE(realize(Expression::zero(obj_A(3), obj_A(3), 0), m).is_zero());
}

TEST(Realize, MultiplicationEigenvalues) {
    CohomologyModel m = theta_model(4);
    GradedMap tg2 = realize(gexpr(gen_mul(2), 4), m);
    EXPECT_EQ(tg2.block(3), Matrix::identity(m.spaceA.dim(3)).scaled(8));
    GradedMap tgm1 = realize(gexpr(gen_mul(-1), 4), m);
    EXPECT_EQ(tgm1.block(3), Matrix::identity(m.spaceA.dim(3)).scaled(-1));
    EXPECT_EQ(tgm1.block(2), Matrix::identity(m.spaceA.dim(2)));
}

TEST(Realize, NormalizationIsSemanticallySound) {
    for (int g : {2, 3}) {
        CohomologyModel m = theta_model(g);
        RewriteSystem R = standard_rules(g);
        for (int j = 0; j <= 2 * (g - 1); ++j) {
            Expression pj = theta_projector(j, g);
            Expression sq = compose(pj, pj);
            EXPECT_EQ(realize(sq, m), realize(normalize(sq, R), m)) << "g=" << g << " j=" << j;
        }
    }
}

TEST(RealizedProjectors, WeilCondition) {
    for (int g : {2, 3, 4}) {
        CohomologyModel m = theta_model(g);
        GradedMap sum(m.spaceTheta, m.spaceTheta, 0);
        for (int j = 0; j <= 2 * (g - 1); ++j) {
            GradedMap pj = realize(theta_projector(j, g), m);
            EXPECT_EQ(pj, m.projector_Theta(j)) << "g=" << g << " j=" << j;
            sum = sum + pj;
        }
        EXPECT_TRUE(sum.is_identity()) << "g=" << g;
    }
}

TEST(RealizedComplement, PrimitiveRank) {
    const int expected[] = {0, 1, 10};  // g = 2, 3, 4
    int idx = 0;
    for (int g : {2, 3, 4}) {
        CohomologyModel m = theta_model(g);
        auto [pi_prime, p] = complementary_projectors(g);
        GradedMap rp = realize(p, m);
        EXPECT_EQ(rank(rp.block(g - 1)), expected[idx]) << "g=" << g;
        EXPECT_EQ(rp.compose_after(rp), rp) << "g=" << g;
        if (g == 2) EXPECT_TRUE(rp.is_zero());
        ++idx;
    }
}

TEST(SoundnessCheck, StandardRulesHold) {
    for (int g : {2, 3}) {
        CohomologyModel m = theta_model(g);
        RewriteSystem R = standard_rules(g);
        auto report = soundness_check(R, m);
        EXPECT_GT(report.statements.size(), 0u);
        EXPECT_EQ(report.failed(), 0) << "g=" << g;
        EXPECT_TRUE(report.all_proved()) << "g=" << g;
    }
}

TEST(SoundnessCheck, CorruptedRuleFails) {
    CohomologyModel m = theta_model(3);
    RewriteSystem R = standard_rules(3);
    inject_corrupt_rule(R);
    auto report = soundness_check(R, m);
    EXPECT_GT(report.failed(), 0);
}

TEST(KunnethCheck, AllConditionsHold) {
    for (int g : {2, 3, 4}) {
        auto report = kunneth_check(g);
        EXPECT_EQ(report.failed(), 0) << "g=" << g;
        EXPECT_TRUE(report.all_proved()) << "g=" << g;
    }
}

TEST(ThetaModel, CrossModuleBettiAgreement) {
    for (int g : {2, 3, 4}) {
        CohomologyModel m = theta_model(g);
        const auto betti = hodge::betti_theta(g, 1);
        ASSERT_EQ(static_cast<int>(betti.size()), m.spaceTheta.top_degree() + 1);
        for (int j = 0; j <= m.spaceTheta.top_degree(); ++j)
            EXPECT_EQ(betti[static_cast<std::size_t>(j)], m.spaceTheta.dim(j)) << "g=" << g;
    }
}

TEST(ModelDump, JsonShape) {
    CohomologyModel m = theta_model(2);
    auto j = model_dump_json(m);
    EXPECT_EQ(j["g"], 2);
    EXPECT_EQ(j["k"], 0);
    EXPECT_TRUE(j["generators"].contains("L"));
    EXPECT_TRUE(j["generators"]["L"]["blocks"].contains("0"));
    // entries are num/den strings
    EXPECT_EQ(j["generators"]["L"]["blocks"]["0"][1][0], "1/1");
}
