#include "mforge/named.hpp"
#include "mforge/normalize.hpp"
#include "mforge/rules.hpp"

#include <gtest/gtest.h>

using namespace mforge;

namespace {

Expression gexpr(const Generator& f, int g) { return Expression::generator(f, g); }

Expression wexpr(std::vector<Generator> fs, int g) {
    return Expression::from_word(make_word(std::move(fs), g), g);
}

}  // namespace

TEST(StandardRules, ConstructionAndGuards) {
    EXPECT_THROW(standard_rules(1), DomainError);
    RewriteSystem R = standard_rules(4);
    EXPECT_EQ(R.g, 4);
    EXPECT_EQ(R.saturation_depth, 3);
    EXPECT_TRUE(R.has_rule(RuleKind::K1_LowerRaise));
    EXPECT_TRUE(R.has_rule(RuleKind::R3_Commute));
}

TEST(StandardRules, InstanceInventory) {
    RewriteSystem R = standard_rules(4);
    // K1 contains pi(1).Lam^3.L^3 -> pi(1)
    bool found_k1 = false;
    for (const auto& rule : R.rules) {
        if (rule.kind != RuleKind::K1_LowerRaise) continue;
        for (const auto& inst : rule_instances(rule, 4)) {
            if (inst.id == "K1.j=1") {
                found_k1 = true;
                Word w = inst.lhs.terms().begin()->first;
                std::vector<Generator> expect = {gen_pi(1), gen_lam(), gen_lam(), gen_lam(),
                                                 gen_L(),   gen_L(),   gen_L()};
                EXPECT_EQ(w.factors, expect);
                EXPECT_EQ(inst.rhs, wexpr({gen_pi(1)}, 4));
            }
        }
    }
    EXPECT_TRUE(found_k1);

    // R2 contains pi(2) . pi(5) -> 0
    bool found_r2 = false;
    for (const auto& rule : R.rules) {
        if (rule.kind != RuleKind::R2_ProjectorMerge) continue;
        for (const auto& inst : rule_instances(rule, 4)) {
            if (inst.id == "R2.j=2.k=5") {
                found_r2 = true;
                EXPECT_TRUE(inst.rhs.is_zero());
            }
        }
    }
    EXPECT_TRUE(found_r2);

    // R0 contains pi(-2) -> 0
    bool found_r0 = false;
    for (const auto& rule : R.rules) {
        if (rule.kind != RuleKind::R0_ZeroProjector) continue;
        for (const auto& inst : rule_instances(rule, 4)) {
            if (inst.id == "R0.j=-2") {
                found_r0 = true;
                EXPECT_TRUE(inst.rhs.is_zero());
            }
        }
    }
    EXPECT_TRUE(found_r0);
}

TEST(Normalize, GysinFactorization) {
    RewriteSystem R = standard_rules(4);
    Expression e = compose(gexpr(gen_gamma(), 4), gexpr(gen_tgamma(), 4));
    EXPECT_EQ(normalize(e, R), wexpr({gen_L()}, 4));
}

TEST(Normalize, CommutationMovesProjectorLeft) {
    for (int g : {2, 3, 4, 5}) {
        RewriteSystem R = standard_rules(g);
        for (int j = 0; j + 2 <= 2 * g; ++j) {
            Expression e = compose(gexpr(gen_L(), g), gexpr(gen_pi(j), g));
            EXPECT_EQ(normalize(e, R), wexpr({gen_pi(j + 2), gen_L()}, g));
        }
    }
}

TEST(Normalize, HardLefschetzSandwich) {
    for (int g : {2, 3, 4, 5, 6}) {
        RewriteSystem R = standard_rules(g);
        std::vector<Generator> fs = {gen_pi(1)};
        for (int t = 0; t < g - 1; ++t) fs.push_back(gen_lam());
        for (int t = 0; t < g - 1; ++t) fs.push_back(gen_L());
        fs.push_back(gen_pi(1));
        EXPECT_EQ(normalize(wexpr(fs, g), R), wexpr({gen_pi(1)}, g)) << "g=" << g;
    }
}

TEST(Normalize, MultiplicationEigenvalue) {
    RewriteSystem R = standard_rules(4);
    // mul(2) . pi(3) -> 8 pi(3)
    Expression e = compose(gexpr(gen_mul(2), 4), gexpr(gen_pi(3), 4));
    Expression nf = normalize(e, R);
    ASSERT_EQ(nf.term_count(), 1u);
    EXPECT_EQ(nf.terms().begin()->second, Rational(8));
    EXPECT_EQ(nf.terms().begin()->first, make_word({gen_pi(3)}, 4));
    // and on the right
    Expression e2 = compose(gexpr(gen_pi(3), 4), gexpr(gen_mul(2), 4));
    EXPECT_EQ(normalize(e2, R), nf);
}

TEST(Normalize, OutOfRangeProjectorKills) {
    RewriteSystem R = standard_rules(4);
    EXPECT_TRUE(normalize(gexpr(gen_pi(-2), 4), R).is_zero());
    EXPECT_TRUE(normalize(gexpr(gen_pi(9), 4), R).is_zero());
    EXPECT_TRUE(normalize(compose(gexpr(gen_pi(9), 4), gexpr(gen_L(), 4)), R).is_zero());
}

TEST(Normalize, DeltaElimination) {
    RewriteSystem R = standard_rules(4);
    Expression dd = compose(Expression::identity(obj_A(4)), Expression::identity(obj_A(4)));
    EXPECT_EQ(normalize(dd, R), Expression::identity(obj_A(4)));
    Expression dl = compose(Expression::identity(obj_A(4)), gexpr(gen_L(), 4));
    EXPECT_EQ(normalize(dl, R), wexpr({gen_L()}, 4));
}

TEST(Normalize, Idempotent) {
    for (int g : {2, 3, 4}) {
        RewriteSystem R = standard_rules(g);
        for (int j = 0; j <= 2 * (g - 1); ++j) {
            Expression e = compose(theta_projector(j, g), theta_projector(j, g));
            Expression n1 = normalize(e, R);
            EXPECT_EQ(normalize(n1, R), n1);
        }
    }
}

TEST(Equal, BasicExamples) {
    RewriteSystem R = standard_rules(4);
    Expression gt = compose(gexpr(gen_gamma(), 4), gexpr(gen_tgamma(), 4));
    EXPECT_EQ(equal(gt, gexpr(gen_L(), 4), R), Verdict::Proved);
    EXPECT_EQ(equal(gexpr(gen_pi(0), 4), gexpr(gen_pi(0), 4), R), Verdict::Proved);
    // degree mismatch is a homogeneity error, not NotProved
    EXPECT_THROW(equal(gexpr(gen_L(), 4), gexpr(gen_lam(), 4), R), HomogeneityError);
    // L . Lam is not provably the identity (and is in fact not the identity)
    Expression llam = compose(gexpr(gen_L(), 4), gexpr(gen_lam(), 4));
    EXPECT_EQ(equal(llam, Expression::identity(obj_A(4)), R), Verdict::NotProved);
}

// ---------------------------------------------------------------------------
// Theorem corpus at saturation depth 0 (leftmost-priority normalization only)
// ---------------------------------------------------------------------------

class CorpusDepth0 : public ::testing::TestWithParam<int> {
protected:
    RewriteSystem depth0() const {
        RewriteSystem R = standard_rules(GetParam());
        R.saturation_depth = 0;
        return R;
    }
};

TEST_P(CorpusDepth0, ProjectorIdempotency) {
    const int g = GetParam();
    RewriteSystem R = depth0();
    for (int j = 0; j <= 2 * (g - 1); ++j) {
        Expression pj = theta_projector(j, g);
        EXPECT_EQ(equal(compose(pj, pj), pj, R), Verdict::Proved) << "g=" << g << " j=" << j;
    }
}

TEST_P(CorpusDepth0, ProjectorOrthogonality) {
    const int g = GetParam();
    RewriteSystem R = depth0();
    for (int j = 0; j <= 2 * (g - 1); ++j) {
        for (int k = 0; k <= 2 * (g - 1); ++k) {
            if (j == k) continue;
            Expression prod = compose(theta_projector(j, g), theta_projector(k, g));
            Expression zero = Expression::zero(obj_Theta(g), obj_Theta(g), 0);
            EXPECT_EQ(equal(prod, zero, R), Verdict::Proved) << "g=" << g << " (" << j << "," << k << ")";
        }
    }
}

TEST_P(CorpusDepth0, ProjectorsSumToDiagonal) {
    const int g = GetParam();
    RewriteSystem R = depth0();
    Expression sum = Expression::zero(obj_Theta(g), obj_Theta(g), 0);
    for (int j = 0; j <= 2 * (g - 1); ++j) sum = sum + theta_projector(j, g);
    EXPECT_EQ(equal(sum, Expression::identity(obj_Theta(g)), R), Verdict::Proved);
    EXPECT_TRUE(normalize(sum - Expression::identity(obj_Theta(g)), R).is_zero());
}

TEST_P(CorpusDepth0, RestrictionExchange) {
    const int g = GetParam();
    RewriteSystem R = depth0();
    Expression tg = gexpr(gen_tgamma(), g);
    Expression ga = gexpr(gen_gamma(), g);
    for (int j = 0; j < g - 1; ++j) {
        Expression lhs = compose(theta_projector(j, g), tg);
        Expression rhs = compose(tg, gexpr(gen_pi(j), g));
        EXPECT_EQ(equal(lhs, rhs, R), Verdict::Proved) << "g=" << g << " j=" << j;
    }
    for (int j = g; j <= 2 * (g - 1); ++j) {
        Expression lhs = compose(ga, theta_projector(j, g));
        Expression rhs = compose(gexpr(gen_pi(j + 2), g), ga);
        EXPECT_EQ(equal(lhs, rhs, R), Verdict::Proved) << "g=" << g << " j=" << j;
    }
}

TEST_P(CorpusDepth0, MiddleReduction) {
    const int g = GetParam();
    RewriteSystem R = depth0();
    // G . pi . tG . pi(g-1,A) = 0 with pi the off-middle projector sum
    Expression pi = off_middle_projector_sum(g);
    Expression lhs = compose(gexpr(gen_gamma(), g),
                             compose(pi, compose(gexpr(gen_tgamma(), g), gexpr(gen_pi(g - 1), g))));
    EXPECT_EQ(equal(lhs, Expression::zero(obj_A(g), obj_A(g), 1), R), Verdict::Proved);
}

TEST_P(CorpusDepth0, LefschetzInverses) {
    const int g = GetParam();
    RewriteSystem R = depth0();
    for (int j = 0; j <= 2 * (g - 1); ++j) {
        if (j == g - 1) continue;
        if (j < g - 1) {
            Expression h = lefschetz_morphism(j, g, LefschetzDirection::Pullback);
            Expression phi = inverse_candidate(j, g).phi;
            EXPECT_EQ(equal(compose(phi, h), gexpr(gen_pi(j), g), R), Verdict::Proved)
                << "g=" << g << " j=" << j;
            EXPECT_EQ(equal(compose(h, phi), theta_projector(j, g), R), Verdict::Proved)
                << "g=" << g << " j=" << j;
        } else {
            Expression th = lefschetz_morphism(j, g, LefschetzDirection::Pushforward);
            Expression phi = inverse_candidate(j, g).phi;
            EXPECT_EQ(equal(compose(th, phi), gexpr(gen_pi(j + 2), g), R), Verdict::Proved)
                << "g=" << g << " j=" << j;
            EXPECT_EQ(equal(compose(phi, th), theta_projector(j, g), R), Verdict::Proved)
                << "g=" << g << " j=" << j;
        }
    }
}

TEST_P(CorpusDepth0, MiddleSplitting) {
    const int g = GetParam();
    RewriteSystem R = depth0();
    Expression h = lefschetz_morphism(g - 1, g, LefschetzDirection::Pullback);
    Expression th = lefschetz_morphism(g - 1, g, LefschetzDirection::Pushforward);
    auto mid = inverse_candidate(g - 1, g);
    ASSERT_TRUE(mid.psi.has_value());
    EXPECT_EQ(equal(compose(mid.phi, h), gexpr(gen_pi(g - 1), g), R), Verdict::Proved);
    EXPECT_EQ(equal(compose(th, *mid.psi), gexpr(gen_pi(g + 1), g), R), Verdict::Proved);
}

TEST_P(CorpusDepth0, ComplementaryProjectorAlgebra) {
    const int g = GetParam();
    RewriteSystem R = depth0();
    auto [pi_prime, p] = complementary_projectors(g);
    const Expression zeroT = Expression::zero(obj_Theta(g), obj_Theta(g), 0);
    EXPECT_EQ(equal(compose(pi_prime, pi_prime), pi_prime, R), Verdict::Proved);
    EXPECT_EQ(equal(compose(p, p), p, R), Verdict::Proved);
    EXPECT_EQ(equal(compose(p, pi_prime), zeroT, R), Verdict::Proved);
    EXPECT_EQ(equal(compose(pi_prime, p), zeroT, R), Verdict::Proved);
    for (int j = 0; j <= 2 * (g - 1); ++j) {
        if (j == g - 1) continue;
        EXPECT_EQ(equal(compose(pi_prime, theta_projector(j, g)), zeroT, R), Verdict::Proved)
            << "j=" << j;
        EXPECT_EQ(equal(compose(theta_projector(j, g), pi_prime), zeroT, R), Verdict::Proved)
            << "j=" << j;
        EXPECT_EQ(equal(compose(p, theta_projector(j, g)), zeroT, R), Verdict::Proved) << "j=" << j;
        EXPECT_EQ(equal(compose(theta_projector(j, g), p), zeroT, R), Verdict::Proved) << "j=" << j;
    }
    Expression mid = theta_projector(g - 1, g);
    EXPECT_EQ(equal(compose(pi_prime, mid), pi_prime, R), Verdict::Proved);
    EXPECT_EQ(equal(compose(mid, pi_prime), pi_prime, R), Verdict::Proved);
    EXPECT_EQ(equal(compose(p, mid), p, R), Verdict::Proved);
    EXPECT_EQ(equal(compose(mid, p), p, R), Verdict::Proved);
}

INSTANTIATE_TEST_SUITE_P(AllG, CorpusDepth0, ::testing::Values(2, 3, 4, 5, 6));

// ---------------------------------------------------------------------------
// Saturation fallback
// ---------------------------------------------------------------------------

TEST(Saturation, ClosesBeyondDepthZero) {
    // pi(3) . L . Lam^3 . L^3  =  pi(3) . L  at g = 4: derivable by reading the
    // commutation backwards, then the hard Lefschetz contraction.  The greedy
    // normal forms differ, so depth 0 must say NotProved and depth >= 1 Proved.
    const int g = 4;
    std::vector<Generator> fs = {gen_pi(3), gen_L(), gen_lam(), gen_lam(), gen_lam(),
                                 gen_L(),  gen_L(), gen_L()};
    Expression lhs = wexpr(fs, g);
    Expression rhs = wexpr({gen_pi(3), gen_L()}, g);

    RewriteSystem R0 = standard_rules(g);
    R0.saturation_depth = 0;
    EXPECT_EQ(equal(lhs, rhs, R0), Verdict::NotProved);

    RewriteSystem R = standard_rules(g);
    EXPECT_EQ(equal(lhs, rhs, R), Verdict::Proved);
}

TEST(Saturation, DoesNotProveNonConsequences) {
    // Lam . L . pi(1) = pi(1) holds in the standard realization but does not
    // follow from the axioms for g >= 3; the engine must not claim it.
    const int g = 4;
    Expression lhs = wexpr({gen_lam(), gen_L(), gen_pi(1)}, g);
    Expression rhs = wexpr({gen_pi(1)}, g);
    RewriteSystem R = standard_rules(g);
    EXPECT_EQ(equal(lhs, rhs, R), Verdict::NotProved);
}

// ---------------------------------------------------------------------------
// Termination measure
// ---------------------------------------------------------------------------

TEST(Termination, MeasureStrictlyDecreasesOnCorpus) {
    for (int g : {2, 3, 4}) {
        RewriteSystem R = standard_rules(g);
        StepObserver check = [](const Word& before, const Word* after, RuleKind) {
            if (after == nullptr) return;  // killed terms leave the multiset
            EXPECT_LT(word_measure(*after), word_measure(before));
        };
        for (int j = 0; j <= 2 * (g - 1); ++j) {
            Expression pj = theta_projector(j, g);
            normalize(compose(pj, pj), R, check);
            for (int k = 0; k <= 2 * (g - 1); ++k) {
                if (k == j) continue;
                normalize(compose(pj, theta_projector(k, g)), R, check);
            }
        }
    }
}

TEST(Normalize, RejectsMismatchedG) {
    RewriteSystem R = standard_rules(3);
    EXPECT_THROW(normalize(gexpr(gen_L(), 4), R), DomainError);
}
