#pragma once

// The oriented rewrite axioms for a fixed g, in priority order.
//
//   R0  pi(j) with j outside 0..2g kills the whole word        (zero projector)
//   D   Delta factors are erased from words of length >= 2     (identities)
//   R1  G . tG                -> L                              (Gysin factorization)
//   R4  mul(n) . pi(j)        -> n^j pi(j)   (and mirrored)    (multiplication action)
//   R2  pi(j) . pi(k)         -> pi(j) if j == k else 0        (orthogonal idempotents)
//   K1  pi(j) . Lam^a . L^a   -> pi(j)   for a = g-j >= 1      (hard Lefschetz inverse)
//   K2  pi(k) . L^b . Lam^b   -> pi(k)   for b = k-g >= 1
//   R3  L . pi(j)             -> pi(j+2) . L                   (degree commutation,
//       Lam . pi(j)           -> pi(j-2) . Lam                  oriented to move
//                                                               projectors left)
//
// Every rule preserves endpoints and degree.  K1/K2 are stored in prefix form,
// which is derivable from the two-sided hard Lefschetz relation by commutation
// and idempotency.  K1/K2 must outrank R3: once a projector has migrated left
// past a Lam/L block the prefix redex at its original position is gone, so
// running the commutation first would strand reducible words (e.g. the squares
// of the high-degree divisor projectors).
//
// Termination measure, strictly decreasing in lexicographic order per step:
//   1. number of (G, tG) pairs separated only by Delta factors
//   2. number of (L | Lam | mul) factors lying left of a pi factor
//   3. word length

#include "mforge/algebra.hpp"

#include <array>
#include <string>
#include <vector>

namespace mforge {

enum class RuleKind : std::uint8_t {
    R0_ZeroProjector,
    D_DeltaIdentity,
    R1_GysinFactor,
    R4_MulAction,
    R2_ProjectorMerge,
    K1_LowerRaise,
    K2_RaiseLower,
    R3_Commute,
    R3_CommuteCorrupt,  // test fixture: L . pi(j) -> pi(j+4) . L, semantically wrong
};

struct Rule {
    RuleKind kind;
    std::string name;
    std::string side_conditions;
};

struct RewriteSystem {
    int g = 2;
    std::vector<Rule> rules;  // priority order: rules[0] is tried first
    int saturation_depth = 3;

    bool has_rule(RuleKind k) const {
        for (const auto& r : rules)
            if (r.kind == k) return true;
        return false;
    }
};

/// The complete standard system for a given g.
inline RewriteSystem standard_rules(int g) {
    if (g < 2) throw DomainError("standard_rules: unsupported dimension g = " + std::to_string(g));
    RewriteSystem R;
    R.g = g;
    R.rules = {
        {RuleKind::R0_ZeroProjector, "R0", "pi(j) = 0 for j < 0 or j > 2g"},
        {RuleKind::D_DeltaIdentity, "D", "word length >= 2"},
        {RuleKind::R1_GysinFactor, "R1", ""},
        {RuleKind::R4_MulAction, "R4", "0 <= j <= 2g"},
        {RuleKind::R2_ProjectorMerge, "R2", "0 <= j, k <= 2g"},
        {RuleKind::K1_LowerRaise, "K1", "0 <= j < g, exponent g-j"},
        {RuleKind::K2_RaiseLower, "K2", "g < k <= 2g, exponent k-g"},
        {RuleKind::R3_Commute, "R3", "0 <= j <= 2g"},
    };
    return R;
}

/// Replaces the commutation rule by a degree-preserving but semantically wrong
/// variant (L . pi(j) -> pi(j+4) . L).  Regression fixture for the negative
/// path: symbolic proofs degrade and the model refutes the rule.
inline void inject_corrupt_rule(RewriteSystem& R) {
    for (auto& r : R.rules) {
        if (r.kind == RuleKind::R3_Commute) {
            r.kind = RuleKind::R3_CommuteCorrupt;
            r.name = "R3corrupt";
            r.side_conditions = "fixture: shifts by 4 instead of 2";
        }
    }
}

// ---------------------------------------------------------------------------
// Rule instances (for the semantic soundness check)
// ---------------------------------------------------------------------------

struct RuleInstance {
    std::string id;
    Expression lhs;
    Expression rhs;
};

namespace detail {

inline Expression word_expr(std::vector<Generator> fs, int g) {
    return Expression::from_word(make_word(std::move(fs), g), g);
}

inline std::vector<Generator> repeat(const Generator& f, int n) {
    return std::vector<Generator>(static_cast<std::size_t>(n), f);
}

}  // namespace detail

/// Enumerates concrete (lhs, rhs) expression pairs for one rule.  R4 samples a
/// fixed set of multipliers since n ranges over all integers.
inline std::vector<RuleInstance> rule_instances(const Rule& rule, int g) {
    using detail::repeat;
    using detail::word_expr;
    std::vector<RuleInstance> out;
    const Obj A = obj_A(g);
    const Obj T = obj_Theta(g);
    switch (rule.kind) {
        case RuleKind::R0_ZeroProjector: {
            for (int j : {-2, -1, 2 * g + 1, 2 * g + 2}) {
                out.push_back({"R0.j=" + std::to_string(j), word_expr({gen_pi(j)}, g),
                               Expression::zero(A, A, 0)});
            }
            break;
        }
        case RuleKind::D_DeltaIdentity: {
            out.push_back({"D.AA", word_expr({gen_delta_A(), gen_delta_A()}, g),
                           word_expr({gen_delta_A()}, g)});
            out.push_back({"D.TT", word_expr({gen_delta_T(), gen_delta_T()}, g),
                           word_expr({gen_delta_T()}, g)});
            out.push_back(
                {"D.AL", word_expr({gen_delta_A(), gen_L()}, g), word_expr({gen_L()}, g)});
            out.push_back(
                {"D.tGA", word_expr({gen_tgamma(), gen_delta_A()}, g), word_expr({gen_tgamma()}, g)});
            out.push_back(
                {"D.TG", word_expr({gen_delta_T(), gen_tgamma()}, g), word_expr({gen_tgamma()}, g)});
            out.push_back(
                {"D.GT", word_expr({gen_gamma(), gen_delta_T()}, g), word_expr({gen_gamma()}, g)});
            break;
        }
        case RuleKind::R1_GysinFactor: {
            out.push_back(
                {"R1", word_expr({gen_gamma(), gen_tgamma()}, g), word_expr({gen_L()}, g)});
            break;
        }
        case RuleKind::R4_MulAction: {
            for (int n : {-2, -1, 0, 1, 2, 3}) {
                for (int j = 0; j <= 2 * g; ++j) {
                    Expression rhs = int_pow(n, j) * word_expr({gen_pi(j)}, g);
                    out.push_back({"R4.left.n=" + std::to_string(n) + ".j=" + std::to_string(j),
                                   word_expr({gen_mul(n), gen_pi(j)}, g), rhs});
                    out.push_back({"R4.right.n=" + std::to_string(n) + ".j=" + std::to_string(j),
                                   word_expr({gen_pi(j), gen_mul(n)}, g), rhs});
                }
            }
            break;
        }
        case RuleKind::R2_ProjectorMerge: {
            for (int j = 0; j <= 2 * g; ++j) {
                for (int k = 0; k <= 2 * g; ++k) {
                    Expression rhs = (j == k) ? word_expr({gen_pi(j)}, g) : Expression::zero(A, A, 0);
                    out.push_back({"R2.j=" + std::to_string(j) + ".k=" + std::to_string(k),
                                   word_expr({gen_pi(j), gen_pi(k)}, g), rhs});
                }
            }
            break;
        }
        case RuleKind::K1_LowerRaise: {
            for (int j = 0; j < g; ++j) {
                const int a = g - j;
                std::vector<Generator> fs = {gen_pi(j)};
                auto lam = repeat(gen_lam(), a), ell = repeat(gen_L(), a);
                fs.insert(fs.end(), lam.begin(), lam.end());
                fs.insert(fs.end(), ell.begin(), ell.end());
                out.push_back(
                    {"K1.j=" + std::to_string(j), word_expr(fs, g), word_expr({gen_pi(j)}, g)});
                // two-sided original, j <= g
                fs.push_back(gen_pi(j));
                out.push_back({"K1.sandwich.j=" + std::to_string(j), word_expr(fs, g),
                               word_expr({gen_pi(j)}, g)});
            }
            out.push_back({"K1.sandwich.j=" + std::to_string(g),
                           word_expr({gen_pi(g), gen_pi(g)}, g), word_expr({gen_pi(g)}, g)});
            break;
        }
        case RuleKind::K2_RaiseLower: {
            for (int k = g + 1; k <= 2 * g; ++k) {
                const int b = k - g;
                std::vector<Generator> fs = {gen_pi(k)};
                auto ell = repeat(gen_L(), b), lam = repeat(gen_lam(), b);
                fs.insert(fs.end(), ell.begin(), ell.end());
                fs.insert(fs.end(), lam.begin(), lam.end());
                out.push_back(
                    {"K2.k=" + std::to_string(k), word_expr(fs, g), word_expr({gen_pi(k)}, g)});
                fs.push_back(gen_pi(k));
                out.push_back({"K2.sandwich.k=" + std::to_string(k), word_expr(fs, g),
                               word_expr({gen_pi(k)}, g)});
            }
            break;
        }
        case RuleKind::R3_Commute: {
            for (int j = 0; j <= 2 * g; ++j) {
                out.push_back({"R3.L.j=" + std::to_string(j), word_expr({gen_L(), gen_pi(j)}, g),
                               word_expr({gen_pi(j + 2), gen_L()}, g)});
                out.push_back({"R3.Lam.j=" + std::to_string(j),
                               word_expr({gen_lam(), gen_pi(j)}, g),
                               word_expr({gen_pi(j - 2), gen_lam()}, g)});
            }
            break;
        }
        case RuleKind::R3_CommuteCorrupt: {
            for (int j = 0; j <= 2 * g; ++j) {
                out.push_back({"R3corrupt.L.j=" + std::to_string(j),
                               word_expr({gen_L(), gen_pi(j)}, g),
                               word_expr({gen_pi(j + 4), gen_L()}, g)});
                out.push_back({"R3corrupt.Lam.j=" + std::to_string(j),
                               word_expr({gen_lam(), gen_pi(j)}, g),
                               word_expr({gen_pi(j - 4), gen_lam()}, g)});
            }
            break;
        }
    }
    (void)T;
    return out;
}

// ---------------------------------------------------------------------------
// Termination measure
// ---------------------------------------------------------------------------

struct Measure {
    long long gysin_pairs = 0;   // (G, tG) pairs separated only by Deltas
    long long movers_left = 0;   // (L|Lam|mul, pi) pairs with the mover left of the projector
    long long length = 0;

    friend auto operator<=>(const Measure&, const Measure&) = default;
};

inline Measure word_measure(const Word& w) {
    Measure m;
    m.length = static_cast<long long>(w.factors.size());
    const auto& fs = w.factors;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].kind == GenKind::GammaI) {
            for (std::size_t k = i + 1; k < fs.size(); ++k) {
                if (fs[k].kind == GenKind::TGammaI) {
                    ++m.gysin_pairs;
                    break;
                }
                if (fs[k].kind != GenKind::DeltaTheta && fs[k].kind != GenKind::DeltaA) break;
            }
        }
        const bool mover = fs[i].kind == GenKind::L || fs[i].kind == GenKind::Lam ||
                           fs[i].kind == GenKind::TGammaN;
        if (mover) {
            for (std::size_t k = i + 1; k < fs.size(); ++k) {
                if (fs[k].kind == GenKind::PiA) ++m.movers_left;
            }
        }
    }
    return m;
}

}  // namespace mforge
