#pragma once

// Deterministic normalization: single-step rewriting where the applicable rule
// of highest priority fires at its leftmost redex, iterated to a fixpoint.
// Normalization is linear over terms; words that normalize to the same normal
// form are collected with exact coefficient arithmetic.
//
// equal() first decides by normal form of the difference, then falls back to a
// bounded bidirectional saturation search (K1/K2 applied in both directions,
// plus reversed commutation moves, re-normalizing every candidate).

#include "mforge/algebra.hpp"
#include "mforge/rules.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

namespace mforge {

enum class Verdict { Proved, NotProved };

inline const char* to_string(Verdict v) { return v == Verdict::Proved ? "Proved" : "NotProved"; }

namespace detail {

struct Step {
    bool kill = false;          // word rewrote to zero
    Word out;                   // valid when !kill
    Rational coeff_mult = 1;    // multiplier picked up by the step (R4)
    RuleKind rule{};
};

inline bool pi_in_range(int j, int g) { return j >= 0 && j <= 2 * g; }

/// Finds the highest-priority rule with a leftmost redex in w, or nullopt if w
/// is in normal form.
inline std::optional<Step> find_step(const Word& w, const RewriteSystem& R) {
    const auto& fs = w.factors;
    const int g = R.g;
    for (const auto& rule : R.rules) {
        switch (rule.kind) {
            case RuleKind::R0_ZeroProjector: {
                for (const auto& f : fs) {
                    if (f.kind == GenKind::PiA && !pi_in_range(f.param, g)) {
                        Step s;
                        s.kill = true;
                        s.rule = rule.kind;
                        return s;
                    }
                }
                break;
            }
            case RuleKind::D_DeltaIdentity: {
                if (fs.size() < 2) break;
                for (std::size_t i = 0; i < fs.size(); ++i) {
                    if (fs[i].kind == GenKind::DeltaA || fs[i].kind == GenKind::DeltaTheta) {
                        Step s;
                        s.out = w;
                        s.out.factors.erase(s.out.factors.begin() + static_cast<long>(i));
                        s.rule = rule.kind;
                        return s;
                    }
                }
                break;
            }
            case RuleKind::R1_GysinFactor: {
                for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
                    if (fs[i].kind == GenKind::GammaI && fs[i + 1].kind == GenKind::TGammaI) {
                        Step s;
                        s.out = w;
                        s.out.factors[i] = gen_L();
                        s.out.factors.erase(s.out.factors.begin() + static_cast<long>(i) + 1);
                        s.rule = rule.kind;
                        return s;
                    }
                }
                break;
            }
            case RuleKind::R4_MulAction: {
                for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
                    const bool left = fs[i].kind == GenKind::TGammaN && fs[i + 1].kind == GenKind::PiA;
                    const bool right = fs[i].kind == GenKind::PiA && fs[i + 1].kind == GenKind::TGammaN;
                    if (!left && !right) continue;
                    const int n = left ? fs[i].param : fs[i + 1].param;
                    const int j = left ? fs[i + 1].param : fs[i].param;
                    Step s;
                    s.out = w;
                    s.out.factors.erase(s.out.factors.begin() + static_cast<long>(i) + (left ? 0 : 1));
                    s.coeff_mult = int_pow(n, j);
                    s.rule = rule.kind;
                    return s;
                }
                break;
            }
            case RuleKind::R2_ProjectorMerge: {
                for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
                    if (fs[i].kind == GenKind::PiA && fs[i + 1].kind == GenKind::PiA) {
                        Step s;
                        s.rule = rule.kind;
                        if (fs[i].param != fs[i + 1].param) {
                            s.kill = true;
                            return s;
                        }
                        s.out = w;
                        s.out.factors.erase(s.out.factors.begin() + static_cast<long>(i) + 1);
                        return s;
                    }
                }
                break;
            }
            case RuleKind::K1_LowerRaise: {
                for (std::size_t i = 0; i < fs.size(); ++i) {
                    if (fs[i].kind != GenKind::PiA) continue;
                    const int j = fs[i].param;
                    if (j < 0 || j >= g) continue;
                    const std::size_t a = static_cast<std::size_t>(g - j);
                    if (i + 2 * a + 1 > fs.size()) continue;
                    bool match = true;
                    for (std::size_t t = 1; t <= a && match; ++t)
                        match = fs[i + t].kind == GenKind::Lam;
                    for (std::size_t t = a + 1; t <= 2 * a && match; ++t)
                        match = fs[i + t].kind == GenKind::L;
                    if (!match) continue;
                    Step s;
                    s.out = w;
                    s.out.factors.erase(s.out.factors.begin() + static_cast<long>(i) + 1,
                                        s.out.factors.begin() + static_cast<long>(i + 2 * a) + 1);
                    s.rule = rule.kind;
                    return s;
                }
                break;
            }
            case RuleKind::K2_RaiseLower: {
                for (std::size_t i = 0; i < fs.size(); ++i) {
                    if (fs[i].kind != GenKind::PiA) continue;
                    const int k = fs[i].param;
                    if (k <= g || k > 2 * g) continue;
                    const std::size_t b = static_cast<std::size_t>(k - g);
                    if (i + 2 * b + 1 > fs.size()) continue;
                    bool match = true;
                    for (std::size_t t = 1; t <= b && match; ++t)
                        match = fs[i + t].kind == GenKind::L;
                    for (std::size_t t = b + 1; t <= 2 * b && match; ++t)
                        match = fs[i + t].kind == GenKind::Lam;
                    if (!match) continue;
                    Step s;
                    s.out = w;
                    s.out.factors.erase(s.out.factors.begin() + static_cast<long>(i) + 1,
                                        s.out.factors.begin() + static_cast<long>(i + 2 * b) + 1);
                    s.rule = rule.kind;
                    return s;
                }
                break;
            }
            case RuleKind::R3_Commute:
            case RuleKind::R3_CommuteCorrupt: {
                const int shift = rule.kind == RuleKind::R3_Commute ? 2 : 4;
                for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
                    if (fs[i + 1].kind != GenKind::PiA) continue;
                    if (fs[i].kind != GenKind::L && fs[i].kind != GenKind::Lam) continue;
                    const int j = fs[i + 1].param;
                    Step s;
                    s.out = w;
                    s.out.factors[i] = gen_pi(fs[i].kind == GenKind::L ? j + shift : j - shift);
                    s.out.factors[i + 1] = fs[i].kind == GenKind::L ? gen_L() : gen_lam();
                    s.rule = rule.kind;
                    return s;
                }
                break;
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Observer invoked once per rewrite step (tests use it to check the
/// termination measure); `after` is nullptr when the step killed the word.
using StepObserver =
    std::function<void(const Word& before, const Word* after, RuleKind rule)>;

/// Normal form of a single word together with the coefficient factor collected
/// along the way.  Returns nullopt when the word rewrites to zero.
inline std::optional<std::pair<Word, Rational>> normalize_word(
    const Word& w, const RewriteSystem& R, const StepObserver& observe = {}) {
    Word cur = w;
    Rational coeff = 1;
    while (auto step = detail::find_step(cur, R)) {
        if (observe) observe(cur, step->kill ? nullptr : &step->out, step->rule);
        if (step->kill) return std::nullopt;
        coeff *= step->coeff_mult;
        cur = std::move(step->out);
        if (coeff == 0) return std::nullopt;
    }
    return std::make_pair(std::move(cur), std::move(coeff));
}

/// Deterministic normal form of an expression; preserves source, target and
/// degree.
inline Expression normalize(const Expression& e, const RewriteSystem& R,
                            const StepObserver& observe = {}) {
    if (e.g() != R.g)
        throw DomainError("normalize: expression built for g = " + std::to_string(e.g()) +
                          " but rule system has g = " + std::to_string(R.g));
    Expression out = Expression::zero(e.source(), e.target(), e.degree());
    for (const auto& [w, c] : e.terms()) {
        if (auto nf = normalize_word(w, R, observe)) out.add_term(nf->first, c * nf->second);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Equality
// ---------------------------------------------------------------------------

namespace detail {

/// Single reversed moves used by the saturation fallback: K1/K2 block
/// insertion after a projector, and the commutation read right-to-left.
inline std::vector<Word> reverse_moves(const Word& w, int g) {
    std::vector<Word> out;
    const auto& fs = w.factors;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].kind == GenKind::PiA) {
            const int j = fs[i].param;
            if (j >= 0 && j < g) {
                Word v = w;
                std::vector<Generator> block;
                for (int t = 0; t < g - j; ++t) block.push_back(gen_lam());
                for (int t = 0; t < g - j; ++t) block.push_back(gen_L());
                v.factors.insert(v.factors.begin() + static_cast<long>(i) + 1, block.begin(),
                                 block.end());
                out.push_back(std::move(v));
            }
            if (j > g && j <= 2 * g) {
                Word v = w;
                std::vector<Generator> block;
                for (int t = 0; t < j - g; ++t) block.push_back(gen_L());
                for (int t = 0; t < j - g; ++t) block.push_back(gen_lam());
                v.factors.insert(v.factors.begin() + static_cast<long>(i) + 1, block.begin(),
                                 block.end());
                out.push_back(std::move(v));
            }
            // pi(m) . L -> L . pi(m-2), pi(m) . Lam -> Lam . pi(m+2)
            if (i + 1 < fs.size() &&
                (fs[i + 1].kind == GenKind::L || fs[i + 1].kind == GenKind::Lam)) {
                Word v = w;
                const int m = fs[i].param;
                v.factors[i] = fs[i + 1];
                v.factors[i + 1] = gen_pi(fs[i + 1].kind == GenKind::L ? m - 2 : m + 2);
                out.push_back(std::move(v));
            }
        }
    }
    return out;
}

inline bool contains_expr(const std::vector<Expression>& set, const Expression& e) {
    return std::find(set.begin(), set.end(), e) != set.end();
}

}  // namespace detail

/// Proved iff normalize(e1 - e2) vanishes, with a bounded bidirectional
/// saturation fallback.  NotProved is not a refutation.
inline Verdict equal(const Expression& e1, const Expression& e2, const RewriteSystem& R) {
    e1.check_compatible(e2, "equal");
    Expression diff = normalize(e1 - e2, R);
    if (diff.is_zero()) return Verdict::Proved;
    if (R.saturation_depth <= 0) return Verdict::NotProved;

    constexpr std::size_t kMaxSide = 256;
    constexpr std::size_t kMaxWordLen = 64;

    std::vector<Expression> side[2] = {{normalize(e1, R)}, {normalize(e2, R)}};
    std::size_t frontier[2] = {0, 0};

    auto cross_hit = [&](const Expression& e, int other) {
        return detail::contains_expr(side[other], e);
    };
    if (cross_hit(side[0][0], 1)) return Verdict::Proved;

    for (int depth = 0; depth < R.saturation_depth; ++depth) {
        for (int s = 0; s < 2; ++s) {
            const std::size_t hi = side[s].size();
            for (std::size_t idx = frontier[s]; idx < hi; ++idx) {
                const Expression base = side[s][idx];
                for (const auto& [w, c] : base.terms()) {
                    for (const Word& v : detail::reverse_moves(w, R.g)) {
                        if (v.factors.size() > kMaxWordLen) continue;
                        Expression cand = base;
                        cand.add_term(w, -c);
                        cand.add_term(v, c);
                        cand = normalize(cand, R);
                        if (!detail::contains_expr(side[s], cand)) {
                            if (cross_hit(cand, 1 - s)) return Verdict::Proved;
                            if (side[s].size() < kMaxSide) side[s].push_back(std::move(cand));
                        }
                    }
                }
            }
            frontier[s] = hi;
        }
    }
    return Verdict::NotProved;
}

}  // namespace mforge
