#pragma once

// Theorem driver: enumerates the identity corpus, runs symbolic proofs and
// (optionally) exact matrix comparisons, and assembles deterministic reports.

#include "mforge/algebra.hpp"
#include "mforge/dsl.hpp"
#include "mforge/named.hpp"
#include "mforge/normalize.hpp"
#include "mforge/realization.hpp"
#include "mforge/report.hpp"
#include "mforge/rules.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace mforge::verify {

enum class Mode { Symbolic, Realized, Both };

struct Statement {
    std::string id;
    Expression lhs;
    Expression rhs;
    Mode mode = Mode::Symbolic;
    std::string paper_ref;
};

namespace detail {

inline Statement stmt(std::string id, Expression lhs, Expression rhs, std::string ref) {
    lhs.check_compatible(rhs, "statement " + id);
    return Statement{std::move(id), std::move(lhs), std::move(rhs), Mode::Symbolic, std::move(ref)};
}

}  // namespace detail

/// Idempotency, mutual orthogonality and sum-to-diagonal for the divisor
/// projectors: (2g-1) + (2g-1)(2g-2) + 1 statements.
inline std::vector<Statement> chow_kunneth_suite(int g) {
    if (g < 2 || g > 6) throw DomainError("chow_kunneth_suite: g must be in 2..6");
    std::vector<Statement> out;
    const int top = 2 * (g - 1);
    for (int j = 0; j <= top; ++j) {
        Expression pj = theta_projector(j, g);
        out.push_back(detail::stmt("thm1.idem.j=" + std::to_string(j), compose(pj, pj), pj,
                                   "divisor projector idempotency"));
    }
    for (int j = 0; j <= top; ++j) {
        for (int k = 0; k <= top; ++k) {
            if (j == k) continue;
            out.push_back(detail::stmt(
                "thm1.orth.j=" + std::to_string(j) + ".k=" + std::to_string(k),
                compose(theta_projector(j, g), theta_projector(k, g)),
                Expression::zero(obj_Theta(g), obj_Theta(g), 0), "divisor projector orthogonality"));
        }
    }
    Expression sum = Expression::zero(obj_Theta(g), obj_Theta(g), 0);
    for (int j = 0; j <= top; ++j) sum = sum + theta_projector(j, g);
    out.push_back(detail::stmt("thm1.sum", sum, Expression::identity(obj_Theta(g)),
                               "projectors sum to the diagonal"));
    return out;
}

/// Inverse-composition identities for the comparison morphisms, the middle
/// splittings, the exchange and reduction lemmas, and the complementary
/// projector algebra.
inline std::vector<Statement> motivic_lefschetz_suite(int g) {
    if (g < 2 || g > 6) throw DomainError("motivic_lefschetz_suite: g must be in 2..6");
    std::vector<Statement> out;
    const int top = 2 * (g - 1);
    const Expression zeroT = Expression::zero(obj_Theta(g), obj_Theta(g), 0);
    const Expression tg = Expression::generator(gen_tgamma(), g);
    const Expression ga = Expression::generator(gen_gamma(), g);

    for (int j = 0; j < g - 1; ++j) {
        Expression h = lefschetz_morphism(j, g, LefschetzDirection::Pullback);
        Expression phi = inverse_candidate(j, g).phi;
        out.push_back(detail::stmt("thm2.a.inv1.j=" + std::to_string(j), compose(phi, h),
                                   Expression::generator(gen_pi(j), g),
                                   "restriction comparison left inverse"));
        out.push_back(detail::stmt("thm2.a.inv2.j=" + std::to_string(j), compose(h, phi),
                                   theta_projector(j, g), "restriction comparison right inverse"));
    }
    for (int j = g; j <= top; ++j) {
        Expression th = lefschetz_morphism(j, g, LefschetzDirection::Pushforward);
        Expression phi = inverse_candidate(j, g).phi;
        out.push_back(detail::stmt("thm2.b.inv1.j=" + std::to_string(j), compose(th, phi),
                                   Expression::generator(gen_pi(j + 2), g),
                                   "Gysin comparison right inverse"));
        out.push_back(detail::stmt("thm2.b.inv2.j=" + std::to_string(j), compose(phi, th),
                                   theta_projector(j, g), "Gysin comparison left inverse"));
    }

    {
        Expression h = lefschetz_morphism(g - 1, g, LefschetzDirection::Pullback);
        Expression th = lefschetz_morphism(g - 1, g, LefschetzDirection::Pushforward);
        auto mid = inverse_candidate(g - 1, g);
        out.push_back(detail::stmt("thm2.c.split-inj", compose(mid.phi, h),
                                   Expression::generator(gen_pi(g - 1), g),
                                   "middle comparison is split injective"));
        out.push_back(detail::stmt("thm2.c.split-surj", compose(th, *mid.psi),
                                   Expression::generator(gen_pi(g + 1), g),
                                   "middle Gysin comparison is split surjective"));
    }

    for (int j = 0; j < g - 1; ++j) {
        out.push_back(detail::stmt("thm2.lt.j=" + std::to_string(j),
                                   compose(theta_projector(j, g), tg),
                                   compose(tg, Expression::generator(gen_pi(j), g)),
                                   "restriction exchange below the middle"));
    }
    for (int j = g; j <= top; ++j) {
        out.push_back(detail::stmt("thm2.gt.j=" + std::to_string(j),
                                   compose(ga, theta_projector(j, g)),
                                   compose(Expression::generator(gen_pi(j + 2), g), ga),
                                   "Gysin exchange above the middle"));
    }

    {
        Expression pi = off_middle_projector_sum(g);
        Expression red = compose(
            ga, compose(pi, compose(tg, Expression::generator(gen_pi(g - 1), g))));
        out.push_back(detail::stmt("thm2.red", red, Expression::zero(obj_A(g), obj_A(g), 1),
                                   "middle reduction identity"));
    }

    auto [pi_prime, p] = complementary_projectors(g);
    const Expression mid = theta_projector(g - 1, g);
    out.push_back(detail::stmt("thm2.d.piprime-idem", compose(pi_prime, pi_prime), pi_prime,
                               "pulled-back middle projector idempotency"));
    out.push_back(detail::stmt("thm2.d.p-idem", compose(p, p), p, "complement idempotency"));
    out.push_back(detail::stmt("thm2.d.p-orth-piprime", compose(p, pi_prime), zeroT,
                               "complement orthogonal to the pulled-back part"));
    out.push_back(detail::stmt("thm2.d.piprime-orth-p", compose(pi_prime, p), zeroT,
                               "pulled-back part orthogonal to the complement"));
    for (int j = 0; j <= top; ++j) {
        if (j == g - 1) continue;
        out.push_back(detail::stmt("thm2.d.piprime-orth.j=" + std::to_string(j),
                                   compose(pi_prime, theta_projector(j, g)), zeroT,
                                   "pulled-back part orthogonal off the middle"));
        out.push_back(detail::stmt("thm2.d.p-orth.j=" + std::to_string(j),
                                   compose(p, theta_projector(j, g)), zeroT,
                                   "complement orthogonal off the middle"));
    }
    out.push_back(detail::stmt("thm2.d.piprime-absorb-left", compose(pi_prime, mid), pi_prime,
                               "middle projector absorbs the pulled-back part"));
    out.push_back(detail::stmt("thm2.d.piprime-absorb-right", compose(mid, pi_prime), pi_prime,
                               "middle projector absorbs the pulled-back part"));
    out.push_back(detail::stmt("thm2.d.decomp", p + pi_prime, mid,
                               "middle cohomology splits off the primitive part"));
    return out;
}

struct RunOptions {
    bool symbolic_only = false;
    std::optional<int> k_override;
    std::optional<int> saturation_depth;
    bool inject_corrupt_rule = false;
};

/// Runs both theorem suites for one g; for g <= 4 (and unless symbolic_only)
/// every statement is additionally compared in the exact matrix model, and the
/// axiom soundness and Kunneth condition checks are appended.
inline VerificationReport run_suite(int g, const RunOptions& opt = {}) {
    RewriteSystem R = standard_rules(g);
    if (opt.saturation_depth) R.saturation_depth = *opt.saturation_depth;
    if (opt.inject_corrupt_rule) inject_corrupt_rule(R);

    const bool with_model = !opt.symbolic_only && g <= 4;
    std::optional<real::CohomologyModel> model;
    if (with_model) model.emplace(real::theta_model(g, opt.k_override));

    VerificationReport report;
    report.g = g;

    std::vector<Statement> statements = chow_kunneth_suite(g);
    auto more = motivic_lefschetz_suite(g);
    statements.insert(statements.end(), more.begin(), more.end());

    for (auto& s : statements) {
        if (with_model) s.mode = Mode::Both;
        ReportEntry e;
        e.id = s.id;
        e.paper_ref = s.paper_ref;
        const auto t0 = std::chrono::steady_clock::now();
        const Verdict symbolic = equal(s.lhs, s.rhs, R);
        bool realized_ok = true;
        bool realized_ran = false;
        if (s.mode != Mode::Symbolic && model) {
            realized_ran = true;
            realized_ok = real::realize(s.lhs, *model) == real::realize(s.rhs, *model);
        }
        const auto t1 = std::chrono::steady_clock::now();
        e.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        e.lhs_normal = dsl::format(normalize(s.lhs, R));
        e.rhs_normal = dsl::format(normalize(s.rhs, R));
        if (realized_ran && !realized_ok) {
            e.status = Status::Failed;
        } else if (symbolic == Verdict::Proved) {
            e.status = Status::Proved;
        } else if (realized_ran) {
            e.status = Status::RealizedOnly;
        } else {
            e.status = Status::NotProved;
        }
        report.statements.push_back(std::move(e));
    }

    if (with_model) {
        VerificationReport axioms = real::soundness_check(R, *model);
        report.statements.insert(report.statements.end(), axioms.statements.begin(),
                                 axioms.statements.end());
        VerificationReport kn = real::kunneth_check(g, opt.k_override);
        report.statements.insert(report.statements.end(), kn.statements.begin(),
                                 kn.statements.end());
    }
    return report;
}

inline std::vector<VerificationReport> run_suites(const std::vector<int>& gs,
                                                  const RunOptions& opt = {}) {
    std::vector<VerificationReport> out;
    out.reserve(gs.size());
    for (int g : gs) out.push_back(run_suite(g, opt));
    return out;
}

}  // namespace mforge::verify
