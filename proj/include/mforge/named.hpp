#pragma once

// The named correspondences of the theorem corpus: Chow-Kunneth projectors for
// the divisor, the complementary middle-degree projectors, and the
// pullback/pushforward morphisms with their inverse candidates.

#include "mforge/algebra.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mforge {

namespace detail {

inline void append(std::vector<Generator>& fs, const Generator& f, int count) {
    for (int i = 0; i < count; ++i) fs.push_back(f);
}

inline Expression theta_word(std::vector<Generator> fs, int g) {
    return Expression::from_word(make_word(std::move(fs), g), g);
}

}  // namespace detail

/// Divisor projector pi(j, T), degree 0, T -> T, for 0 <= j <= 2(g-1).
/// Off-middle degrees use the explicit conjugated words; the middle one is the
/// formal difference from the diagonal and is kept unexpanded.
inline Expression theta_projector(int j, int g) {
    if (g < 2) throw DomainError("theta_projector: g must be >= 2");
    if (j < 0 || j > 2 * (g - 1))
        throw IndexError("theta_projector: index " + std::to_string(j) + " outside 0.." +
                         std::to_string(2 * (g - 1)));
    using detail::append;
    if (j < g - 1) {
        // tG . pi(j,A) . Lam^{g-j} . L^{g-j-1} . G
        std::vector<Generator> fs{gen_tgamma(), gen_pi(j)};
        append(fs, gen_lam(), g - j);
        append(fs, gen_L(), g - j - 1);
        fs.push_back(gen_gamma());
        return detail::theta_word(std::move(fs), g);
    }
    if (j > g - 1) {
        // tG . L^{j-g+1} . Lam^{j-g+2} . pi(j+2,A) . G
        std::vector<Generator> fs{gen_tgamma()};
        append(fs, gen_L(), j - g + 1);
        append(fs, gen_lam(), j - g + 2);
        fs.push_back(gen_pi(j + 2));
        fs.push_back(gen_gamma());
        return detail::theta_word(std::move(fs), g);
    }
    // dT - sum of all the others
    Expression e = Expression::identity(obj_Theta(g));
    for (int k = 0; k <= 2 * (g - 1); ++k) {
        if (k == g - 1) continue;
        e = e - theta_projector(k, g);
    }
    return e;
}

/// The middle-degree projector pulled back from A and its complement:
///   piPrime = tG . pi(g-1,A) . Lam . G
///   p       = theta_projector(g-1) - piPrime
/// p cuts out the primitive part of the middle cohomology of the divisor.
inline std::pair<Expression, Expression> complementary_projectors(int g) {
    if (g < 2) throw DomainError("complementary_projectors: g must be >= 2");
    Expression pi_prime =
        detail::theta_word({gen_tgamma(), gen_pi(g - 1), gen_lam(), gen_gamma()}, g);
    Expression p = theta_projector(g - 1, g) - pi_prime;
    return {std::move(pi_prime), std::move(p)};
}

enum class LefschetzDirection { Pullback, Pushforward };

/// h^j(i)  = pi(j,T) . tG . pi(j,A)       : A -> T, degree 0   (pullback)
/// th^j(i) = pi(j+2,A) . G . pi(j,T)      : T -> A, degree 1   (pushforward)
inline Expression lefschetz_morphism(int j, int g, LefschetzDirection dir) {
    if (j < 0 || j > 2 * (g - 1))
        throw IndexError("lefschetz_morphism: index " + std::to_string(j) + " outside 0.." +
                         std::to_string(2 * (g - 1)));
    const Expression pjT = theta_projector(j, g);
    if (dir == LefschetzDirection::Pullback) {
        Expression tg = Expression::generator(gen_tgamma(), g);
        Expression pjA = Expression::generator(gen_pi(j), g);
        return compose(pjT, compose(tg, pjA));
    }
    Expression ga = Expression::generator(gen_gamma(), g);
    Expression pA = Expression::generator(gen_pi(j + 2), g);
    return compose(pA, compose(ga, pjT));
}

struct InverseCandidate {
    Expression phi;
    std::optional<Expression> psi;  // only present in the middle degree
};

/// Inverse candidates for the Lefschetz morphisms:
///   j < g-1 : phi_j = pi(j,A) . Lam^{g-j} . L^{g-j-1} . G . pi(j,T)
///   j > g-1 : phi_j = pi(j,T) . tG . L^{j-g+1} . Lam^{j-g+2} . pi(j+2,A)
///   j = g-1 : phi = pi(g-1,A) . Lam . G . pi(g-1,T)   (left inverse)
///             psi = pi(g-1,T) . tG . Lam . pi(g+1,A)  (right inverse)
inline InverseCandidate inverse_candidate(int j, int g) {
    if (j < 0 || j > 2 * (g - 1))
        throw IndexError("inverse_candidate: index " + std::to_string(j) + " outside 0.." +
                         std::to_string(2 * (g - 1)));
    using detail::append;
    const Expression pjT = theta_projector(j, g);
    if (j < g - 1) {
        std::vector<Generator> fs{gen_pi(j)};
        append(fs, gen_lam(), g - j);
        append(fs, gen_L(), g - j - 1);
        fs.push_back(gen_gamma());
        Expression head = detail::theta_word(std::move(fs), g);
        return {compose(head, pjT), std::nullopt};
    }
    if (j > g - 1) {
        std::vector<Generator> fs{gen_tgamma()};
        append(fs, gen_L(), j - g + 1);
        append(fs, gen_lam(), j - g + 2);
        fs.push_back(gen_pi(j + 2));
        Expression tail = detail::theta_word(std::move(fs), g);
        return {compose(pjT, tail), std::nullopt};
    }
    Expression phi_head = detail::theta_word({gen_pi(g - 1), gen_lam(), gen_gamma()}, g);
    Expression psi_tail = detail::theta_word({gen_tgamma(), gen_lam(), gen_pi(g + 1)}, g);
    return {compose(phi_head, pjT), compose(pjT, psi_tail)};
}

/// Sum of the off-middle divisor projectors (the "pi" of the middle-degree
/// arguments).
inline Expression off_middle_projector_sum(int g) {
    Expression e = Expression::zero(obj_Theta(g), obj_Theta(g), 0);
    for (int k = 0; k <= 2 * (g - 1); ++k) {
        if (k == g - 1) continue;
        e = e + theta_projector(k, g);
    }
    return e;
}

}  // namespace mforge
