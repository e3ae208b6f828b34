#pragma once

// Closed-form numerical invariants of a smooth ample symmetric divisor of
// polarization degree d on a g-dimensional abelian variety.  Everything is
// exact integer arithmetic; the principally polarized case is d = 1.

#include "mforge/algebra.hpp"
#include "mforge/rational.hpp"

#include <string>
#include <vector>

namespace mforge {

inline BigInt binomial_big(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline int binomial(int n, int k) { return static_cast<int>(binomial_big(n, k)); }

namespace hodge {

inline void check_domain(int g, int d) {
    if (g < 2) throw DomainError("hodge: g must be >= 2");
    if (d < 1) throw DomainError("hodge: polarization degree d must be >= 1");
}

/// chi(T) = (-1)^{g-1} g! d, from c(TT) = (1 + theta)^{-1} restricted to the
/// divisor and integral theta^g = g! d.
inline long long euler_char_theta(int g, int d) {
    check_domain(g, d);
    long long fact = 1;
    for (int i = 2; i <= g; ++i) fact *= i;
    const long long sign = (g % 2 == 0) ? -1 : 1;
    return sign * fact * d;
}

/// Betti numbers h^0..h^{2g-2}: binomials off the middle (hyperplane-section
/// profile), middle solved from the Euler characteristic.
inline std::vector<long long> betti_theta(int g, int d) {
    check_domain(g, d);
    std::vector<long long> h(static_cast<std::size_t>(2 * g) - 1, 0);
    long long partial = 0;  // alternating sum of the off-middle entries
    for (int j = 0; j <= 2 * g - 2; ++j) {
        if (j == g - 1) continue;
        const long long hj =
            j < g - 1 ? static_cast<long long>(binomial(2 * g, j)) : binomial(2 * g, j + 2);
        h[static_cast<std::size_t>(j)] = hj;
        partial += (j % 2 == 0) ? hj : -hj;
    }
    const long long chi = euler_char_theta(g, d);
    const long long sign = (g - 1) % 2 == 0 ? 1 : -1;
    h[static_cast<std::size_t>(g) - 1] = sign * (chi - partial);
    return h;
}

/// dim K = h^{g-1}(T) - C(2g, g-1), the part of the middle cohomology not
/// pulled back from the ambient variety.
inline long long primitive_middle_dim(int g, int d) {
    const auto h = betti_theta(g, d);
    const long long k = h[static_cast<std::size_t>(g) - 1] - binomial(2 * g, g - 1);
    if (k < 0) throw DomainError("primitive_middle_dim: negative dimension (model inconsistency)");
    return k;
}

/// h^{g-1,0}(T) = d - 1 + g, from the restriction long exact sequence with
/// h^0(O(T)) = d and h^1(O) = g.
inline long long geometric_genus_theta(int g, int d) {
    check_domain(g, d);
    return d - 1 + g;
}

/// Upper bound for the Hodge level of K: g-3 when d = 1 (the geometric genus
/// matches the ambient one, so the outer Hodge pieces of K vanish), g-1
/// otherwise; -1 denotes the empty structure when K = 0.
inline int hodge_level_bound(int g, int d) {
    check_domain(g, d);
    if (primitive_middle_dim(g, d) == 0) return -1;
    return d == 1 ? g - 3 : g - 1;
}

struct HodgeProfile {
    int g = 0;
    int d = 1;
    long long euler = 0;
    std::vector<long long> betti;
    long long k_dim = 0;
    long long geom_genus = 0;
    int level_bound = 0;
    std::string assumptions = "assumes smooth ample symmetric divisor";
};

inline HodgeProfile profile(int g, int d) {
    HodgeProfile p;
    p.g = g;
    p.d = d;
    p.euler = euler_char_theta(g, d);
    p.betti = betti_theta(g, d);
    p.k_dim = primitive_middle_dim(g, d);
    p.geom_genus = geometric_genus_theta(g, d);
    p.level_bound = hodge_level_bound(g, d);
    return p;
}

}  // namespace hodge
}  // namespace mforge
