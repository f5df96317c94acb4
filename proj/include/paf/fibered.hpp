#pragma once

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "paf/ival.hpp"
#include "paf/rat.hpp"
#include "paf/roots.hpp"

namespace paf {

/// Integral class (a, b) in H^1 of the Appendix manifold; the fibered cone
/// is { b > 0, -b < a < b }.
struct FiberedClass {
    long long a = 0;
    long long b = 0;

    bool in_cone() const { return b > 0 && -b < a && a < b; }
    bool in_closed_cone() const { return b >= 0 && -b <= a && a <= b; }
    bool is_zero() const { return a == 0 && b == 0; }

    FiberedClass primitive_part() const {
        long long g = std::gcd(std::abs(a), std::abs(b));
        if (g == 0) return *this;
        return {a / g, b / g};
    }
    long long multiplicity() const {
        long long g = std::gcd(std::abs(a), std::abs(b));
        return g == 0 ? 1 : g;
    }
    friend FiberedClass operator+(const FiberedClass& x, const FiberedClass& y) {
        return {x.a + y.a, x.b + y.b};
    }
};

/// Thurston norm on the Appendix manifold: ||(a,b)|| = 2 max(|a|, |b|).
inline long long thurston_norm(const FiberedClass& c) {
    if (c.is_zero()) throw std::invalid_argument("thurston_norm: zero class");
    return 2 * std::max(std::abs(c.a), std::abs(c.b));
}

/// The fibered-face polynomial L_{a,b}(x) = x^{2b} - x^{b+a} - x^b - x^{b-a} + 1
/// for a primitive class in the cone (a may be negated; the polynomial is
/// symmetric under a -> -a).
inline IntPoly lt_polynomial(const FiberedClass& c0) {
    FiberedClass c = c0;
    if (c.a < 0) c.a = -c.a;
    if (!c.in_cone())
        throw std::invalid_argument("lt_polynomial: class outside the fibered cone");
    IntPoly p;
    p.c.assign((size_t)(2 * c.b) + 1, 0);
    p.c[(size_t)(2 * c.b)] += 1;
    p.c[(size_t)(c.b + c.a)] -= 1;
    p.c[(size_t)c.b] -= 1;
    p.c[(size_t)(c.b - c.a)] -= 1;
    p.c[0] += 1;
    return p;
}

/// Entropy of the monodromy at an integral class in the cone: log of the
/// largest root of L at the primitive part, divided by the multiplicity.
inline Ival fried_entropy(const FiberedClass& c, double tol = 1e-12) {
    if (!c.in_cone()) throw std::domain_error("fried_entropy: class outside the open cone");
    FiberedClass prim = c.primitive_part();
    Ival root = largest_root(lt_polynomial(prim), tol);
    Ival h = log(root);
    long long m = c.multiplicity();
    if (m > 1) h = h * Ival(Rat(1, m));
    return h;
}

/// Norm, entropy, and scale-invariant normalized entropy of a class.
struct EntropyProfile {
    long long norm = 0;
    Ival entropy;
    Ival normalized;  // norm * entropy
};

inline EntropyProfile normalized_entropy(const FiberedClass& c, double tol = 1e-12) {
    EntropyProfile p;
    p.norm = thurston_norm(c);
    p.entropy = fried_entropy(c, tol);
    p.normalized = Ival((double)p.norm) * p.entropy;
    return p;
}

/// The minimizing classes alpha_g on the norm slice: (1, g+1) when (3, g+1) fails
/// to be primitive (g = 2, 5 mod 6), else (3, g+1).
inline FiberedClass alpha_class(long long g) {
    if (g < 3) throw std::invalid_argument("alpha_class: g must be >= 3");
    long long r = g % 6;
    if (r == 2 || r == 5) return {1, g + 1};
    return {3, g + 1};
}

/// (2g-2) h(psi_g) = ((g-1)/(g+1)) * normalized entropy of alpha_g.
inline Ival psi_normalized(long long g, double tol = 1e-12) {
    EntropyProfile p = normalized_entropy(alpha_class(g), tol);
    return Ival(Rat(g - 1, g + 1)) * p.normalized;
}

/// h_1(t) = normalized entropy on the norm-2 slice, t = p/q in (-1, 1).
inline Ival h1(const Rat& t, double tol = 1e-12) {
    if (!(Rat(-1) < t && t < Rat(1))) throw std::domain_error("h1: |t| must be < 1");
    return normalized_entropy({t.num(), t.den()}, tol).normalized;
}

/// F(t) = (1 - (2/3) t) h_1(t).
inline Ival appendix_F(const Rat& t, double tol = 1e-12) {
    return Ival(Rat(1) - Rat(2, 3) * t) * h1(t, tol);
}

/// The norm decomposition 2g-2 = l (2g_0 - 2) + 2r with 0 < r < g_0 behind
/// the upper bound, and which convex-combination branch the proof takes.
struct DecompositionPlan {
    long long g = 0, k = 0, g0 = 0;
    long long l = 0, r = 0;
    enum class Branch { BaseCase, Coprime, NonCoprime } branch = Branch::BaseCase;
};

inline DecompositionPlan upper_bound_plan(long long g, long long k) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("upper_bound_plan: k must be even >= 2");
    DecompositionPlan plan;
    plan.g = g;
    plan.k = k;
    plan.g0 = std::max(k / 2, 2LL);
    if (g < plan.g0) throw std::invalid_argument("upper_bound_plan: need g >= g0");
    if (g == plan.g0) {
        plan.branch = DecompositionPlan::Branch::BaseCase;
        return plan;
    }
    // 2g-2 = l (2g0-2) + 2r  <=>  g-1 = l (g0-1) + r with 0 < r < g0
    long long mod = plan.g0 - 1;
    long long r = (g - 1) % mod;
    if (r == 0) r = mod;  // keep r in 1..g0-1 by shifting one multiple into r
    long long l = (g - 1 - r) / mod;
    if (l <= 0 || r <= 0 || r >= plan.g0)
        throw std::logic_error("upper_bound_plan: no valid (l, r) decomposition");
    plan.l = l;
    plan.r = r;
    plan.branch = std::gcd(r, l) == 1 ? DecompositionPlan::Branch::Coprime
                                      : DecompositionPlan::Branch::NonCoprime;
    if (plan.branch == DecompositionPlan::Branch::NonCoprime && (plan.r < 2 || plan.l < 2))
        throw std::logic_error("upper_bound_plan: non-coprime branch needs r, l >= 2");
    return plan;
}

/// The explicit sandwich of the minimal entropy L_F(k, g):
/// 0.00031 (k+1)/(2g-2)  <=  L  <=  12 log 2 (k+1)/(2g-2).
struct TheoremBounds {
    Ival lower;
    Ival upper;
};

inline TheoremBounds theorem_bounds(long long k, long long g) {
    if (g < 2) throw std::invalid_argument("theorem_bounds: g must be >= 2");
    if (k < 0 || k > 2 * g) throw std::invalid_argument("theorem_bounds: need 0 <= k <= 2g");
    Ival ratio = Ival(Rat(k + 1, 2 * g - 2));
    TheoremBounds b;
    b.lower = Ival(Rat(31, 100000)) * ratio;
    b.upper = Ival(12.0) * log(Ival(2.0)) * ratio;
    return b;
}

/// One sampled check of the strict decrease h(u+v) < h(u) for u in the open
/// cone and v in the closed cone, plus midpoint convexity of the normalized
/// entropy along the segment.  Overlapping brackets are reported as
/// inconclusive, never as failures.
struct ConvexityResult {
    FiberedClass u, v;
    enum class Status { Pass, Inconclusive, Fail } decrease = Status::Pass,
                                                   midpoint = Status::Pass;
};

inline std::vector<ConvexityResult> convexity_check(
    const std::vector<std::pair<FiberedClass, FiberedClass>>& samples, double tol = 1e-12) {
    std::vector<ConvexityResult> out;
    for (const auto& [u, v] : samples) {
        if (!u.in_cone()) throw std::invalid_argument("convexity_check: u must be in the open cone");
        if (!v.in_closed_cone())
            throw std::invalid_argument("convexity_check: v must be in the closed cone");
        ConvexityResult r;
        r.u = u;
        r.v = v;
        Ival hu = fried_entropy(u, tol);
        if (v.is_zero()) {
            r.decrease = ConvexityResult::Status::Inconclusive;  // boundary sanity case
            r.midpoint = ConvexityResult::Status::Pass;
            out.push_back(r);
            continue;
        }
        Ival huv = fried_entropy(u + v, tol);
        if (huv.hi() < hu.lo()) r.decrease = ConvexityResult::Status::Pass;
        else if (huv.lo() > hu.hi()) r.decrease = ConvexityResult::Status::Fail;
        else r.decrease = ConvexityResult::Status::Inconclusive;
        // Midpoint convexity holds along segments of constant norm (the norm
        // is linear on the cone); rescale u and v to a common norm slice.
        // hbar(|v| u + |u| v) <= (hbar(u) + hbar(v)) / 2, by ray invariance.
        if (v.in_cone()) {
            long long nu = thurston_norm(u), nv = thurston_norm(v);
            FiberedClass mid{nv * u.a + nu * v.a, nv * u.b + nu * v.b};
            Ival m = normalized_entropy(mid, tol).normalized;
            Ival rhs = (normalized_entropy(u, tol).normalized +
                        normalized_entropy(v, tol).normalized) * Ival(0.5);
            if (m.lo() <= rhs.hi()) r.midpoint = ConvexityResult::Status::Pass;
            else r.midpoint = ConvexityResult::Status::Fail;
        } else {
            r.midpoint = ConvexityResult::Status::Inconclusive;  // hbar undefined on the boundary
        }
        out.push_back(r);
    }
    return out;
}

}  // namespace paf
