#pragma once

#include <stdexcept>

#include "paf/ival.hpp"

namespace paf {

/// Volume of a hyperbolic 3-space ball: vol(B_r) = pi (sinh 2r - 2r).
inline Ival ball_volume(const Ival& r) {
    if (r.lo() <= 0) throw std::invalid_argument("ball_volume: r must be positive");
    Ival two_r = r * Ival(2.0);
    return Ival::pi() * (sinh(two_r) - two_r);
}
inline Ival ball_volume(double r) { return ball_volume(Ival(r)); }

/// Margulis number used throughout: epsilon = log 3.
inline Ival margulis_epsilon() { return Ival::log3(); }

/// Bound on the size of an epsilon-net: m <= vol(M) / vol(B_{epsilon/2}).
inline Ival net_cardinality_bound(const Ival& vol) {
    if (vol.lo() <= 0) throw std::invalid_argument("net_cardinality_bound: vol must be positive");
    return vol / ball_volume(margulis_epsilon() * Ival(0.5));
}
inline Ival net_cardinality_bound(double vol) { return net_cardinality_bound(Ival(vol)); }

/// Valence bound for the short-edge Delaunay subgraph: the shell-volume
/// ratio (vol B_{5e/2} - vol B_{e/2}) / vol B_{e/2}.
inline Ival valence_ratio() {
    Ival eps = margulis_epsilon();
    Ival small = ball_volume(eps * Ival(0.5));
    Ival big = ball_volume(eps * Ival(2.5));
    return (big - small) / small;
}

/// First Betti number bound for the subgraph: 1 + ((V-2)/2) * m.
inline Ival graph_betti_bound(const Ival& vol) {
    if (vol.lo() <= 0) throw std::invalid_argument("graph_betti_bound: vol must be positive");
    Ival v = valence_ratio();
    return Ival(1.0) + (v - Ival(2.0)) * Ival(0.5) * net_cardinality_bound(vol);
}
inline Ival graph_betti_bound(double vol) { return graph_betti_bound(Ival(vol)); }

/// Entropy lower bound (k+1) / (334.08 * 3 pi |chi|).
inline Ival entropy_lower(long long k, long long chi) {
    if (k < 0) throw std::invalid_argument("entropy_lower: k must be >= 0");
    if (chi >= 0) throw std::invalid_argument("entropy_lower: chi must be negative");
    Ival denom = Ival(Rat(33408, 100)) * Ival(3.0) * Ival::pi() * Ival((double)(-chi));
    return Ival((double)(k + 1)) / denom;
}

/// Kojima-McShane volume bound: vol(M_f) <= 3 pi |chi| h.
inline Ival kojima_mcshane_volume(long long chi, const Ival& h) {
    if (chi >= 0) throw std::invalid_argument("kojima_mcshane_volume: chi must be negative");
    if (h.lo() <= 0) throw std::invalid_argument("kojima_mcshane_volume: h must be positive");
    return Ival(3.0) * Ival::pi() * Ival((double)(-chi)) * h;
}

/// Culler-Shalen lower bound 3.08 / (3 pi |chi|), valid when kappa over F_2
/// is at least 5.
inline Ival culler_shalen_lower(long long chi) {
    if (chi >= 0) throw std::invalid_argument("culler_shalen_lower: chi must be negative");
    return Ival(Rat(308, 100)) / (Ival(3.0) * Ival::pi() * Ival((double)(-chi)));
}

/// Every derived constant of the lower-bound pipeline, with its target and
/// the direction the computation must certify.  A plain double-precision
/// reading of any field is its interval midpoint; the error budget is half
/// the interval width, which the brackets report directly.
struct ConstantsLedger {
    Ival epsilon;            // log 3
    Ival small_ball;         // vol(B_{e/2})
    Ival big_ball;           // vol(B_{5e/2})
    Ival small_ball_paren;   // vol(B_{e/2}) / pi = 0.234721...
    Ival valence;            // shell ratio, must be < 493.2244575
    Ival net_coefficient;    // 1 / vol(B_{e/2}), per unit volume
    Ival net_coefficient_coarse;  // 1 / (vol(B_{e/2})/pi): the displayed weaker bound
    Ival betti_coefficient;  // (valence-2)/2 / vol(B_{e/2}), ~333.08
    double betti_consolidated = 334.08;  // consolidated form, valid once vol >= 1
    Ival lower_constant;     // 1 / (3 pi 334.08), ~0.000317 >= 0.00031
    Ival cs_coefficient;     // 3.08 / (3 pi), >= 0.326

    bool valence_ok() const { return valence.hi() < 493.2244575; }
    bool betti_ok() const {
        return betti_coefficient.hi() <= 334.08 && betti_coefficient.lo() > 333.0;
    }
    bool lower_ok() const {
        return lower_constant.lo() >= 0.00031 && lower_constant.hi() < 0.00032;
    }
    bool cs_ok() const { return cs_coefficient.lo() >= 0.326; }
    bool weeks_ok() const { return 334.08 * 0.94 > 5.0; }
    bool all_ok() const { return valence_ok() && betti_ok() && lower_ok() && cs_ok() && weeks_ok(); }
};

inline ConstantsLedger compute_constants() {
    ConstantsLedger c;
    c.epsilon = margulis_epsilon();
    c.small_ball = ball_volume(c.epsilon * Ival(0.5));
    c.big_ball = ball_volume(c.epsilon * Ival(2.5));
    c.small_ball_paren = c.small_ball / Ival::pi();
    c.valence = valence_ratio();
    c.net_coefficient = Ival(1.0) / c.small_ball;
    c.net_coefficient_coarse = Ival(1.0) / c.small_ball_paren;
    c.betti_coefficient = (c.valence - Ival(2.0)) * Ival(0.5) / c.small_ball;
    c.lower_constant = Ival(1.0) / (Ival(3.0) * Ival::pi() * Ival(Rat(33408, 100)));
    c.cs_coefficient = Ival(Rat(308, 100)) / (Ival(3.0) * Ival::pi());
    return c;
}

}  // namespace paf
