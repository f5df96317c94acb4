#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "paf/bigint.hpp"
#include "paf/ival.hpp"

namespace paf {

/// Integer-coefficient polynomial, c[i] the coefficient of x^i.
struct IntPoly {
    std::vector<long long> c;

    int degree() const {
        for (size_t i = c.size(); i-- > 0;)
            if (c[i] != 0) return (int)i;
        return -1;
    }

    /// Interval evaluation at a positive point; nonzero terms only.
    Ival eval(const Ival& x) const {
        Ival acc(0.0);
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            acc += Ival((double)c[i]) * pow_int(x, i);
        }
        return acc;
    }

    /// Exact sign of p(m / 2^s) for m > 0, via big-integer arithmetic.
    int exact_sign_dyadic(long long m, unsigned long s) const {
        int d = degree();
        if (d < 0) return 0;
        BigInt sum(0);
        BigInt mb(m);
        for (int i = 0; i <= d; ++i) {
            if (c[i] == 0) continue;
            BigInt term = BigInt(c[i]) * mb.pow((unsigned long)i);
            sum += term.shl(s * (unsigned long)(d - i));
        }
        return sum.sign();
    }
};

/// Decomposes a positive double into m * 2^-s with integer m, s >= 0.
inline void dyadic_decompose(double x, long long& m, unsigned long& s) {
    int e;
    double frac = std::frexp(x, &e);  // x = frac * 2^e, frac in [0.5, 1)
    long long mant = (long long)std::ldexp(frac, 53);
    int shift = e - 53;
    while (mant % 2 == 0 && mant != 0) { mant /= 2; ++shift; }
    m = mant;
    s = shift >= 0 ? 0 : (unsigned long)(-shift);
    if (shift > 0) {
        for (int i = 0; i < shift; ++i) m *= 2;
    }
}

namespace detail {

/// Certified sign at a dyadic double: interval arithmetic first, exact
/// big-integer fallback when the interval straddles zero.
inline int certified_sign(const IntPoly& p, double x) {
    Ival v = p.eval(Ival(x));
    if (v.lo() > 0) return 1;
    if (v.hi() < 0) return -1;
    long long m;
    unsigned long s;
    dyadic_decompose(x, m, s);
    return p.exact_sign_dyadic(m, s);
}

}  // namespace detail

/// Certified bracket for the largest real root (> 1) of a polynomial whose
/// values are negative somewhere above 1 and strictly positive beyond the
/// root.  The initial bracket is found by doubling from 1 + tol until the
/// polynomial is certified positive; each kept endpoint carries a certified
/// sign, so the returned interval always contains a sign change.
inline Ival largest_root(const IntPoly& p, double tol) {
    if (tol <= 0) throw std::invalid_argument("largest_root: tol must be positive");
    if (p.degree() < 1) throw std::invalid_argument("largest_root: constant polynomial");

    double lo = 1.0 + std::min(tol, 1e-9) / 2;
    int slo = detail::certified_sign(p, lo);
    if (slo == 0) return Ival(lo, lo);
    if (slo > 0) throw std::domain_error("largest_root: no sign change above 1");

    const double HARD_CAP = 1099511627776.0;  // 2^40
    double hi = 2.0;
    int shi = detail::certified_sign(p, hi);
    while (shi < 0) {
        lo = hi;
        hi *= 2;
        if (hi > HARD_CAP) throw std::domain_error("largest_root: no sign change below cap");
        shi = detail::certified_sign(p, hi);
    }
    if (shi == 0) return Ival(hi, hi);

    while (hi - lo > tol) {
        double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;  // double resolution reached
        int sm = detail::certified_sign(p, mid);
        if (sm == 0) return Ival(mid, mid);
        if (sm < 0) lo = mid; else hi = mid;
    }
    return Ival(lo, hi);
}

}  // namespace paf
