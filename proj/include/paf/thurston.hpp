#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "paf/ival.hpp"
#include "paf/matrix.hpp"
#include "paf/rat.hpp"

namespace paf {

/// Exact rational bracket [lower, upper] around a real quantity.
struct QBracket {
    Rat lower;
    Rat upper;

    QBracket() = default;
    QBracket(Rat lo, Rat hi) : lower(lo), upper(hi) {
        if (upper < lower) throw std::invalid_argument("QBracket: lower > upper");
    }
    Rat width() const { return upper - lower; }
    Ival to_ival() const { return Ival::raw(Ival(lower).lo(), Ival(upper).hi()); }
};

/// The Gram matrix N N^T of an intersection matrix, exactly.
inline IMat gram(const IMat& n) {
    for (long long v : n.a)
        if (v < 0) throw std::invalid_argument("gram: negative intersection entry");
    return n * n.transpose();
}

/// Maximum row sum; a certified upper bound for the Perron-Frobenius
/// eigenvalue of a nonnegative matrix.
inline long long row_sum_bound(const IMat& m) {
    long long best = 0;
    for (int i = 0; i < m.rows; ++i) {
        long long s = 0;
        for (int j = 0; j < m.cols; ++j) {
            if (m.at(i, j) < 0) throw std::invalid_argument("row_sum_bound: negative entry");
            s += m.at(i, j);
        }
        best = std::max(best, s);
    }
    return best;
}

namespace pf_detail {

inline bool support_irreducible(const IMat& m) {
    int n = m.rows;
    // Zero rows or columns leave the spectral radius on a reducible block.
    for (int i = 0; i < n; ++i) {
        bool row = false, col = false;
        for (int j = 0; j < n; ++j) {
            if (m.at(i, j) != 0) row = true;
            if (m.at(j, i) != 0) col = true;
        }
        if (!row || !col) return false;
    }
    // Strong connectivity of the support digraph (forward and backward BFS).
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<int> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v) {
                long long w = dir == 0 ? m.at(u, v) : m.at(v, u);
                if (w != 0 && !seen[v]) {
                    seen[v] = 1;
                    ++count;
                    stack.push_back(v);
                }
            }
        }
        if (count != n) return false;
    }
    return true;
}

}  // namespace pf_detail

namespace pf_detail {

/// Exact rational value of a positive double (doubles are dyadic rationals).
inline Rat dyadic_to_rat(double x) {
    if (!(x > 0)) throw std::domain_error("dyadic_to_rat: needs positive value");
    int e;
    double frac = std::frexp(x, &e);
    long long m = (long long)std::ldexp(frac, 53);
    int shift = e - 53;
    while (m % 2 == 0 && shift < 0) { m /= 2; ++shift; }
    if (shift >= 0) {
        __int128 num = (__int128)m << shift;
        if (num > INT64_MAX) throw std::overflow_error("dyadic_to_rat: overflow");
        return Rat((long long)num);
    }
    if (shift < -62) throw std::overflow_error("dyadic_to_rat: denominator overflow");
    return Rat(m, 1LL << (-shift));
}

}  // namespace pf_detail

/// Certified bracket of width <= tol around the Perron-Frobenius eigenvalue
/// of a nonnegative irreducible matrix.
///
/// The iterate is a positive vector of dyadic rationals (doubles), advanced
/// by power iteration on M + I (primitive: positive diagonal).  At each step
/// the Collatz-Wielandt quotients min_i (Mv)_i / v_i <= rho(M) <=
/// max_i (Mv)_i / v_i are evaluated with outward-rounded interval
/// arithmetic, so the bracket is rigorous for any iterate.  The attainable
/// width bottoms out near 1e-12 * rho; tolerances above that are reached.
inline QBracket pf_eigenvalue(const IMat& m, const Rat& tol) {
    if (m.rows != m.cols || m.rows == 0)
        throw std::invalid_argument("pf_eigenvalue: matrix must be square and nonempty");
    if (!(Rat(0) < tol)) throw std::invalid_argument("pf_eigenvalue: tol must be positive");
    bool all_zero = true;
    for (long long v : m.a) {
        if (v < 0) throw std::invalid_argument("pf_eigenvalue: negative entry");
        if (v != 0) all_zero = false;
    }
    if (all_zero) throw std::invalid_argument("pf_eigenvalue: zero matrix");
    if (!pf_detail::support_irreducible(m))
        throw std::invalid_argument("pf_eigenvalue: support is reducible");

    const int n = m.rows;
    if (n == 1) return QBracket(Rat(m.at(0, 0)), Rat(m.at(0, 0)));
    const double tol_d = tol.to_double();
    std::vector<double> v(n, 1.0), w(n);
    // Seed with the exact row-sum bounds (the quotients at v = ones):
    // min and max row sums bracket rho for any nonnegative irreducible matrix.
    long long min_rs = INT64_MAX, max_rs = 0;
    for (int i = 0; i < n; ++i) {
        long long s = 0;
        for (int j = 0; j < n; ++j) s += m.at(i, j);
        min_rs = std::min(min_rs, s);
        max_rs = std::max(max_rs, s);
    }
    if (max_rs > (1LL << 52)) throw std::overflow_error("pf_eigenvalue: entries too large");
    double best_lo = (double)min_rs, best_hi = (double)max_rs;
    double last_width = std::numeric_limits<double>::infinity();
    int stagnant = 0;
    const int MAX_ITERS = 100000;
    const int cadence = n <= 48 ? 1 : 8;  // certified quotients every few steps
    for (int iter = 0; iter < MAX_ITERS; ++iter) {
        bool certify = iter % cadence == 0;
        double lo = std::numeric_limits<double>::infinity(), hi = 0;
        for (int i = 0; i < n; ++i) {
            if (certify) {
                // Exact-direction quotient bounds via interval accumulation.
                Ival acc(0.0);
                for (int j = 0; j < n; ++j) {
                    if (m.at(i, j) == 0) continue;
                    acc += Ival((double)m.at(i, j)) * Ival(v[j]);
                }
                Ival q = acc / Ival(v[i]);
                lo = std::min(lo, q.lo());
                hi = std::max(hi, q.hi());
                w[i] = v[i] + acc.mid();  // M + I step
            } else {
                double acc = v[i];
                for (int j = 0; j < n; ++j) acc += (double)m.at(i, j) * v[j];
                w[i] = acc;
            }
        }
        if (certify) {
            best_lo = std::max(best_lo, lo);
            best_hi = std::min(best_hi, hi);
            if (best_hi - best_lo <= tol_d) {
                QBracket out(pf_detail::dyadic_to_rat(best_lo),
                             pf_detail::dyadic_to_rat(best_hi));
                if (out.width() <= tol) return out;
            }
            if (best_hi - best_lo >= last_width) {
                if (++stagnant > 3000) break;
            } else {
                stagnant = 0;
                last_width = best_hi - best_lo;
            }
        }
        double norm = 0;
        for (double x : w) norm = std::max(norm, x);
        for (int i = 0; i < n; ++i) v[i] = std::max(w[i] / norm, 1e-280);
    }
    throw std::runtime_error("pf_eigenvalue: tolerance not reached (below the certification floor)");
}

// TODO: a general word evaluator for arbitrary products in <T_A, T_B>; the
// two shapes below are the only ones the families need today.

/// lambda + 1/lambda = mu + 2 for the difference word T_A T_B^{-1}:
/// entropy h = log(((mu+2) + sqrt((mu+2)^2 - 4)) / 2), always hyperbolic.
inline Ival entropy_diff(const Ival& mu) {
    if (mu.lo() <= 0) throw std::invalid_argument("entropy_diff: mu must be positive");
    Ival tr = mu + Ival(2.0);
    Ival lambda = (tr + sqrt(tr * tr - Ival(4.0))) * Ival(0.5);
    return log(lambda);
}
inline Ival entropy_diff(const QBracket& mu) { return entropy_diff(mu.to_ival()); }

/// lambda + 1/lambda = mu - 2 for the positive word T_A T_B; the image is
/// hyperbolic only when mu > 4.
inline Ival entropy_prod(const Ival& mu) {
    if (mu.lo() <= 4)
        throw std::domain_error("entropy_prod: not hyperbolic (requires mu > 4)");
    Ival tr = mu - Ival(2.0);
    Ival lambda = (tr + sqrt(tr * tr - Ival(4.0))) * Ival(0.5);
    return log(lambda);
}
inline Ival entropy_prod(const QBracket& mu) { return entropy_prod(mu.to_ival()); }

}  // namespace paf
