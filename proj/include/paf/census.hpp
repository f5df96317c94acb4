#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "paf/rat.hpp"

namespace paf {

/// Vertex-described convex body in Q^k.  Dimension is capped at 6: the
/// enumeration below is exact and exponential in k.
struct RationalPolytope {
    int dim = 0;
    std::vector<std::vector<Rat>> vertices;

    static constexpr int MAX_DIM = 6;

    RationalPolytope() = default;
    RationalPolytope(int k, std::vector<std::vector<Rat>> verts)
        : dim(k), vertices(std::move(verts)) {
        if (k < 1) throw std::invalid_argument("RationalPolytope: dimension must be >= 1");
        if (k > MAX_DIM)
            throw std::invalid_argument("RationalPolytope: dimension capped at " +
                                        std::to_string(MAX_DIM));
        for (const auto& v : vertices)
            if ((int)v.size() != k)
                throw std::invalid_argument("RationalPolytope: vertex of wrong dimension");
    }

    static RationalPolytope unit_box(int k) {
        std::vector<std::vector<Rat>> vs;
        for (int mask = 0; mask < (1 << k); ++mask) {
            std::vector<Rat> v(k);
            for (int i = 0; i < k; ++i) v[i] = Rat((mask >> i) & 1);
            vs.push_back(v);
        }
        return RationalPolytope(k, vs);
    }

    static RationalPolytope simplex(int k) {
        std::vector<std::vector<Rat>> vs(1, std::vector<Rat>(k, Rat(0)));
        for (int i = 0; i < k; ++i) {
            std::vector<Rat> v(k, Rat(0));
            v[i] = Rat(1);
            vs.push_back(v);
        }
        return RationalPolytope(k, vs);
    }
};

/// Half-space a . x <= c (a integral, c rational with positive denominator),
/// describing one facet of the scaled polytope.
struct Facet {
    std::vector<long long> normal;
    Rat offset;
};

namespace census_impl {

// Scale all vertices to a common integer grid: returns L and integer coords.
inline long long common_scale(const RationalPolytope& k, std::vector<std::vector<long long>>& out) {
    long long l = 1;
    for (const auto& v : k.vertices)
        for (const auto& q : v) l = std::lcm(l, q.den());
    out.clear();
    for (const auto& v : k.vertices) {
        std::vector<long long> iv;
        for (const auto& q : v) iv.push_back(q.num() * (l / q.den()));
        out.push_back(iv);
    }
    return l;
}

/// Determinant of a small integer matrix by Bareiss elimination.
inline long long small_det(std::vector<std::vector<long long>> m) {
    int n = (int)m.size();
    long long sign = 1, prev = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != col) { std::swap(m[piv], m[col]); sign = -sign; }
        for (int r = col + 1; r < n; ++r)
            for (int j = col + 1; j <= n - 1; ++j) {
                __int128 v = ((__int128)m[r][j] * m[col][col] - (__int128)m[r][col] * m[col][j]);
                v /= prev;
                if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("small_det: overflow");
                m[r][j] = (long long)v;
            }
        for (int r = col + 1; r < n; ++r) m[r][col] = 0;
        prev = m[col][col];
    }
    return sign * m[n - 1][n - 1];
}

/// Affine rank of the vertex set (dimension of the spanned flat).
inline int affine_rank(const std::vector<std::vector<long long>>& pts, int k) {
    if (pts.empty()) return -1;
    std::vector<std::vector<long long>> diffs;
    for (size_t i = 1; i < pts.size(); ++i) {
        std::vector<long long> d(k);
        for (int j = 0; j < k; ++j) d[j] = pts[i][j] - pts[0][j];
        diffs.push_back(d);
    }
    // Gaussian elimination over Q on small int64 data via doubles is unsafe;
    // use fraction-free pivoting instead.
    int rank = 0;
    std::vector<std::vector<long long>> m = diffs;
    for (int col = 0; col < k && rank < (int)m.size(); ++col) {
        int piv = -1;
        for (int r = rank; r < (int)m.size(); ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        for (int r = 0; r < (int)m.size(); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            long long a = m[rank][col], b = m[r][col];
            long long g = std::gcd(std::abs(a), std::abs(b));
            long long fa = a / g, fb = b / g;
            for (int j = 0; j < k; ++j) {
                __int128 v = (__int128)m[r][j] * fa - (__int128)m[rank][j] * fb;
                if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("affine_rank: overflow");
                m[r][j] = (long long)v;
            }
        }
        ++rank;
    }
    return rank;
}

/// Exact H-representation by brute force over vertex subsets: every facet of
/// a full-dimensional polytope is the affine hull of >= k of its vertices.
inline std::vector<Facet> facets(const std::vector<std::vector<long long>>& pts, int k) {
    size_t n = pts.size();
    std::vector<Facet> out;
    std::vector<int> idx(k);
    std::vector<int> choose(k);
    // iterate over k-subsets
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    auto next_comb = [&]() {
        int i = k - 1;
        while (i >= 0 && comb[i] == (int)n - k + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    if ((int)n < k) return out;
    do {
        // normal by cofactor expansion: n_i = (-1)^i det(minor_i) of the
        // (k-1) x k matrix of edge vectors within the subset
        std::vector<std::vector<long long>> e;
        for (int i = 1; i < k; ++i) {
            std::vector<long long> d(k);
            for (int j = 0; j < k; ++j) d[j] = pts[comb[i]][j] - pts[comb[0]][j];
            e.push_back(d);
        }
        std::vector<long long> normal(k, 0);
        bool degenerate = true;
        for (int drop = 0; drop < k; ++drop) {
            std::vector<std::vector<long long>> minor;
            for (int r = 0; r < k - 1; ++r) {
                std::vector<long long> row;
                for (int j = 0; j < k; ++j)
                    if (j != drop) row.push_back(e[r][j]);
                minor.push_back(row);
            }
            long long d = k == 1 ? 1 : small_det(minor);
            normal[drop] = (drop % 2 == 0 ? d : -d);
            if (d != 0) degenerate = false;
        }
        if (degenerate) continue;
        __int128 c0 = 0;
        for (int j = 0; j < k; ++j) c0 += (__int128)normal[j] * pts[comb[0]][j];
        // orient so that all vertices satisfy normal . x <= c
        bool any_above = false, any_below = false;
        for (const auto& p : pts) {
            __int128 s = 0;
            for (int j = 0; j < k; ++j) s += (__int128)normal[j] * p[j];
            if (s > c0) any_above = true;
            if (s < c0) any_below = true;
        }
        if (any_above && any_below) continue;  // not supporting
        Facet f;
        f.normal = normal;
        if (any_above) {
            for (auto& v : f.normal) v = -v;
            c0 = -c0;
        }
        if (c0 > INT64_MAX || c0 < INT64_MIN) throw std::overflow_error("facets: offset overflow");
        f.offset = Rat((long long)c0);
        // dedupe up to positive scaling
        long long g = 0;
        for (long long v : f.normal) g = std::gcd(g, std::abs(v));
        g = std::gcd(g, std::abs(f.offset.num()));
        if (g > 1) {
            for (auto& v : f.normal) v /= g;
            f.offset = Rat(f.offset.num() / g);
        }
        bool dup = false;
        for (const auto& other : out)
            if (other.normal == f.normal && other.offset == f.offset) dup = true;
        if (!dup) out.push_back(f);
    } while (next_comb());
    return out;
}

}  // namespace census_impl

/// Exact membership/counting engine for dilates of a rational polytope.
class PolytopeCounter {
public:
    explicit PolytopeCounter(const RationalPolytope& k) : dim_(k.dim) {
        scale_ = census_impl::common_scale(k, scaled_vertices_);
        if (census_impl::affine_rank(scaled_vertices_, dim_) != dim_)
            throw std::invalid_argument("PolytopeCounter: polytope is degenerate (not full-dimensional)");
        facets_ = census_impl::facets(scaled_vertices_, dim_);
        if (facets_.empty()) throw std::logic_error("PolytopeCounter: no facets found");
    }

    int dim() const { return dim_; }

    /// Is x in t.K (t rational)?  Point x in t.K iff scale*x in t.K' with K'
    /// the integer-scaled polytope: for each facet, a . (scale x) <= t c.
    bool contains(const std::vector<long long>& x, const Rat& t) const {
        for (const auto& f : facets_) {
            __int128 lhs = 0;
            for (int j = 0; j < dim_; ++j) lhs += (__int128)f.normal[j] * x[j];
            lhs *= scale_;
            // lhs <= t * c  <=>  lhs * t.den * c.den <= t.num * c.num * ...
            __int128 left = lhs * t.den() * f.offset.den();
            __int128 right = (__int128)t.num() * f.offset.num();
            if (left > right) return false;
        }
        return true;
    }

    /// Exact number of integer points in t.K.
    long long integral_points(long long t) const {
        if (t < 0) throw std::invalid_argument("integral_points: t must be >= 0");
        long long count = 0;
        enumerate(Rat(t), [&](const std::vector<long long>&) { ++count; });
        return count;
    }

    /// Integer points of t.K with coordinate gcd exactly 1 (origin excluded).
    long long primitive_points(long long t) const {
        if (t < 0) throw std::invalid_argument("primitive_points: t must be >= 0");
        long long count = 0;
        enumerate(Rat(t), [&](const std::vector<long long>& x) {
            long long g = 0;
            for (long long v : x) g = std::gcd(g, std::abs(v));
            if (g == 1) ++count;
        });
        return count;
    }

    /// Nonzero integer points in (t/d).K, used by the inclusion-exclusion
    /// cross-check of the primitive count.
    long long nonzero_points_dilation(const Rat& t) const {
        long long count = 0;
        enumerate(t, [&](const std::vector<long long>& x) {
            for (long long v : x)
                if (v != 0) { ++count; return; }
        });
        return count;
    }

private:
    template <typename F>
    void enumerate(const Rat& t, F&& visit) const {
        std::vector<long long> lo(dim_), hi(dim_);
        for (int j = 0; j < dim_; ++j) {
            Rat mn = Rat(scaled_vertices_[0][j], scale_) * t;
            Rat mx = mn;
            for (const auto& v : scaled_vertices_) {
                Rat q = Rat(v[j], scale_) * t;
                if (q < mn) mn = q;
                if (mx < q) mx = q;
            }
            lo[j] = (long long)std::ceil(mn.to_double() - 1e-9);
            while (Rat(lo[j]) < mn) ++lo[j];
            while (mn <= Rat(lo[j] - 1)) --lo[j];
            hi[j] = (long long)std::floor(mx.to_double() + 1e-9);
            while (mx < Rat(hi[j])) --hi[j];
            while (Rat(hi[j] + 1) <= mx) ++hi[j];
        }
        std::vector<long long> x(dim_);
        enumerate_rec(0, lo, hi, t, x, visit);
    }

    template <typename F>
    void enumerate_rec(int j, const std::vector<long long>& lo, const std::vector<long long>& hi,
                       const Rat& t, std::vector<long long>& x, F&& visit) const {
        if (j == dim_) {
            if (contains(x, t)) visit(x);
            return;
        }
        for (long long v = lo[j]; v <= hi[j]; ++v) {
            x[j] = v;
            enumerate_rec(j + 1, lo, hi, t, x, visit);
        }
    }

    int dim_;
    long long scale_;
    std::vector<std::vector<long long>> scaled_vertices_;
    std::vector<Facet> facets_;
};

/// Census row for one genus: dilation 2g-2 of K.
struct CensusRecord {
    int g = 0;
    long long dilation = 0;
    long long integral_count = 0;
    long long primitive_count = 0;
};

/// Counts integral and primitive classes in (2g-2).K for each listed genus.
/// Only even dilations occur (the norm takes even values on H_2).
/// k = 0 is vacuous and yields no records.
inline std::vector<CensusRecord> omega_census(const RationalPolytope& k,
                                              const std::vector<int>& genera) {
    std::vector<CensusRecord> out;
    if (k.dim == 0) return out;
    PolytopeCounter counter(k);
    for (int g : genera) {
        if (g < 2) throw std::invalid_argument("omega_census: g must be >= 2");
        CensusRecord r;
        r.g = g;
        r.dilation = 2LL * g - 2;
        r.integral_count = counter.integral_points(r.dilation);
        r.primitive_count = counter.primitive_points(r.dilation);
        out.push_back(r);
    }
    return out;
}

/// Inclusion-exclusion primitive count from dilation counts, for the
/// consistency property: primitive(t) = sum_d mu(d) * nonzero((t/d).K).
inline long long primitive_by_moebius(const PolytopeCounter& counter, long long t,
                                      long long coord_bound) {
    // A nonzero point of t.K with all coordinates divisible by d needs
    // d <= max |coordinate| <= t * coord_bound.
    if (t == 0) return 0;
    long long cap = t * coord_bound;
    std::vector<int> mu(cap + 1, 1);
    std::vector<bool> comp(cap + 1, false);
    std::vector<long long> primes;
    for (long long i = 2; i <= cap; ++i) {
        if (!comp[i]) { primes.push_back(i); mu[i] = -1; }
        for (long long p : primes) {
            if (i * p > cap) break;
            comp[i * p] = true;
            mu[i * p] = i % p == 0 ? 0 : -mu[i];
            if (i % p == 0) break;
        }
    }
    long long total = 0;
    for (long long d = 1; d <= cap; ++d) {
        if (mu[d] == 0) continue;
        total += mu[d] * counter.nonzero_points_dilation(Rat(t, d));
    }
    return total;
}

/// Least-squares growth estimate from census records.
///
/// The degree is fitted on the integral counts (the step that grows like
/// g^k); the floor pair (c1, c2) is fitted on the primitive counts, which
/// feed the conjugacy-class bound after division by the isometry order.
struct GrowthFit {
    double slope = 0;         // expected ~ k
    double c1 = 0;            // primitive count >= c1 g^k - c2 on every record
    double c2 = 0;
    bool degree_ok = false;   // |slope - k| <= 0.15
};

inline GrowthFit growth_fit(const std::vector<CensusRecord>& records, int k) {
    if ((int)records.size() < k + 2)
        throw std::invalid_argument("growth_fit: need at least k+2 records");
    std::vector<CensusRecord> recs = records;
    std::sort(recs.begin(), recs.end(), [](const auto& a, const auto& b) { return a.g < b.g; });
    size_t start = recs.size() / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (size_t i = start; i < recs.size(); ++i) {
        if (recs[i].integral_count <= 0) continue;
        double x = std::log((double)recs[i].g), y = std::log((double)recs[i].integral_count);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++m;
    }
    if (m < 2) throw std::invalid_argument("growth_fit: not enough nonzero counts");
    GrowthFit fit;
    double denom = m * sxx - sx * sx;
    fit.slope = denom == 0 ? 0 : (m * sxy - sx * sy) / denom;
    // floor-bound pair: c1 from the upper half, c2 patched to cover all records
    double c1 = 1e300;
    for (size_t i = start; i < recs.size(); ++i)
        c1 = std::min(c1, (double)recs[i].primitive_count / std::pow((double)recs[i].g, k));
    if (c1 == 1e300 || c1 <= 0) c1 = 1e-9;
    double c2 = 0;
    for (const auto& r : recs)
        c2 = std::max(c2, c1 * std::pow((double)r.g, k) - (double)r.primitive_count);
    fit.c1 = c1;
    fit.c2 = c2;
    fit.degree_ok = std::abs(fit.slope - k) <= 0.15;
    return fit;
}

}  // namespace paf
