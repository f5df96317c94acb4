#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "paf/curves.hpp"
#include "paf/family.hpp"
#include "paf/matrix.hpp"

namespace paf {

/// H_1(S_g; Z) with the standard symplectic basis (e_1..e_g, f_1..f_g):
/// algebraic intersection i^(u, v) = u^T J v with J = [[0, I], [-I, 0]].
struct SymplecticSpace {
    int genus;

    explicit SymplecticSpace(int g) : genus(g) {
        if (g < 1) throw std::invalid_argument("SymplecticSpace: genus must be >= 1");
    }

    int dim() const { return 2 * genus; }

    IMat form() const {
        IMat j(dim(), dim());
        for (int i = 0; i < genus; ++i) {
            j.at(i, genus + i) = 1;
            j.at(genus + i, i) = -1;
        }
        return j;
    }

    long long pairing(const std::vector<long long>& u, const std::vector<long long>& v) const {
        if ((int)u.size() != dim() || (int)v.size() != dim())
            throw std::invalid_argument("pairing: wrong vector length");
        __int128 acc = 0;
        for (int i = 0; i < genus; ++i) {
            acc += (__int128)u[i] * v[genus + i];
            acc -= (__int128)u[genus + i] * v[i];
        }
        if (acc > INT64_MAX || acc < INT64_MIN) throw std::overflow_error("pairing: overflow");
        return (long long)acc;
    }
};

/// Coefficient field: the rationals (characteristic 0) or F_p.
struct FieldSpec {
    long long characteristic = 0;

    static FieldSpec rationals() { return FieldSpec{0}; }
    static FieldSpec prime(long long p) {
        if (p < 2) throw std::invalid_argument("FieldSpec: characteristic must be prime");
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("FieldSpec: characteristic must be prime");
        return FieldSpec{p};
    }
    bool is_rational() const { return characteristic == 0; }
};

/// Matrix of the transvection w -> w + i^(w, v) v, equal for v and -v.
inline IMat transvection(const std::vector<long long>& v) {
    if (v.size() % 2 != 0 || v.empty())
        throw std::invalid_argument("transvection: vector length must be 2g");
    SymplecticSpace sp((int)v.size() / 2);
    int n = sp.dim();
    // T = I + v (Jv)^T
    std::vector<long long> jv(n);
    for (int i = 0; i < sp.genus; ++i) {
        jv[i] = v[sp.genus + i];
        jv[sp.genus + i] = -v[i];
    }
    IMat t = IMat::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.at(i, j) += v[i] * jv[j];
    return t;
}

/// Ordered product of transvections over the word letters (letter signs give
/// inverse transvections).  Every curve in the word must carry homology data.
inline IMat word_action(const CurveSystem& s, const TwistWord& word) {
    int n = 2 * s.genus;
    SymplecticSpace sp(s.genus);
    IMat f = IMat::identity(n);
    // Apply letters right-to-left as rank-one updates: T_v^s F = F + s v (Jv)^T F.
    for (size_t li = word.letters.size(); li-- > 0;) {
        const auto& [id, sign] = word.letters[li];
        if (sign != 1 && sign != -1)
            throw std::invalid_argument("word_action: letter sign must be +1/-1");
        const CurveMeta* c = nullptr;
        int ai = s.a_index(id), bi = s.b_index(id);
        if (ai >= 0) c = &s.a_curves[ai];
        else if (bi >= 0) c = &s.b_curves[bi];
        else throw std::invalid_argument("word_action: unknown curve id " + id);
        if (!c->homology)
            throw std::invalid_argument("word_action: curve " + id + " has no homology data");
        const auto& v = *c->homology;
        if ((int)v.size() != n)
            throw std::invalid_argument("word_action: homology length mismatch for " + id);
        std::vector<long long> jv(n);
        for (int i = 0; i < sp.genus; ++i) {
            jv[i] = v[sp.genus + i];
            jv[sp.genus + i] = -v[i];
        }
        // row = (Jv)^T F
        std::vector<long long> row(n, 0);
        for (int i = 0; i < n; ++i) {
            if (jv[i] == 0) continue;
            for (int j = 0; j < n; ++j) {
                __int128 acc = (__int128)row[j] + (__int128)jv[i] * f.at(i, j);
                if (acc > INT64_MAX || acc < INT64_MIN)
                    throw std::overflow_error("word_action: overflow");
                row[j] = (long long)acc;
            }
        }
        for (int i = 0; i < n; ++i) {
            if (v[i] == 0) continue;
            for (int j = 0; j < n; ++j) {
                __int128 acc = (__int128)f.at(i, j) + (__int128)sign * v[i] * row[j];
                if (acc > INT64_MAX || acc < INT64_MIN)
                    throw std::overflow_error("word_action: overflow");
                f.at(i, j) = (long long)acc;
            }
        }
    }
    return f;
}

/// f_g acts on H_1 as word_action of its twist word.
inline IMat homology_action(const FamilyBuild& fb) { return word_action(fb.system, fb.word); }

namespace kappa_detail {

inline long long rank_mod_p(IMat m, long long p) {
    auto mod = [p](long long x) {
        long long r = x % p;
        return r < 0 ? r + p : r;
    };
    int rows = m.rows, cols = m.cols;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (mod(m.at(r, col)) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        long long inv = 1, base = mod(m.at(rank, col)), e = p - 2;
        while (e) {  // Fermat inverse
            if (e & 1) inv = (long long)((__int128)inv * base % p);
            base = (long long)((__int128)base * base % p);
            e >>= 1;
        }
        for (int j = 0; j < cols; ++j) m.at(rank, j) = (long long)((__int128)mod(m.at(rank, j)) * inv % p);
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            long long factor = mod(m.at(r, col));
            if (factor == 0) continue;
            for (int j = 0; j < cols; ++j) {
                long long sub = (long long)((__int128)factor * m.at(rank, j) % p);
                m.at(r, j) = mod(m.at(r, j) - sub);
            }
        }
        ++rank;
    }
    return rank;
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// log2 of the Hadamard bound on any minor of m (product of row norms).
inline double hadamard_log2(const IMat& m) {
    double total = 0;
    for (int i = 0; i < m.rows; ++i) {
        double s = 0;
        for (int j = 0; j < m.cols; ++j) s += (double)m.at(i, j) * (double)m.at(i, j);
        if (s > 1.0) total += 0.5 * std::log2(s);
    }
    return total;
}

/// Exact rank over Q, certified by modular ranks: ranks mod p never exceed
/// the rational rank, and once the primes agreeing on the maximum have
/// product above the Hadamard bound, every larger minor vanishes over Z.
inline long long rank_over_q(const IMat& m) {
    bool all_zero = true;
    for (long long v : m.a)
        if (v != 0) all_zero = false;
    if (all_zero) return 0;
    double need = hadamard_log2(m) + 1;
    long long p = (1LL << 31) - 1;
    long long best = 0;
    double have = 0;
    int used = 0;
    while (have < need) {
        while (!is_prime(p)) --p;
        long long r = rank_mod_p(m, p);
        if (r > best) { best = r; have = 0; }
        if (r == best) have += std::log2((double)p);
        --p;
        if (++used > 64) throw std::runtime_error("rank_over_q: certification failed");
    }
    return best;
}

}  // namespace kappa_detail

/// kappa_F = dim ker(M - I) over the field: the dimension of the fixed
/// subspace of the homology action.
inline long long kappa(const IMat& m, const FieldSpec& field) {
    if (m.rows != m.cols) throw std::invalid_argument("kappa: matrix must be square");
    IMat a = m;
    for (int i = 0; i < a.rows; ++i) a.at(i, i) -= 1;
    long long rank = field.is_rational() ? kappa_detail::rank_over_q(a)
                                         : kappa_detail::rank_mod_p(a, field.characteristic);
    return a.rows - rank;
}

/// b_1 of the mapping torus: kappa + 1.
inline long long betti_of_mapping_torus(long long kappa_value) {
    if (kappa_value < 0) throw std::invalid_argument("betti_of_mapping_torus: kappa < 0");
    return kappa_value + 1;
}

}  // namespace paf
