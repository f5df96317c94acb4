#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace paf {

/// Minimal signed arbitrary-precision integer: add, sub, mul, pow, compare.
///
/// Enough for exact sign evaluation of integer polynomials at dyadic points
/// and for small exact determinant/rank oracles in tests.  No division.
class BigInt {
public:
    BigInt() : sign_(0) {}
    BigInt(long long v) {
        if (v == 0) { sign_ = 0; return; }
        sign_ = v > 0 ? 1 : -1;
        unsigned long long u = v > 0 ? (unsigned long long)v : 0ULL - (unsigned long long)v;
        while (u) { mag_.push_back((uint32_t)(u & 0xffffffffu)); u >>= 32; }
    }

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }

    friend BigInt operator-(const BigInt& a) {
        BigInt r = a;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        if (a.sign_ == b.sign_) return with_sign(add_mag(a.mag_, b.mag_), a.sign_);
        int c = cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        if (c > 0) return with_sign(sub_mag(a.mag_, b.mag_), a.sign_);
        return with_sign(sub_mag(b.mag_, a.mag_), b.sign_);
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        return with_sign(mul_mag(a.mag_, b.mag_), a.sign_ * b.sign_);
    }
    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return (a - b).sign_ < 0; }

    BigInt pow(unsigned long e) const {
        BigInt acc(1), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Multiply by 2^k.
    BigInt shl(unsigned long k) const {
        if (sign_ == 0) return BigInt();
        BigInt r = *this;
        size_t words = k / 32;
        unsigned bits = k % 32;
        if (bits) {
            uint32_t carry = 0;
            for (auto& w : r.mag_) {
                uint64_t v = ((uint64_t)w << bits) | carry;
                w = (uint32_t)v;
                carry = (uint32_t)(v >> 32);
            }
            if (carry) r.mag_.push_back(carry);
        }
        r.mag_.insert(r.mag_.begin(), words, 0);
        return r;
    }

    std::string str() const {
        if (sign_ == 0) return "0";
        std::vector<uint32_t> m = mag_;
        std::string out;
        while (!m.empty()) {
            uint64_t rem = 0;
            for (size_t i = m.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | m[i];
                m[i] = (uint32_t)(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            std::string chunk = std::to_string(rem);
            if (!m.empty()) chunk = std::string(9 - chunk.size(), '0') + chunk;
            out = chunk + out;
        }
        return (sign_ < 0 ? "-" : "") + out;
    }

private:
    using Mag = std::vector<uint32_t>;

    static BigInt with_sign(Mag m, int s) {
        BigInt r;
        while (!m.empty() && m.back() == 0) m.pop_back();
        r.mag_ = std::move(m);
        r.sign_ = r.mag_.empty() ? 0 : s;
        return r;
    }

    static int cmp_mag(const Mag& a, const Mag& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static Mag add_mag(const Mag& a, const Mag& b) {
        Mag r(std::max(a.size(), b.size()) + 1, 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            uint64_t s = carry;
            if (i < a.size()) s += a[i];
            if (i < b.size()) s += b[i];
            r[i] = (uint32_t)s;
            carry = s >> 32;
        }
        return r;
    }

    // requires |a| >= |b|
    static Mag sub_mag(const Mag& a, const Mag& b) {
        Mag r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t s = (int64_t)r[i] - borrow - (i < b.size() ? b[i] : 0);
            if (s < 0) { s += (int64_t)1 << 32; borrow = 1; } else borrow = 0;
            r[i] = (uint32_t)s;
        }
        return r;
    }

    static Mag mul_mag(const Mag& a, const Mag& b) {
        Mag r(a.size() + b.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.size(); ++j) {
                uint64_t cur = (uint64_t)a[i] * b[j] + r[i + j] + carry;
                r[i + j] = (uint32_t)cur;
                carry = cur >> 32;
            }
            r[i + b.size()] += (uint32_t)carry;
        }
        return r;
    }

    int sign_;
    Mag mag_;
};

}  // namespace paf
