#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace paf {

/// Exact rational number on 64-bit numerator/denominator.
///
/// Every operation reduces by gcd and checks that the result still fits in
/// 64 bits, throwing std::overflow_error otherwise.  Intended for small exact
/// quantities (eigenvalue brackets, polytope data), not general bignum work.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    static Rat from_decimal(const std::string& s);

    Rat operator-() const { return Rat(-num_, den_, raw_tag{}); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return make(n, d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return make((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    double to_double() const { return (double)num_ / (double)den_; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    struct raw_tag {};
    Rat(long long n, long long d, raw_tag) : num_(n), den_(d) {}

    static Rat make(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rat: 64-bit overflow");
        return Rat((long long)n, (long long)d, raw_tag{});
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a;
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    long long num_;
    long long den_;
};

/// Parses "123", "-0.25", "3/4" into an exact rational.
inline Rat Rat::from_decimal(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(std::stoll(s));
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    long long den = 1;
    for (size_t i = 0; i < tail.size(); ++i) {
        if (den > INT64_MAX / 10) throw std::overflow_error("Rat: decimal too long");
        den *= 10;
    }
    long long whole = head.empty() || head == "-" ? 0 : std::stoll(head);
    long long frac = tail.empty() ? 0 : std::stoll(tail);
    bool neg = !head.empty() && head[0] == '-';
    __int128 n = (__int128)whole * den + (neg ? -frac : frac);
    return Rat((long long)n, den);
}

}  // namespace paf
