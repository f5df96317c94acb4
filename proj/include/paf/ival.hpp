#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "paf/rat.hpp"

namespace paf {

/// Closed interval of doubles with outward rounding.
///
/// Arithmetic rounds every endpoint outward by one ulp, so the true real
/// result is always contained in the computed interval.  Library calls to
/// exp/log/sinh are assumed faithful to within 2 ulps and are widened by
/// TRANSCENDENTAL_ULPS on each side; sqrt is correctly rounded per IEEE-754
/// and widened by one ulp.
class Ival {
public:
    static constexpr int TRANSCENDENTAL_ULPS = 8;

    Ival() : lo_(0), hi_(0) {}
    Ival(double x) : lo_(x), hi_(x) {}
    Ival(double lo, double hi) : lo_(lo), hi_(hi) {
        if (!(lo_ <= hi_)) throw std::invalid_argument("Ival: lo > hi");
    }
    explicit Ival(const Rat& q) {
        double x = q.to_double();
        lo_ = step_down(x, 1);
        hi_ = step_up(x, 1);
    }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double mid() const { return lo_ + (hi_ - lo_) / 2; }
    double width() const { return hi_ - lo_; }
    bool contains(double x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Ival& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool intersects(const Ival& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

    friend Ival operator+(const Ival& a, const Ival& b) {
        return raw(step_down(a.lo_ + b.lo_, 1), step_up(a.hi_ + b.hi_, 1));
    }
    friend Ival operator-(const Ival& a, const Ival& b) {
        return raw(step_down(a.lo_ - b.hi_, 1), step_up(a.hi_ - b.lo_, 1));
    }
    friend Ival operator-(const Ival& a) { return raw(-a.hi_, -a.lo_); }
    friend Ival operator*(const Ival& a, const Ival& b) {
        double p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_;
        double p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
        return raw(step_down(std::min({p1, p2, p3, p4}), 1),
                   step_up(std::max({p1, p2, p3, p4}), 1));
    }
    friend Ival operator/(const Ival& a, const Ival& b) {
        if (b.lo_ <= 0 && b.hi_ >= 0)
            throw std::domain_error("Ival: division by interval containing 0");
        double p1 = a.lo_ / b.lo_, p2 = a.lo_ / b.hi_;
        double p3 = a.hi_ / b.lo_, p4 = a.hi_ / b.hi_;
        return raw(step_down(std::min({p1, p2, p3, p4}), 1),
                   step_up(std::max({p1, p2, p3, p4}), 1));
    }

    Ival& operator+=(const Ival& o) { return *this = *this + o; }
    Ival& operator-=(const Ival& o) { return *this = *this - o; }
    Ival& operator*=(const Ival& o) { return *this = *this * o; }

    static Ival raw(double lo, double hi) {
        Ival r;
        r.lo_ = lo;
        r.hi_ = hi;
        return r;
    }

    // nextafter by ordered-integer increment on the IEEE-754 bit pattern
    static double up1(double x) {
        if (std::isinf(x)) return x;
        if (x == 0) return std::numeric_limits<double>::denorm_min();
        uint64_t b = std::bit_cast<uint64_t>(x);
        b = x > 0 ? b + 1 : b - 1;
        return std::bit_cast<double>(b);
    }
    static double down1(double x) {
        if (std::isinf(x)) return x;
        if (x == 0) return -std::numeric_limits<double>::denorm_min();
        uint64_t b = std::bit_cast<uint64_t>(x);
        b = x > 0 ? b - 1 : b + 1;
        return std::bit_cast<double>(b);
    }
    static double step_up(double x, int n) {
        for (int i = 0; i < n; ++i) x = up1(x);
        return x;
    }
    static double step_down(double x, int n) {
        for (int i = 0; i < n; ++i) x = down1(x);
        return x;
    }

    static Ival pi() {
        // M_PI is the double nearest pi; one ulp out on each side brackets it.
        return raw(step_down(3.14159265358979323846, 1), step_up(3.14159265358979323846, 1));
    }
    static Ival log3() { return log(Ival(3.0)); }

    friend Ival sqrt(const Ival& a) {
        if (a.lo_ < 0) throw std::domain_error("Ival: sqrt of negative");
        return raw(step_down(std::sqrt(a.lo_), 1), step_up(std::sqrt(a.hi_), 1));
    }
    friend Ival log(const Ival& a) {
        if (a.lo_ <= 0) throw std::domain_error("Ival: log of nonpositive");
        return raw(step_down(std::log(a.lo_), TRANSCENDENTAL_ULPS),
                   step_up(std::log(a.hi_), TRANSCENDENTAL_ULPS));
    }
    friend Ival exp(const Ival& a) {
        return raw(step_down(std::exp(a.lo_), TRANSCENDENTAL_ULPS),
                   step_up(std::exp(a.hi_), TRANSCENDENTAL_ULPS));
    }
    friend Ival sinh(const Ival& a) {
        return raw(step_down(std::sinh(a.lo_), TRANSCENDENTAL_ULPS),
                   step_up(std::sinh(a.hi_), TRANSCENDENTAL_ULPS));
    }

    /// x^n for positive intervals, by repeated squaring.
    friend Ival pow_int(const Ival& a, unsigned long n) {
        if (a.lo_ < 0) throw std::domain_error("Ival: pow_int needs nonnegative base");
        if (n == 0) return Ival(1.0);
        Ival acc(1.0), base = a;
        while (n > 0) {
            if (n & 1) acc *= base;
            base *= base;
            n >>= 1;
        }
        return acc;
    }

private:
    double lo_;
    double hi_;
};

}  // namespace paf
