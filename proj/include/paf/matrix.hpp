#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace paf {

/// Dense integer matrix (row-major int64), sized for the small exact
/// computations in this library.  Products check for 64-bit overflow.
struct IMat {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    IMat() = default;
    IMat(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}

    long long& at(int i, int j) { return a[(size_t)i * cols + j]; }
    long long at(int i, int j) const { return a[(size_t)i * cols + j]; }

    static IMat identity(int n) {
        IMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    IMat transpose() const {
        IMat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend IMat operator*(const IMat& x, const IMat& y) {
        if (x.cols != y.rows) throw std::invalid_argument("IMat: shape mismatch");
        IMat r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                long long v = x.at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < y.cols; ++j) {
                    __int128 acc = (__int128)r.at(i, j) + (__int128)v * y.at(k, j);
                    if (acc > INT64_MAX || acc < INT64_MIN)
                        throw std::overflow_error("IMat: product overflow");
                    r.at(i, j) = (long long)acc;
                }
            }
        return r;
    }

    friend bool operator==(const IMat& x, const IMat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }

    bool is_identity() const {
        if (rows != cols) return false;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }
};

}  // namespace paf
