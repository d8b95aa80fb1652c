#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "sjp/matrix.hpp"

namespace sjp::testutil {

// Deterministic RNG wrapper so every test run sees identical samples.
struct Rng {
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    std::mt19937_64 gen;

    int int_in(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(gen);
    }

    // Rational with numerator in [lo, hi] and denominator in {1, 2, 3}.
    Rational rational(int lo = -5, int hi = 5) {
        return Rational(int_in(lo, hi)) / Rational(int_in(1, 3));
    }

    Rational nonzero_rational(int lo = -5, int hi = 5) {
        for (;;) {
            Rational r = rational(lo, hi);
            if (r != 0) return r;
        }
    }

    // Unimodular-by-construction: unit lower * unit upper times a permutation.
    Mat invertible(std::size_t n) {
        Mat l = Mat::identity(n), u = Mat::identity(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                l(i, j) = int_in(-2, 2);
                u(j, i) = int_in(-2, 2);
            }
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), gen);
        Mat p(n, n);
        for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = 1;
        return l * u * p;
    }
};

inline Mat conjugate(const Mat& m, const Mat& p) {
    auto pinv = inverse(p);
    return *pinv * m * p;
}

inline Mat block_diag(const std::vector<Mat>& blocks) {
    std::size_t n = 0;
    for (const Mat& b : blocks) n += b.rows();
    Mat out(n, n);
    std::size_t off = 0;
    for (const Mat& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return out;
}

}  // namespace sjp::testutil
