#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sjp/poly.hpp"
#include "sjp/rational.hpp"

namespace sjp {

using Vec = std::vector<Rational>;

// Dense matrix over the rationals, row-major. All arithmetic is exact.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}
    Mat(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_) throw SizeMismatchError("entry count != rows*cols");
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
    // Convenience for literal test matrices (integer entries).
    static Mat from_rows(const std::vector<std::vector<int>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        Mat m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw SizeMismatchError("ragged row list");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    const std::vector<Rational>& entries() const { return e_; }

    Vec col(std::size_t j) const {
        Vec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    Vec row(std::size_t i) const {
        Vec v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
        return v;
    }

    bool is_zero() const {
        for (const Rational& x : e_)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw SizeMismatchError("matrix add");
        Mat r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw SizeMismatchError("matrix sub");
        Mat r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
        return r;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw SizeMismatchError("matrix mul");
        Mat r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (b(k, j) == 0) continue;
                    r(i, j) += aik * b(k, j);
                }
            }
        return r;
    }
    friend Mat operator*(const Rational& s, const Mat& a) {
        Mat r = a;
        for (Rational& x : r.e_) x *= s;
        return r;
    }
    friend Vec operator*(const Mat& a, const Vec& v) {
        if (a.cols_ != v.size()) throw SizeMismatchError("matrix-vector mul");
        Vec r(a.rows_, Rational(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                if (a(i, j) != 0 && v[j] != 0) r[i] += a(i, j) * v[j];
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Rational trace() const {
        if (!is_square()) throw SizeMismatchError("trace of non-square matrix");
        Rational t(0);
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    Mat pow(std::size_t k) const {
        if (!is_square()) throw SizeMismatchError("power of non-square matrix");
        Mat acc = identity(rows_);
        Mat base = *this;
        while (k > 0) {
            if (k & 1u) acc = acc * base;
            base = base * base;
            k >>= 1u;
        }
        return acc;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

struct Rref {
    Mat m;
    std::vector<std::size_t> pivot_cols;
};

inline Rref rref(Mat m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        const Rational inv = Rational(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Mat& m) { return rref(m).pivot_cols.size(); }

// Canonical basis of the span of the given vectors: rows of the RREF with
// zero rows dropped. Equal spans yield identical vector lists.
inline std::vector<Vec> reduced_span(const std::vector<Vec>& vectors, std::size_t ambient) {
    Mat m(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient) throw SizeMismatchError("vector length != ambient");
        for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
    }
    Rref r = rref(std::move(m));
    std::vector<Vec> out;
    out.reserve(r.pivot_cols.size());
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) out.push_back(r.m.row(i));
    return out;
}

// Basis of the right kernel in canonical (reduced) form; M v = 0 for each v.
inline std::vector<Vec> kernel_basis(const Mat& m) {
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> vecs;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) v[r.pivot_cols[i]] = -r.m(i, f);
        vecs.push_back(std::move(v));
    }
    return reduced_span(vecs, m.cols());
}

inline Rational det(Mat m) {
    if (!m.is_square()) throw SizeMismatchError("determinant of non-square matrix");
    Rational d(1);
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m(p, col) == 0) ++p;
        if (p == n) return Rational(0);
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
            d = -d;
        }
        d *= m(col, col);
        const Rational inv = Rational(1) / m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            const Rational f = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return d;
}

inline std::optional<Mat> inverse(const Mat& m) {
    if (!m.is_square()) throw SizeMismatchError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Rref r = rref(std::move(aug));
    if (r.pivot_cols.size() != n || r.pivot_cols.back() != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.m(i, n + j);
    return inv;
}

// Solve A * X = B where A has full column rank; nullopt when inconsistent.
inline std::optional<Mat> solve_exact(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw SizeMismatchError("solve: row mismatch");
    Mat aug(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
    }
    Rref r = rref(std::move(aug));
    // Consistency: no pivot in the right block and the left block has full rank.
    for (std::size_t c : r.pivot_cols)
        if (c >= a.cols()) return std::nullopt;
    if (r.pivot_cols.size() != a.cols()) return std::nullopt;
    Mat x(a.cols(), b.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = r.m(i, a.cols() + j);
    return x;
}

// det(xI - M), monic of degree n, by the Faddeev-LeVerrier recursion.
inline Poly char_poly(const Mat& m) {
    if (!m.is_square()) throw SizeMismatchError("char_poly of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    Mat mk = Mat::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        const Rational ck = -mk.trace() / Rational(static_cast<int>(k));
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += ck;
    }
    return Poly(std::move(c));
}

// Basis of ker (M - lambda I)^n; empty when lambda is not an eigenvalue.
inline std::vector<Vec> generalized_eigenspace(const Mat& m, const Rational& lambda) {
    if (!m.is_square()) throw SizeMismatchError("generalized_eigenspace of non-square matrix");
    Mat shifted = m;
    for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= lambda;
    return kernel_basis(shifted.pow(m.rows()));
}

struct SquareZeroBasis {
    Mat p;          // invertible; p^-1 X p = E12 blocks followed by a zero block
    std::size_t r;  // number of 2x2 nilpotent blocks (= rank X)
    std::size_t z;  // size of the zero block, 2r + z = n
};

// X^2 = 0 means im X <= ker X; build a basis {Xu_1, u_1, ..., Xu_r, u_r, w_1..w_z}
// putting X into its standard square-zero form.
inline SquareZeroBasis square_zero_standard_basis(const Mat& x) {
    if (!x.is_square()) throw SizeMismatchError("square_zero_standard_basis of non-square matrix");
    if (!(x * x).is_zero()) throw ConstraintError("matrix does not square to zero");
    const std::size_t n = x.rows();

    // Greedy echelon tracker over a growing vector family.
    struct Echelon {
        std::vector<Vec> rows;  // each with leading 1 at `lead[i]`
        std::vector<std::size_t> lead;
        bool add(Vec v) {
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (v[lead[i]] != 0) {
                    const Rational f = v[lead[i]];
                    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[i][j];
                }
            std::size_t l = 0;
            while (l < v.size() && v[l] == 0) ++l;
            if (l == v.size()) return false;
            const Rational inv = Rational(1) / v[l];
            for (Rational& e : v) e *= inv;
            rows.push_back(std::move(v));
            lead.push_back(l);
            return true;
        }
    };

    Echelon image;
    std::vector<std::size_t> u_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (image.add(x.col(j))) u_cols.push_back(j);
    const std::size_t r = u_cols.size();

    Echelon kernel_ech;
    for (std::size_t j : u_cols) kernel_ech.add(x.col(j));  // im X first
    std::vector<Vec> completion;
    for (const Vec& k : kernel_basis(x)) {
        Vec copy = k;
        if (kernel_ech.add(std::move(copy))) completion.push_back(k);
    }

    Mat p(n, n);
    std::size_t col = 0;
    for (std::size_t j : u_cols) {
        const Vec img = x.col(j);
        for (std::size_t i = 0; i < n; ++i) p(i, col) = img[i];
        ++col;
        for (std::size_t i = 0; i < n; ++i) p(i, col) = (i == j) ? 1 : 0;
        ++col;
    }
    for (const Vec& w : completion) {
        for (std::size_t i = 0; i < n; ++i) p(i, col) = w[i];
        ++col;
    }
    if (col != n || !inverse(p))
        throw ConstraintError("square-zero basis construction failed");
    return {std::move(p), r, n - 2 * r};
}

namespace detail {

// Sparse multivariate polynomial used only to expand det over a matrix span.
struct MPoly {
    std::map<std::vector<std::uint32_t>, Rational> terms;

    static MPoly one(std::size_t nvars) {
        MPoly p;
        p.terms[std::vector<std::uint32_t>(nvars, 0)] = 1;
        return p;
    }
    bool is_zero() const { return terms.empty(); }
    void add_term(const std::vector<std::uint32_t>& e, const Rational& c) {
        auto [it, inserted] = terms.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    MPoly mul(const MPoly& other) const {
        MPoly out;
        for (const auto& [ea, ca] : terms)
            for (const auto& [eb, cb] : other.terms) {
                std::vector<std::uint32_t> e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    void sub_inplace(const MPoly& other) {
        for (const auto& [e, c] : other.terms) add_term(e, -c);
    }
    void add_inplace(const MPoly& other) {
        for (const auto& [e, c] : other.terms) add_term(e, c);
    }
};

}  // namespace detail

// True iff some rational linear combination of the given square matrices is
// invertible; decided exactly by expanding det(sum c_i H_i) as a polynomial
// in the c_i and testing it against zero.
inline bool generic_invertibility(const std::vector<Mat>& hs) {
    if (hs.empty()) return false;
    const std::size_t n = hs.front().rows();
    for (const Mat& h : hs)
        if (!h.is_square() || h.rows() != n) throw SizeMismatchError("generic_invertibility sizes");
    if (n == 0) return false;
    // Cheap certificates first: individual members and the plain sum.
    for (const Mat& h : hs)
        if (det(h) != 0) return true;
    {
        Mat s = hs.front();
        for (std::size_t i = 1; i < hs.size(); ++i) s = s + hs[i];
        if (det(s) != 0) return true;
    }
    const std::size_t k = hs.size();
    // Laplace expansion over column subsets; entries are linear forms in c.
    std::vector<detail::MPoly> dp(std::size_t(1) << n);
    dp[0] = detail::MPoly::one(k);
    auto entry_poly = [&](std::size_t i, std::size_t j) {
        detail::MPoly p;
        for (std::size_t t = 0; t < k; ++t) {
            if (hs[t](i, j) == 0) continue;
            std::vector<std::uint32_t> e(k, 0);
            e[t] = 1;
            p.add_term(e, hs[t](i, j));
        }
        return p;
    };
    for (std::size_t mask = 1; mask < dp.size(); ++mask) {
        const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
        detail::MPoly acc;
        bool negative = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (std::size_t(1) << j))) continue;
            const detail::MPoly e = entry_poly(row, j);
            if (!e.is_zero()) {
                detail::MPoly contrib = e.mul(dp[mask ^ (std::size_t(1) << j)]);
                if (negative)
                    acc.sub_inplace(contrib);
                else
                    acc.add_inplace(contrib);
            }
            negative = !negative;
        }
        dp[mask] = std::move(acc);
    }
    return !dp.back().is_zero();
}

}  // namespace sjp
