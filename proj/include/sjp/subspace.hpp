#pragma once

#include <vector>

#include "sjp/matrix.hpp"

namespace sjp {

// Subspace of Q^n with the basis held in reduced (row-echelon canonical) form,
// so two subspaces are equal iff their stored bases compare equal.
class Subspace {
public:
    Subspace() : ambient_(0) {}
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors) {
        Subspace s(ambient);
        s.basis_ = reduced_span(vectors, ambient);
        return s;
    }
    static Subspace full(std::size_t ambient) {
        std::vector<Vec> e;
        for (std::size_t i = 0; i < ambient; ++i) {
            Vec v(ambient, Rational(0));
            v[i] = 1;
            e.push_back(std::move(v));
        }
        return span(ambient, e);
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<Vec>& basis() const { return basis_; }

    // n x dim matrix whose columns are the basis vectors.
    Mat basis_matrix() const {
        Mat m(ambient_, basis_.size());
        for (std::size_t j = 0; j < basis_.size(); ++j)
            for (std::size_t i = 0; i < ambient_; ++i) m(i, j) = basis_[j][i];
        return m;
    }

    bool contains(const Vec& v) const {
        if (v.size() != ambient_) throw SizeMismatchError("vector length != ambient");
        Vec w = v;
        for (const Vec& b : basis_) {
            std::size_t lead = 0;
            while (lead < ambient_ && b[lead] == 0) ++lead;
            if (lead < ambient_ && w[lead] != 0) {
                const Rational f = w[lead];
                for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * b[j];
            }
        }
        for (const Rational& x : w)
            if (x != 0) return false;
        return true;
    }

    bool contains(const Subspace& other) const {
        for (const Vec& v : other.basis_)
            if (!contains(v)) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    std::vector<Vec> basis_;
};

inline Subspace operator+(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw SizeMismatchError("subspace sum");
    std::vector<Vec> all = a.basis();
    all.insert(all.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient(), all);
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw SizeMismatchError("subspace intersection");
    const std::size_t n = a.ambient();
    if (a.is_zero() || b.is_zero()) return Subspace(n);
    // Solve A x = B y: kernel vectors of [A | -B] give intersection elements A x.
    Mat stacked(n, a.dim() + b.dim());
    const Mat am = a.basis_matrix();
    const Mat bm = b.basis_matrix();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) stacked(i, j) = am(i, j);
        for (std::size_t j = 0; j < b.dim(); ++j) stacked(i, a.dim() + j) = -bm(i, j);
    }
    std::vector<Vec> vecs;
    for (const Vec& k : kernel_basis(stacked)) {
        Vec v(n, Rational(0));
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t i = 0; i < n; ++i) v[i] += k[j] * am(i, j);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(n, vecs);
}

// Span of M v over the basis vectors v of s.
inline Subspace apply(const Mat& m, const Subspace& s) {
    std::vector<Vec> vecs;
    for (const Vec& v : s.basis()) vecs.push_back(m * v);
    return Subspace::span(m.rows(), vecs);
}

inline bool is_invariant(const Mat& m, const Subspace& s) {
    for (const Vec& v : s.basis())
        if (!s.contains(m * v)) return false;
    return true;
}

}  // namespace sjp
