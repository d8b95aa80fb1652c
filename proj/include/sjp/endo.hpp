#pragma once

#include <optional>
#include <vector>

#include "sjp/representation.hpp"

namespace sjp {

// Basis of the intertwiner space Hom(A, B): all H with H X1_A = X1_B H and
// H X2_A = X2_B H.
struct HomBasis {
    std::size_t source_dim = 0, target_dim = 0;
    std::vector<Mat> basis;

    std::size_t dim() const { return basis.size(); }
};

inline HomBasis hom_space(const Representation& a, const Representation& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    const std::size_t unknowns = na * nb;  // H is nb x na, vectorized row-major
    Mat sys(2 * unknowns, unknowns);
    std::size_t eq = 0;
    for (auto gen : {&Representation::X1, &Representation::X2}) {
        const Mat& ga = a.*gen;
        const Mat& gb = b.*gen;
        for (std::size_t i = 0; i < nb; ++i)
            for (std::size_t j = 0; j < na; ++j) {
                // (H ga)_{ij} - (gb H)_{ij} = 0
                for (std::size_t q = 0; q < na; ++q) sys(eq, i * na + q) += ga(q, j);
                for (std::size_t p = 0; p < nb; ++p) sys(eq, p * na + j) -= gb(i, p);
                ++eq;
            }
    }
    HomBasis out;
    out.source_dim = na;
    out.target_dim = nb;
    for (const Vec& v : kernel_basis(sys)) {
        Mat h(nb, na);
        for (std::size_t i = 0; i < nb; ++i)
            for (std::size_t j = 0; j < na; ++j) h(i, j) = v[i * na + j];
        out.basis.push_back(std::move(h));
    }
    return out;
}

inline HomBasis end_space(const Representation& r) { return hom_space(r, r); }

// Unital matrix algebra given by a linear basis closed under products.
struct MatrixAlgebra {
    std::size_t n = 0;
    std::vector<Mat> basis;

    std::size_t dim() const { return basis.size(); }
};

namespace endodetail {

// Row-echelon tracker over vectorized matrices, for span membership.
struct MatSpan {
    std::size_t n = 0;
    std::vector<Vec> rows;
    std::vector<std::size_t> lead;

    explicit MatSpan(std::size_t dim) : n(dim) {}

    Vec reduce(const Mat& m) const {
        Vec v = m.entries();
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (v[lead[i]] != 0) {
                const Rational f = v[lead[i]];
                for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[i][j];
            }
        return v;
    }
    bool contains(const Mat& m) const {
        for (const Rational& x : reduce(m))
            if (x != 0) return false;
        return true;
    }
    // Returns true when m enlarged the span.
    bool add(const Mat& m) {
        Vec v = reduce(m);
        std::size_t l = 0;
        while (l < v.size() && v[l] == 0) ++l;
        if (l == v.size()) return false;
        const Rational inv = Rational(1) / v[l];
        for (Rational& x : v) x *= inv;
        rows.push_back(std::move(v));
        lead.push_back(l);
        return true;
    }
};

}  // namespace endodetail

// Basis of the unital algebra generated by the given matrices: seed with the
// identity and right-multiply by generators until the span stabilizes.
inline MatrixAlgebra generated_matrix_algebra(const std::vector<Mat>& gens, std::size_t n) {
    for (const Mat& g : gens)
        if (!g.is_square() || g.rows() != n) throw SizeMismatchError("generator sizes differ");
    endodetail::MatSpan span(n);
    span.add(Mat::identity(n));
    std::vector<Mat> basis{Mat::identity(n)};
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (const Mat& g : gens) {
            const Mat prod = basis[i] * g;
            Vec reduced = span.reduce(prod);
            Mat rem(n, n);
            bool nonzero = false;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    rem(r, c) = reduced[r * n + c];
                    if (rem(r, c) != 0) nonzero = true;
                }
            if (nonzero) {
                span.add(rem);
                basis.push_back(std::move(rem));
            }
        }
    return MatrixAlgebra{n, std::move(basis)};
}

inline MatrixAlgebra generated_matrix_algebra(const std::vector<Mat>& gens) {
    if (gens.empty()) throw SizeMismatchError("no ambient dimension without generators");
    return generated_matrix_algebra(gens, gens.front().rows());
}

inline MatrixAlgebra algebra_from_basis(std::size_t n, std::vector<Mat> basis) {
    return MatrixAlgebra{n, std::move(basis)};
}

struct RadicalReport {
    std::vector<Mat> radical_basis;
    std::size_t quotient_dim = 0;
    bool quotient_commutative = false;
};

// Jacobson radical of a matrix algebra over the rationals via the trace
// bilinear form (x, y) -> trace(xy); valid in characteristic 0. Verifies the
// closure invariant, the nilpotency of the result, and reports on the
// semisimple quotient.
inline RadicalReport algebra_radical(const MatrixAlgebra& a) {
    endodetail::MatSpan span(a.n);
    bool has_identity = false;
    for (const Mat& b : a.basis) {
        span.add(b);
        if (b == Mat::identity(a.n)) has_identity = true;
    }
    if (!has_identity && !span.contains(Mat::identity(a.n)))
        throw ClosureError("identity not in span");
    const std::size_t k = a.basis.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (!span.contains(a.basis[i] * a.basis[j]))
                throw ClosureError("basis not closed under products");

    Mat gram(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) gram(i, j) = (a.basis[i] * a.basis[j]).trace();
    RadicalReport out;
    for (const Vec& v : kernel_basis(gram)) {
        Mat m(a.n, a.n);
        for (std::size_t i = 0; i < k; ++i)
            if (v[i] != 0) m = m + v[i] * a.basis[i];
        out.radical_basis.push_back(std::move(m));
    }
    out.quotient_dim = k - out.radical_basis.size();

    // Nilpotency: powers of the radical subspace must reach zero.
    if (!out.radical_basis.empty()) {
        std::vector<Mat> power = out.radical_basis;
        std::size_t steps = 0;
        while (!power.empty()) {
            if (++steps > k + 1) throw ClosureError("radical is not nilpotent");
            endodetail::MatSpan next(a.n);
            std::vector<Mat> next_basis;
            for (const Mat& x : power)
                for (const Mat& y : out.radical_basis) {
                    const Mat prod = x * y;
                    if (next.add(prod)) next_basis.push_back(prod);
                }
            power = std::move(next_basis);
        }
    }

    endodetail::MatSpan rad_span(a.n);
    for (const Mat& m : out.radical_basis) rad_span.add(m);
    out.quotient_commutative = true;
    for (std::size_t i = 0; i < k && out.quotient_commutative; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const Mat comm = a.basis[i] * a.basis[j] - a.basis[j] * a.basis[i];
            if (!comm.is_zero() && !rad_span.contains(comm)) {
                out.quotient_commutative = false;
                break;
            }
        }
    return out;
}

// A local endomorphism algebra (End/Rad one-dimensional) certifies
// indecomposability over the algebraic closure.
inline bool is_indecomposable(const Representation& r) {
    const HomBasis end = end_space(r);
    const RadicalReport rad = algebra_radical(algebra_from_basis(r.dim(), end.basis));
    return rad.quotient_dim == 1;
}

inline bool is_isomorphic(const Representation& a, const Representation& b) {
    if (a.dim() != b.dim()) return false;
    const HomBasis hom = hom_space(a, b);
    if (hom.basis.empty()) return false;
    return generic_invertibility(hom.basis);
}

struct Summand {
    Subspace space;  // in the coordinates of the original representation
    Representation rep;
};

namespace endodetail {

// Is any element of the span (basis elements, then pairwise sums) equipped
// with at least two distinct rational eigenvalues? Such an element splits the
// module along its generalized eigenspaces.
inline std::optional<Mat> splitting_element(const std::vector<Mat>& basis) {
    auto qualifies = [](const Mat& m) {
        const RationalRoots rr = rational_eigenvalues(char_poly(m));
        // At least two nonzero invariant blocks: the rational generalized
        // eigenspaces, plus one block for the root-free factor when present.
        const bool has_nonsplit = rr.remainder.degree() > 0;
        return !rr.roots.empty() && rr.roots.size() + (has_nonsplit ? 1 : 0) >= 2;
    };
    for (const Mat& m : basis)
        if (qualifies(m)) return m;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const Mat s = basis[i] + basis[j];
            if (qualifies(s)) return s;
        }
    return std::nullopt;
}

inline void split_recursive(const Representation& rep, const Subspace& ambient_coords,
                            std::vector<Summand>& out) {
    const HomBasis end = end_space(rep);
    const RadicalReport rad = algebra_radical(algebra_from_basis(rep.dim(), end.basis));
    if (rad.quotient_dim == 1) {
        out.push_back({ambient_coords, rep});
        return;
    }
    const auto elem = splitting_element(end.basis);
    if (!elem)
        throw NonsplitError("no endomorphism with two rational eigenvalues on a summand");
    const RationalRoots rr = rational_eigenvalues(char_poly(*elem));
    const Mat ambient_basis = ambient_coords.basis_matrix();
    std::size_t covered = 0;
    auto recurse_on = [&](const std::vector<Vec>& vecs) {
        const Subspace local = Subspace::span(rep.dim(), vecs);
        covered += local.dim();
        const Representation sub = restrict_to(rep, local);
        // lift local coordinates to the ambient space
        std::vector<Vec> lifted;
        for (const Vec& v : local.basis()) {
            Vec w(ambient_coords.ambient(), Rational(0));
            for (std::size_t j = 0; j < rep.dim(); ++j)
                for (std::size_t i = 0; i < w.size(); ++i) w[i] += v[j] * ambient_basis(i, j);
            lifted.push_back(std::move(w));
        }
        split_recursive(sub, Subspace::span(ambient_coords.ambient(), lifted), out);
    };
    for (const auto& [lambda, mult] : rr.roots)
        recurse_on(generalized_eigenspace(*elem, lambda));
    if (covered < rep.dim()) {
        // Remaining block: kernel of q(E)^n for the rational-root-free factor q.
        Mat q(rep.dim(), rep.dim());
        for (std::size_t i = 0; i <= rr.remainder.degree(); ++i)
            q = q + rr.remainder.coeff(i) * elem->pow(i);
        recurse_on(kernel_basis(q.pow(rep.dim())));
    }
}

}  // namespace endodetail

// Complete decomposition into indecomposable summands: first along the
// generalized eigenspaces of T, then by repeatedly splitting along
// endomorphisms with several rational eigenvalues.
inline std::vector<Summand> full_decompose(const Representation& r) {
    std::vector<Summand> out;
    for (const TSummand& ts : decompose_by_T(r))
        endodetail::split_recursive(ts.rep, ts.space, out);
    return out;
}

// Does the line spanned by v admit a module complement? Equivalently, is
// there an idempotent endomorphism with image exactly that line? With
// E v = v and im E <= <v>, the idempotency is automatic, so this is a linear
// feasibility problem over the endomorphism algebra.
inline bool line_splits_off(const Representation& r, const Vec& v) {
    const std::size_t n = r.dim();
    const HomBasis end = end_space(r);
    if (end.basis.empty()) return false;
    std::size_t pivot = 0;
    while (pivot < n && v[pivot] == 0) ++pivot;
    if (pivot == n) throw ConstraintError("zero vector spans no line");
    const std::size_t k = end.basis.size();
    // Unknowns: coefficients of E over the End basis.
    // Constraints: E v = v, and columns of E proportional to v.
    std::vector<Vec> lhs_rows;
    Vec rhs;
    for (std::size_t i = 0; i < n; ++i) {
        Vec row(k);
        for (std::size_t t = 0; t < k; ++t) {
            Rational s(0);
            for (std::size_t j = 0; j < n; ++j) s += end.basis[t](i, j) * v[j];
            row[t] = s;
        }
        lhs_rows.push_back(std::move(row));
        rhs.push_back(v[i]);
    }
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            if (i == pivot) continue;
            // v[pivot] * E(i, j) - v[i] * E(pivot, j) = 0
            Vec row(k);
            for (std::size_t t = 0; t < k; ++t)
                row[t] = v[pivot] * end.basis[t](i, j) - v[i] * end.basis[t](pivot, j);
            lhs_rows.push_back(std::move(row));
            rhs.push_back(Rational(0));
        }
    // Consistency of lhs * x = rhs.
    Mat lhs(lhs_rows.size(), k);
    Mat aug(lhs_rows.size(), k + 1);
    for (std::size_t i = 0; i < lhs_rows.size(); ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            lhs(i, j) = lhs_rows[i][j];
            aug(i, j) = lhs_rows[i][j];
        }
        aug(i, k) = rhs[i];
    }
    return rank(lhs) == rank(aug);
}

// A full flag of submodules with one-dimensional quotients; returns the
// sequence of x2-eigenvalues of the successive one-dimensional factors. Each
// step takes an x2-eigenvector inside ker X1 and passes to the quotient.
inline std::vector<Rational> composition_chain(const Representation& r) {
    std::vector<Rational> factors;
    Representation cur = r;
    while (cur.dim() > 0) {
        const RationalRoots rr = rational_eigenvalues(char_poly(cur.X2));
        std::optional<Vec> found;
        Rational found_lambda;
        for (const auto& [lambda, mult] : rr.roots) {
            Mat shifted = cur.X2;
            for (std::size_t i = 0; i < cur.dim(); ++i) shifted(i, i) -= lambda;
            const Subspace eig = Subspace::span(cur.dim(), kernel_basis(shifted));
            const Subspace v0 = Subspace::span(cur.dim(), kernel_basis(cur.X1));
            const Subspace common = intersect(eig, v0);
            if (!common.is_zero()) {
                found = common.basis().front();
                found_lambda = lambda;
                break;
            }
        }
        if (!found)
            throw NonsplitError("no rational one-dimensional submodule: " +
                                rr.remainder.str());
        factors.push_back(found_lambda);
        if (cur.dim() == 1) break;
        // Extend the line to a basis and pass to the quotient block.
        Subspace grown = Subspace::span(cur.dim(), {*found});
        Mat q(cur.dim(), cur.dim());
        std::size_t col = 0;
        for (std::size_t i = 0; i < cur.dim(); ++i) q(i, col) = (*found)[i];
        ++col;
        for (std::size_t j = 0; j < cur.dim() && col < cur.dim(); ++j) {
            Vec e(cur.dim(), Rational(0));
            e[j] = 1;
            std::vector<Vec> cand = grown.basis();
            cand.push_back(e);
            const Subspace bigger = Subspace::span(cur.dim(), cand);
            if (bigger.dim() > grown.dim()) {
                grown = bigger;
                for (std::size_t i = 0; i < cur.dim(); ++i) q(i, col) = e[i];
                ++col;
            }
        }
        const Representation conj = conjugate(cur, q);
        Mat x1(cur.dim() - 1, cur.dim() - 1), x2(cur.dim() - 1, cur.dim() - 1);
        for (std::size_t i = 1; i < cur.dim(); ++i)
            for (std::size_t j = 1; j < cur.dim(); ++j) {
                x1(i - 1, j - 1) = conj.X1(i, j);
                x2(i - 1, j - 1) = conj.X2(i, j);
            }
        cur = Representation{std::move(x1), std::move(x2)};
    }
    return factors;
}

}  // namespace sjp
