#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sjp/matrix.hpp"
#include "sjp/pbw.hpp"
#include "sjp/subspace.hpp"

namespace sjp {

// Finite-dimensional module given by the action matrices of the two
// generators. Valid when X1^2 = 0 and X2^2 X1 = X1 X2^2 + X1 X2 X1; the
// derived actions S = X1 X2 + X2 X1 and T = X2^2 are computed on demand.
struct Representation {
    Mat X1, X2;

    std::size_t dim() const { return X1.rows(); }
    Mat S() const { return X1 * X2 + X2 * X1; }
    Mat T() const { return X2 * X2; }
};

struct ValidityReport {
    bool valid = true;
    std::string relation;  // textual name of the first failing relation
    std::size_t row = 0, col = 0;
    Rational value;  // offending entry of the defect matrix

    explicit operator bool() const { return valid; }
};

inline ValidityReport check_representation(const Mat& x1, const Mat& x2) {
    if (!x1.is_square() || !x2.is_square() || x1.rows() != x2.rows())
        throw SizeMismatchError("generator matrices must be square of equal size");
    auto witness = [](const Mat& defect, ValidityReport& r) {
        for (std::size_t i = 0; i < defect.rows(); ++i)
            for (std::size_t j = 0; j < defect.cols(); ++j)
                if (defect(i, j) != 0) {
                    r.row = i;
                    r.col = j;
                    r.value = defect(i, j);
                    return;
                }
    };
    ValidityReport report;
    const Mat sq = x1 * x1;
    if (!sq.is_zero()) {
        report.valid = false;
        report.relation = "x1^2 = 0";
        witness(sq, report);
        return report;
    }
    const Mat defect = x2 * x2 * x1 - x1 * x2 * x2 - x1 * x2 * x1;
    if (!defect.is_zero()) {
        report.valid = false;
        report.relation = "x2^2 x1 = x1 x2^2 + x1 x2 x1";
        witness(defect, report);
    }
    return report;
}

inline Representation make_representation(Mat x1, Mat x2) {
    const ValidityReport r = check_representation(x1, x2);
    if (!r)
        throw RelationError(r.relation + " fails at entry (" + std::to_string(r.row + 1) + "," +
                            std::to_string(r.col + 1) + ") = " + to_string(r.value));
    if (x1.rows() == 0) throw DimensionError("dimension must be positive");
    return Representation{std::move(x1), std::move(x2)};
}

inline Representation conjugate(const Representation& r, const Mat& p) {
    const auto pinv = inverse(p);
    if (!pinv) throw ConstraintError("conjugating matrix is singular");
    return Representation{*pinv * r.X1 * p, *pinv * r.X2 * p};
}

inline Representation direct_sum(const std::vector<Representation>& parts) {
    std::size_t n = 0;
    for (const auto& p : parts) n += p.dim();
    Mat x1(n, n), x2(n, n);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.dim(); ++i)
            for (std::size_t j = 0; j < p.dim(); ++j) {
                x1(off + i, off + j) = p.X1(i, j);
                x2(off + i, off + j) = p.X2(i, j);
            }
        off += p.dim();
    }
    return Representation{std::move(x1), std::move(x2)};
}

// The homomorphism sending x1^a x21^b x2^c to X1^a S^b X2^c, extended
// linearly.
inline Mat evaluate_in_rep(const PBWElement& u, const Representation& r) {
    if (!check_representation(r.X1, r.X2))
        throw RelationError("evaluate_in_rep on an invalid representation");
    const std::size_t n = r.dim();
    const Mat s = r.S();
    Mat out(n, n);
    for (const auto& [m, coeff] : u.terms()) {
        Mat term = m.a ? r.X1 : Mat::identity(n);
        term = term * s.pow(m.b);
        term = term * r.X2.pow(m.c);
        out = out + coeff * term;
    }
    return out;
}

// ker X1, guaranteed nonzero for a valid representation and stable under
// both S and T.
inline Subspace v0_basis(const Representation& r) {
    const Subspace v0 = Subspace::span(r.dim(), kernel_basis(r.X1));
    if (v0.is_zero()) throw ConstraintError("kernel of X1 is zero");
    if (!is_invariant(r.S(), v0) || !is_invariant(r.T(), v0))
        throw ConstraintError("kernel of X1 not S/T stable; representation invalid");
    return v0;
}

// Smallest subspace containing the given vectors and closed under X1 and X2.
inline Subspace submodule_generated(const Representation& r, const std::vector<Vec>& gens) {
    Subspace cur = Subspace::span(r.dim(), gens);
    for (;;) {
        Subspace next = cur + apply(r.X1, cur) + apply(r.X2, cur);
        if (next.dim() == cur.dim()) return cur;
        cur = std::move(next);
    }
}

struct Lemma24Subspaces {
    Subspace w;  // X2 V0 intersect V0
    Subspace u;  // X2 V0 + V0
    bool w_closed = false;
    bool u_closed = false;
    Vec eigenvector;       // simultaneous S,T eigenvector inside V0 (S-eigenvalue 0)
    Rational t_eigenvalue;
};

// The two canonical submodules attached to V0, plus a certified simultaneous
// eigenvector of S and T inside V0. S is nilpotent, so the S-eigenvalue is 0;
// the vector is found inside ker S \cap V0, which is T-stable because
// S T = T S - S^2.
inline Lemma24Subspaces lemma24_subspaces(const Representation& r) {
    Lemma24Subspaces out;
    const Subspace v0 = v0_basis(r);
    const Subspace x2v0 = apply(r.X2, v0);
    out.w = intersect(x2v0, v0);
    out.u = x2v0 + v0;
    out.w_closed = is_invariant(r.X1, out.w) && is_invariant(r.X2, out.w);
    out.u_closed = is_invariant(r.X1, out.u) && is_invariant(r.X2, out.u);

    const Subspace core = intersect(Subspace::span(r.dim(), kernel_basis(r.S())), v0);
    if (core.is_zero()) throw ConstraintError("ker S meets V0 trivially; S not nilpotent?");
    //  T restricted to core in the coordinates of its basis
    const Mat basis = core.basis_matrix();
    const auto t_restr = solve_exact(basis, r.T() * basis);
    if (!t_restr) throw ConstraintError("ker S \xE2\x88\xA9 V0 is not T-stable");
    const RationalRoots roots = rational_eigenvalues(char_poly(*t_restr));
    if (roots.roots.empty())
        throw NonsplitError("T on ker S \xE2\x88\xA9 V0 has no rational eigenvalue: " +
                            roots.remainder.str());
    const Rational lambda = roots.roots.begin()->first;
    Mat shifted = *t_restr;
    for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) -= lambda;
    const auto kern = kernel_basis(shifted);
    Vec v(r.dim(), Rational(0));
    for (std::size_t j = 0; j < core.dim(); ++j)
        for (std::size_t i = 0; i < r.dim(); ++i) v[i] += kern.front()[j] * basis(i, j);
    out.eigenvector = std::move(v);
    out.t_eigenvalue = lambda;
    return out;
}

// Restriction of a representation to an invariant subspace, in the
// coordinates of the subspace basis.
inline Representation restrict_to(const Representation& r, const Subspace& s) {
    const Mat b = s.basis_matrix();
    const auto x1 = solve_exact(b, r.X1 * b);
    const auto x2 = solve_exact(b, r.X2 * b);
    if (!x1 || !x2) throw ConstraintError("subspace is not invariant");
    return Representation{*x1, *x2};
}

struct TSummand {
    Rational eigenvalue;  // eigenvalue of T on this summand
    Subspace space;
    Representation rep;
};

// Splits V into the generalized eigenspaces of T = X2^2; each is a submodule
// and the whole space is their direct sum.
inline std::vector<TSummand> decompose_by_T(const Representation& r) {
    const Mat t = r.T();
    const RationalRoots roots = rational_eigenvalues(char_poly(t));
    if (!(roots.remainder == Poly::constant(Rational(1))))
        throw NonsplitError("of T: irreducible factor " + roots.remainder.str());
    std::vector<TSummand> out;
    std::size_t total = 0;
    for (const auto& [lambda, mult] : roots.roots) {
        TSummand s;
        s.eigenvalue = lambda;
        s.space = Subspace::span(r.dim(), generalized_eigenspace(t, lambda));
        if (s.space.dim() != mult)
            throw ConstraintError("generalized eigenspace dimension mismatch");
        s.rep = restrict_to(r, s.space);
        total += s.space.dim();
        out.push_back(std::move(s));
    }
    if (total != r.dim()) throw ConstraintError("T-decomposition does not fill the space");
    return out;
}

}  // namespace sjp
