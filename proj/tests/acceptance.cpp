// Acceptance suite: one timed criterion per line, exit nonzero on any
// failure. Budgets are part of the criteria and are enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "sjp/classify.hpp"
#include "sjp/identities.hpp"
#include "sjp/io.hpp"
#include "test_labels.hpp"

using namespace sjp;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

const std::vector<Family> kThetaFamilies = {
    Family::T1U, Family::T1Y, Family::T2R,      Family::T2S,      Family::T2T,
    Family::T3U, Family::T3W, Family::T4Vupper, Family::T4Vlower,
};

int theta_group(Family f) {
    switch (f) {
        case Family::T1U:
        case Family::T1Y: return 1;
        case Family::T2R:
        case Family::T2S:
        case Family::T2T: return 2;
        case Family::T3U:
        case Family::T3W: return 3;
        default: return 4;
    }
}

// 1. Identity suite with exact equality.
Outcome identity_suite() {
    Outcome out;
    for (const Rational& lambda : {Rational(0), Rational(1), Rational(-3) / 2}) {
        const IdentityReport r = check_identities(6, 6, 8, lambda);
        for (const auto& c : r.checks)
            out.require(c.pass, c.name + " at " + c.counterexample);
    }
    return out;
}

// 2. Confluence over all words of length 8 plus exact associativity.
Outcome confluence_associativity() {
    Outcome out;
    for (unsigned bits = 0; bits < (1u << 8); ++bits) {
        GenWord w(8);
        for (std::size_t i = 0; i < 8; ++i) w[i] = (bits >> i) & 1u ? Gen::x2 : Gen::x1;
        out.require(reduce_word(w, ReduceOrder::LeftToRight) ==
                        reduce_word(w, ReduceOrder::RightToLeft),
                    "order-dependent reduction at word mask " + std::to_string(bits));
    }
    testutil::Rng rng(9102);
    auto random_element = [&rng]() {
        PBWElement e;
        for (int t = 0; t < rng.int_in(1, 3); ++t) {
            PBWMonomial m{unsigned(rng.int_in(0, 1)), unsigned(rng.int_in(0, 2)),
                          unsigned(rng.int_in(0, 3))};
            if (m.degree() <= 6) e.add(m, rng.rational(-4, 4));
        }
        return e;
    };
    for (int trial = 0; trial < 200; ++trial) {
        const PBWElement u = random_element(), v = random_element(), w = random_element();
        out.require((u * v) * w == u * (v * w), "associativity failure");
    }
    return out;
}

// 3. Subalgebra embedding is multiplicative up to y-degree 8.
Outcome embedding() {
    Outcome out;
    const IdentityReport r = embedding_check(8);
    for (const auto& c : r.checks) out.require(c.pass, c.name + " at " + c.counterexample);
    return out;
}

// 4. Right-module generator decomposition round-trips for degree <= 8.
Outcome module_generators() {
    Outcome out;
    for (unsigned a = 0; a <= 1; ++a)
        for (unsigned b = 0; a + 2 * b <= 8; ++b)
            for (unsigned c = 0; a + 2 * b + c <= 8; ++c) {
                const PBWMonomial m{a, b, c};
                out.require(recompose_module_generators(right_module_generators(m)) ==
                                PBWElement::monomial(m),
                            "round trip failed at monomial degree " + std::to_string(m.degree()));
            }
    return out;
}

// 5. Two-dimensional classification round trip, 100/100.
Outcome dim2_round_trip() {
    Outcome out;
    testutil::Rng rng(9105);
    int good = 0;
    for (int trial = 0; trial < 100; ++trial) {
        CanonicalLabel l;
        switch (trial % 3) {
            case 0: l = testutil::random_label(rng, Family::Dim2U); break;
            case 1: l = testutil::random_label(rng, Family::Dim2V); break;
            default: l = testutil::random_label(rng, Family::JordanChain, 2); break;
        }
        const Representation r = conjugate(construct(l), rng.invertible(2));
        const Classification c = classify(r);
        if (!c.decomposable && iso_criterion(l, c.labels.front())) ++good;
        else out.require(false, "round trip failed for " + l.str());
    }
    out.require(good == 100, "only " + std::to_string(good) + "/100 round trips succeeded");
    return out;
}

// 6. Three-dimensional classification round trip and criterion/oracle
//    agreement, including cross-family rejection.
Outcome dim3_round_trip_and_criteria() {
    Outcome out;
    testutil::Rng rng(9106);
    for (const Family f : kThetaFamilies)
        for (int trial = 0; trial < 50; ++trial) {
            const CanonicalLabel l = testutil::random_label(rng, f);
            const Classification c = classify(conjugate(construct(l), rng.invertible(3)));
            out.require(!c.decomposable && iso_criterion(l, c.labels.front()),
                        "round trip failed for " + l.str());
        }
    for (const Family f : {Family::T1Y, Family::T2T, Family::T3W})
        for (int trial = 0; trial < 50; ++trial) {
            const CanonicalLabel l1 = testutil::random_label(rng, f);
            const CanonicalLabel l2 = testutil::random_label(rng, f);
            const bool by_label = iso_criterion(l1, l2);
            const bool by_module = is_isomorphic(construct(l1), construct(l2));
            out.require(by_label == by_module,
                        "criterion/oracle mismatch: " + l1.str() + " vs " + l2.str());
        }
    for (int group = 1; group <= 4; ++group)
        for (int trial = 0; trial < 50; ++trial) {
            Family f1 = kThetaFamilies[std::size_t(rng.int_in(0, 8))];
            while (theta_group(f1) != group) f1 = kThetaFamilies[std::size_t(rng.int_in(0, 8))];
            Family f2 = kThetaFamilies[std::size_t(rng.int_in(0, 8))];
            while (theta_group(f2) == group) f2 = kThetaFamilies[std::size_t(rng.int_in(0, 8))];
            const CanonicalLabel l1 = testutil::random_label(rng, f1);
            const CanonicalLabel l2 = testutil::random_label(rng, f2);
            out.require(!iso_criterion(l1, l2),
                        "criterion accepted a cross-family pair: " + l1.str() + " vs " + l2.str());
            out.require(!is_isomorphic(construct(l1), construct(l2)),
                        "oracle accepted a cross-family pair: " + l1.str() + " vs " + l2.str());
        }
    return out;
}

// 7. T-decomposition recovers block structure; canonical indecomposables
//    have a single T-eigenvalue.
Outcome t_decomposition() {
    Outcome out;
    testutil::Rng rng(9107);
    for (int trial = 0; trial < 100; ++trial) {
        // pick labels with pairwise-distinct squared leading parameters
        std::vector<CanonicalLabel> picks;
        std::set<Rational> used;
        const int parts = rng.int_in(2, 3);
        int guard = 0;
        while (int(picks.size()) < parts && ++guard < 100) {
            CanonicalLabel l;
            switch (rng.int_in(0, 3)) {
                case 0: l = testutil::random_label(rng, Family::Dim2U); break;
                case 1: l = testutil::random_label(rng, Family::Dim2V); break;
                case 2: l = testutil::random_label(rng, Family::JordanChain,
                                                   std::size_t(rng.int_in(1, 2))); break;
                default: l = testutil::random_label(rng, Family::T2T); break;
            }
            const Rational teig = l.params[0] * l.params[0];
            if (used.count(teig)) continue;
            used.insert(teig);
            picks.push_back(l);
        }
        std::vector<Representation> blocks;
        std::vector<std::size_t> dims;
        for (const auto& l : picks) {
            blocks.push_back(construct(l));
            dims.push_back(l.n);
        }
        std::sort(dims.begin(), dims.end());
        const Representation sum = direct_sum(blocks);
        const Representation r = conjugate(sum, rng.invertible(sum.dim()));
        const auto tparts = decompose_by_T(r);
        std::vector<std::size_t> got;
        for (const auto& p : tparts) got.push_back(p.rep.dim());
        std::sort(got.begin(), got.end());
        out.require(got == dims, "T-decomposition dimensions differ from construction");
    }
    std::vector<Family> all = kThetaFamilies;
    all.insert(all.end(), {Family::Dim2U, Family::Dim2V, Family::JordanChain, Family::FamU,
                           Family::FamV});
    for (const Family f : all)
        for (int trial = 0; trial < 5; ++trial) {
            const CanonicalLabel l = testutil::random_label(rng, f);
            const auto roots = rational_eigenvalues(char_poly(construct(l).T()));
            out.require(roots.roots.size() == 1 &&
                            roots.remainder == Poly::constant(Rational(1)),
                        "several T-eigenvalues on " + l.str());
        }
    return out;
}

// 8. The arbitrary-dimension families are indecomposable and distinct.
Outcome arbitrary_dimension_families() {
    Outcome out;
    for (std::size_t n = 2; n <= 8; ++n) {
        for (const Rational& a : {Rational(0), Rational(1), Rational(2), Rational(-3) / 2}) {
            const Representation u = construct(fam_u(a, n));
            const HomBasis end = end_space(u);
            const RadicalReport rad = algebra_radical(algebra_from_basis(n, end.basis));
            out.require(rad.quotient_dim == 1,
                        "first family not local at n=" + std::to_string(n));
        }
        for (const Rational& a : {Rational(1), Rational(2), Rational(-3) / 2}) {
            const Representation v = construct(fam_v(a, n));
            const HomBasis end = end_space(v);
            const RadicalReport rad = algebra_radical(algebra_from_basis(n, end.basis));
            out.require(rad.quotient_dim == 1,
                        "second family not local at n=" + std::to_string(n));
            out.require(!is_isomorphic(construct(fam_u(a, n)), v),
                        "families collide at n=" + std::to_string(n));
        }
    }
    return out;
}

// 9. Composition factors are one-dimensional; the image algebra modulo its
//    radical is commutative of the predicted dimension.
Outcome simple_quotients() {
    Outcome out;
    testutil::Rng rng(9109);
    // every canonical indecomposable of dimension <= 3, parameters on a grid
    const std::vector<Rational> grid = {Rational(0), Rational(1), Rational(-2),
                                        Rational(3) / 2};
    std::vector<CanonicalLabel> labels;
    for (const Rational& a : grid) {
        for (std::size_t nn = 1; nn <= 3; ++nn) labels.push_back(jordan_chain(a, nn));
        for (const Rational& b : grid) {
            labels.push_back(dim2u(a, b));
            labels.push_back(t1u(a, b));
            labels.push_back(t3u(a, b));
            if (b != 0) {
                labels.push_back(t2t(a, b, Rational(1)));
                labels.push_back(t2t(a, Rational(0), b));
                labels.push_back(t2t(a, b, Rational(-2)));
            }
        }
        if (a != 0) {
            labels.push_back(dim2v(a));
            labels.push_back(t4v_upper(a));
            labels.push_back(t4v_lower(a));
        }
        labels.push_back(t2r(a));
        labels.push_back(t2s(a));
        for (const Rational& e : grid)
            labels.push_back(t1y(a, Rational(1), Rational(-1), a + 1, e == 0 ? Rational(2) : e));
        for (const Rational& d : grid)
            if (d != 0) labels.push_back(t3w(a, Rational(1), a - 1, d, Rational(1)));
    }
    for (const CanonicalLabel& l : labels) {
        const auto chain = composition_chain(construct(l));
        out.require(chain.size() == l.n, "composition chain broke for " + l.str());
    }
    for (int trial = 0; trial < 50; ++trial) {
        const Representation r = testutil::random_valid_rep(rng, 4);
        const MatrixAlgebra image = generated_matrix_algebra({r.X1, r.X2}, r.dim());
        const RadicalReport rad = algebra_radical(image);
        out.require(rad.quotient_commutative, "image algebra quotient not commutative");
        const std::size_t characters = rational_eigenvalues(char_poly(r.X2)).roots.size();
        out.require(rad.quotient_dim == characters,
                    "semisimple quotient dimension " + std::to_string(rad.quotient_dim) +
                        " != distinct characters " + std::to_string(characters));
    }
    return out;
}

// 10. The canonical submodules are closed; the line over im X1 never splits.
Outcome submodule_closure_and_rigidity() {
    Outcome out;
    testutil::Rng rng(9110);
    for (int trial = 0; trial < 100; ++trial) {
        const Representation r = testutil::random_valid_rep(rng, 5);
        const auto l = lemma24_subspaces(r);
        out.require(l.w_closed && l.u_closed, "canonical submodules not closed");
    }
    std::vector<CanonicalLabel> rank_one;
    const std::vector<Rational> grid = {Rational(0), Rational(1), Rational(-3) / 2};
    for (const Rational& a : grid) {
        for (const Rational& b : grid) {
            rank_one.push_back(dim2u(a, b));
            rank_one.push_back(t1u(a, b));
            rank_one.push_back(t3u(a, b));
        }
        rank_one.push_back(t2r(a));
        rank_one.push_back(t2s(a));
        rank_one.push_back(t2t(a, Rational(2), Rational(3)));
        if (a != 0) {
            rank_one.push_back(dim2v(a));
            rank_one.push_back(t4v_upper(a));
            rank_one.push_back(t4v_lower(a));
        }
        for (std::size_t n = 2; n <= 6; ++n) {
            rank_one.push_back(fam_u(a, n));
            if (a != 0) rank_one.push_back(fam_v(a, n));
        }
    }
    rank_one.push_back(t1y(Rational(1), Rational(2), Rational(3), Rational(-1), Rational(2)));
    rank_one.push_back(t3w(Rational(1), Rational(0), Rational(2), Rational(3), Rational(-1)));
    for (const CanonicalLabel& l : rank_one) {
        const Representation r = construct(l);
        Vec e1(r.dim(), Rational(0));
        e1[0] = 1;
        out.require(!line_splits_off(r, e1), "line split off in " + l.str());
    }
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        double budget;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "identity suite verifies exactly", 5.0, identity_suite},
        {2, "confluence and associativity", 10.0, confluence_associativity},
        {3, "Jordan-plane embedding is multiplicative", 5.0, embedding},
        {4, "right-module generator decomposition round-trips", 10.0, module_generators},
        {5, "dimension-2 classification round trip", 5.0, dim2_round_trip},
        {6, "dimension-3 classification round trip and criteria", 30.0,
         dim3_round_trip_and_criteria},
        {7, "T-decomposition recovers block structure", 10.0, t_decomposition},
        {8, "arbitrary-dimension families are indecomposable and distinct", 10.0,
         arbitrary_dimension_families},
        {9, "one-dimensional composition factors and commutative quotients", 10.0,
         simple_quotients},
        {10, "submodule closure and non-split lines", 10.0, submodule_closure_and_rigidity},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = secs < c.budget;
        const bool pass = out.ok && in_budget;
        if (!pass) ++failures;
        std::printf("criterion %2d [%s] %s (%.2fs, budget %.0fs)%s%s\n", c.id,
                    pass ? "PASS" : "FAIL", c.title, secs, c.budget,
                    out.detail.empty() ? "" : " -- ", out.detail.c_str());
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
