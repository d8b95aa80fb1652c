#include <catch2/catch_amalgamated.hpp>

#include "sjp/representation.hpp"
#include "test_labels.hpp"

using namespace sjp;

namespace {

Vec unit(std::size_t i, std::size_t n) {
    Vec v(n, Rational(0));
    v[i] = 1;
    return v;
}

}  // namespace

TEST_CASE("check_representation on the named examples") {
    const Mat e12 = Mat::from_rows({{0, 1}, {0, 0}});
    CHECK(check_representation(e12, Mat::from_rows({{1, 2}, {0, 1}})).valid);

    const ValidityReport bad = check_representation(e12, Mat::from_rows({{1, 0}, {1, 1}}));
    CHECK_FALSE(bad.valid);
    CHECK(bad.relation == "x2^2 x1 = x1 x2^2 + x1 x2 x1");
    CHECK(bad.value != 0);

    testutil::Rng rng(301);
    for (int i = 0; i < 10; ++i) {
        Mat x2(3, 3);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) x2(r, c) = rng.rational();
        CHECK(check_representation(Mat::zero(3, 3), x2).valid);
    }

    const ValidityReport nilfail = check_representation(Mat::identity(2), e12);
    CHECK_FALSE(nilfail.valid);
    CHECK(nilfail.relation == "x1^2 = 0");

    CHECK_THROWS_AS(check_representation(Mat::zero(2, 2), Mat::zero(3, 3)),
                    SizeMismatchError);
}

TEST_CASE("v0 is the kernel of X1") {
    const Representation u = construct(dim2u(Rational(2), Rational(3)));
    CHECK(v0_basis(u) == Subspace::span(2, {unit(0, 2)}));

    const Representation k3 = construct(jordan_chain(Rational(5), 3));
    CHECK(v0_basis(k3) == Subspace::full(3));

    const Representation f4 = construct(fam_u(Rational(1), 4));
    CHECK(v0_basis(f4) == Subspace::span(4, {unit(0, 4), unit(2, 4), unit(3, 4)}));
}

TEST_CASE("evaluate_in_rep") {
    const Representation v1 = construct(dim2v(Rational(1)));
    CHECK(evaluate_in_rep(PBWElement::gen_x1(), v1) == v1.X1);
    // x21 acts as X1 X2 + X2 X1, which cancels for X2 = diag(1,-1)
    CHECK(evaluate_in_rep(PBWElement::gen_s(), v1).is_zero());

    const Rational lam(7);
    const Representation jj{Mat::zero(2, 2),
                            Mat(2, 2, {lam, Rational(1), Rational(0), lam})};
    CHECK(evaluate_in_rep(PBWElement::gen_t(), jj) ==
          Mat(2, 2, {lam * lam, 2 * lam, Rational(0), lam * lam}));

    // scalars act as scalar matrices
    CHECK(evaluate_in_rep(PBWElement::scalar(Rational(3)), v1) ==
          Rational(3) * Mat::identity(2));
}

TEST_CASE("evaluate_in_rep is an algebra homomorphism") {
    testutil::Rng rng(302);
    const std::vector<Representation> reps = {
        construct(dim2u(Rational(1), Rational(2))),
        construct(dim2v(Rational(2))),
        construct(t1u(Rational(1), Rational(0))),
        construct(t2t(Rational(1), Rational(2), Rational(3))),
        construct(jordan_chain(Rational(-1) / 2, 3)),
        construct(fam_v(Rational(1), 4)),
    };
    auto random_elem = [&rng]() {
        PBWElement e;
        for (int t = 0; t < rng.int_in(1, 3); ++t)
            e.add({unsigned(rng.int_in(0, 1)), unsigned(rng.int_in(0, 1)),
                   unsigned(rng.int_in(0, 2))},
                  rng.rational(-3, 3));
        return e;
    };
    for (const Representation& r : reps)
        for (int trial = 0; trial < 10; ++trial) {
            const PBWElement u = random_elem(), v = random_elem();
            REQUIRE(evaluate_in_rep(u * v, r) ==
                    evaluate_in_rep(u, r) * evaluate_in_rep(v, r));
        }
}

TEST_CASE("evaluate_in_rep rejects invalid representations") {
    const Representation bad{Mat::identity(2), Mat::identity(2)};
    CHECK_THROWS_AS(evaluate_in_rep(PBWElement::gen_x1(), bad), RelationError);
}

TEST_CASE("submodule_generated") {
    const Representation u = construct(dim2u(Rational(3), Rational(1)));
    CHECK(submodule_generated(u, {unit(0, 2)}) == Subspace::span(2, {unit(0, 2)}));
    CHECK(submodule_generated(u, {unit(1, 2)}) == Subspace::full(2));

    // X1 = 0, X2 an upper Jordan block: e1 is the eigenvector line
    Mat j3(3, 3);
    for (std::size_t i = 0; i < 3; ++i) j3(i, i) = Rational(4);
    j3(0, 1) = 1;
    j3(1, 2) = 1;
    const Representation k3{Mat::zero(3, 3), j3};
    CHECK(submodule_generated(k3, {unit(0, 3)}) == Subspace::span(3, {unit(0, 3)}));
    CHECK(submodule_generated(k3, {unit(2, 3)}) == Subspace::full(3));
    CHECK(submodule_generated(k3, {}).is_zero());
}

TEST_CASE("lemma 2.4 subspaces") {
    SECTION("two-dimensional split form") {
        const Representation v = construct(dim2v(Rational(2)));
        const auto l = lemma24_subspaces(v);
        CHECK(l.w == Subspace::span(2, {unit(0, 2)}));
        CHECK(l.u == Subspace::span(2, {unit(0, 2)}));
        CHECK(l.w_closed);
        CHECK(l.u_closed);
    }
    SECTION("X1 = 0 with invertible X2") {
        const Representation r{Mat::zero(2, 2), Mat::from_rows({{1, 0}, {0, 2}})};
        const auto l = lemma24_subspaces(r);
        CHECK(l.w == Subspace::full(2));
        CHECK(l.u == Subspace::full(2));
        CHECK(l.w_closed);
        CHECK(l.u_closed);
    }
    SECTION("canonical theta-2 representative") {
        const auto l = lemma24_subspaces(construct(t2r(Rational(3))));
        CHECK(l.w_closed);
        CHECK(l.u_closed);
        CHECK((l.u.dim() >= l.w.dim()));
    }
    SECTION("simultaneous eigenvector lies in V0 and in ker S") {
        testutil::Rng rng(303);
        for (int trial = 0; trial < 25; ++trial) {
            const Representation r = testutil::random_valid_rep(rng, 5);
            const auto l = lemma24_subspaces(r);
            const Vec sv = r.S() * l.eigenvector;
            for (const Rational& x : sv) CHECK(x == 0);
            const Vec x1v = r.X1 * l.eigenvector;
            for (const Rational& x : x1v) CHECK(x == 0);
            const Vec tv = r.T() * l.eigenvector;
            for (std::size_t i = 0; i < tv.size(); ++i)
                CHECK(tv[i] == l.t_eigenvalue * l.eigenvector[i]);
        }
    }
}

TEST_CASE("lemma 2.4 reports nonsplit spectra instead of guessing") {
    // X1 = 0 makes ker S = V0 = V, and T = X2^2 has irrational eigenvalues
    const Representation r{Mat::zero(2, 2), Mat::from_rows({{1, 1}, {1, 0}})};
    CHECK_THROWS_AS(lemma24_subspaces(r), NonsplitError);
}

TEST_CASE("lemma 2.4 closure on random valid representations") {
    testutil::Rng rng(304);
    for (int trial = 0; trial < 100; ++trial) {
        const Representation r = testutil::random_valid_rep(rng, 5);
        const auto l = lemma24_subspaces(r);
        REQUIRE(l.w_closed);
        REQUIRE(l.u_closed);
    }
}

TEST_CASE("matrix forms of the commutation identities hold on random valid reps") {
    testutil::Rng rng(305);
    for (int trial = 0; trial < 100; ++trial) {
        const Representation r = testutil::random_valid_rep(rng, 5);
        const Mat s = r.S(), t = r.T();
        CHECK(s.pow(r.dim()).is_zero());            // S nilpotent
        CHECK(r.X2 * t == t * r.X2);                // X2 commutes with T
        CHECK(r.X1 * s == s * r.X1);                // X1 commutes with S
        CHECK(t * r.X1 == r.X1 * (t + s));          // T X1 = X1 (T + S)
        const Subspace v0 = v0_basis(r);            // S- and T-stability built in
        CHECK(is_invariant(s, v0));
        CHECK(is_invariant(t, v0));
    }
}

TEST_CASE("decompose_by_T") {
    testutil::Rng rng(306);
    SECTION("distinct T-eigenvalues split") {
        const Representation sum = direct_sum(
            {construct(dim2u(Rational(1), Rational(0))),
             construct(dim2u(Rational(2), Rational(0)))});
        const Representation r = conjugate(sum, rng.invertible(4));
        const auto parts = decompose_by_T(r);
        REQUIRE(parts.size() == 2);
        CHECK(parts[0].eigenvalue == 1);
        CHECK(parts[1].eigenvalue == 4);
        CHECK(parts[0].space.dim() == 2);
        CHECK(parts[1].space.dim() == 2);
    }
    SECTION("single eigenvalue keeps the module whole") {
        const auto parts = decompose_by_T(construct(dim2v(Rational(3))));
        REQUIRE(parts.size() == 1);
        CHECK(parts[0].eigenvalue == 9);

        const auto chain = decompose_by_T(construct(jordan_chain(Rational(2), 4)));
        REQUIRE(chain.size() == 1);
        CHECK(chain[0].eigenvalue == 4);
    }
    SECTION("nonsplit spectrum of T is a structured error") {
        const Representation r{Mat::zero(2, 2), Mat::from_rows({{1, 1}, {1, 0}})};
        CHECK_THROWS_AS(decompose_by_T(r), NonsplitError);
    }
    SECTION("summands are valid, fill the space, and have one T-eigenvalue each") {
        for (int trial = 0; trial < 30; ++trial) {
            const Representation r = testutil::random_valid_rep(rng, 6);
            const auto parts = decompose_by_T(r);
            std::size_t total = 0;
            Subspace sum(r.dim());
            for (const auto& p : parts) {
                total += p.space.dim();
                sum = sum + p.space;
                REQUIRE(check_representation(p.rep.X1, p.rep.X2).valid);
                const auto roots = rational_eigenvalues(char_poly(p.rep.T()));
                REQUIRE(roots.roots.size() == 1);
                REQUIRE(roots.roots.begin()->first == p.eigenvalue);
                REQUIRE(is_invariant(r.X1, p.space));
                REQUIRE(is_invariant(r.X2, p.space));
            }
            REQUIRE(total == r.dim());
            REQUIRE(sum == Subspace::full(r.dim()));
        }
    }
}

TEST_CASE("direct sums and conjugation preserve validity") {
    testutil::Rng rng(307);
    for (int trial = 0; trial < 20; ++trial) {
        const Representation r = testutil::random_valid_rep(rng, 6);
        REQUIRE(check_representation(r.X1, r.X2).valid);
    }
}
