#include <catch2/catch_amalgamated.hpp>

#include "sjp/identities.hpp"

using namespace sjp;

TEST_CASE("full identity suite at the default bounds") {
    for (const Rational& lambda : {Rational(0), Rational(1), Rational(-3) / 2}) {
        const IdentityReport r = check_identities(6, 6, 8, lambda);
        for (const auto& c : r.checks) {
            INFO(c.name << "  " << c.counterexample);
            CHECK(c.pass);
        }
        CHECK(r.all_pass());
    }
}

TEST_CASE("specific identity instances") {
    const PBWElement s = PBWElement::gen_s();
    const PBWElement t = PBWElement::gen_t();

    // [t, s^2] = 2 s^3
    CHECK(commutator(t, s * s) == Rational(2) * (s * s * s));

    // x1 x21^2 x2^3 = x1 x2 * x21^2 x2^2
    CHECK(PBWElement::monomial({1, 2, 3}) ==
          PBWElement::gen_x1() * PBWElement::gen_x2() * PBWElement::monomial({0, 2, 2}));

    // z^2 x1 = x1 (z^2 + 2 s z + 2 s^2) at lambda = 1
    const PBWElement z = t - PBWElement::one();
    CHECK(z * z * PBWElement::gen_x1() ==
          PBWElement::gen_x1() *
              (z * z + Rational(2) * (s * z) + Rational(2) * (s * s)));
}

TEST_CASE("identity bounds are validated") {
    CHECK_THROWS_AS(check_identities(0, 6, 8, Rational(0)), ConstraintError);
    CHECK_THROWS_AS(embedding_check(1), ConstraintError);
}

TEST_CASE("subalgebra embedding is multiplicative") {
    const IdentityReport r = embedding_check(8);
    REQUIRE(r.checks.size() == 1);
    INFO(r.checks[0].counterexample);
    CHECK(r.checks[0].pass);
}

TEST_CASE("embedding on the named pairs") {
    // t * s in the big algebra matches the image of y1 * y2
    CHECK(PBWElement::gen_t() * PBWElement::gen_s() ==
          jordan_to_super(JordanElement::gen_y1() * JordanElement::gen_y2()));
    CHECK(PBWElement::gen_s() * PBWElement::gen_s() ==
          jordan_to_super(JordanElement::gen_y2() * JordanElement::gen_y2()));
    CHECK(PBWElement::gen_t() * PBWElement::gen_t() * PBWElement::gen_s() ==
          jordan_to_super(JordanElement::gen_y1() * JordanElement::gen_y1() *
                          JordanElement::gen_y2()));
}

TEST_CASE("right module generators on the named examples") {
    SECTION("x1 x21^b decomposes as x1 * y2^b") {
        for (unsigned b = 0; b <= 4; ++b) {
            const auto d = right_module_generators({1, b, 0});
            CHECK(d.x1 == JordanElement::monomial({0, b}));
            CHECK(d.one.is_zero());
            CHECK(d.x2.is_zero());
            CHECK(d.x1x2.is_zero());
        }
    }
    SECTION("x21^b x2^(2k) decomposes as 1 * y2^b y1^k") {
        const auto d = right_module_generators({0, 2, 4});
        CHECK(d.one == JordanElement::monomial({0, 2}) * JordanElement::monomial({2, 0}));
        CHECK(d.x1.is_zero());
    }
    SECTION("x21 x2 decomposes as x2*y2 - x1*y2") {
        const auto d = right_module_generators({0, 1, 1});
        CHECK(d.x2 == JordanElement::gen_y2());
        CHECK(d.x1 == Rational(-1) * JordanElement::gen_y2());
        CHECK(d.one.is_zero());
        CHECK(d.x1x2.is_zero());
    }
}

TEST_CASE("right module generators round-trip on every monomial of degree <= 8") {
    for (unsigned a = 0; a <= 1; ++a)
        for (unsigned b = 0; 2 * b + a <= 8; ++b)
            for (unsigned c = 0; a + 2 * b + c <= 8; ++c) {
                const PBWMonomial m{a, b, c};
                const auto d = right_module_generators(m);
                INFO("a=" << a << " b=" << b << " c=" << c);
                REQUIRE(recompose_module_generators(d) == PBWElement::monomial(m));
            }
}
