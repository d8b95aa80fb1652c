#pragma once

#include <string>
#include <vector>

#include "sjp/jordan.hpp"
#include "sjp/pbw.hpp"

namespace sjp {

struct IdentityCheck {
    std::string name;
    bool pass = true;
    std::string counterexample;  // first failing instance, empty when pass
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// The subalgebra generated by t = x2^2 and s = x21 is a copy of the Jordan
// plane; this maps y1^p y2^q to t^p s^q in normal form.
inline PBWElement jordan_to_super(const JordanElement& u) {
    PBWElement out;
    for (const auto& [m, c] : u.terms()) {
        const PBWElement img = mul_mono({0, 0, 2 * m.a}, {0, m.b, 0});
        for (const auto& [pm, pc] : img.terms()) out.add(pm, c * pc);
    }
    return out;
}

namespace identdetail {

inline Rational falling_factorial(unsigned n, unsigned j) {
    // n! / (n-j)!
    Rational r(1);
    for (unsigned i = 0; i < j; ++i) r *= Rational(n - i);
    return r;
}

inline PBWElement weighted_shift_sum(unsigned n, const PBWElement& z) {
    // sum_{j=0..n} n!/(n-j)! s^j z^(n-j)
    PBWElement sum;
    for (unsigned j = 0; j <= n; ++j) {
        const PBWElement sj = PBWElement::monomial({0, j, 0});
        sum = sum + falling_factorial(n, j) * (sj * z.pow(n - j));
    }
    return sum;
}

}  // namespace identdetail

// Verifies, by exact normal-form computation, the identities that hold in
// the super Jordan plane: the rewriting consequences of the defining
// relations, the commutator laws for s and t, the straightening laws for
// x21^b x2^c, and the shifted binomial laws for z = t - lambda. Each family
// reports its first counterexample, if any.
inline IdentityReport check_identities(unsigned bmax, unsigned cmax, unsigned nmax,
                                       const Rational& lambda) {
    if (bmax < 1 || cmax < 1 || nmax < 1)
        throw ConstraintError("identity check bounds must be >= 1");
    IdentityReport report;
    const PBWElement x1 = PBWElement::gen_x1();
    const PBWElement x2 = PBWElement::gen_x2();
    const PBWElement s = PBWElement::gen_s();
    const PBWElement t = PBWElement::gen_t();

    auto check = [&report](std::string name, bool ok, std::string witness = "") {
        report.checks.push_back({std::move(name), ok, ok ? "" : std::move(witness)});
    };

    check("x21*x1 == x1*x21", s * x1 == x1 * s);
    check("x2^2*x1 == x1*x2^2 + x1*x2*x1", t * x1 == x1 * t + x1 * x2 * x1);
    check("x21*x2^2 == (x2^2 - x21)*x21", s * t == (t - s) * s);
    check("x1*s == s*x1", x1 * s == s * x1);
    check("x2*t == t*x2", x2 * t == t * x2);
    check("t*x1 == x1*(t + s)", t * x1 == x1 * (t + s));

    {
        bool ok = true;
        std::string witness;
        for (unsigned n = 1; n <= nmax && ok; ++n) {
            const PBWElement sn = PBWElement::monomial({0, n, 0});
            const PBWElement sn1 = PBWElement::monomial({0, n + 1, 0});
            if (commutator(t, sn) != Rational(n) * sn1) {
                ok = false;
                witness = "n = " + std::to_string(n);
            }
        }
        check("[t, s^n] == n*s^(n+1)", ok, witness);
    }

    {
        bool ok_star = true, ok_heart = true;
        std::string w_star, w_heart;
        for (unsigned b = 1; b <= bmax; ++b)
            for (unsigned c = 1; c <= cmax; ++c) {
                const PBWElement lhs_star = PBWElement::monomial({0, b, c});
                const PBWElement rhs_star =
                    (x2 - Rational(b) * x1) * PBWElement::monomial({0, b, c - 1});
                if (ok_star && lhs_star != rhs_star) {
                    ok_star = false;
                    w_star = "b = " + std::to_string(b) + ", c = " + std::to_string(c);
                }
                const PBWElement lhs_heart = PBWElement::monomial({1, b, c});
                const PBWElement rhs_heart = x1 * x2 * PBWElement::monomial({0, b, c - 1});
                if (ok_heart && lhs_heart != rhs_heart) {
                    ok_heart = false;
                    w_heart = "b = " + std::to_string(b) + ", c = " + std::to_string(c);
                }
            }
        check("x21^b*x2^c == (x2 - b*x1)*x21^b*x2^(c-1)", ok_star, w_star);
        check("x1*x21^b*x2^c == x1*x2*x21^b*x2^(c-1)", ok_heart, w_heart);
    }

    {
        const PBWElement z = t - lambda * PBWElement::one();
        bool ok_a = true, ok_b = true;
        std::string w_a, w_b;
        for (unsigned n = 1; n <= nmax; ++n) {
            const PBWElement zn = z.pow(n);
            const PBWElement sum = identdetail::weighted_shift_sum(n, z);
            if (ok_a && zn * x1 != x1 * sum) {
                ok_a = false;
                w_a = "n = " + std::to_string(n) + ", lambda = " + to_string(lambda);
            }
            if (ok_b && zn * x1 * x2 != x1 * x2 * sum) {
                ok_b = false;
                w_b = "n = " + std::to_string(n) + ", lambda = " + to_string(lambda);
            }
        }
        check("z^n*x1 == x1*sum_j n!/(n-j)!*s^j*z^(n-j)  [z = t - lambda]", ok_a, w_a);
        check("z^n*x1*x2 == x1*x2*sum_j n!/(n-j)!*s^j*z^(n-j)  [z = t - lambda]", ok_b, w_b);
    }

    return report;
}

// Multiplicativity of y1 -> t, y2 -> s on all pairs of monomials s^b t^k with
// b + k <= dmax, comparing both normal-form engines.
inline IdentityReport embedding_check(unsigned dmax) {
    if (dmax < 2) throw ConstraintError("embedding check needs dmax >= 2");
    IdentityReport report;
    bool ok = true;
    std::string witness;
    for (unsigned b = 0; b <= dmax && ok; ++b)
        for (unsigned k = 0; b + k <= dmax && ok; ++k)
            for (unsigned b2 = 0; b2 <= dmax && ok; ++b2)
                for (unsigned k2 = 0; b2 + k2 <= dmax && ok; ++k2) {
                    // s^b t^k is the basis monomial (0, b, 2k) of the big algebra
                    const PBWElement lhs =
                        PBWElement::monomial({0, b, 2 * k}) * PBWElement::monomial({0, b2, 2 * k2});
                    const JordanElement prod =
                        JordanElement::monomial({0, b}) * JordanElement::monomial({k, 0}) *
                        JordanElement::monomial({0, b2}) * JordanElement::monomial({k2, 0});
                    const PBWElement rhs = jordan_to_super(prod);
                    if (lhs != rhs) {
                        ok = false;
                        witness = "s^" + std::to_string(b) + " t^" + std::to_string(k) + " * s^" +
                                  std::to_string(b2) + " t^" + std::to_string(k2);
                    }
                }
    report.checks.push_back(
        {"nf(s^b t^k * s^b' t^k') matches the Jordan-plane product image", ok,
         ok ? "" : witness});
    return report;
}

// Expression of a basis monomial as 1*A + x1*B + x2*C + x1x2*D with right
// coefficients in the subalgebra <t, s>, written in the Jordan-plane basis.
struct ModuleGeneratorCoeffs {
    JordanElement one, x1, x2, x1x2;
};

inline ModuleGeneratorCoeffs right_module_generators(const PBWMonomial& m) {
    ModuleGeneratorCoeffs out;
    const unsigned k = m.c / 2;
    // alpha = y2^b y1^k written in the y1^a y2^b basis
    const JordanElement alpha =
        JordanElement::monomial({0, m.b}) * JordanElement::monomial({k, 0});
    if (m.c % 2 == 0) {
        (m.a ? out.x1 : out.one) = alpha;
    } else if (m.a) {
        out.x1x2 = alpha;  // x1 x21^b x2^(2k+1) = x1 x2 * s^b t^k
    } else {
        // x21^b x2^(2k+1) = (x2 - b x1) s^b t^k
        out.x2 = alpha;
        out.x1 = -Rational(m.b) * alpha;
    }
    return out;
}

// Re-multiply the four pieces inside the big algebra; must reproduce m.
inline PBWElement recompose_module_generators(const ModuleGeneratorCoeffs& d) {
    PBWElement out = jordan_to_super(d.one);
    out = out + PBWElement::gen_x1() * jordan_to_super(d.x1);
    out = out + PBWElement::gen_x2() * jordan_to_super(d.x2);
    out = out + PBWElement::gen_x1() * PBWElement::gen_x2() * jordan_to_super(d.x1x2);
    return out;
}

}  // namespace sjp
