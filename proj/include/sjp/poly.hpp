#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sjp/rational.hpp"

namespace sjp {

// Dense univariate polynomial over the rationals, coefficients lowest degree
// first. Invariant: the leading coefficient is nonzero unless the polynomial
// is zero (empty coefficient vector).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly{}; }
    static Poly constant(const Rational& r) { return Poly(std::vector<Rational>{r}); }
    // x - lambda
    static Poly linear_root(const Rational& lambda) {
        return Poly(std::vector<Rational>{-lambda, Rational(1)});
    }

    bool is_zero() const { return c_.empty(); }
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly{};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }

    // Synthetic division by (x - lambda); requires lambda to be a root.
    Poly deflate(const Rational& lambda) const {
        if (is_zero()) throw ConstraintError("deflating the zero polynomial");
        std::vector<Rational> q(c_.size() - 1, Rational(0));
        Rational carry(0);
        for (std::size_t i = c_.size(); i-- > 1;) {
            carry = c_[i] + carry * lambda;
            q[i - 1] = carry;
        }
        if (c_[0] + carry * lambda != 0)
            throw ConstraintError("deflation by a non-root");
        return Poly(std::move(q));
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!out.empty()) out += c_[i] > 0 ? " + " : " - ";
            else if (c_[i] < 0) out += "-";
            const Rational a = abs(c_[i]);
            const bool unit = (a == 1) && i > 0;
            if (!unit) out += to_string(a);
            if (i > 0) {
                if (!unit) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

namespace detail {

inline std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> divs;
    for (Integer i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            divs.push_back(i);
            if (i * i != n) divs.push_back(n / i);
        }
    }
    return divs;
}

}  // namespace detail

struct RationalRoots {
    std::map<Rational, std::size_t> roots;  // root -> multiplicity
    Poly remainder;                         // monic factor with no rational root
};

// All rational roots of a monic polynomial with multiplicities, plus the
// remaining monic factor without rational roots. The product of the linear
// factors times the remainder reproduces the input.
inline RationalRoots rational_eigenvalues(Poly p) {
    if (p.is_zero() || !p.is_monic())
        throw ConstraintError("rational_eigenvalues requires a monic polynomial");
    RationalRoots out;
    while (p.degree() >= 1 && p.coeff(0) == 0) {
        ++out.roots[Rational(0)];
        p = p.deflate(Rational(0));
    }
    if (p.degree() == 0) {
        out.remainder = p;
        return out;
    }
    // Clear denominators: candidate roots r/s need r | a0 and s | lead.
    Integer lcm_den(1);
    for (const Rational& a : p.coeffs()) lcm_den = lcm(lcm_den, rat_den(a));
    const Integer lead = lcm_den;  // p is monic
    const Integer a0 = rat_num(p.coeff(0) * Rational(lcm_den));
    std::set<Rational> candidates;
    for (const Integer& r : detail::positive_divisors(a0))
        for (const Integer& s : detail::positive_divisors(lead)) {
            if (gcd(r, s) != 1) continue;
            const Rational q = Rational(r) / Rational(s);
            candidates.insert(q);
            candidates.insert(-q);
        }
    for (const Rational& lambda : candidates) {
        while (p.degree() >= 1 && p.eval(lambda) == 0) {
            ++out.roots[lambda];
            p = p.deflate(lambda);
        }
    }
    out.remainder = p;
    return out;
}

}  // namespace sjp
