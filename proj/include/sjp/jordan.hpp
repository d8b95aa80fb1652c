#pragma once

#include <map>
#include <string>
#include <tuple>

#include "sjp/rational.hpp"

namespace sjp {

// Basis monomial y1^a y2^b of the Jordan plane (relation y1 y2 - y2 y1 = y2^2).
struct JordanMonomial {
    unsigned a = 0;
    unsigned b = 0;

    unsigned degree() const { return a + b; }

    friend bool operator==(const JordanMonomial& l, const JordanMonomial& r) {
        return l.a == r.a && l.b == r.b;
    }
    friend bool operator<(const JordanMonomial& l, const JordanMonomial& r) {
        return std::tuple(l.degree(), l.a) < std::tuple(r.degree(), r.a);
    }
};

class JordanElement {
public:
    JordanElement() = default;

    static JordanElement zero() { return {}; }
    static JordanElement monomial(const JordanMonomial& m, const Rational& coeff = Rational(1)) {
        JordanElement e;
        e.add(m, coeff);
        return e;
    }
    static JordanElement one() { return monomial({0, 0}); }
    static JordanElement gen_y1() { return monomial({1, 0}); }
    static JordanElement gen_y2() { return monomial({0, 1}); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<JordanMonomial, Rational>& terms() const { return terms_; }

    void add(const JordanMonomial& m, const Rational& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend bool operator==(const JordanElement& l, const JordanElement& r) {
        return l.terms_ == r.terms_;
    }
    friend JordanElement operator+(const JordanElement& l, const JordanElement& r) {
        JordanElement out = l;
        for (const auto& [m, c] : r.terms_) out.add(m, c);
        return out;
    }
    friend JordanElement operator-(const JordanElement& l, const JordanElement& r) {
        JordanElement out = l;
        for (const auto& [m, c] : r.terms_) out.add(m, -c);
        return out;
    }
    friend JordanElement operator*(const Rational& s, const JordanElement& e) {
        JordanElement out;
        for (const auto& [m, c] : e.terms_) out.add(m, s * c);
        return out;
    }
    friend JordanElement operator*(const JordanElement& l, const JordanElement& r);

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, coeff] : terms_) {
            if (out.empty())
                out += coeff > 0 ? "+" : "-";
            else
                out += coeff > 0 ? " + " : " - ";
            out += to_string(abs(coeff));
            out += "\xC2\xB7";
            std::string mono;
            auto append = [&mono](const char* g, unsigned e) {
                if (e == 0) return;
                if (!mono.empty()) mono += "\xC2\xB7";
                mono += g;
                if (e > 1) mono += "^" + std::to_string(e);
            };
            append("y1", m.a);
            append("y2", m.b);
            out += mono.empty() ? "1" : mono;
        }
        return out;
    }

private:
    std::map<JordanMonomial, Rational> terms_;
};

namespace jordandetail {

// Normal form of y2^b y1^a. From the defining relation, y2^b y1 =
// y1 y2^b - b y2^(b+1); recursion peels one y1 at a time.
inline JordanElement straighten(unsigned b, unsigned a) {
    if (a == 0) return JordanElement::monomial({0, b});
    JordanElement lower = straighten(b, a - 1);
    JordanElement out;
    for (const auto& [m, c] : lower.terms()) {
        // (y1^m.a y2^m.b) * y1 = y1^m.a (y1 y2^m.b - m.b y2^(m.b+1))
        out.add({m.a + 1, m.b}, c);
        out.add({m.a, m.b + 1}, -Rational(m.b) * c);
    }
    return out;
}

inline JordanElement mul_mono(const JordanMonomial& l, const JordanMonomial& r) {
    JordanElement mid = straighten(l.b, r.a);
    JordanElement out;
    for (const auto& [m, c] : mid.terms()) out.add({l.a + m.a, m.b + r.b}, c);
    return out;
}

}  // namespace jordandetail

inline JordanElement operator*(const JordanElement& l, const JordanElement& r) {
    JordanElement out;
    for (const auto& [ml, cl] : l.terms())
        for (const auto& [mr, cr] : r.terms()) {
            const JordanElement p = jordandetail::mul_mono(ml, mr);
            for (const auto& [m, c] : p.terms()) out.add(m, cl * cr * c);
        }
    return out;
}

inline JordanElement jordan_mul(const JordanElement& l, const JordanElement& r) { return l * r; }

}  // namespace sjp
