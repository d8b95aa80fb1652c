#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "sjp/rational.hpp"

namespace sjp {

// Basis monomial x1^a x21^b x2^c with a in {0,1}. The grading puts
// deg x1 = deg x2 = 1, so deg x21 = 2.
struct PBWMonomial {
    unsigned a = 0;  // 0 or 1
    unsigned b = 0;
    unsigned c = 0;

    unsigned degree() const { return a + 2 * b + c; }

    friend bool operator==(const PBWMonomial& l, const PBWMonomial& r) {
        return l.a == r.a && l.b == r.b && l.c == r.c;
    }
    // Deterministic term order: by (degree, a, b, c).
    friend bool operator<(const PBWMonomial& l, const PBWMonomial& r) {
        return std::tuple(l.degree(), l.a, l.b, l.c) < std::tuple(r.degree(), r.a, r.b, r.c);
    }
};

// Element of the super Jordan plane in its monomial basis; no zero
// coefficients are ever stored, so equality is map equality.
class PBWElement {
public:
    PBWElement() = default;

    static PBWElement zero() { return {}; }
    static PBWElement monomial(const PBWMonomial& m, const Rational& coeff = Rational(1)) {
        PBWElement e;
        e.add(m, coeff);
        return e;
    }
    static PBWElement scalar(const Rational& r) { return monomial({0, 0, 0}, r); }
    static PBWElement one() { return scalar(Rational(1)); }
    static PBWElement gen_x1() { return monomial({1, 0, 0}); }
    static PBWElement gen_x2() { return monomial({0, 0, 1}); }
    static PBWElement gen_s() { return monomial({0, 1, 0}); }   // x21
    static PBWElement gen_t() { return monomial({0, 0, 2}); }   // x2^2

    bool is_zero() const { return terms_.empty(); }
    const std::map<PBWMonomial, Rational>& terms() const { return terms_; }

    void add(const PBWMonomial& m, const Rational& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend bool operator==(const PBWElement& l, const PBWElement& r) {
        return l.terms_ == r.terms_;
    }
    friend PBWElement operator+(const PBWElement& l, const PBWElement& r) {
        PBWElement out = l;
        for (const auto& [m, c] : r.terms_) out.add(m, c);
        return out;
    }
    friend PBWElement operator-(const PBWElement& l, const PBWElement& r) {
        PBWElement out = l;
        for (const auto& [m, c] : r.terms_) out.add(m, -c);
        return out;
    }
    friend PBWElement operator*(const Rational& s, const PBWElement& e) {
        PBWElement out;
        for (const auto& [m, c] : e.terms_) out.add(m, s * c);
        return out;
    }
    friend PBWElement operator-(const PBWElement& e) { return Rational(-1) * e; }
    friend PBWElement operator*(const PBWElement& l, const PBWElement& r);

    PBWElement pow(unsigned k) const {
        PBWElement acc = one();
        for (unsigned i = 0; i < k; ++i) acc = acc * *this;
        return acc;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const unsigned d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }
    unsigned degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

    // Deterministic textual form, e.g. "+1·x21 - 1·x1·x2"; the zero element
    // prints as "0".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, coeff] : terms_) {
            if (out.empty())
                out += coeff > 0 ? "+" : "-";
            else
                out += coeff > 0 ? " + " : " - ";
            out += to_string(abs(coeff));
            out += "\xC2\xB7";  // middle dot
            std::string mono;
            auto append = [&mono](const char* g, unsigned e) {
                if (e == 0) return;
                if (!mono.empty()) mono += "\xC2\xB7";
                mono += g;
                if (e > 1) mono += "^" + std::to_string(e);
            };
            append("x1", m.a);
            append("x21", m.b);
            append("x2", m.c);
            out += mono.empty() ? "1" : mono;
        }
        return out;
    }

private:
    std::map<PBWMonomial, Rational> terms_;
};

// Word in the generators x1, x2 (raw input to reduction).
enum class Gen : std::uint8_t { x1 = 0, x2 = 1 };
using GenWord = std::vector<Gen>;

enum class ReduceOrder { LeftToRight, RightToLeft };

namespace pbwdetail {

// Extended alphabet in normal order x1 < x21 < x2.
enum class Letter : std::uint8_t { x1 = 0, x21 = 1, x2 = 2 };
using Word = std::vector<Letter>;

struct Replacement {
    Rational coeff;
    std::vector<Letter> letters;
};

// The rewriting system. Each rule rewrites an adjacent pair and strictly
// decreases (rank-sum, inversion count) lexicographically, so any strategy
// terminates; order-independence is established by the confluence tests.
//
//   x1 x1   -> 0
//   x2 x1   -> x21 - x1 x2                (definition of x21)
//   x21 x1  -> x1 x21
//   x2 x21  -> x21 x2 + x1 x21
inline bool reducible(Letter l, Letter r) {
    if (l == Letter::x1) return r == Letter::x1;
    if (l == Letter::x21) return r == Letter::x1;
    return r == Letter::x1 || r == Letter::x21;  // l == x2
}

inline std::vector<Replacement> rewrite(Letter l, Letter r) {
    if (l == Letter::x1 && r == Letter::x1) return {};
    if (l == Letter::x2 && r == Letter::x1)
        return {{Rational(1), {Letter::x21}}, {Rational(-1), {Letter::x1, Letter::x2}}};
    if (l == Letter::x21 && r == Letter::x1)
        return {{Rational(1), {Letter::x1, Letter::x21}}};
    if (l == Letter::x2 && r == Letter::x21)
        return {{Rational(1), {Letter::x21, Letter::x2}}, {Rational(1), {Letter::x1, Letter::x21}}};
    throw ConstraintError("rewrite applied to a normal pair");
}

// Word ordered by the termination measure: every rewrite strictly decreases
// (rank sum, inversion count) lexicographically. Processing the maximal
// pending word first therefore visits each distinct word at most once.
struct MeasuredWord {
    unsigned ranksum = 0;
    unsigned inversions = 0;
    Word w;

    explicit MeasuredWord(Word word) : w(std::move(word)) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            ranksum += static_cast<unsigned>(w[i]);
            for (std::size_t j = i + 1; j < w.size(); ++j)
                if (static_cast<unsigned>(w[i]) > static_cast<unsigned>(w[j])) ++inversions;
        }
    }
    friend bool operator<(const MeasuredWord& a, const MeasuredWord& b) {
        return std::tuple(a.ranksum, a.inversions, a.w) < std::tuple(b.ranksum, b.inversions, b.w);
    }
};

inline PBWElement reduce(std::map<Word, Rational> initial, ReduceOrder order) {
    std::map<MeasuredWord, Rational> pending;
    for (auto& [w, c] : initial) pending.emplace(MeasuredWord(w), c);
    PBWElement result;
    while (!pending.empty()) {
        auto node = pending.extract(std::prev(pending.end()));
        const Word& w = node.key().w;
        const Rational& coeff = node.mapped();
        std::size_t pos = w.size();  // first reducible pair per strategy
        if (order == ReduceOrder::LeftToRight) {
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (reducible(w[i], w[i + 1])) {
                    pos = i;
                    break;
                }
        } else {
            for (std::size_t i = w.size(); i-- > 1;)
                if (reducible(w[i - 1], w[i])) {
                    pos = i - 1;
                    break;
                }
        }
        if (pos == w.size()) {
            PBWMonomial m;
            for (Letter l : w) {
                if (l == Letter::x1) ++m.a;
                else if (l == Letter::x21) ++m.b;
                else ++m.c;
            }
            result.add(m, coeff);
            continue;
        }
        for (const Replacement& rep : rewrite(w[pos], w[pos + 1])) {
            Word next;
            next.reserve(w.size() + rep.letters.size());
            next.insert(next.end(), w.begin(), w.begin() + pos);
            next.insert(next.end(), rep.letters.begin(), rep.letters.end());
            next.insert(next.end(), w.begin() + pos + 2, w.end());
            const Rational c = coeff * rep.coeff;
            auto [it, inserted] = pending.emplace(MeasuredWord(std::move(next)), c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) pending.erase(it);
            }
        }
    }
    return result;
}

}  // namespace pbwdetail

// Image of a generator word in the monomial basis. The result is independent
// of the reduction strategy; both strategies are exposed for the confluence
// property tests.
inline PBWElement reduce_word(const GenWord& w, ReduceOrder order = ReduceOrder::LeftToRight) {
    pbwdetail::Word word;
    word.reserve(w.size());
    for (Gen g : w)
        word.push_back(g == Gen::x1 ? pbwdetail::Letter::x1 : pbwdetail::Letter::x2);
    std::map<pbwdetail::Word, Rational> pending;
    pending.emplace(std::move(word), Rational(1));
    return pbwdetail::reduce(std::move(pending), order);
}

namespace pbwdetail {

// Left-multiply a normal form by x1^a x21^b; trivial because x21 commutes
// with x1 and x1^2 = 0.
inline PBWElement prefix(unsigned a, unsigned b, const PBWElement& e) {
    PBWElement out;
    for (const auto& [m, c] : e.terms()) {
        if (a && m.a) continue;
        out.add({a + m.a, b + m.b, m.c}, c);
    }
    return out;
}

// Right-multiply a normal form by x2^k.
inline PBWElement append_x2(const PBWElement& e, unsigned k) {
    PBWElement out;
    for (const auto& [m, c] : e.terms()) out.add({m.a, m.b, m.c + k}, c);
    return out;
}

PBWElement x2pow_x1(unsigned c);

// g(c, b) = nf(x2^c x21^b). From x2 x21^b = x21^b x2 + b x1 x21^b:
//   g(c, b) = g(c-1, b) x2 + b * (x2^(c-1) x1) x21^b.
inline PBWElement x2pow_x21pow(unsigned c, unsigned b) {
    if (c == 0) return PBWElement::monomial({0, b, 0});
    if (b == 0) return PBWElement::monomial({0, 0, c});
    thread_local std::map<std::pair<unsigned, unsigned>, PBWElement> cache;
    if (auto it = cache.find({c, b}); it != cache.end()) return it->second;
    PBWElement out = append_x2(x2pow_x21pow(c - 1, b), 1);
    const PBWElement h = x2pow_x1(c - 1);
    for (const auto& [m, coeff] : h.terms())
        out = out + (Rational(b) * coeff) * prefix(m.a, m.b, x2pow_x21pow(m.c, b));
    cache.emplace(std::make_pair(c, b), out);
    return out;
}

// h(c) = nf(x2^c x1). From x2 x1 = x21 - x1 x2:
//   h(c) = g(c-1, 1) - h(c-1) x2.
inline PBWElement x2pow_x1(unsigned c) {
    if (c == 0) return PBWElement::gen_x1();
    thread_local std::map<unsigned, PBWElement> cache;
    if (auto it = cache.find(c); it != cache.end()) return it->second;
    const PBWElement out = x2pow_x21pow(c - 1, 1) - append_x2(x2pow_x1(c - 1), 1);
    cache.emplace(c, out);
    return out;
}

}  // namespace pbwdetail

// Product of two basis monomials in normal form. Only the x2-tail of the
// left factor interacts with the right factor; that core product is built
// from the memoized straightening recursions above.
inline PBWElement mul_mono(const PBWMonomial& l, const PBWMonomial& r) {
    // Left factor ends in x21 powers: the whole product collapses directly.
    if (l.c == 0) {
        if (l.a && r.a) return PBWElement::zero();
        return PBWElement::monomial({l.a + r.a, l.b + r.b, r.c});
    }
    // core = x2^{l.c} * x1^{r.a} x21^{r.b}
    PBWElement core;
    if (r.a == 0) {
        core = pbwdetail::x2pow_x21pow(l.c, r.b);
    } else {
        const PBWElement h = pbwdetail::x2pow_x1(l.c);
        for (const auto& [m, coeff] : h.terms())
            core = core + coeff * pbwdetail::prefix(m.a, m.b, pbwdetail::x2pow_x21pow(m.c, r.b));
    }
    return pbwdetail::append_x2(pbwdetail::prefix(l.a, l.b, core), r.c);
}

inline PBWElement operator*(const PBWElement& l, const PBWElement& r) {
    PBWElement out;
    for (const auto& [ml, cl] : l.terms())
        for (const auto& [mr, cr] : r.terms()) {
            const PBWElement p = mul_mono(ml, mr);
            for (const auto& [m, c] : p.terms()) out.add(m, cl * cr * c);
        }
    return out;
}

// Commutator [u, v] = uv - vu.
inline PBWElement commutator(const PBWElement& u, const PBWElement& v) {
    return u * v - v * u;
}

}  // namespace sjp
