#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sjp/classify.hpp"
#include "sjp/identities.hpp"

namespace sjp {

using OrderedJson = nlohmann::ordered_json;

// Line-oriented module description:
//
//   dim 2
//   X1: 0 1 ; 0 0
//   X2: 2 3 ; 0 2
//
// Rows are separated by ";", entries by whitespace, each entry a rational
// "p/q" or "p". Blank lines are ignored.
struct InputDocument {
    std::size_t dim = 0;
    Mat x1, x2;
};

namespace iodetail {

struct Line {
    std::size_t number;  // 1-based
    std::string text;
};

inline std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        lines.push_back({number, line});
    }
    return lines;
}

inline Mat parse_matrix(const Line& line, std::string_view header, std::size_t dim) {
    const std::string& s = line.text;
    const auto where = [&line](std::size_t col) {
        return "line " + std::to_string(line.number) + ", column " + std::to_string(col + 1);
    };
    std::size_t pos = s.find_first_not_of(" \t");
    if (s.compare(pos, header.size(), header) != 0)
        throw ParseError(where(pos) + ": expected \"" + std::string(header) + "\"");
    pos += header.size();
    std::vector<std::vector<Rational>> rows(1);
    std::size_t col_of_row_start = pos;
    while (pos < s.size()) {
        const char c = s[pos];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++pos;
            continue;
        }
        if (c == ';') {
            rows.emplace_back();
            ++pos;
            col_of_row_start = pos;
            continue;
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != ' ' && s[end] != '\t' && s[end] != ';' &&
               s[end] != '\r')
            ++end;
        try {
            rows.back().push_back(parse_rational(std::string_view(s).substr(pos, end - pos)));
        } catch (const ParseError& e) {
            throw ParseError(where(pos) + ": " + e.detail());
        }
        pos = end;
    }
    if (rows.size() != dim)
        throw ParseError(where(col_of_row_start) + ": expected " + std::to_string(dim) +
                         " rows, got " + std::to_string(rows.size()));
    Mat m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (rows[i].size() != dim)
            throw ParseError("line " + std::to_string(line.number) + ": row " +
                             std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                             " entries, expected " + std::to_string(dim));
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

}  // namespace iodetail

inline InputDocument parse_input(const std::string& text) {
    const auto lines = iodetail::significant_lines(text);
    if (lines.size() != 3)
        throw ParseError("expected exactly three lines: dim, X1 and X2 (got " +
                         std::to_string(lines.size()) + ")");
    // dim line
    {
        std::istringstream in(lines[0].text);
        std::string kw;
        long d = -1;
        in >> kw >> d;
        std::string trailing;
        if (kw != "dim" || d < 0 || (in >> trailing))
            throw ParseError("line " + std::to_string(lines[0].number) +
                             ": expected \"dim <n>\"");
        if (d == 0)
            throw ParseError("line " + std::to_string(lines[0].number) +
                             ": dimension must be positive");
        InputDocument doc;
        doc.dim = static_cast<std::size_t>(d);
        doc.x1 = iodetail::parse_matrix(lines[1], "X1:", doc.dim);
        doc.x2 = iodetail::parse_matrix(lines[2], "X2:", doc.dim);
        return doc;
    }
}

inline std::string matrix_text(const Mat& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out += " ; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += to_string(m(i, j));
        }
    }
    return out;
}

inline OrderedJson matrix_json(const Mat& m) {
    OrderedJson rows = OrderedJson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        OrderedJson row = OrderedJson::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Deterministic command result: a human-readable text block and the same
// payload as a machine-readable object with stable key order.
struct Report {
    std::string command;
    int exit_code = 0;
    std::string text;
    OrderedJson json;

    std::string render(bool as_json) const {
        return as_json ? json.dump(2) + "\n" : text;
    }
};

inline Representation doc_representation(const InputDocument& doc) {
    return make_representation(doc.x1, doc.x2);
}

inline Report cmd_check(const InputDocument& doc) {
    Report r;
    r.command = "check";
    r.json["command"] = "check";
    const ValidityReport v = check_representation(doc.x1, doc.x2);
    if (v.valid) {
        r.text = "command: check\nverdict: valid\ndim: " + std::to_string(doc.dim) + "\n";
        r.json["verdict"] = "valid";
        r.json["dim"] = doc.dim;
    } else {
        r.exit_code = 3;
        r.text = "command: check\nverdict: invalid\nrelation: " + v.relation + "\nwitness: entry (" +
                 std::to_string(v.row + 1) + "," + std::to_string(v.col + 1) + ") = " +
                 to_string(v.value) + "\n";
        r.json["verdict"] = "invalid";
        r.json["relation"] = v.relation;
        r.json["witness"] = {{"row", v.row + 1}, {"col", v.col + 1}, {"value", to_string(v.value)}};
    }
    return r;
}

inline Report cmd_classify(const InputDocument& doc) {
    Report r;
    r.command = "classify";
    r.json["command"] = "classify";
    const Classification c = classify(doc_representation(doc));
    if (!c.decomposable) {
        r.text = "command: classify\nverdict: indecomposable\nlabel: " +
                 c.labels.front().str() + "\n";
        r.json["verdict"] = "indecomposable";
        r.json["label"] = c.labels.front().str();
    } else {
        r.text = "command: classify\nverdict: decomposable\nsummands: " +
                 std::to_string(c.labels.size()) + "\n";
        OrderedJson labels = OrderedJson::array();
        for (std::size_t i = 0; i < c.labels.size(); ++i) {
            r.text += "label " + std::to_string(i + 1) + ": " + c.labels[i].str() + "\n";
            labels.push_back(c.labels[i].str());
        }
        r.json["verdict"] = "decomposable";
        r.json["labels"] = std::move(labels);
    }
    return r;
}

inline Report cmd_decompose(const InputDocument& doc) {
    Report r;
    r.command = "decompose";
    r.json["command"] = "decompose";
    const auto parts = full_decompose(doc_representation(doc));
    r.text = "command: decompose\nsummands: " + std::to_string(parts.size()) + "\n";
    r.json["summands"] = parts.size();
    OrderedJson jparts = OrderedJson::array();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& p = parts[i];
        const auto roots = rational_eigenvalues(char_poly(p.rep.T())).roots;
        const std::string teig = to_string(roots.begin()->first);
        std::string basis_text;
        for (std::size_t v = 0; v < p.space.basis().size(); ++v) {
            if (v) basis_text += " ; ";
            for (std::size_t j = 0; j < p.space.ambient(); ++j) {
                if (j) basis_text += ' ';
                basis_text += to_string(p.space.basis()[v][j]);
            }
        }
        r.text += "summand " + std::to_string(i + 1) + ":\n";
        r.text += "  dim: " + std::to_string(p.rep.dim()) + "\n";
        r.text += "  T-eigenvalue: " + teig + "\n";
        r.text += "  basis: " + basis_text + "\n";
        r.text += "  X1: " + matrix_text(p.rep.X1) + "\n";
        r.text += "  X2: " + matrix_text(p.rep.X2) + "\n";
        OrderedJson jp;
        jp["dim"] = p.rep.dim();
        jp["T-eigenvalue"] = teig;
        OrderedJson basis = OrderedJson::array();
        for (const Vec& v : p.space.basis()) {
            OrderedJson jv = OrderedJson::array();
            for (const Rational& x : v) jv.push_back(to_string(x));
            basis.push_back(std::move(jv));
        }
        jp["basis"] = std::move(basis);
        jp["X1"] = matrix_json(p.rep.X1);
        jp["X2"] = matrix_json(p.rep.X2);
        jparts.push_back(std::move(jp));
    }
    r.json["parts"] = std::move(jparts);
    return r;
}

inline Report cmd_iso(const InputDocument& a, const InputDocument& b) {
    Report r;
    r.command = "iso";
    r.json["command"] = "iso";
    const Representation ra = doc_representation(a);
    const Representation rb = doc_representation(b);
    const HomBasis hom = hom_space(ra, rb);
    const bool iso = is_isomorphic(ra, rb);
    r.text = std::string("command: iso\nverdict: ") +
             (iso ? "isomorphic" : "not isomorphic") + "\nhom-dimension: " +
             std::to_string(hom.dim()) + "\n";
    r.json["verdict"] = iso ? "isomorphic" : "not isomorphic";
    r.json["hom-dimension"] = hom.dim();
    return r;
}

inline Report cmd_construct(const std::string& label_text) {
    Report r;
    r.command = "construct";
    r.json["command"] = "construct";
    const CanonicalLabel label = parse_label(label_text);
    const Representation rep = construct(label);
    r.text = "command: construct\nlabel: " + label.str() + "\ndim " +
             std::to_string(rep.dim()) + "\nX1: " + matrix_text(rep.X1) + "\nX2: " +
             matrix_text(rep.X2) + "\n";
    r.json["label"] = label.str();
    r.json["dim"] = rep.dim();
    r.json["X1"] = matrix_json(rep.X1);
    r.json["X2"] = matrix_json(rep.X2);
    return r;
}

inline Report cmd_nf(const std::string& word_text) {
    Report r;
    r.command = "nf";
    r.json["command"] = "nf";
    GenWord word;
    std::istringstream in(word_text);
    std::string token;
    while (in >> token) {
        if (token == "x1")
            word.push_back(Gen::x1);
        else if (token == "x2")
            word.push_back(Gen::x2);
        else
            throw ParseError("unknown generator \"" + token + "\" (expected x1 or x2)");
    }
    const PBWElement nf = reduce_word(word);
    r.text = "command: nf\ninput: " + word_text + "\nnormal-form: " + nf.str() + "\n";
    r.json["input"] = word_text;
    r.json["normal-form"] = nf.str();
    return r;
}

namespace iodetail {

// Fixed classification round-trip samples for the self test.
inline bool selftest_round_trips(std::string& text, OrderedJson& json) {
    const std::vector<CanonicalLabel> labels = {
        dim2u(Rational(2), Rational(3)),
        dim2v(Rational(-1) / 2),
        jordan_chain(Rational(3), 2),
        t1y(Rational(1), Rational(2), Rational(-1), Rational(0), Rational(2)),
        t2t(Rational(0), Rational(3), Rational(2)),
        t3w(Rational(2), Rational(1), Rational(-1), Rational(3), Rational(1)),
        t4v_upper(Rational(3) / 2),
        t4v_lower(Rational(-2)),
    };
    const std::vector<Mat> conj2 = {
        Mat::from_rows({{1, 1}, {1, 2}}),
        Mat::from_rows({{2, -1}, {1, 0}}),
    };
    const std::vector<Mat> conj3 = {
        Mat::from_rows({{1, 0, 1}, {2, 1, 0}, {0, 1, 1}}),
        Mat::from_rows({{0, 1, 0}, {1, 0, 2}, {-1, 1, 1}}),
    };
    bool all = true;
    OrderedJson items = OrderedJson::array();
    for (const CanonicalLabel& l : labels) {
        const auto& conjs = l.n == 2 ? conj2 : conj3;
        for (const Mat& p : conjs) {
            const Classification c = classify(conjugate(construct(l), p));
            const bool ok = !c.decomposable && iso_criterion(l, c.labels.front());
            all = all && ok;
            text += "round-trip: " + l.str() + " -> " + c.labels.front().str() +
                    (ok ? "  ok\n" : "  FAIL\n");
            items.push_back({{"label", l.str()},
                             {"result", c.labels.front().str()},
                             {"ok", ok}});
        }
    }
    json["round-trips"] = std::move(items);
    return all;
}

}  // namespace iodetail

inline Report cmd_selftest(unsigned bmax = 6, unsigned cmax = 6, unsigned nmax = 8) {
    Report r;
    r.command = "selftest";
    r.json["command"] = "selftest";
    r.json["bounds"] = {{"bmax", bmax}, {"cmax", cmax}, {"nmax", nmax}};
    r.text = "command: selftest\nbounds: bmax=" + std::to_string(bmax) +
             " cmax=" + std::to_string(cmax) + " nmax=" + std::to_string(nmax) + "\n";
    bool all = true;
    OrderedJson checks = OrderedJson::array();
    for (const Rational& lambda : {Rational(0), Rational(1), Rational(-3) / 2}) {
        const IdentityReport rep = check_identities(bmax, cmax, nmax, lambda);
        for (const auto& c : rep.checks) {
            all = all && c.pass;
            r.text += "identity [lambda=" + to_string(lambda) + "]: " + c.name +
                      (c.pass ? "  ok" : "  FAIL at " + c.counterexample) + "\n";
            checks.push_back({{"lambda", to_string(lambda)},
                              {"name", c.name},
                              {"pass", c.pass},
                              {"counterexample", c.counterexample}});
        }
    }
    {
        const IdentityReport rep = embedding_check(8);
        for (const auto& c : rep.checks) {
            all = all && c.pass;
            r.text += "embedding: " + c.name + (c.pass ? "  ok" : "  FAIL at " + c.counterexample) +
                      "\n";
            checks.push_back(
                {{"name", c.name}, {"pass", c.pass}, {"counterexample", c.counterexample}});
        }
    }
    {
        bool ok = true;
        for (unsigned a = 0; a <= 1 && ok; ++a)
            for (unsigned b = 0; a + 2 * b <= 8 && ok; ++b)
                for (unsigned c = 0; a + 2 * b + c <= 8 && ok; ++c) {
                    const PBWMonomial m{a, b, c};
                    ok = recompose_module_generators(right_module_generators(m)) ==
                         PBWElement::monomial(m);
                }
        all = all && ok;
        r.text += std::string("module-generators: ") + (ok ? "ok" : "FAIL") +
                  " (all monomials of degree <= 8)\n";
        checks.push_back({{"name", "right module generator decomposition"}, {"pass", ok}});
    }
    r.json["checks"] = std::move(checks);
    const bool trips = iodetail::selftest_round_trips(r.text, r.json);
    all = all && trips;
    r.text += std::string("verdict: ") + (all ? "pass" : "fail") + "\n";
    r.json["verdict"] = all ? "pass" : "fail";
    r.exit_code = all ? 0 : 1;
    return r;
}

// Exit-status map for structured errors; anything unrecognized exits 1.
inline int exit_code_for(const Error& e) {
    const std::string& code = e.code();
    if (code == "parse error") return 2;
    if (code == "relation violated") return 3;
    if (code == "nonsplit spectrum") return 4;
    if (code == "dimension unsupported") return 5;
    if (code == "size mismatch") return 6;
    if (code == "constraint violation") return 7;
    if (code == "closure violated") return 8;
    return 1;
}

}  // namespace sjp
