#include "lieclass/parse.hpp"

#include <cctype>
#include <sstream>

namespace lieclass {

namespace {

// Semantic value of a subexpression: op[u] + scal, linear in the unknown.
struct LinVal {
    DiffOp op;
    RatFunc scal;
    bool has_u() const { return !op.is_zero(); }
};

struct Token {
    enum Kind { Num, Ident, Plus, Minus, Star, Slash, Caret, LPar, RPar, Eq, End } kind;
    std::string text;
    int col;
};

class Lexer {
public:
    Lexer(const std::string& s, int line) : s_(s), line_(line) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(unsigned(s_[pos_]))) ++pos_;
        int col = int(pos_) + 1;
        if (pos_ >= s_.size()) return {Token::End, "", col};
        char c = s_[pos_];
        if (std::isdigit(unsigned(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(unsigned(s_[pos_]))) ++pos_;
            return {Token::Num, s_.substr(start, pos_ - start), col};
        }
        if (std::isalpha(unsigned(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(unsigned(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return {Token::Ident, s_.substr(start, pos_ - start), col};
        }
        ++pos_;
        switch (c) {
            case '+': return {Token::Plus, "+", col};
            case '-': return {Token::Minus, "-", col};
            case '*': return {Token::Star, "*", col};
            case '/': return {Token::Slash, "/", col};
            case '^': return {Token::Caret, "^", col};
            case '(': return {Token::LPar, "(", col};
            case ')': return {Token::RPar, ")", col};
            case '=': return {Token::Eq, "=", col};
        }
        throw ParseError("syntax", line_, col, std::string("unexpected character '") + c + "'");
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
    int line_;
};

class ExprParser {
public:
    ExprParser(const std::string& s, int line, std::string unknown)
        : lex_(s, line), line_(line), unknown_(std::move(unknown)) {
        advance();
    }

    LinVal parse_expression() {
        LinVal v = parse_term();
        while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
            bool minus = tok_.kind == Token::Minus;
            advance();
            LinVal w = parse_term();
            if (minus) { w.op = -w.op; w.scal = -w.scal; }
            v.op += w.op;
            v.scal += w.scal;
        }
        return v;
    }

    bool at_eq() const { return tok_.kind == Token::Eq; }
    bool at_end() const { return tok_.kind == Token::End; }
    void eat_eq() { advance(); }
    int col() const { return tok_.col; }

private:
    Lexer lex_;
    Token tok_;
    int line_;
    std::string unknown_;

    void advance() { tok_ = lex_.next(); }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("syntax", line_, tok_.col, msg);
    }

    LinVal mul(const LinVal& a, const LinVal& b) {
        if (a.has_u() && b.has_u())
            throw ParseError("nonlinear", line_, tok_.col,
                             "the unknown appears nonlinearly in a product");
        if (a.has_u()) return {a.op.scaled(b.scal), a.scal * b.scal};
        return {b.op.scaled(a.scal), a.scal * b.scal};
    }

    LinVal parse_term() {
        LinVal v = parse_factor();
        while (tok_.kind == Token::Star || tok_.kind == Token::Slash) {
            bool div = tok_.kind == Token::Slash;
            advance();
            LinVal w = parse_factor();
            if (div) {
                if (w.has_u())
                    throw ParseError("nonlinear", line_, tok_.col,
                                     "division by a term containing the unknown");
                if (w.scal.is_zero())
                    throw ParseError("syntax", line_, tok_.col, "division by zero");
                v = {v.op.scaled(w.scal.inverse()), v.scal / w.scal};
            } else {
                v = mul(v, w);
            }
        }
        return v;
    }

    LinVal parse_factor() {
        if (tok_.kind == Token::Plus) { advance(); return parse_factor(); }
        if (tok_.kind == Token::Minus) {
            advance();
            LinVal v = parse_factor();
            return {-v.op, -v.scal};
        }
        LinVal base = parse_primary();
        if (tok_.kind == Token::Caret) {
            advance();
            if (tok_.kind != Token::Num) fail("exponent must be a nonnegative integer");
            long e = std::stol(tok_.text);
            advance();
            if (base.has_u()) {
                if (e == 1) return base;
                if (e == 0) return {DiffOp(), RatFunc(Rat(1))};
                throw ParseError("nonlinear", line_, tok_.col,
                                 "power of a term containing the unknown");
            }
            RatFunc r(Rat(1));
            for (long k = 0; k < e; ++k) r *= base.scal;
            return {DiffOp(), r};
        }
        return base;
    }

    LinVal parse_primary() {
        switch (tok_.kind) {
            case Token::Num: {
                Rat v(tok_.text);
                advance();
                return {DiffOp(), RatFunc(v)};
            }
            case Token::LPar: {
                advance();
                LinVal v = parse_expression();
                if (tok_.kind != Token::RPar) fail("expected ')'");
                advance();
                return v;
            }
            case Token::Ident: {
                std::string id = tok_.text;
                int col = tok_.col;
                advance();
                if (id == "x") return {DiffOp(), RatFunc::var_x()};
                if (id == "y") return {DiffOp(), RatFunc::var_y()};
                if (id == "Dx") return {DiffOp::dx(), RatFunc()};
                if (id == "Dy") return {DiffOp::dy(), RatFunc()};
                if (id == unknown_) return {DiffOp(RatFunc(1)), RatFunc()};
                std::string prefix = unknown_ + "_";
                if (id.rfind(prefix, 0) == 0) {
                    unsigned i = 0, j = 0;
                    for (char c : id.substr(prefix.size())) {
                        if (c == 'x') ++i;
                        else if (c == 'y') ++j;
                        else
                            throw ParseError("unknown-symbol", line_, col,
                                             "bad derivative suffix in '" + id + "'");
                    }
                    return {DiffOp::mono(i, j), RatFunc()};
                }
                throw ParseError("unknown-symbol", line_, col, "unknown symbol '" + id + "'");
            }
            default:
                fail("expected a number, variable, derivative or '('");
        }
    }
};

std::string strip_comment(const std::string& line) {
    auto p = line.find('#');
    return p == std::string::npos ? line : line.substr(0, p);
}

bool blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(unsigned(c))) return false;
    return true;
}

}  // namespace

InputDocument parse_document(const std::string& text) {
    InputDocument doc;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    // first pass: directives (so @unknown applies to every equation)
    std::vector<std::pair<int, std::string>> eq_lines;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        if (blank(line)) continue;
        size_t p = line.find_first_not_of(" \t");
        if (line[p] == '@') {
            std::istringstream ls(line.substr(p + 1));
            std::string key, value;
            ls >> key;
            std::getline(ls, value);
            size_t v = value.find_first_not_of(" \t");
            value = v == std::string::npos ? "" : value.substr(v);
            if (key.empty())
                throw ParseError("syntax", lineno, int(p) + 1, "empty directive");
            doc.options[key] = value;
            if (key == "unknown" && !value.empty()) doc.unknown = value;
            continue;
        }
        eq_lines.push_back({lineno, line});
    }
    for (auto& [ln, line] : eq_lines) {
        ExprParser ep(line, ln, doc.unknown);
        LinVal lhs = ep.parse_expression();
        if (ep.at_eq()) {
            ep.eat_eq();
            LinVal rhs = ep.parse_expression();
            lhs.op -= rhs.op;
            lhs.scal -= rhs.scal;
        }
        if (!ep.at_end())
            throw ParseError("syntax", ln, ep.col(), "trailing input after the equation");
        if (!lhs.scal.is_zero())
            throw ParseError("inhomogeneous", ln, ep.col(),
                             "equation has a nonzero term free of the unknown");
        if (lhs.op.is_zero())
            throw ParseError("syntax", ln, ep.col(), "equation does not involve the unknown");
        doc.equations.push_back(lhs.op);
    }
    if (doc.equations.empty())
        throw ParseError("syntax", lineno, 1, "no equations in the input");
    return doc;
}

RatFunc parse_ratfunc(const std::string& text) {
    ExprParser ep(text, 1, " ");  // no identifier can match the blank name
    LinVal v = ep.parse_expression();
    if (!ep.at_end()) throw ParseError("syntax", 1, ep.col(), "trailing input");
    if (v.has_u()) throw ParseError("syntax", 1, 1, "unexpected unknown in a scalar expression");
    return v.scal;
}

DiffOp parse_operator(const std::string& text, const std::string& unknown) {
    ExprParser ep(text, 1, unknown);
    LinVal v = ep.parse_expression();
    if (!ep.at_end()) throw ParseError("syntax", 1, ep.col(), "trailing input");
    if (!v.scal.is_zero())
        throw ParseError("inhomogeneous", 1, 1, "operator expression has a scalar part");
    return v.op;
}

std::string render_document(const InputDocument& doc) {
    std::ostringstream os;
    if (doc.unknown != "u") os << "@unknown " << doc.unknown << "\n";
    for (auto& [k, v] : doc.options)
        if (k != "unknown") os << "@" << k << " " << v << "\n";
    for (auto& eq : doc.equations) {
        bool first = true;
        for (auto it = eq.terms().rbegin(); it != eq.terms().rend(); ++it) {
            const auto& [m, c] = *it;
            if (!first) os << " + ";
            first = false;
            bool one = c.is_one();
            if (!one) {
                bool par = c.num().terms().size() > 1 || !c.den().is_one();
                os << (par ? "(" : "") << c.str() << (par ? ")" : "");
            }
            if (m.i + m.j == 0) {
                if (!one) os << "*";
                os << doc.unknown;
            } else {
                if (!one) os << "*";
                os << doc.unknown << "_" << std::string(m.i, 'x') << std::string(m.j, 'y');
            }
        }
        os << " = 0\n";
    }
    return os.str();
}

}  // namespace lieclass
