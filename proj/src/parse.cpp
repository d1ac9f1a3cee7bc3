#include "vamod/parse.hpp"

#include <cctype>
#include <utility>

#include "vamod/errors.hpp"
#include "vamod/scalar.hpp"

namespace vamod {

namespace {

struct Token {
    enum Kind { Int, Ident, Sym, End } kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ >= src_.size()) {
            cur_ = {Token::End, ""};
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            cur_ = {Token::Int, src_.substr(start, pos_ - start)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            cur_ = {Token::Ident, src_.substr(start, pos_ - start)};
            return;
        }
        if (std::string("+-*/^()").find(c) != std::string::npos) {
            ++pos_;
            cur_ = {Token::Sym, std::string(1, c)};
            return;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " +
                         std::to_string(pos_));
    }

    std::string src_;
    size_t pos_ = 0;
    Token cur_;
};

// Value of a subexpression: polynomial in Z with Poly-in-s coefficients.
// Scalars are degree-0 in both variables.
struct BiPoly {
    std::vector<Poly> zc;

    static BiPoly constant(const FieldScalar& c) { return {{Poly(c)}}; }
    static BiPoly svar() { return {{Poly::variable()}}; }
    static BiPoly zvar() { return {{Poly(), Poly(FieldScalar(Rat(1)))}}; }

    void normalize() {
        while (zc.size() > 1 && zc.back().is_zero()) zc.pop_back();
    }

    bool is_constant() const { return zc.size() == 1 && zc[0].degree() <= 0; }

    FieldScalar constant_value() const { return zc[0].constant_term(); }
};

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    r.zc.resize(std::max(a.zc.size(), b.zc.size()));
    for (size_t k = 0; k < r.zc.size(); ++k) {
        if (k < a.zc.size()) r.zc[k] = r.zc[k] + a.zc[k];
        if (k < b.zc.size()) r.zc[k] = r.zc[k] + b.zc[k];
    }
    r.normalize();
    return r;
}

BiPoly operator-(const BiPoly& a) {
    BiPoly r = a;
    for (auto& p : r.zc) p = -p;
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    r.zc.resize(a.zc.size() + b.zc.size() - 1);
    for (size_t ia = 0; ia < a.zc.size(); ++ia)
        for (size_t ib = 0; ib < b.zc.size(); ++ib)
            r.zc[ia + ib] = r.zc[ia + ib] + a.zc[ia] * b.zc[ib];
    r.normalize();
    return r;
}

class Parser {
public:
    Parser(const std::string& src, std::string var, bool allow_z)
        : lex_(src), var_(std::move(var)), allow_z_(allow_z) {}

    BiPoly parse() {
        BiPoly v = expr();
        if (lex_.peek().kind != Token::End)
            throw ParseError("trailing input starting at '" + lex_.peek().text + "'");
        return v;
    }

private:
    BiPoly expr() {
        BiPoly v = term();
        while (lex_.peek().kind == Token::Sym &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            std::string op = lex_.take().text;
            BiPoly rhs = term();
            v = op == "+" ? v + rhs : v - rhs;
        }
        return v;
    }

    BiPoly term() {
        BiPoly v = unary();
        while (lex_.peek().kind == Token::Sym &&
               (lex_.peek().text == "*" || lex_.peek().text == "/")) {
            std::string op = lex_.take().text;
            BiPoly rhs = unary();
            if (op == "*") {
                v = v * rhs;
            } else {
                if (!rhs.is_constant())
                    throw ParseError("division is only defined by constants");
                FieldScalar d = rhs.constant_value();
                if (d.is_zero()) throw ParseError("division by zero");
                v = v * BiPoly::constant(d.inverse());
            }
        }
        return v;
    }

    BiPoly unary() {
        if (lex_.peek().kind == Token::Sym && lex_.peek().text == "-") {
            lex_.take();
            return -unary();
        }
        if (lex_.peek().kind == Token::Sym && lex_.peek().text == "+") {
            lex_.take();
            return unary();
        }
        return power();
    }

    BiPoly power() {
        BiPoly base = atom();
        while (lex_.peek().kind == Token::Sym && lex_.peek().text == "^") {
            lex_.take();
            Token e = lex_.take();
            if (e.kind != Token::Int)
                throw ParseError("exponent must be a nonnegative integer literal");
            unsigned long n = std::stoul(e.text);
            BiPoly acc = BiPoly::constant(FieldScalar(Rat(1)));
            for (unsigned long k = 0; k < n; ++k) acc = acc * base;
            base = acc;
        }
        return base;
    }

    BiPoly atom() {
        Token t = lex_.take();
        if (t.kind == Token::Int) return BiPoly::constant(FieldScalar(Rat(Int(t.text))));
        if (t.kind == Token::Sym && t.text == "(") {
            BiPoly v = expr();
            expect(")");
            return v;
        }
        if (t.kind == Token::Ident) {
            if (t.text == "i") return BiPoly::constant(FieldScalar::i());
            if (t.text == "sqrt") {
                expect("(");
                BiPoly arg = expr();
                expect(")");
                if (!arg.is_constant())
                    throw ParseError("sqrt is only defined for constants");
                return BiPoly::constant(adjoin_sqrt(arg.constant_value()).root);
            }
            if (t.text == var_) return BiPoly::svar();
            if (t.text == "Z") {
                if (!allow_z_) throw ParseError("the variable Z is not allowed here");
                return BiPoly::zvar();
            }
            throw ParseError("unknown name '" + t.text + "'");
        }
        throw ParseError(t.kind == Token::End ? "unexpected end of input"
                                              : "unexpected token '" + t.text + "'");
    }

    void expect(const std::string& sym) {
        Token t = lex_.take();
        if (t.kind != Token::Sym || t.text != sym)
            throw ParseError("expected '" + sym + "'");
    }

    Lexer lex_;
    std::string var_;
    bool allow_z_;
};

} // namespace

FieldScalar parse_scalar(const std::string& text) {
    BiPoly v = Parser(text, "\0no-variable", false).parse();
    if (!v.is_constant()) throw ParseError("expected a constant, got a polynomial");
    return v.constant_value();
}

Poly parse_poly(const std::string& text, const std::string& var) {
    BiPoly v = Parser(text, var, false).parse();
    return v.zc[0];
}

std::vector<Poly> parse_zpoly(const std::string& text) {
    BiPoly v = Parser(text, "s", true).parse();
    return v.zc;
}

} // namespace vamod
