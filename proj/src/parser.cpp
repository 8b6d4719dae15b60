#include "lepoly/parser.hpp"

#include <cctype>

#include "lepoly/errors.hpp"

namespace lepoly {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    BivariatePoly run() {
        BivariatePoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    BivariatePoly expr() {
        BivariatePoly p = accept('-') ? -term() : (accept('+'), term());
        for (;;) {
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                return p;
        }
    }

    BivariatePoly term() {
        BivariatePoly p = unary();
        for (;;) {
            if (accept('*')) {
                p *= unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                BivariatePoly d = unary();
                if (!d.is_constant())
                    throw ParseError("division by non-constant", at);
                if (d.is_zero()) throw ParseError("division by zero", at);
                p = p.scaled(GaussianRational(1) / d.constant_term());
            } else {
                return p;
            }
        }
    }

    BivariatePoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    BivariatePoly power() {
        BivariatePoly base = atom();
        if (accept('^')) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '-')
                throw ParseError("negative exponent", pos_);
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError("expected integer exponent", pos_);
            long e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + (s_[pos_] - '0');
                if (e > 4096) throw ParseError("exponent too large", pos_);
                ++pos_;
            }
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    BivariatePoly atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            BivariatePoly p = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (c == 'x') {
            ++pos_;
            return BivariatePoly::variable(Var::x);
        }
        if (c == 'y') {
            ++pos_;
            return BivariatePoly::variable(Var::y);
        }
        if (c == 'i') {
            ++pos_;
            return BivariatePoly(GaussianRational::i());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                v = v * 10 + (s_[pos_] - '0');
                ++pos_;
            }
            return BivariatePoly(GaussianRational(mpq_class(v)));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
};

}  // namespace

BivariatePoly poly_parse(const std::string& text) { return Parser(text).run(); }

}  // namespace lepoly
