#pragma once

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "ncgeo/algebra.hpp"

namespace ncgeo {

// Recursive-descent parser for the expression grammar of the engine:
// generators x, y, the deformation parameter q, integer literals, + - * /,
// ^ with (possibly negative) integer exponents, parentheses. Inverse of the
// printers on canonical forms.

namespace detail {

struct Token {
    enum Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::string text;
    int line, column;
};

inline std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto push = [&](Token::Kind k, std::string text) {
        out.push_back({k, std::move(text), line, col});
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            push(Token::Int, src.substr(i, j - i));
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            push(Token::Ident, src.substr(i, j - i));
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        Token::Kind kind;
        switch (c) {
            case '+': kind = Token::Plus; break;
            case '-': kind = Token::Minus; break;
            case '*': kind = Token::Star; break;
            case '/': kind = Token::Slash; break;
            case '^': kind = Token::Caret; break;
            case '(': kind = Token::LParen; break;
            case ')': kind = Token::RParen; break;
            default: throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
        push(kind, std::string(1, c));
        ++col;
        ++i;
    }
    out.push_back({Token::End, "", line, col});
    return out;
}

template <QField F>
class ExprParser {
  public:
    ExprParser(std::vector<Token> tokens, PowerMode mode) : tokens_(std::move(tokens)), mode_(mode) {}

    AlgElem<F> parse() {
        AlgElem<F> value = expr();
        expect(Token::End, "end of expression");
        return value;
    }

  private:
    std::vector<Token> tokens_;
    size_t pos_ = 0;
    PowerMode mode_;

    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    void expect(Token::Kind k, const std::string& what) {
        if (!accept(k)) throw ParseError(peek().line, peek().column, "expected " + what);
    }
    [[noreturn]] void fail(const std::string& what) { throw ParseError(peek().line, peek().column, what); }

    AlgElem<F> expr() {
        AlgElem<F> value = term();
        for (;;) {
            if (accept(Token::Plus))
                value += term();
            else if (accept(Token::Minus))
                value -= term();
            else
                return value;
        }
    }

    AlgElem<F> term() {
        AlgElem<F> value = factor();
        for (;;) {
            if (accept(Token::Star)) {
                value *= factor();
            } else if (peek().kind == Token::Slash) {
                Token slash = take();
                AlgElem<F> divisor = factor();
                try {
                    value *= divisor.pow(-1);
                } catch (const Error& e) {
                    throw ParseError(slash.line, slash.column, std::string("cannot divide: ") + e.what());
                }
            } else {
                return value;
            }
        }
    }

    AlgElem<F> factor() {
        if (accept(Token::Minus)) return -factor();
        if (accept(Token::Plus)) return factor();
        AlgElem<F> value = primary();
        if (peek().kind == Token::Caret) {
            Token caret = take();
            long sign = 1;
            if (accept(Token::Minus)) sign = -1;
            if (peek().kind != Token::Int) fail("expected integer exponent");
            long n = std::stol(take().text);
            try {
                value = value.pow(sign * n);
            } catch (const Error& e) {
                throw ParseError(caret.line, caret.column, std::string("cannot exponentiate: ") + e.what());
            }
        }
        return value;
    }

    AlgElem<F> primary() {
        const Token& t = peek();
        if (t.kind == Token::Int) {
            Token tok = take();
            return AlgElem<F>::scalar(F{Rational(Integer(tok.text))}, mode_);
        }
        if (t.kind == Token::Ident) {
            Token tok = take();
            if (tok.text == "x") return AlgElem<F>::x(mode_);
            if (tok.text == "y") return AlgElem<F>::y(mode_);
            if (tok.text == "q") return AlgElem<F>::scalar(q_power<F>(1), mode_);
            throw ParseError(tok.line, tok.column, "unknown symbol '" + tok.text + "'");
        }
        if (accept(Token::LParen)) {
            AlgElem<F> value = expr();
            expect(Token::RParen, "')'");
            return value;
        }
        fail("expected a literal, symbol or parenthesised expression");
    }
};

} // namespace detail

template <QField F>
AlgElem<F> parse_alg(const std::string& text, PowerMode mode = PowerMode::Polynomial) {
    return detail::ExprParser<F>(detail::tokenize(text), mode).parse();
}

template <QField F>
F parse_scalar(const std::string& text) {
    AlgElem<F> value = parse_alg<F>(text, PowerMode::Laurent);
    if (!value.is_scalar()) throw ParseError(1, 1, "expected a scalar expression");
    return value.scalar_value();
}

} // namespace ncgeo
