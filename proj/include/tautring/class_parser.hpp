#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tautring/char_class.hpp"

namespace tautring {

// Parse failure with a byte position into the input.
class ClassParseError : public std::runtime_error {
public:
    ClassParseError(size_t position, const std::string& message)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

// p_i with i outside 1..n of the ambient context.
class ClassIndexError : public ClassParseError {
public:
    ClassIndexError(size_t position, int index, int n)
        : ClassParseError(position, "p" + std::to_string(index) + " out of range for rank " +
                                        std::to_string(n)),
          index_(index) {}
    int index() const { return index_; }

private:
    int index_;
};

namespace detail {

struct ClassToken {
    enum class Kind { Euler, Pontryagin, Number, Plus, Minus, Star, Slash, Caret,
                      LParen, RParen, End };
    Kind kind;
    size_t position;
    int p_index = 0;     // Pontryagin
    BigInt number{};     // Number
};

class ClassLexer {
public:
    explicit ClassLexer(std::string_view input) : input_(input) {}

    ClassToken next() {
        while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_])))
            ++pos_;
        size_t start = pos_;
        if (pos_ >= input_.size()) return {ClassToken::Kind::End, start};
        char c = input_[pos_];
        switch (c) {
            case '+': ++pos_; return {ClassToken::Kind::Plus, start};
            case '-': ++pos_; return {ClassToken::Kind::Minus, start};
            case '*': ++pos_; return {ClassToken::Kind::Star, start};
            case '/': ++pos_; return {ClassToken::Kind::Slash, start};
            case '^': ++pos_; return {ClassToken::Kind::Caret, start};
            case '(': ++pos_; return {ClassToken::Kind::LParen, start};
            case ')': ++pos_; return {ClassToken::Kind::RParen, start};
            default: break;
        }
        if (c == 'e') {
            ++pos_;
            return {ClassToken::Kind::Euler, start};
        }
        if (c == 'p') {
            ++pos_;
            if (pos_ >= input_.size() || !std::isdigit(static_cast<unsigned char>(input_[pos_])))
                throw ClassParseError(start, "expected index after 'p'");
            int idx = 0;
            while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_]))) {
                idx = idx * 10 + (input_[pos_] - '0');
                if (idx > 1000) throw ClassParseError(start, "index too large");
                ++pos_;
            }
            ClassToken t{ClassToken::Kind::Pontryagin, start};
            t.p_index = idx;
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_])))
                digits += input_[pos_++];
            ClassToken t{ClassToken::Kind::Number, start};
            t.number = BigInt::from_string(digits);
            return t;
        }
        throw ClassParseError(start, std::string("unexpected character '") + c + "'");
    }

private:
    std::string_view input_;
    size_t pos_ = 0;
};

// expr   := term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := '-' factor | atom ('^' uint)?
// atom   := 'e' | 'p'uint | rational | '(' expr ')'
class ClassParser {
public:
    ClassParser(std::string_view input, int n) : lexer_(input), n_(n) { advance(); }

    CharClass parse() {
        CharClass value = parse_expr();
        if (current_.kind != ClassToken::Kind::End)
            throw ClassParseError(current_.position, "unexpected trailing input");
        return value;
    }

private:
    ClassLexer lexer_;
    ClassToken current_{ClassToken::Kind::End, 0};
    int n_;

    void advance() { current_ = lexer_.next(); }

    CharClass parse_expr() {
        CharClass value = parse_term();
        while (current_.kind == ClassToken::Kind::Plus ||
               current_.kind == ClassToken::Kind::Minus) {
            bool minus = current_.kind == ClassToken::Kind::Minus;
            advance();
            CharClass rhs = parse_term();
            value = minus ? value - rhs : value + rhs;
        }
        return value;
    }

    CharClass parse_term() {
        CharClass value = parse_factor();
        while (current_.kind == ClassToken::Kind::Star) {
            advance();
            value *= parse_factor();
        }
        return value;
    }

    CharClass parse_factor() {
        if (current_.kind == ClassToken::Kind::Minus) {
            advance();
            return Rational(-1) * parse_factor();
        }
        CharClass value = parse_atom();
        if (current_.kind == ClassToken::Kind::Caret) {
            advance();
            if (current_.kind != ClassToken::Kind::Number)
                throw ClassParseError(current_.position, "expected exponent after '^'");
            if (!current_.number.fits_int64() || current_.number.to_int64() > 64)
                throw ClassParseError(current_.position, "exponent too large");
            unsigned e = static_cast<unsigned>(current_.number.to_int64());
            advance();
            value = value.pow(e);
        }
        return value;
    }

    CharClass parse_atom() {
        switch (current_.kind) {
            case ClassToken::Kind::Euler:
                advance();
                return CharClass::euler(n_);
            case ClassToken::Kind::Pontryagin: {
                int idx = current_.p_index;
                size_t pos = current_.position;
                if (idx < 1 || idx > n_) throw ClassIndexError(pos, idx, n_);
                advance();
                return CharClass::pontryagin(n_, idx);
            }
            case ClassToken::Kind::Number: {
                BigInt num = current_.number;
                advance();
                if (current_.kind == ClassToken::Kind::Slash) {
                    advance();
                    if (current_.kind != ClassToken::Kind::Number)
                        throw ClassParseError(current_.position,
                                              "expected denominator after '/'");
                    BigInt den = current_.number;
                    if (den.is_zero())
                        throw ClassParseError(current_.position, "zero denominator");
                    advance();
                    return CharClass::constant(n_, Rational(std::move(num), std::move(den)));
                }
                return CharClass::constant(n_, Rational(std::move(num)));
            }
            case ClassToken::Kind::LParen: {
                advance();
                CharClass value = parse_expr();
                if (current_.kind != ClassToken::Kind::RParen)
                    throw ClassParseError(current_.position, "expected ')'");
                advance();
                return value;
            }
            default:
                throw ClassParseError(current_.position, "expected class atom");
        }
    }
};

} // namespace detail

// Parses surface syntax like "e*p1^2 + 3*p2" into a normal-form CharClass
// for rank n. Throws ClassParseError / ClassIndexError.
inline CharClass parse_class(std::string_view input, int n) {
    if (n < 1) throw std::invalid_argument("parse_class: rank must be >= 1");
    return detail::ClassParser(input, n).parse();
}

} // namespace tautring
