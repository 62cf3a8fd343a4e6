#pragma once

// Recursive-descent parser for arithmetic expressions over integers and
// identifiers with + - * / ^ and parentheses.  Precedence, from tightest:
// ^ (non-negative integer literal exponents), unary -, * /, + -.  Binary
// operators associate to the left.  The value type is supplied by an Ops
// policy, so the same grammar builds rational functions, operators and
// hyperexponential elements.

#include <cctype>
#include <string>
#include <string_view>

#include "ptel/errors.hpp"
#include "ptel/mpoly.hpp"

namespace ptel {

/// Ops must provide: using Value; Value integer(const BigInt&);
/// Value identifier(std::string_view name, int line, int column);
/// Value add/sub/mul/div(const Value&, const Value&, int line, int column);
/// Value neg(const Value&); Value pow(const Value&, unsigned, int line, int column).
template <class Ops>
class ExprParser {
public:
    using Value = typename Ops::Value;

    ExprParser(Ops& ops, std::string_view text, int line = 1, int column = 1)
        : ops_(ops), text_(text), line_(line), col0_(column) {}

    Value parse() {
        Value v = expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, line_, col()); }
    int col() const { return col0_ + int(pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value expr() {
        Value v = term();
        while (true) {
            skip_ws();
            int c = col();
            if (accept('+'))
                v = ops_.add(v, term(), line_, c);
            else if (accept('-'))
                v = ops_.sub(v, term(), line_, c);
            else
                return v;
        }
    }

    Value term() {
        Value v = unary();
        while (true) {
            skip_ws();
            int c = col();
            if (accept('*'))
                v = ops_.mul(v, unary(), line_, c);
            else if (accept('/'))
                v = ops_.div(v, unary(), line_, c);
            else
                return v;
        }
    }

    Value unary() {
        if (accept('-')) return ops_.neg(unary());
        if (accept('+')) return unary();
        return power();
    }

    Value power() {
        Value base = primary();
        skip_ws();
        int c = col();
        if (!accept('^')) return base;
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("exponent must be a non-negative integer literal");
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 6) fail("exponent too large");
        return ops_.pow(base, unsigned(std::stoul(digits)), line_, c);
    }

    Value primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            Value v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
                fail("floating-point literals are not accepted");
            return ops_.integer(BigInt(std::string(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = pos_;
            int c = col();
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return ops_.identifier(text_.substr(start, pos_ - start), line_, c);
        }
        if (ch == '.') fail("floating-point literals are not accepted");
        fail("unexpected '" + std::string(1, ch) + "'");
    }

    Ops& ops_;
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_;
    int col0_;
};

}  // namespace ptel
