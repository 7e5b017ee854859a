/*
 * Copyright 2026 The crosstalk authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "lexer.hpp"

#include <array>
#include <cctype>
#include <cstdlib>
#include <utility>

namespace xtalk::detail {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

constexpr std::array<std::pair<std::string_view, std::string_view>, 6> kUnicode{{
    {"\xE2\x88\xA7", "&"},  // ∧
    {"\xE2\x88\xA8", "|"},  // ∨
    {"\xC2\xAC", "!"},      // ¬
    {"\xE2\x89\xA4", "<="}, // ≤
    {"\xE2\x89\xA5", ">="}, // ≥
    {"\xE2\x86\x90", "<-"}, // ←
}};

constexpr std::array<std::string_view, 6> kTwoChar{"->", "<-", "<=", ">=", "!=", ".."};

} // namespace

std::vector<Token> tokenize(std::string_view text)
{
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
                ++col;
            }
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n')
                advance(1);
            continue;
        }
        Token t;
        t.pos = {line, col};
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < text.size() && ident_char(text[j]))
                ++j;
            t.kind = Tok::Ident;
            t.text = std::string(text.substr(i, j - i));
            advance(j - i);
            out.push_back(std::move(t));
            continue;
        }
        if (digit(c)) {
            std::size_t j = i;
            while (j < text.size() && digit(text[j]))
                ++j;
            bool real = false;
            if (j + 1 < text.size() && text[j] == '.' && digit(text[j + 1])) {
                real = true;
                ++j;
                while (j < text.size() && digit(text[j]))
                    ++j;
            }
            if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < text.size() && (text[k] == '+' || text[k] == '-'))
                    ++k;
                if (k < text.size() && digit(text[k])) {
                    real = true;
                    j = k;
                    while (j < text.size() && digit(text[j]))
                        ++j;
                }
            }
            t.kind = real ? Tok::Real : Tok::Int;
            t.text = std::string(text.substr(i, j - i));
            advance(j - i);
            out.push_back(std::move(t));
            continue;
        }
        bool matched = false;
        for (const auto& [utf, ascii] : kUnicode) {
            if (text.substr(i, utf.size()) == utf) {
                t.kind = Tok::Sym;
                t.text = std::string(ascii);
                advance(utf.size());
                matched = true;
                break;
            }
        }
        if (!matched) {
            for (auto two : kTwoChar) {
                if (text.substr(i, 2) == two) {
                    t.kind = Tok::Sym;
                    t.text = std::string(two);
                    advance(2);
                    matched = true;
                    break;
                }
            }
        }
        if (!matched) {
            static constexpr std::string_view singles = "[](){};:,'=<>+-*&|!/?";
            if (singles.find(c) == std::string_view::npos)
                throw ParseError(t.pos, std::string("unexpected character '") + c + "'");
            t.kind = Tok::Sym;
            t.text = std::string(1, c);
            advance(1);
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Tok::End;
    end.pos = {line, col};
    out.push_back(end);
    return out;
}

std::string describe(const Token& t)
{
    switch (t.kind) {
    case Tok::End:
        return "end of input";
    case Tok::Ident:
        return "identifier '" + t.text + "'";
    case Tok::Int:
    case Tok::Real:
        return "number " + t.text;
    default:
        return "'" + t.text + "'";
    }
}

const Token& TokenStream::peek(std::size_t ahead) const
{
    const std::size_t k = std::min(at_ + ahead, toks_.size() - 1);
    return toks_[k];
}

Token TokenStream::next()
{
    Token t = peek();
    if (at_ < toks_.size() - 1)
        ++at_;
    return t;
}

bool TokenStream::is_sym(std::string_view s, std::size_t ahead) const
{
    const auto& t = peek(ahead);
    return t.kind == Tok::Sym && t.text == s;
}

bool TokenStream::is_ident(std::string_view s, std::size_t ahead) const
{
    const auto& t = peek(ahead);
    return t.kind == Tok::Ident && t.text == s;
}

bool TokenStream::accept_sym(std::string_view s)
{
    if (!is_sym(s))
        return false;
    next();
    return true;
}

bool TokenStream::accept_ident(std::string_view s)
{
    if (!is_ident(s))
        return false;
    next();
    return true;
}

void TokenStream::fail(const std::string& message) const
{
    throw ParseError(peek().pos, message);
}

void TokenStream::fail_at(SourcePos pos, const std::string& message) const
{
    throw ParseError(pos, message);
}

Token TokenStream::expect_sym(std::string_view s, std::string_view context)
{
    if (!is_sym(s)) {
        std::string msg = "expected '" + std::string(s) + "'";
        if (!context.empty())
            msg += " " + std::string(context);
        fail(msg + ", found " + describe(peek()));
    }
    return next();
}

Token TokenStream::expect_ident(std::string_view context)
{
    if (peek().kind != Tok::Ident) {
        std::string msg = "expected identifier";
        if (!context.empty())
            msg += " " + std::string(context);
        fail(msg + ", found " + describe(peek()));
    }
    return next();
}

Token TokenStream::expect_keyword(std::string_view kw)
{
    if (!is_ident(kw))
        fail("expected '" + std::string(kw) + "', found " + describe(peek()));
    return next();
}

long TokenStream::expect_int(std::string_view context)
{
    if (peek().kind != Tok::Int) {
        std::string msg = "expected integer";
        if (!context.empty())
            msg += " " + std::string(context);
        fail(msg + ", found " + describe(peek()));
    }
    return std::strtol(next().text.c_str(), nullptr, 10);
}

long TokenStream::expect_signed_int(std::string_view context)
{
    const bool neg = accept_sym("-");
    const long v = expect_int(context);
    return neg ? -v : v;
}

double TokenStream::expect_number(std::string_view context)
{
    if (peek().kind != Tok::Int && peek().kind != Tok::Real) {
        std::string msg = "expected number";
        if (!context.empty())
            msg += " " + std::string(context);
        fail(msg + ", found " + describe(peek()));
    }
    return std::strtod(next().text.c_str(), nullptr);
}

Expr TokenStream::parse_expr() { return parse_or(); }

Expr TokenStream::parse_or()
{
    Expr lhs = parse_and();
    while (is_sym("|") && !is_sym("[", 1) && !is_sym("|", 1)) {
        const auto pos = next().pos;
        lhs = Expr::binary(ExprOp::Or, std::move(lhs), parse_and(), pos);
    }
    return lhs;
}

Expr TokenStream::parse_and()
{
    Expr lhs = parse_not();
    while (is_sym("&")) {
        const auto pos = next().pos;
        lhs = Expr::binary(ExprOp::And, std::move(lhs), parse_not(), pos);
    }
    return lhs;
}

Expr TokenStream::parse_not()
{
    if (is_sym("!")) {
        const auto pos = next().pos;
        return Expr::unary(ExprOp::Not, parse_not(), pos);
    }
    return parse_cmp();
}

Expr TokenStream::parse_cmp()
{
    Expr lhs = parse_add();
    static constexpr std::pair<std::string_view, ExprOp> ops[] = {
        {"=", ExprOp::Eq}, {"!=", ExprOp::Ne}, {"<=", ExprOp::Le},
        {">=", ExprOp::Ge}, {"<", ExprOp::Lt}, {">", ExprOp::Gt},
    };
    for (const auto& [s, op] : ops) {
        if (is_sym(s)) {
            const auto pos = next().pos;
            return Expr::binary(op, std::move(lhs), parse_add(), pos);
        }
    }
    return lhs;
}

Expr TokenStream::parse_add()
{
    Expr lhs = parse_mul();
    while (is_sym("+") || is_sym("-")) {
        const auto t = next();
        lhs = Expr::binary(t.text == "+" ? ExprOp::Add : ExprOp::Sub, std::move(lhs), parse_mul(),
                           t.pos);
    }
    return lhs;
}

Expr TokenStream::parse_mul()
{
    Expr lhs = parse_unary();
    while (is_sym("*")) {
        const auto pos = next().pos;
        lhs = Expr::binary(ExprOp::Mul, std::move(lhs), parse_unary(), pos);
    }
    return lhs;
}

Expr TokenStream::parse_unary()
{
    if (is_sym("-")) {
        const auto pos = next().pos;
        return Expr::unary(ExprOp::Neg, parse_unary(), pos);
    }
    return parse_primary();
}

Expr TokenStream::parse_primary()
{
    const Token& t = peek();
    if (t.kind == Tok::Int) {
        const auto pos = t.pos;
        return Expr::integer(expect_int(), pos);
    }
    if (t.kind == Tok::Real)
        fail("only integer constants are supported in expressions, found " + t.text);
    if (t.kind == Tok::Ident) {
        Token id = next();
        if (id.text == "true" || id.text == "false")
            return Expr::boolean(id.text == "true", id.pos);
        return Expr::variable(id.text, id.pos);
    }
    if (is_sym("(")) {
        next();
        Expr inner = parse_or();
        expect_sym(")", "to close parenthesis");
        return inner;
    }
    fail("expected expression, found " + describe(t));
}

} // namespace xtalk::detail
