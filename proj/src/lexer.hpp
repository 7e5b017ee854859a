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

// Shared tokenizer for the model, composition and property languages.

#ifndef CROSSTALK_SRC_LEXER_HPP
#define CROSSTALK_SRC_LEXER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "crosstalk/error.hpp"
#include "crosstalk/expr.hpp"

namespace xtalk::detail {

enum class Tok { Ident, Int, Real, Sym, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    SourcePos pos;
};

/// Splits `text` into tokens. `//` comments and whitespace are skipped.
/// A few Unicode operators (∧ ∨ ¬ ≤ ≥ ←) map onto their ASCII symbols.
std::vector<Token> tokenize(std::string_view text);

class TokenStream {
public:
    explicit TokenStream(std::string_view text) : toks_(tokenize(text)) {}

    const Token& peek(std::size_t ahead = 0) const;
    Token next();
    bool at_end() const { return peek().kind == Tok::End; }

    bool is_sym(std::string_view s, std::size_t ahead = 0) const;
    bool is_ident(std::string_view s, std::size_t ahead = 0) const;
    bool accept_sym(std::string_view s);
    bool accept_ident(std::string_view s);
    Token expect_sym(std::string_view s, std::string_view context = {});
    Token expect_ident(std::string_view context = {});
    Token expect_keyword(std::string_view kw);
    long expect_int(std::string_view context = {});
    /// Optional leading '-' followed by an integer literal.
    long expect_signed_int(std::string_view context = {});
    /// Integer or real literal.
    double expect_number(std::string_view context = {});

    [[noreturn]] void fail(const std::string& message) const;
    [[noreturn]] void fail_at(SourcePos pos, const std::string& message) const;

    // Integer/boolean expressions shared by guards, rates and updates.
    Expr parse_expr();

private:
    Expr parse_or();
    Expr parse_and();
    Expr parse_not();
    Expr parse_cmp();
    Expr parse_add();
    Expr parse_mul();
    Expr parse_unary();
    Expr parse_primary();

    std::vector<Token> toks_;
    std::size_t at_ = 0;
};

std::string describe(const Token& t);

} // namespace xtalk::detail

#endif // CROSSTALK_SRC_LEXER_HPP
