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

#include <set>

#include "crosstalk/algebra.hpp"
#include "crosstalk/parser.hpp"
#include "parsers.hpp"

namespace xtalk {
namespace detail {

namespace {

class CompositionParser {
public:
    CompositionParser(TokenStream& ts, const Model& model, std::vector<std::string>& warnings)
        : ts_(ts), model_(model), warnings_(warnings)
    {
    }

    // expr := postfix (('|[' labels ']|' | '||') postfix)*
    CompositionExpr parse()
    {
        CompositionExpr left = postfix();
        for (;;) {
            const SourcePos pos = ts_.peek().pos;
            if (ts_.is_sym("|") && ts_.is_sym("[", 1)) {
                ts_.next();
                ts_.next();
                auto sync = label_list("]", "in synchronisation set");
                if (!ts_.accept_sym("|"))
                    ts_.fail("malformed synchronisation set: expected ']|', found " +
                             describe(ts_.peek()));
                CompositionExpr right = postfix();
                warn_vacuous(left, right, sync, pos);
                left = CompositionExpr::par(std::move(left), std::move(right), std::move(sync));
            } else if (ts_.is_sym("|") && ts_.is_sym("|", 1)) {
                ts_.next();
                ts_.next();
                CompositionExpr right = postfix();
                left = CompositionExpr::par_auto(std::move(left), std::move(right));
            } else {
                return left;
            }
        }
    }

private:
    // postfix := primary ('/' '{' labels '}' | '{' renames '}')*
    CompositionExpr postfix()
    {
        CompositionExpr e = primary();
        for (;;) {
            const SourcePos pos = ts_.peek().pos;
            if (ts_.accept_sym("/")) {
                ts_.expect_sym("{", "after '/'");
                auto labels = label_list("}", "in hiding set");
                if (labels.empty())
                    ts_.fail_at(pos, "empty hiding set");
                e = CompositionExpr::hide(std::move(e), std::move(labels));
            } else if (ts_.accept_sym("{")) {
                std::vector<std::pair<std::string, std::string>> mapping;
                do {
                    auto from = ts_.expect_ident("in renaming").text;
                    ts_.expect_sym("<-", "in renaming");
                    auto to = ts_.expect_ident("in renaming").text;
                    mapping.emplace_back(std::move(from), std::move(to));
                } while (ts_.accept_sym(","));
                ts_.expect_sym("}", "to close renaming");
                e = CompositionExpr::rename(std::move(e), std::move(mapping));
                try {
                    (void)alphabet(e, model_);
                } catch (const ModelError& err) {
                    ts_.fail_at(pos, err.what());
                }
            } else {
                return e;
            }
        }
    }

    CompositionExpr primary()
    {
        if (ts_.accept_sym("(")) {
            CompositionExpr e = parse();
            ts_.expect_sym(")", "to close composition");
            return e;
        }
        const Token name = ts_.expect_ident("in composition");
        if (const auto* c = model_.find_composition(name.text))
            return c->expr;
        if (model_.find_module(name.text))
            return CompositionExpr::instance(name.text, 0);
        const auto us = name.text.rfind('_');
        if (us != std::string::npos && us + 1 < name.text.size() && us > 0) {
            const std::string base = name.text.substr(0, us);
            const std::string digits = name.text.substr(us + 1);
            const bool numeric = digits.find_first_not_of("0123456789") == std::string::npos;
            if (numeric && model_.find_module(base))
                return CompositionExpr::instance(base, std::stoi(digits));
        }
        ts_.fail_at(name.pos, "unknown module or composition '" + name.text + "'");
    }

    // Comma-separated identifiers up to `close`; may be empty. A trailing
    // comma is rejected.
    std::vector<std::string> label_list(std::string_view close, std::string_view context)
    {
        std::vector<std::string> out;
        if (ts_.accept_sym(close))
            return out;
        for (;;) {
            if (ts_.peek().kind != Tok::Ident)
                ts_.fail("malformed label set: expected a label " + std::string(context) +
                         ", found " + describe(ts_.peek()));
            out.push_back(ts_.next().text);
            if (ts_.accept_sym(close))
                return out;
            if (!ts_.accept_sym(","))
                ts_.fail("malformed label set: expected ',' or '" + std::string(close) + "' " +
                         std::string(context) + ", found " + describe(ts_.peek()));
        }
    }

    void warn_vacuous(const CompositionExpr& l, const CompositionExpr& r,
                      const std::vector<std::string>& sync, SourcePos pos)
    {
        if (sync.empty())
            return;
        const Alphabet a = alphabet(l, model_);
        const Alphabet b = alphabet(r, model_);
        for (const auto& s : sync) {
            if (!a.count(s) && !b.count(s))
                warnings_.push_back(std::to_string(pos.line) + ":" + std::to_string(pos.column) +
                                    ": synchronisation on '" + s +
                                    "' blocks nothing: neither side has the label");
        }
    }

    TokenStream& ts_;
    const Model& model_;
    std::vector<std::string>& warnings_;
};

} // namespace

CompositionExpr parse_composition_expr(TokenStream& ts, const Model& model,
                                       std::vector<std::string>& warnings)
{
    return CompositionParser(ts, model, warnings).parse();
}

} // namespace detail

CompositionParse parse_composition(std::string_view text, const Model& model)
{
    detail::TokenStream ts(text);
    CompositionParse out{CompositionExpr::instance("", 0), {}};
    out.expr = detail::parse_composition_expr(ts, model, out.warnings);
    if (!ts.at_end())
        ts.fail("unexpected " + detail::describe(ts.peek()) + " after composition");
    return out;
}

} // namespace xtalk
