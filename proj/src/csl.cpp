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

#include "crosstalk/csl.hpp"

#include <cstdio>
#include <set>

#include "crosstalk/error.hpp"
#include "crosstalk/parser.hpp"
#include "lexer.hpp"

namespace xtalk {

bool compare(Comparator c, long lhs, double rhs)
{
    const auto l = static_cast<double>(lhs);
    switch (c) {
    case Comparator::Eq:
        return l == rhs;
    case Comparator::Ne:
        return l != rhs;
    case Comparator::Lt:
        return l < rhs;
    case Comparator::Le:
        return l <= rhs;
    case Comparator::Gt:
        return l > rhs;
    case Comparator::Ge:
        return l >= rhs;
    }
    return false;
}

const char* to_string(Comparator c)
{
    switch (c) {
    case Comparator::Eq:
        return "=";
    case Comparator::Ne:
        return "!=";
    case Comparator::Lt:
        return "<";
    case Comparator::Le:
        return "<=";
    case Comparator::Gt:
        return ">";
    case Comparator::Ge:
        return ">=";
    }
    return "?";
}

bool ProbBound::is_qualitative() const
{
    return (kind == Kind::Gt && p == 0.0) || (kind == Kind::Le && p == 0.0) ||
           (kind == Kind::Ge && p == 1.0) || (kind == Kind::Lt && p == 1.0);
}

bool ProbBound::holds(double value) const
{
    switch (kind) {
    case Kind::Le:
        return value <= p;
    case Kind::Lt:
        return value < p;
    case Kind::Ge:
        return value >= p;
    case Kind::Gt:
        return value > p;
    case Kind::Query:
        break;
    }
    return false;
}

Formula Formula::truth(bool v)
{
    Formula f;
    f.kind = v ? Kind::True : Kind::False;
    return f;
}

Formula Formula::atomic(std::string var, Comparator c, long k)
{
    Formula f;
    f.kind = Kind::Atomic;
    f.variable = std::move(var);
    f.comparator = c;
    f.constant = k;
    return f;
}

Formula Formula::negation(Formula a)
{
    Formula f;
    f.kind = Kind::Not;
    f.args = {std::move(a)};
    return f;
}

Formula Formula::conjunction(Formula a, Formula b)
{
    Formula f;
    f.kind = Kind::And;
    f.args = {std::move(a), std::move(b)};
    return f;
}

Formula Formula::disjunction(Formula a, Formula b)
{
    Formula f;
    f.kind = Kind::Or;
    f.args = {std::move(a), std::move(b)};
    return f;
}

Formula Formula::eventually(Formula target, std::optional<double> t)
{
    Formula f;
    f.kind = Kind::Eventually;
    f.args = {std::move(target)};
    f.time_bound = t;
    return f;
}

Formula Formula::until(Formula lhs, Formula rhs, std::optional<double> t)
{
    Formula f;
    f.kind = Kind::Until;
    f.args = {std::move(lhs), std::move(rhs)};
    f.time_bound = t;
    return f;
}

Formula Formula::prob(ProbBound b, Formula path, std::optional<Formula> filter)
{
    Formula f;
    f.kind = Kind::Prob;
    f.bound = b;
    f.args = {std::move(path)};
    if (filter)
        f.filter = {std::move(*filter)};
    return f;
}

namespace {

std::string number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

int precedence(const Formula& f)
{
    switch (f.kind) {
    case Formula::Kind::Or:
        return 1;
    case Formula::Kind::And:
        return 2;
    case Formula::Kind::Not:
        return 3;
    default:
        return 4;
    }
}

std::string wrap(const Formula& f, int min_prec)
{
    const std::string s = to_string(f);
    return precedence(f) < min_prec ? "(" + s + ")" : s;
}

std::string time_bound(const std::optional<double>& t)
{
    return t ? "<=" + number(*t) : "";
}

} // namespace

std::string to_string(const Formula& f)
{
    switch (f.kind) {
    case Formula::Kind::True:
        return "true";
    case Formula::Kind::False:
        return "false";
    case Formula::Kind::Atomic:
        return f.variable + to_string(f.comparator) + std::to_string(f.constant);
    case Formula::Kind::Not:
        return "!" + wrap(f.args[0], 4);
    case Formula::Kind::And:
        return wrap(f.args[0], 2) + " & " + wrap(f.args[1], 3);
    case Formula::Kind::Or:
        return wrap(f.args[0], 1) + " | " + wrap(f.args[1], 2);
    case Formula::Kind::Eventually:
        return "F" + time_bound(f.time_bound) + " (" + to_string(f.args[0]) + ")";
    case Formula::Kind::Until:
        return "(" + to_string(f.args[0]) + ") U" + time_bound(f.time_bound) + " (" +
               to_string(f.args[1]) + ")";
    case Formula::Kind::Prob: {
        std::string out = "P";
        switch (f.bound.kind) {
        case ProbBound::Kind::Query:
            out += "=?";
            break;
        case ProbBound::Kind::Le:
            out += "<=" + number(f.bound.p);
            break;
        case ProbBound::Kind::Lt:
            out += "<" + number(f.bound.p);
            break;
        case ProbBound::Kind::Ge:
            out += ">=" + number(f.bound.p);
            break;
        case ProbBound::Kind::Gt:
            out += ">" + number(f.bound.p);
            break;
        }
        out += " [ " + to_string(f.args[0]);
        if (const Formula* flt = f.filter_formula())
            out += " {" + to_string(*flt) + "}";
        return out + " ]";
    }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Parser

namespace {

using detail::Tok;
using detail::Token;
using detail::TokenStream;

// A parsed fragment inside P[...]: a state formula, a path formula, or a
// state formula conjoined with a path formula (`s & (a U b)`).
struct Mixed {
    std::optional<Formula> state;
    std::optional<Formula> path;
    SourcePos pos;
};

class PropertyParser {
public:
    explicit PropertyParser(TokenStream& ts) : ts_(ts) {}

    Formula formula()
    {
        Mixed m = mixed_or();
        if (m.path)
            ts_.fail_at(m.pos, "path formula outside 'P[...]'");
        return std::move(*m.state);
    }

private:
    Mixed mixed_or()
    {
        Mixed lhs = mixed_and();
        while (ts_.is_sym("|") && !ts_.is_sym("|", 1)) {
            const SourcePos pos = ts_.next().pos;
            Mixed rhs = mixed_and();
            lhs = disjoin(std::move(lhs), std::move(rhs), pos);
        }
        return lhs;
    }

    Mixed mixed_and()
    {
        Mixed lhs = mixed_until();
        while (ts_.is_sym("&")) {
            const SourcePos pos = ts_.next().pos;
            Mixed rhs = mixed_until();
            if (lhs.path && rhs.path)
                ts_.fail_at(pos, "conjunction of two path formulas is not supported");
            Mixed out{std::nullopt, lhs.path ? lhs.path : rhs.path, lhs.pos};
            if (lhs.state && rhs.state)
                out.state = Formula::conjunction(std::move(*lhs.state), std::move(*rhs.state));
            else
                out.state = lhs.state ? lhs.state : rhs.state;
            lhs = std::move(out);
        }
        return lhs;
    }

    Mixed mixed_until()
    {
        const SourcePos pos = ts_.peek().pos;
        if (ts_.is_ident("F")) {
            ts_.next();
            const auto t = time_bound();
            Mixed target = mixed_and();
            return {std::nullopt, Formula::eventually(as_state(std::move(target)), t), pos};
        }
        Mixed lhs = primary();
        if (!ts_.is_ident("U"))
            return lhs;
        ts_.next();
        if (lhs.path)
            ts_.fail_at(pos, "left operand of 'U' must be a state formula");
        const auto t = time_bound();
        Mixed rhs = mixed_until();
        return {std::nullopt, Formula::until(std::move(*lhs.state), as_state(std::move(rhs)), t),
                pos};
    }

    Mixed primary()
    {
        const Token& tok = ts_.peek();
        const SourcePos pos = tok.pos;
        if (ts_.accept_sym("!")) {
            Mixed inner = primary();
            if (inner.path)
                ts_.fail_at(pos, "negation of a path formula is not supported");
            return state(Formula::negation(std::move(*inner.state)), pos);
        }
        if (ts_.accept_sym("(")) {
            Mixed inner = mixed_or();
            ts_.expect_sym(")", "to close parenthesis");
            return inner;
        }
        if (tok.kind != Tok::Ident)
            ts_.fail("expected a state formula, found " + detail::describe(tok));
        if (tok.text == "true" || tok.text == "false") {
            const bool v = ts_.next().text == "true";
            return state(Formula::truth(v), pos);
        }
        if (tok.text == "P" && (ts_.is_sym("=", 1) || ts_.is_sym("<", 1) || ts_.is_sym("<=", 1) ||
                                ts_.is_sym(">", 1) || ts_.is_sym(">=", 1)))
            return prob();
        const std::string var = ts_.next().text;
        const Comparator c = comparator();
        const long k = ts_.expect_signed_int("after comparison");
        return state(Formula::atomic(var, c, k), pos);
    }

    Mixed prob()
    {
        const SourcePos pos = ts_.next().pos; // P
        ProbBound b;
        const Token op = ts_.next();
        if (op.text == "=") {
            ts_.expect_sym("?", "after 'P='");
        } else {
            if (op.text == "<=")
                b.kind = ProbBound::Kind::Le;
            else if (op.text == "<")
                b.kind = ProbBound::Kind::Lt;
            else if (op.text == ">=")
                b.kind = ProbBound::Kind::Ge;
            else
                b.kind = ProbBound::Kind::Gt;
            const SourcePos at = ts_.peek().pos;
            b.p = ts_.expect_number("as probability bound");
            if (b.p < 0.0 || b.p > 1.0)
                ts_.fail_at(at, "probability bound " + number(b.p) + " outside [0,1]");
        }
        ts_.expect_sym("[", "after probability bound");
        bounds_.push_back(b);
        Mixed body = mixed_or();
        std::optional<Formula> filter;
        if (ts_.accept_sym("{")) {
            filter = formula();
            ts_.expect_sym("}", "to close filter");
        }
        ts_.expect_sym("]", "to close 'P['");
        bounds_.pop_back();
        if (!body.path)
            ts_.fail_at(pos, "'P[...]' needs a path formula (F or U)");
        if (body.state && (b.is_query() || filter))
            ts_.fail_at(pos, "a state formula conjoined with the path needs a bound and no filter");
        Formula p = Formula::prob(b, std::move(*body.path), std::move(filter));
        if (body.state)
            return state(Formula::conjunction(std::move(*body.state), std::move(p)), pos);
        return state(std::move(p), pos);
    }

    // `F a | F b` becomes `F (a | b)`.
    Mixed disjoin(Mixed lhs, Mixed rhs, SourcePos pos)
    {
        if (!lhs.path && !rhs.path)
            return state(Formula::disjunction(std::move(*lhs.state), std::move(*rhs.state)), lhs.pos);
        const bool merge = !lhs.state && !rhs.state && lhs.path && rhs.path &&
                           lhs.path->kind == Formula::Kind::Eventually &&
                           rhs.path->kind == Formula::Kind::Eventually &&
                           lhs.path->time_bound == rhs.path->time_bound;
        if (!merge)
            ts_.fail_at(pos, "only 'F a | F b' with equal time bounds may be disjoined as paths");
        return {std::nullopt,
                Formula::eventually(Formula::disjunction(std::move(lhs.path->args[0]),
                                                         std::move(rhs.path->args[0])),
                                    lhs.path->time_bound),
                lhs.pos};
    }

    // Paths nested in operand position inherit the enclosing bound.
    Formula as_state(Mixed m)
    {
        if (!m.path)
            return std::move(*m.state);
        if (bounds_.empty() || bounds_.back().is_query())
            ts_.fail_at(m.pos, "nested path formula needs an enclosing bounded 'P'");
        Formula p = Formula::prob(bounds_.back(), std::move(*m.path));
        if (m.state)
            return Formula::conjunction(std::move(*m.state), std::move(p));
        return p;
    }

    std::optional<double> time_bound()
    {
        if (!ts_.accept_sym("<="))
            return std::nullopt;
        const SourcePos at = ts_.peek().pos;
        const bool neg = ts_.accept_sym("-");
        const double t = ts_.expect_number("as time bound");
        if (neg && t != 0.0)
            ts_.fail_at(at, "time bound must be non-negative");
        return t;
    }

    Comparator comparator()
    {
        const Token t = ts_.next();
        if (t.kind == Tok::Sym) {
            if (t.text == "=")
                return Comparator::Eq;
            if (t.text == "!=")
                return Comparator::Ne;
            if (t.text == "<")
                return Comparator::Lt;
            if (t.text == "<=")
                return Comparator::Le;
            if (t.text == ">")
                return Comparator::Gt;
            if (t.text == ">=")
                return Comparator::Ge;
        }
        ts_.fail_at(t.pos, "expected comparison operator, found " + detail::describe(t));
    }

    static Mixed state(Formula f, SourcePos pos) { return {std::move(f), std::nullopt, pos}; }

    TokenStream& ts_;
    std::vector<ProbBound> bounds_;
};

} // namespace

Formula parse_property(std::string_view text)
{
    TokenStream ts(text);
    Formula f = PropertyParser(ts).formula();
    if (!ts.at_end())
        ts.fail("unexpected " + detail::describe(ts.peek()) + " after property");
    return f;
}

std::vector<NamedProperty> parse_property_file(std::string_view text)
{
    TokenStream ts(text);
    std::vector<NamedProperty> out;
    std::set<std::string> names;
    while (!ts.at_end()) {
        NamedProperty p;
        const SourcePos pos = ts.peek().pos;
        if (ts.peek().kind == Tok::Ident && ts.is_sym(":", 1)) {
            p.name = ts.next().text;
            ts.next();
        } else {
            p.name = "property" + std::to_string(out.size() + 1);
        }
        if (!names.insert(p.name).second)
            ts.fail_at(pos, "duplicate property name '" + p.name + "'");
        p.formula = PropertyParser(ts).formula();
        ts.accept_sym(";");
        out.push_back(std::move(p));
    }
    return out;
}

std::string serialise(const std::vector<NamedProperty>& props)
{
    std::string out;
    for (const auto& p : props)
        out += p.name + " : " + to_string(p.formula) + "\n";
    return out;
}

} // namespace xtalk
