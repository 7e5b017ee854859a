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

#include "crosstalk/expr.hpp"

#include <algorithm>
#include <cassert>

namespace xtalk {

Expr Expr::integer(std::int64_t v, SourcePos pos)
{
    Expr e;
    e.op = ExprOp::Int;
    e.value = v;
    e.pos = pos;
    return e;
}

Expr Expr::boolean(bool v, SourcePos pos)
{
    Expr e;
    e.op = ExprOp::Bool;
    e.value = v ? 1 : 0;
    e.pos = pos;
    return e;
}

Expr Expr::variable(std::string name, SourcePos pos)
{
    Expr e;
    e.op = ExprOp::Var;
    e.name = std::move(name);
    e.pos = pos;
    return e;
}

Expr Expr::unary(ExprOp op, Expr arg, SourcePos pos)
{
    Expr e;
    e.op = op;
    e.args.push_back(std::move(arg));
    e.pos = pos;
    return e;
}

Expr Expr::binary(ExprOp op, Expr lhs, Expr rhs, SourcePos pos)
{
    Expr e;
    e.op = op;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    e.pos = pos;
    return e;
}

bool Expr::is_boolean() const
{
    switch (op) {
    case ExprOp::Bool:
    case ExprOp::Eq: case ExprOp::Ne: case ExprOp::Lt:
    case ExprOp::Le: case ExprOp::Gt: case ExprOp::Ge:
    case ExprOp::Not: case ExprOp::And: case ExprOp::Or:
        return true;
    default:
        return false;
    }
}

void Expr::collect_variables(std::set<std::string>& out) const
{
    if (op == ExprOp::Var)
        out.insert(name);
    for (const auto& a : args)
        a.collect_variables(out);
}

Expr Expr::rename_variables(const std::function<std::string(const std::string&)>& f) const
{
    Expr copy = *this;
    if (copy.op == ExprOp::Var)
        copy.name = f(copy.name);
    for (auto& a : copy.args)
        a = a.rename_variables(f);
    return copy;
}

namespace {

// Higher binds tighter.
int precedence(ExprOp op)
{
    switch (op) {
    case ExprOp::Or: return 1;
    case ExprOp::And: return 2;
    case ExprOp::Not: return 3;
    case ExprOp::Eq: case ExprOp::Ne: case ExprOp::Lt:
    case ExprOp::Le: case ExprOp::Gt: case ExprOp::Ge: return 4;
    case ExprOp::Add: case ExprOp::Sub: return 5;
    case ExprOp::Mul: return 6;
    case ExprOp::Neg: return 7;
    default: return 8;
    }
}

const char* symbol(ExprOp op)
{
    switch (op) {
    case ExprOp::Add: return "+";
    case ExprOp::Sub: return "-";
    case ExprOp::Mul: return "*";
    case ExprOp::Eq: return "=";
    case ExprOp::Ne: return "!=";
    case ExprOp::Lt: return "<";
    case ExprOp::Le: return "<=";
    case ExprOp::Gt: return ">";
    case ExprOp::Ge: return ">=";
    case ExprOp::And: return "&";
    case ExprOp::Or: return "|";
    default: return "?";
    }
}

std::string wrap(const Expr& e, bool parens)
{
    return parens ? "(" + to_string(e) + ")" : to_string(e);
}

} // namespace

std::string to_string(const Expr& e)
{
    switch (e.op) {
    case ExprOp::Int:
        return std::to_string(e.value);
    case ExprOp::Bool:
        return e.value ? "true" : "false";
    case ExprOp::Var:
        return e.name;
    case ExprOp::Neg:
        return "-" + wrap(e.args[0], precedence(e.args[0].op) <= precedence(ExprOp::Neg));
    case ExprOp::Not:
        return "!" + wrap(e.args[0], precedence(e.args[0].op) < precedence(ExprOp::Not) ||
                                         e.args[0].op == ExprOp::Not);
    default:
        break;
    }
    const int p = precedence(e.op);
    // Comparisons do not chain, so both sides of one need parens at equal precedence.
    const bool is_cmp = p == precedence(ExprOp::Eq);
    const bool lp = precedence(e.args[0].op) < p || (is_cmp && precedence(e.args[0].op) == p);
    const bool rp = precedence(e.args[1].op) <= p;
    return wrap(e.args[0], lp) + " " + symbol(e.op) + " " + wrap(e.args[1], rp);
}

CompiledExpr::CompiledExpr(const Expr& e, const std::map<std::string, std::size_t>& slots)
{
    emit(e, slots);
    std::size_t depth = 0;
    for (const auto& ins : code_) {
        if (ins.op == ExprOp::Int || ins.op == ExprOp::Bool || ins.op == ExprOp::Var)
            max_depth_ = std::max(max_depth_, ++depth);
        else if (ins.op != ExprOp::Neg && ins.op != ExprOp::Not)
            --depth;
    }
}

void CompiledExpr::emit(const Expr& e, const std::map<std::string, std::size_t>& slots)
{
    for (const auto& a : e.args)
        emit(a, slots);
    std::int64_t operand = e.value;
    if (e.op == ExprOp::Var) {
        auto it = slots.find(e.name);
        if (it == slots.end())
            throw ModelError("unknown variable '" + e.name + "'");
        operand = static_cast<std::int64_t>(it->second);
    }
    code_.push_back({e.op, operand});
}

std::int64_t CompiledExpr::eval(std::span<const int> state) const
{
    std::int64_t local[32] = {};
    std::vector<std::int64_t> heap;
    std::int64_t* stack = local;
    if (max_depth_ > 32) {
        heap.resize(max_depth_);
        stack = heap.data();
    }
    std::size_t top = 0;
    for (const auto& ins : code_) {
        switch (ins.op) {
        case ExprOp::Int:
        case ExprOp::Bool:
            stack[top++] = ins.operand;
            break;
        case ExprOp::Var:
            stack[top++] = state[static_cast<std::size_t>(ins.operand)];
            break;
        case ExprOp::Neg:
            stack[top - 1] = -stack[top - 1];
            break;
        case ExprOp::Not:
            stack[top - 1] = stack[top - 1] == 0 ? 1 : 0;
            break;
        default: {
            const std::int64_t b = stack[--top];
            const std::int64_t a = stack[top - 1];
            std::int64_t r = 0;
            switch (ins.op) {
            case ExprOp::Add: r = a + b; break;
            case ExprOp::Sub: r = a - b; break;
            case ExprOp::Mul: r = a * b; break;
            case ExprOp::Eq: r = a == b; break;
            case ExprOp::Ne: r = a != b; break;
            case ExprOp::Lt: r = a < b; break;
            case ExprOp::Le: r = a <= b; break;
            case ExprOp::Gt: r = a > b; break;
            case ExprOp::Ge: r = a >= b; break;
            case ExprOp::And: r = (a != 0) && (b != 0); break;
            case ExprOp::Or: r = (a != 0) || (b != 0); break;
            default: assert(false);
            }
            stack[top - 1] = r;
        }
        }
    }
    assert(top == 1);
    return stack[0];
}

} // namespace xtalk
