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

#ifndef CROSSTALK_EXPR_HPP
#define CROSSTALK_EXPR_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "crosstalk/error.hpp"

namespace xtalk {

enum class ExprOp {
    Int, Bool, Var,
    Neg, Add, Sub, Mul,
    Eq, Ne, Lt, Le, Gt, Ge,
    Not, And, Or,
};

/// Integer/boolean expression over module variables, as used in guards,
/// rates and update right-hand sides.
struct Expr {
    ExprOp op = ExprOp::Int;
    std::int64_t value = 0; // Int, Bool
    std::string name;       // Var
    std::vector<Expr> args;
    SourcePos pos;

    bool operator==(const Expr&) const = default;

    static Expr integer(std::int64_t v, SourcePos pos = {});
    static Expr boolean(bool v, SourcePos pos = {});
    static Expr variable(std::string name, SourcePos pos = {});
    static Expr unary(ExprOp op, Expr arg, SourcePos pos = {});
    static Expr binary(ExprOp op, Expr lhs, Expr rhs, SourcePos pos = {});

    /// True when the expression denotes a truth value.
    bool is_boolean() const;

    void collect_variables(std::set<std::string>& out) const;
    Expr rename_variables(const std::function<std::string(const std::string&)>& f) const;
};

/// Canonical text form, parenthesised only where precedence requires it.
std::string to_string(const Expr& e);

/// Stack-machine form of an Expr with variables resolved to state slots.
class CompiledExpr {
public:
    CompiledExpr() = default;

    /// Throws ModelError if a variable is missing from `slots`.
    CompiledExpr(const Expr& e, const std::map<std::string, std::size_t>& slots);

    std::int64_t eval(std::span<const int> state) const;

private:
    struct Instr {
        ExprOp op;
        std::int64_t operand;
    };
    void emit(const Expr& e, const std::map<std::string, std::size_t>& slots);

    std::vector<Instr> code_;
    std::size_t max_depth_ = 0;
};

} // namespace xtalk

#endif // CROSSTALK_EXPR_HPP
