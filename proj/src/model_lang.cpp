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

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

#include "crosstalk/parser.hpp"
#include "lexer.hpp"
#include "parsers.hpp"

namespace xtalk {

using detail::Tok;
using detail::TokenStream;

std::vector<std::string> ModuleDef::labels() const
{
    std::vector<std::string> out;
    for (const auto& c : commands)
        if (!c.label.empty() && std::find(out.begin(), out.end(), c.label) == out.end())
            out.push_back(c.label);
    return out;
}

const VarDecl* ModuleDef::find_variable(std::string_view n) const
{
    for (const auto& v : variables)
        if (v.name == n)
            return &v;
    return nullptr;
}

const ModuleDef* Model::find_module(std::string_view n) const
{
    for (const auto& m : modules)
        if (m.name == n)
            return &m;
    return nullptr;
}

const NamedComposition* Model::find_composition(std::string_view n) const
{
    for (const auto& c : compositions)
        if (c.name == n)
            return &c;
    return nullptr;
}

const CompositionExpr& Model::composition(std::string_view n) const
{
    if (const auto* c = find_composition(n))
        return c->expr;
    throw ModelError("no pathway or system named '" + std::string(n) + "'");
}

const RoleAnnotation* Model::find_annotation(std::string_view module, std::string_view label) const
{
    for (const auto& a : annotations)
        if (a.module == module && a.label == label)
            return &a;
    return nullptr;
}

namespace {

constexpr std::array<std::pair<Role, std::string_view>, 8> kRoles{{
    {Role::Catalysis, "catalysis"},
    {Role::Inhibition, "inhibition"},
    {Role::AlternativeActivation, "alternative-activation"},
    {Role::Degradation, "degradation"},
    {Role::LigandProduction, "ligand-production"},
    {Role::Expression, "expression"},
    {Role::Binding, "binding"},
    {Role::Activation, "activation"},
}};

constexpr std::array<std::pair<ModuleKind, std::string_view>, 6> kKinds{{
    {ModuleKind::Receptor, "receptor"},
    {ModuleKind::Cascade, "cascade"},
    {ModuleKind::ProteinActivation, "protein-activation"},
    {ModuleKind::Translocation, "translocation"},
    {ModuleKind::ProteinBinding, "protein-binding"},
    {ModuleKind::GeneExpression, "gene-expression"},
}};

} // namespace

std::string_view to_string(Role r)
{
    for (const auto& [k, s] : kRoles)
        if (k == r)
            return s;
    return "?";
}

std::string_view to_string(ModuleKind k)
{
    for (const auto& [kk, s] : kKinds)
        if (kk == k)
            return s;
    return "?";
}

std::optional<Role> parse_role(std::string_view s)
{
    for (const auto& [k, name] : kRoles)
        if (name == s)
            return k;
    return std::nullopt;
}

std::optional<ModuleKind> parse_module_kind(std::string_view s)
{
    for (const auto& [k, name] : kKinds)
        if (name == s)
            return k;
    return std::nullopt;
}

namespace {

class ModelParser {
public:
    explicit ModelParser(std::string_view text) : ts_(text) {}

    Model run()
    {
        while (!ts_.at_end()) {
            if (ts_.is_ident("module"))
                parse_module();
            else if (ts_.is_ident("annotations"))
                parse_annotations();
            else if (ts_.is_ident("pathway") || ts_.is_ident("system"))
                parse_named_composition();
            else
                ts_.fail("expected 'module', 'annotations', 'pathway' or 'system', found " +
                         detail::describe(ts_.peek()));
        }
        check_identifiers();
        return std::move(model_);
    }

private:
    void parse_module()
    {
        ts_.expect_keyword("module");
        const auto name_tok = ts_.expect_ident("after 'module'");
        if (model_.find_module(name_tok.text) || model_.find_composition(name_tok.text))
            ts_.fail_at(name_tok.pos, "duplicate definition of '" + name_tok.text + "'");
        ModuleDef m;
        m.name = name_tok.text;
        m.pos = name_tok.pos;
        while (!ts_.is_ident("endmodule")) {
            if (ts_.at_end())
                ts_.fail("missing 'endmodule' for module '" + m.name + "'");
            if (ts_.is_sym("["))
                m.commands.push_back(parse_command(m));
            else if (ts_.peek().kind == Tok::Ident && ts_.is_sym(":", 1))
                m.variables.push_back(parse_variable(m));
            else
                ts_.fail("expected variable declaration or command, found " +
                         detail::describe(ts_.peek()));
        }
        ts_.next();
        for (const auto& c : m.commands) {
            for (const auto& a : c.updates) {
                if (!m.find_variable(a.variable))
                    ts_.fail_at(a.value.pos, "assignment to '" + a.variable +
                                                 "', which is not a variable of module '" +
                                                 m.name + "'");
            }
        }
        model_.modules.push_back(std::move(m));
    }

    VarDecl parse_variable(const ModuleDef& m)
    {
        const auto name = ts_.expect_ident();
        if (m.find_variable(name.text))
            ts_.fail_at(name.pos, "duplicate variable '" + name.text + "' in module '" + m.name + "'");
        ts_.expect_sym(":");
        ts_.expect_sym("[", "to open variable range");
        VarDecl v;
        v.name = name.text;
        v.pos = name.pos;
        v.lower = static_cast<int>(ts_.expect_signed_int("as lower bound"));
        ts_.expect_sym("..", "in variable range");
        v.upper = static_cast<int>(ts_.expect_signed_int("as upper bound"));
        ts_.expect_sym("]", "to close variable range");
        if (v.lower > v.upper)
            ts_.fail_at(name.pos, "empty range for variable '" + v.name + "'");
        v.init = v.lower;
        if (ts_.accept_ident("init")) {
            const auto pos = ts_.peek().pos;
            v.init = static_cast<int>(ts_.expect_signed_int("as initial value"));
            if (v.init < v.lower || v.init > v.upper)
                ts_.fail_at(pos, "initial value " + std::to_string(v.init) + " of '" + v.name +
                                     "' is outside [" + std::to_string(v.lower) + ".." +
                                     std::to_string(v.upper) + "]");
        }
        ts_.expect_sym(";", "after variable declaration");
        return v;
    }

    Command parse_command(const ModuleDef& m)
    {
        Command c;
        c.pos = ts_.expect_sym("[").pos;
        if (ts_.peek().kind == Tok::Ident)
            c.label = ts_.next().text;
        ts_.expect_sym("]", "to close command label");
        c.guard = ts_.parse_expr();
        if (!c.guard.is_boolean())
            ts_.fail_at(c.guard.pos, "guard must be a boolean expression");
        if (!ts_.is_sym("->"))
            ts_.fail("expected '->' after guard of command in module '" + m.name + "' (line " +
                     std::to_string(c.pos.line) + "), found " + detail::describe(ts_.peek()));
        ts_.next();
        c.rate = ts_.parse_expr();
        if (c.rate.is_boolean())
            ts_.fail_at(c.rate.pos, "rate must be an arithmetic expression");
        ts_.expect_sym(":", "between rate and update");
        if (!ts_.accept_ident("true")) {
            std::set<std::string> written;
            do {
                ts_.expect_sym("(", "to open assignment");
                const auto target = ts_.expect_ident("as assignment target");
                ts_.expect_sym("'", "after assignment target");
                ts_.expect_sym("=", "in assignment");
                Assignment a;
                a.variable = target.text;
                a.value = ts_.parse_expr();
                a.value.pos = target.pos;
                if (a.value.is_boolean())
                    ts_.fail_at(target.pos, "assigned value must be arithmetic");
                ts_.expect_sym(")", "to close assignment");
                if (!written.insert(a.variable).second)
                    ts_.fail_at(target.pos, "variable '" + a.variable + "' assigned twice");
                c.updates.push_back(std::move(a));
            } while (ts_.accept_sym("&"));
        }
        ts_.expect_sym(";", "after command");
        return c;
    }

    std::string parse_hyphenated()
    {
        std::string word = ts_.expect_ident().text;
        while (ts_.is_sym("-") && ts_.peek(1).kind == Tok::Ident) {
            ts_.next();
            word += "-" + ts_.next().text;
        }
        return word;
    }

    void parse_annotations()
    {
        ts_.expect_keyword("annotations");
        const auto mod = ts_.expect_ident("naming the annotated module");
        const ModuleDef* m = model_.find_module(mod.text);
        if (!m)
            ts_.fail_at(mod.pos, "annotations for unknown module '" + mod.text + "'");
        const auto labels = m->labels();
        while (!ts_.accept_ident("endannotations")) {
            if (ts_.at_end())
                ts_.fail("missing 'endannotations'");
            RoleAnnotation a;
            a.module = mod.text;
            const auto label = ts_.expect_ident("as annotated label");
            a.label = label.text;
            a.pos = label.pos;
            if (std::find(labels.begin(), labels.end(), a.label) == labels.end())
                ts_.fail_at(label.pos, "module '" + mod.text + "' has no label '" + a.label + "'");
            if (model_.find_annotation(a.module, a.label))
                ts_.fail_at(label.pos, "label '" + a.label + "' annotated twice");
            ts_.expect_sym(":", "after annotated label");
            const auto role_pos = ts_.peek().pos;
            const auto role = parse_role(parse_hyphenated());
            if (!role)
                ts_.fail_at(role_pos, "unknown role");
            const auto kind_pos = ts_.peek().pos;
            const auto kind = parse_module_kind(parse_hyphenated());
            if (!kind)
                ts_.fail_at(kind_pos, "unknown module kind");
            a.role = *role;
            a.kind = *kind;
            ts_.expect_sym(";", "after annotation");
            model_.annotations.push_back(std::move(a));
        }
    }

    void parse_named_composition()
    {
        NamedComposition nc;
        nc.kind = ts_.next().text == "system" ? NamedComposition::Kind::System
                                              : NamedComposition::Kind::Pathway;
        const auto name = ts_.expect_ident("as composition name");
        if (model_.find_module(name.text) || model_.find_composition(name.text))
            ts_.fail_at(name.pos, "duplicate definition of '" + name.text + "'");
        nc.name = name.text;
        ts_.expect_sym("=", "after composition name");
        nc.expr = detail::parse_composition_expr(ts_, model_, model_.warnings);
        ts_.expect_sym(";", "after composition");
        model_.compositions.push_back(std::move(nc));
    }

    void check_identifiers()
    {
        std::set<std::string> declared;
        for (const auto& m : model_.modules)
            for (const auto& v : m.variables)
                declared.insert(v.name);
        auto check = [&](const Expr& e) {
            std::set<std::string> used;
            e.collect_variables(used);
            for (const auto& u : used) {
                if (!declared.count(u))
                    throw ParseError(find_pos(e, u), "undeclared identifier '" + u + "'");
            }
        };
        for (const auto& m : model_.modules) {
            for (const auto& c : m.commands) {
                check(c.guard);
                check(c.rate);
                for (const auto& a : c.updates)
                    check(a.value);
            }
        }
    }

    static SourcePos find_pos(const Expr& e, const std::string& var)
    {
        if (e.op == ExprOp::Var && e.name == var)
            return e.pos;
        for (const auto& a : e.args) {
            std::set<std::string> s;
            a.collect_variables(s);
            if (s.count(var))
                return find_pos(a, var);
        }
        return e.pos;
    }

    TokenStream ts_;
    Model model_;
};

} // namespace

Model parse_model(std::string_view text)
{
    return ModelParser(text).run();
}

std::string serialise(const ModuleDef& m)
{
    std::ostringstream os;
    os << "module " << m.name << "\n";
    for (const auto& v : m.variables)
        os << "  " << v.name << " : [" << v.lower << ".." << v.upper << "] init " << v.init
           << ";\n";
    if (!m.variables.empty() && !m.commands.empty())
        os << "\n";
    for (const auto& c : m.commands) {
        os << "  [" << c.label << "] " << to_string(c.guard) << " -> " << to_string(c.rate) << " : ";
        if (c.updates.empty())
            os << "true";
        for (std::size_t i = 0; i < c.updates.size(); ++i) {
            if (i)
                os << " & ";
            os << "(" << c.updates[i].variable << "' = " << to_string(c.updates[i].value) << ")";
        }
        os << ";\n";
    }
    os << "endmodule\n";
    return os.str();
}

std::string serialise(const Model& m)
{
    std::ostringstream os;
    for (const auto& mod : m.modules) {
        os << serialise(mod) << "\n";
        bool any = false;
        for (const auto& a : m.annotations) {
            if (a.module != mod.name)
                continue;
            if (!any)
                os << "annotations " << mod.name << "\n";
            any = true;
            os << "  " << a.label << " : " << to_string(a.role) << " " << to_string(a.kind)
               << ";\n";
        }
        if (any)
            os << "endannotations\n\n";
    }
    for (const auto& c : m.compositions) {
        os << (c.kind == NamedComposition::Kind::System ? "system " : "pathway ") << c.name
           << " = " << to_string(c.expr) << ";\n";
    }
    return os.str();
}

} // namespace xtalk
