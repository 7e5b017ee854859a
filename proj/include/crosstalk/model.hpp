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

#ifndef CROSSTALK_MODEL_HPP
#define CROSSTALK_MODEL_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "crosstalk/composition.hpp"
#include "crosstalk/error.hpp"
#include "crosstalk/expr.hpp"

namespace xtalk {

/// Bounded integer variable. Levels abstract concentrations.
struct VarDecl {
    std::string name;
    int lower = 0;
    int upper = 0;
    int init = 0;
    SourcePos pos;
    bool operator==(const VarDecl&) const = default;
};

struct Assignment {
    std::string variable;
    Expr value;
    bool operator==(const Assignment&) const = default;
};

/// `[label] guard -> rate : update;` An empty label marks an
/// unlabelled command, which never synchronises.
struct Command {
    std::string label;
    Expr guard;
    Expr rate;
    std::vector<Assignment> updates;
    SourcePos pos;
    bool operator==(const Command&) const = default;
};

struct ModuleDef {
    std::string name;
    std::vector<VarDecl> variables;
    std::vector<Command> commands;
    SourcePos pos;
    bool operator==(const ModuleDef&) const = default;

    /// Distinct non-empty command labels, in order of first appearance.
    std::vector<std::string> labels() const;
    const VarDecl* find_variable(std::string_view name) const;
};

enum class Role {
    Catalysis,
    Inhibition,
    AlternativeActivation,
    Degradation,
    LigandProduction,
    Expression,
    Binding,
    Activation,
};

enum class ModuleKind {
    Receptor,
    Cascade,
    ProteinActivation,
    Translocation,
    ProteinBinding,
    GeneExpression,
};

std::string_view to_string(Role r);
std::string_view to_string(ModuleKind k);
std::optional<Role> parse_role(std::string_view s);
std::optional<ModuleKind> parse_module_kind(std::string_view s);

/// Machine-readable role of one label of one module.
struct RoleAnnotation {
    std::string module;
    std::string label;
    Role role = Role::Catalysis;
    ModuleKind kind = ModuleKind::Receptor;
    SourcePos pos;
    bool operator==(const RoleAnnotation&) const = default;
};

/// `pathway NAME = expr;` or `system NAME = expr;`
struct NamedComposition {
    enum class Kind { Pathway, System };
    Kind kind = Kind::Pathway;
    std::string name;
    CompositionExpr expr = CompositionExpr::instance("", 0);
    bool operator==(const NamedComposition&) const = default;
};

/// Contents of one `.ctk` file.
struct Model {
    std::vector<ModuleDef> modules;
    std::vector<RoleAnnotation> annotations;
    std::vector<NamedComposition> compositions;
    std::vector<std::string> warnings;

    bool operator==(const Model& o) const
    {
        return modules == o.modules && annotations == o.annotations &&
               compositions == o.compositions;
    }

    const ModuleDef* find_module(std::string_view name) const;
    const NamedComposition* find_composition(std::string_view name) const;

    /// Throws ModelError naming the missing composition.
    const CompositionExpr& composition(std::string_view name) const;

    /// Annotation of `label` in module `module` (generic names), if any.
    const RoleAnnotation* find_annotation(std::string_view module, std::string_view label) const;
};

} // namespace xtalk

#endif // CROSSTALK_MODEL_HPP
