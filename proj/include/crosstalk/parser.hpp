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

#ifndef CROSSTALK_PARSER_HPP
#define CROSSTALK_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "crosstalk/composition.hpp"
#include "crosstalk/csl.hpp"
#include "crosstalk/model.hpp"

namespace xtalk {

/// Parses a `.ctk` model file: modules, annotation blocks, and named
/// pathway/system compositions. Compositions may refer to modules and
/// compositions declared earlier in the same text.
///
/// Throws ParseError (with line and column) on syntax errors, duplicate
/// variables, writes to variables of another module, init values outside
/// their range, and undeclared identifiers.
Model parse_model(std::string_view text);

std::string serialise(const ModuleDef& m);
std::string serialise(const Model& m);

struct CompositionParse {
    CompositionExpr expr;
    std::vector<std::string> warnings;
};

/// Parses a composition expression against `model`. Bare identifiers resolve
/// to, in order: a named composition, a module as declared, or an instance
/// `Generic_<index>`.
CompositionParse parse_composition(std::string_view text, const Model& model);

/// Parses one CSL formula, e.g. `P=? [ F<=3 (Protein1 = 1) ]`.
Formula parse_property(std::string_view text);

/// Parses a `.csl` file: one `name : formula` per line; `//` comments.
std::vector<NamedProperty> parse_property_file(std::string_view text);

std::string serialise(const std::vector<NamedProperty>& props);

} // namespace xtalk

#endif // CROSSTALK_PARSER_HPP
