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

#ifndef CROSSTALK_FIXTURES_HPP
#define CROSSTALK_FIXTURES_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crosstalk/composition.hpp"
#include "crosstalk/csl.hpp"
#include "crosstalk/model.hpp"

namespace xtalk {

/// One row of `expected.tsv`.
struct Expected {
    std::string fixture;
    std::string property;
    std::string value;      // number, true/false, or "<1"
    std::string provenance; // published, derived or informational

    /// Half a unit in the last printed digit: 5e-4 for "0.500".
    double tolerance() const;
};

struct Fixture {
    std::string name;
    std::string system; // composition the fixture checks
    std::filesystem::path model_path;
    std::filesystem::path property_path;
    std::string model_text;
    std::string property_text;
    Model model;
    std::vector<NamedProperty> properties;
    std::vector<Expected> expected;

    const CompositionExpr& composition() const { return model.composition(system); }
};

/// CROSSTALK_FIXTURES if set, else the directory configured at build time.
std::filesystem::path fixtures_dir();

/// independent, signal-flow, substrate-availability, receptor-function,
/// gene-expression, intracellular-communication.
const std::vector<std::string>& crosstalk_fixture_names();

/// Parsed and validated fixture. Throws ModelError for unknown names.
Fixture load_fixture(std::string_view name);

/// Reconstructed TGF-beta/BMP, WNT and MAPK skeleton. Its systems are
/// CaseIndependent, CaseNoFeedback, CaseMAPK, CaseWNT and CaseCombined;
/// `system` is CaseCombined.
Fixture case_study_skeleton();

std::vector<Expected> parse_expected(std::string_view tsv);

/// Left and right operands of a system's outermost parallel composition.
std::pair<CompositionExpr, CompositionExpr> split_system(const CompositionExpr& system);

std::string read_file(const std::filesystem::path& path);

} // namespace xtalk

#endif // CROSSTALK_FIXTURES_HPP
