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

#ifndef CROSSTALK_CROSSTALK_HPP
#define CROSSTALK_CROSSTALK_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "crosstalk/checker.hpp"
#include "crosstalk/composition.hpp"
#include "crosstalk/csl.hpp"
#include "crosstalk/ctmc.hpp"
#include "crosstalk/model.hpp"

namespace xtalk {

enum class Category {
    Independent,
    SignalFlow,
    SubstrateAvailability,
    ReceptorFunction,
    GeneExpression,
    IntracellularCommunication,
    Unclassified,
};

std::string_view to_string(Category c);

/// Role and module kind of one instance label behind a shared label.
struct SharedOrigin {
    std::string module; // instance name, e.g. Cascade3_1
    std::string label;  // generic label
    Role role = Role::Catalysis;
    ModuleKind kind = ModuleKind::Cascade;
};

struct SharedLabel {
    std::string label;
    std::vector<SharedOrigin> left;
    std::vector<SharedOrigin> right;
};

struct Classification {
    Category category = Category::Independent;
    std::set<std::string> shared;     // E, post-renaming
    std::vector<SharedLabel> origins; // one entry per label in E
};

/// Categorises the interaction between two pathway compositions from the
/// role annotations behind E = ext(p1) & ext(p2). Throws AnnotationError
/// when a label in E has an origin without an annotation.
Classification classify(const CompositionExpr& p1, const CompositionExpr& p2, const Model& model);

struct DetectionRow {
    std::string name;
    Formula property;
    double baseline = 0.0;
    double model = 0.0;
    double delta = 0.0;
};

struct DetectionReport {
    std::vector<DetectionRow> rows;
    double threshold = 1e-5;
    bool detected = false;
};

/// Competitive signal flow and the two time-dependent signal flows.
std::vector<NamedProperty> detection_properties();

/// Throws ModelError when a CTMC lacks Protein1 or Protein2.
DetectionReport detect(const Ctmc& baseline, const Ctmc& model, double threshold = 1e-5,
                       const CheckerOptions& options = {});

struct SignatureVerdict {
    std::string name;
    Category category = Category::Independent;
    Formula property;
    bool holds = false;
    std::vector<std::string> warnings;
};

struct CharacterisationReport {
    std::vector<SignatureVerdict> verdicts; // in signature_properties() order
};

/// The five signatures, in category order: signal flow, substrate
/// availability, receptor function, gene expression, intracellular
/// communication.
std::vector<NamedProperty> signature_properties();

/// Receptor activation without ligand never leads to protein expression,
/// for either pathway.
NamedProperty independence_property();

CharacterisationReport characterise(const Ctmc& model, const CheckerOptions& options = {});

} // namespace xtalk

#endif // CROSSTALK_CROSSTALK_HPP
