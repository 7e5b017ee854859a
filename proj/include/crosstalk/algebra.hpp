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

#ifndef CROSSTALK_ALGEBRA_HPP
#define CROSSTALK_ALGEBRA_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crosstalk/composition.hpp"
#include "crosstalk/model.hpp"

namespace xtalk {

/// Index carried by every label of a generic (`e1_1`, `e2_1`, ... -> 1),
/// or nullopt when the labels do not share one.
std::optional<int> home_index(const ModuleDef& generic);

/// Copy of `generic` for instance `index`: labels `x_<home>` become
/// `x_<index>`, and in variable names the last digit run equal to the home
/// index is replaced (`R1Active` -> `R2Active`). Names that do not carry the
/// home index get `_<index>` appended. Index 0 returns the module unchanged.
///
/// Throws ModelError for a negative index or when renaming makes two
/// variables collide.
ModuleDef instantiate(const ModuleDef& generic, int index);

/// Name under which an instance appears in compositions (`Receptor_2`).
std::string instance_name(const std::string& module, int index);

/// Hands out instances and rejects reuse of an index for the same generic.
class Instantiator {
public:
    explicit Instantiator(const Model& model) : model_(model) {}

    /// Throws ModelError for unknown modules or an index already in use.
    ModuleDef make(const std::string& module, int index);

private:
    const Model& model_;
    std::set<std::pair<std::string, int>> used_;
};

using Alphabet = std::set<std::string>;

/// External labels of a composition: instance labels, mapped through
/// renamings, minus hidden labels; parallel nodes take the union.
Alphabet alphabet(const CompositionExpr& expr, const Model& model);

struct IndependenceResult {
    bool independent = true;
    std::set<std::string> shared;
};

/// Pathways are independent iff their external alphabets are disjoint.
IndependenceResult independence_check(const CompositionExpr& p1, const CompositionExpr& p2,
                                      const Model& model);

/// One module-local command label taking part in a joint transition.
struct Participant {
    std::size_t module = 0;
    std::string label;
    bool operator==(const Participant&) const = default;
};

/// One way a transition with the given (post-renaming) label can happen:
/// every participant must fire a command carrying its local label.
struct SyncVector {
    std::string label;
    bool hidden = false;
    std::vector<Participant> participants;
};

struct FlatSystem {
    std::vector<ModuleDef> modules;
    std::vector<SyncVector> vectors;
    /// Labels dropped because a sync set required a partner that lacks them.
    std::set<std::string> blocked;
    std::vector<std::string> warnings;

    /// Union of the modules taking part in any vector carrying `label`.
    std::set<std::size_t> participation(const std::string& label) const;
};

/// Resolves instances, renaming, hiding and synchronisation into the list
/// of modules plus the synchronisation vectors the CTMC builder enumerates.
///
/// Throws ModelError when an instance is used twice, two modules declare the
/// same variable, or a renaming is not injective on its child's alphabet.
FlatSystem flatten(const CompositionExpr& expr, const Model& model);

/// Where an external label of a composition comes from.
struct LabelOrigin {
    std::string module;        // generic module name
    int index = 0;             // instance index
    std::string generic_label; // label as written in the generic
};

/// For every external label, the instance labels that carry it.
std::map<std::string, std::vector<LabelOrigin>> label_origins(const CompositionExpr& expr,
                                                              const Model& model);

} // namespace xtalk

#endif // CROSSTALK_ALGEBRA_HPP
