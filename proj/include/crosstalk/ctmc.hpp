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

#ifndef CROSSTALK_CTMC_HPP
#define CROSSTALK_CTMC_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crosstalk/algebra.hpp"

namespace xtalk {

struct Transition {
    std::size_t source = 0;
    std::size_t label = 0; // index into Ctmc::labels
    double rate = 0.0;
    std::size_t target = 0;
    bool operator==(const Transition&) const = default;
};

/// Explicit CTMC over variable valuations. Transitions are grouped by
/// source; `row_offsets[s] .. row_offsets[s+1]` are the ones leaving `s`.
struct Ctmc {
    std::vector<VarDecl> variables;
    std::vector<int> valuations; // num_states() x variables.size(), row-major
    std::vector<std::string> labels;
    std::vector<Transition> transitions;
    std::vector<std::size_t> row_offsets;
    std::vector<double> exit_rates;
    std::size_t initial = 0;

    std::size_t num_states() const { return exit_rates.size(); }
    std::span<const int> state(std::size_t s) const
    {
        return {valuations.data() + s * variables.size(), variables.size()};
    }
    std::span<const Transition> outgoing(std::size_t s) const
    {
        return {transitions.data() + row_offsets[s], row_offsets[s + 1] - row_offsets[s]};
    }
    std::optional<std::size_t> variable_index(std::string_view name) const;
    std::optional<std::size_t> label_index(std::string_view name) const;
    /// Value of `var` in state `s`; throws ModelError for unknown variables.
    int value(std::size_t s, std::string_view var) const;
};

struct BuildOptions {
    std::size_t state_cap = 10'000'000;
};

/// Breadth-first exploration from the initial valuation.
///
/// Per state, every synchronisation vector is tried; a joint transition
/// needs an enabled command for each participant and carries the product of
/// their rates. Updates are applied simultaneously to the source valuation;
/// an out-of-range result disables the combination and identity updates are
/// dropped. Successors are sorted, so the numbering is canonical.
///
/// Throws StateCapExceeded, or BuildError for negative rates and for joint
/// updates writing one variable twice.
Ctmc build(const FlatSystem& flat, const BuildOptions& options = {});

/// Transitions carrying `label`; empty for unknown labels.
std::vector<Transition> label_transitions(const Ctmc& ctmc, std::string_view label);

/// Writes `states.tsv` and `transitions.tsv` into `dir` (created if needed).
void export_ctmc(const Ctmc& ctmc, const std::filesystem::path& dir);

} // namespace xtalk

#endif // CROSSTALK_CTMC_HPP
