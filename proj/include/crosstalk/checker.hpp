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

#ifndef CROSSTALK_CHECKER_HPP
#define CROSSTALK_CHECKER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "crosstalk/csl.hpp"
#include "crosstalk/ctmc.hpp"

namespace xtalk {

/// Membership flag per CTMC state.
using StateSet = std::vector<char>;

enum class Solver { Iterative, Direct };

struct CheckerOptions {
    Solver solver = Solver::Iterative;
    double tolerance = 1e-10;              // max residual, Gauss-Seidel
    std::size_t max_iterations = 1'000'000;
    std::size_t direct_limit = 2000;       // fallback to direct below this many unknowns
    double uniformisation_factor = 1.02;
    double truncation_epsilon = 1e-9;      // Poisson mass left out
};

/// What a numeric step did, for reports.
struct SolverStats {
    std::string method; // "graph", "gauss-seidel", "direct", "uniformisation"
    std::size_t unknowns = 0;
    std::size_t iterations = 0;
    double residual = 0.0;
    std::size_t poisson_left = 0;
    std::size_t poisson_right = 0;
    double rate = 0.0; // uniformisation rate

    bool operator==(const SolverStats&) const = default;
};

struct CheckResult {
    enum class Kind { Verdict, Probability };
    Kind kind = Kind::Verdict;
    bool verdict = false;
    double probability = 0.0;
    /// Probability of the outermost path formula in every state, when
    /// computed numerically; empty for graph-decided and non-Prob formulas.
    std::vector<double> per_state;
    std::vector<std::string> warnings;
    std::vector<SolverStats> diagnostics;
};

/// Satisfaction set of a state formula; nested Prob nodes must carry a
/// bound. Throws ModelError for unknown variables and for `=?` inside a
/// state formula.
StateSet eval_state_formula(const Ctmc& ctmc, const Formula& phi,
                            const CheckerOptions& options = {});

/// Probability of `phi1 U phi2` per state. Prob0/Prob1 are decided on the
/// graph; the rest is solved on the embedded chain.
/// Throws NonConvergence when Gauss-Seidel hits the cap and the system is
/// too large for the direct fallback.
std::vector<double> prob_unbounded_until(const Ctmc& ctmc, const StateSet& phi1,
                                         const StateSet& phi2, const CheckerOptions& options = {},
                                         SolverStats* stats = nullptr);

/// Probability of `phi1 U<=t phi2` per state, by uniformisation.
std::vector<double> prob_bounded_until(const Ctmc& ctmc, const StateSet& phi1,
                                       const StateSet& phi2, double t,
                                       const CheckerOptions& options = {},
                                       SolverStats* stats = nullptr);

/// States that reach `phi2` through `phi1` with positive probability.
StateSet prob0_complement(const Ctmc& ctmc, const StateSet& phi1, const StateSet& phi2);

/// States that reach `phi2` through `phi1` with probability one.
StateSet prob1(const Ctmc& ctmc, const StateSet& phi1, const StateSet& phi2);

/// Per-state verdict of a Prob formula with bound >0, <=0, >=1 or <1,
/// decided on the transition graph alone. Throws ModelError otherwise.
StateSet qualitative_check(const Ctmc& ctmc, const Formula& prob,
                           const CheckerOptions& options = {});

/// Evaluates a property at the initial state, or over its filter states.
///
/// Bound with filter: holds iff it holds in every filter state (none: true,
/// with a warning). Query with filter: needs exactly one filter state.
CheckResult check_property(const Ctmc& ctmc, const Formula& prop,
                           const CheckerOptions& options = {});

} // namespace xtalk

#endif // CROSSTALK_CHECKER_HPP
