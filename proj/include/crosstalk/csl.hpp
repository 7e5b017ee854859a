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

#ifndef CROSSTALK_CSL_HPP
#define CROSSTALK_CSL_HPP

#include <optional>
#include <string>
#include <vector>

namespace xtalk {

enum class Comparator { Eq, Ne, Lt, Le, Gt, Ge };

bool compare(Comparator c, long lhs, double rhs);
const char* to_string(Comparator c);

/// `=?` or one of `<= p`, `< p`, `>= p`, `> p`.
struct ProbBound {
    enum class Kind { Query, Le, Lt, Ge, Gt };
    Kind kind = Kind::Query;
    double p = 0.0;

    bool is_query() const { return kind == Kind::Query; }
    /// >0, <=0, >=1 or <1: decidable on the transition graph alone.
    bool is_qualitative() const;
    bool holds(double value) const;
    bool operator==(const ProbBound&) const = default;
};

/// CSL state and path formulas in one node type.
///
/// State kinds: True, False, Atomic, Not, And, Or, Prob.
/// Path kinds:  Eventually (args[0]) and Until (args[0] U args[1]),
///              each optionally time-bounded.
/// Prob: args[0] is the path formula; `filter` holds 0 or 1 state formula.
struct Formula {
    enum class Kind { True, False, Atomic, Not, And, Or, Prob, Eventually, Until };

    Kind kind = Kind::True;
    std::string variable;
    Comparator comparator = Comparator::Eq;
    long constant = 0;
    ProbBound bound;
    std::optional<double> time_bound;
    std::vector<Formula> args;
    std::vector<Formula> filter;

    bool operator==(const Formula&) const = default;

    bool is_path() const { return kind == Kind::Eventually || kind == Kind::Until; }

    static Formula truth(bool v);
    static Formula atomic(std::string var, Comparator c, long k);
    static Formula negation(Formula f);
    static Formula conjunction(Formula a, Formula b);
    static Formula disjunction(Formula a, Formula b);
    static Formula eventually(Formula target, std::optional<double> t = std::nullopt);
    static Formula until(Formula lhs, Formula rhs, std::optional<double> t = std::nullopt);
    static Formula prob(ProbBound b, Formula path, std::optional<Formula> filter = std::nullopt);

    const Formula* filter_formula() const { return filter.empty() ? nullptr : &filter.front(); }
};

/// Canonical text, parseable by parse_property.
std::string to_string(const Formula& f);

struct NamedProperty {
    std::string name;
    Formula formula;
    bool operator==(const NamedProperty&) const = default;
};

} // namespace xtalk

#endif // CROSSTALK_CSL_HPP
