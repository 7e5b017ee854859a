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


// Helpers shared by the unit tests and the acceptance binary. The oracles
// here are deliberately naive: dense matrices, no graph precomputation
// beyond plain backward reachability.

#ifndef CROSSTALK_TESTS_SUPPORT_HPP
#define CROSSTALK_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <compare>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "crosstalk/algebra.hpp"
#include "crosstalk/checker.hpp"
#include "crosstalk/ctmc.hpp"
#include "crosstalk/fixtures.hpp"
#include "crosstalk/parser.hpp"

namespace xtalk::test {

inline const Model& pathways()
{
    static const Model m = load_fixture("independent").model;
    return m;
}

inline Ctmc build_expr(const CompositionExpr& e, const Model& m, BuildOptions o = {})
{
    return build(flatten(e, m), o);
}

inline Ctmc build_named(const Model& m, std::string_view name, BuildOptions o = {})
{
    return build_expr(m.composition(name), m, o);
}

inline Ctmc build_text(const Model& m, std::string_view text)
{
    return build_expr(parse_composition(text, m).expr, m);
}

/// Fixture name -> system name, for the six two-pathway fixtures.
inline std::vector<std::pair<std::string, std::string>> fixture_systems()
{
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& n : crosstalk_fixture_names())
        out.emplace_back(n, load_fixture(n).system);
    return out;
}

using Valuation = std::map<std::string, int>;

inline Valuation valuation(const Ctmc& c, std::size_t s)
{
    Valuation v;
    for (std::size_t i = 0; i < c.variables.size(); ++i)
        v[c.variables[i].name] = c.state(s)[i];
    return v;
}

struct Edge {
    Valuation from;
    std::string label;
    double rate = 0.0;
    Valuation to;
    auto operator<=>(const Edge&) const = default;
};

/// Transition multiset keyed by variable names, independent of state
/// numbering and variable order.
inline std::vector<Edge> canonical_edges(const Ctmc& c)
{
    std::vector<Valuation> vals;
    for (std::size_t s = 0; s < c.num_states(); ++s)
        vals.push_back(valuation(c, s));
    std::vector<Edge> out;
    for (const auto& t : c.transitions)
        out.push_back({vals[t.source], c.labels[t.label], t.rate, vals[t.target]});
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Valuation> canonical_states(const Ctmc& c)
{
    std::vector<Valuation> out;
    for (std::size_t s = 0; s < c.num_states(); ++s)
        out.push_back(valuation(c, s));
    std::sort(out.begin(), out.end());
    return out;
}

/// Chain over states 0..n-1 with one variable `s` holding the index.
inline Ctmc make_ctmc(std::size_t n, std::vector<std::tuple<std::size_t, std::size_t, double>> edges)
{
    Ctmc c;
    c.variables.push_back({"s", 0, static_cast<int>(n) - 1, 0, {}});
    for (std::size_t s = 0; s < n; ++s)
        c.valuations.push_back(static_cast<int>(s));
    c.labels = {"a"};
    std::sort(edges.begin(), edges.end());
    c.row_offsets.assign(1, 0);
    c.exit_rates.assign(n, 0.0);
    std::size_t e = 0;
    for (std::size_t s = 0; s < n; ++s) {
        for (; e < edges.size() && std::get<0>(edges[e]) == s; ++e) {
            auto [from, to, rate] = edges[e];
            if (from == to)
                continue;
            if (!c.transitions.empty() && c.transitions.back().source == from &&
                c.transitions.back().target == to)
                c.transitions.back().rate += rate;
            else
                c.transitions.push_back({from, 0, rate, to});
            c.exit_rates[s] += rate;
        }
        c.row_offsets.push_back(c.transitions.size());
    }
    return c;
}

/// Random chain on 2..max_states states with rates in [0.1, 5].
inline Ctmc random_ctmc(std::mt19937& rng, std::size_t max_states)
{
    std::uniform_int_distribution<std::size_t> size(2, max_states);
    std::uniform_real_distribution<double> rate(0.1, 5.0);
    std::bernoulli_distribution edge(0.45);
    const std::size_t n = size(rng);
    std::vector<std::tuple<std::size_t, std::size_t, double>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && edge(rng))
                edges.emplace_back(i, j, rate(rng));
    return make_ctmc(n, std::move(edges));
}

inline StateSet random_set(std::mt19937& rng, std::size_t n, double p)
{
    std::bernoulli_distribution in(p);
    StateSet s(n);
    for (auto& x : s)
        x = in(rng) ? 1 : 0;
    return s;
}

/// Dense generator with phi2 and (not phi1) states made absorbing.
inline Eigen::MatrixXd absorbing_generator(const Ctmc& c, const StateSet& phi1, const StateSet& phi2)
{
    const auto n = static_cast<Eigen::Index>(c.num_states());
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
    for (const auto& t : c.transitions) {
        if (phi2[t.source] || !phi1[t.source])
            continue;
        const auto i = static_cast<Eigen::Index>(t.source);
        q(i, static_cast<Eigen::Index>(t.target)) += t.rate;
        q(i, i) -= t.rate;
    }
    return q;
}

/// P(phi1 U<=t phi2) from exp(Qt), Q the absorbing generator.
inline std::vector<double> transient_oracle(const Ctmc& c, const StateSet& phi1,
                                            const StateSet& phi2, double t)
{
    const Eigen::MatrixXd p = (absorbing_generator(c, phi1, phi2) * t).exp();
    std::vector<double> out(c.num_states(), 0.0);
    for (Eigen::Index i = 0; i < p.rows(); ++i)
        for (Eigen::Index j = 0; j < p.cols(); ++j)
            if (phi2[static_cast<std::size_t>(j)])
                out[static_cast<std::size_t>(i)] += p(i, j);
    return out;
}

/// States with a path to phi2 through phi1, by backward search.
inline StateSet can_reach(const Ctmc& c, const StateSet& phi1, const StateSet& phi2)
{
    StateSet r = phi2;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& t : c.transitions)
            if (!r[t.source] && phi1[t.source] && r[t.target])
                r[t.source] = changed = true;
    }
    return r;
}

/// P(phi1 U phi2) by dense elimination on the embedded chain.
inline std::vector<double> reach_oracle(const Ctmc& c, const StateSet& phi1, const StateSet& phi2)
{
    const std::size_t n = c.num_states();
    const StateSet yes = can_reach(c, phi1, phi2);
    std::vector<double> out(n, 0.0);
    std::vector<Eigen::Index> slot(n, -1);
    Eigen::Index m = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (phi2[s])
            out[s] = 1.0;
        else if (yes[s])
            slot[s] = m++;
    }
    if (m == 0)
        return out;
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(m, m);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(m);
    for (const auto& t : c.transitions) {
        const Eigen::Index i = slot[t.source];
        if (i < 0)
            continue;
        const double p = t.rate / c.exit_rates[t.source];
        if (phi2[t.target])
            b(i) += p;
        else if (slot[t.target] >= 0)
            a(i, slot[t.target]) -= p;
    }
    const Eigen::VectorXd x = a.fullPivLu().solve(b);
    for (std::size_t s = 0; s < n; ++s)
        if (slot[s] >= 0)
            out[s] = x(slot[s]);
    return out;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b)
{
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

/// Every state formula satisfied where the variable/value pairs hold.
inline StateSet states_where(const Ctmc& c, const Valuation& want)
{
    StateSet out(c.num_states());
    for (std::size_t s = 0; s < c.num_states(); ++s) {
        bool ok = true;
        for (const auto& [var, val] : want)
            ok = ok && c.value(s, var) == val;
        out[s] = ok;
    }
    return out;
}

inline StateSet all_states(const Ctmc& c) { return StateSet(c.num_states(), 1); }

} // namespace xtalk::test

#endif // CROSSTALK_TESTS_SUPPORT_HPP
