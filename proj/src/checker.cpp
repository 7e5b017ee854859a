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

#include "crosstalk/checker.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include <Eigen/Dense>

#include "crosstalk/numeric.hpp"

namespace xtalk {

namespace {

// Predecessor lists, built on demand for the graph algorithms.
std::vector<std::vector<std::size_t>> predecessors(const Ctmc& ctmc)
{
    std::vector<std::vector<std::size_t>> pred(ctmc.num_states());
    for (const auto& t : ctmc.transitions)
        pred[t.target].push_back(t.source);
    return pred;
}

// Backward closure of `from` through states in `through`.
StateSet backward_reach(const std::vector<std::vector<std::size_t>>& pred, const StateSet& from,
                        const StateSet& through)
{
    StateSet seen = from;
    std::deque<std::size_t> queue;
    for (std::size_t s = 0; s < from.size(); ++s)
        if (from[s])
            queue.push_back(s);
    while (!queue.empty()) {
        const auto s = queue.front();
        queue.pop_front();
        for (auto p : pred[s]) {
            if (!seen[p] && through[p]) {
                seen[p] = 1;
                queue.push_back(p);
            }
        }
    }
    return seen;
}

double clamp01(double p)
{
    return std::clamp(p, 0.0, 1.0);
}

void solve_direct(const Ctmc& ctmc, const std::vector<std::size_t>& unknowns,
                  std::vector<double>& x)
{
    const auto n = static_cast<Eigen::Index>(unknowns.size());
    std::vector<Eigen::Index> slot(ctmc.num_states(), -1);
    for (Eigen::Index i = 0; i < n; ++i)
        slot[unknowns[static_cast<std::size_t>(i)]] = i;
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto s = unknowns[static_cast<std::size_t>(i)];
        const double e = ctmc.exit_rates[s];
        for (const auto& t : ctmc.outgoing(s)) {
            if (slot[t.target] >= 0)
                a(i, slot[t.target]) -= t.rate / e;
            else
                b(i) += t.rate / e * x[t.target];
        }
    }
    const Eigen::VectorXd sol = a.partialPivLu().solve(b);
    for (Eigen::Index i = 0; i < n; ++i)
        x[unknowns[static_cast<std::size_t>(i)]] = sol(i);
}

class Evaluator {
public:
    Evaluator(const Ctmc& ctmc, const CheckerOptions& options) : ctmc_(ctmc), options_(options) {}

    std::vector<SolverStats> stats;

    StateSet states(const Formula& f)
    {
        const std::size_t n = ctmc_.num_states();
        switch (f.kind) {
        case Formula::Kind::True:
            return StateSet(n, 1);
        case Formula::Kind::False:
            return StateSet(n, 0);
        case Formula::Kind::Atomic: {
            const auto var = ctmc_.variable_index(f.variable);
            if (!var)
                throw ModelError("unknown variable '" + f.variable + "' in property");
            StateSet out(n);
            for (std::size_t s = 0; s < n; ++s)
                out[s] = compare(f.comparator, ctmc_.state(s)[*var], static_cast<double>(f.constant));
            return out;
        }
        case Formula::Kind::Not: {
            StateSet out = states(f.args[0]);
            for (auto& b : out)
                b = !b;
            return out;
        }
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            StateSet out = states(f.args[0]);
            const StateSet rhs = states(f.args[1]);
            for (std::size_t s = 0; s < n; ++s)
                out[s] = f.kind == Formula::Kind::And ? (out[s] && rhs[s]) : (out[s] || rhs[s]);
            return out;
        }
        case Formula::Kind::Prob:
            if (f.bound.is_query())
                throw ModelError("'P=?' cannot appear inside a state formula: " + to_string(f));
            if (f.filter_formula())
                throw ModelError("filters are only allowed on the outermost operator");
            return bounded(f);
        default:
            throw ModelError("path formula used where a state formula is expected: " +
                             to_string(f));
        }
    }

    // Per-state verdict of a Prob node with a bound.
    StateSet bounded(const Formula& f)
    {
        if (f.bound.is_qualitative())
            return qualitative(f);
        const auto p = probabilities(f.args[0]);
        StateSet out(p.size());
        for (std::size_t s = 0; s < p.size(); ++s)
            out[s] = f.bound.holds(p[s]);
        return out;
    }

    std::pair<StateSet, StateSet> operands(const Formula& path)
    {
        if (path.kind == Formula::Kind::Eventually)
            return {StateSet(ctmc_.num_states(), 1), states(path.args[0])};
        if (path.kind == Formula::Kind::Until)
            return {states(path.args[0]), states(path.args[1])};
        throw ModelError("'P' expects a path formula, found " + to_string(path));
    }

    std::vector<double> probabilities(const Formula& path)
    {
        auto [phi1, phi2] = operands(path);
        SolverStats st;
        std::vector<double> p;
        if (path.time_bound)
            p = prob_bounded_until(ctmc_, phi1, phi2, *path.time_bound, options_, &st);
        else
            p = prob_unbounded_until(ctmc_, phi1, phi2, options_, &st);
        stats.push_back(st);
        return p;
    }

    StateSet qualitative(const Formula& f)
    {
        const Formula& path = f.args[0];
        auto [phi1, phi2] = operands(path);
        StateSet positive;
        StateSet one;
        if (path.time_bound && *path.time_bound == 0.0) {
            positive = phi2;
            one = phi2;
        } else if (path.time_bound) {
            positive = prob0_complement(ctmc_, phi1, phi2);
            one = phi2;
        } else {
            positive = prob0_complement(ctmc_, phi1, phi2);
            one = prob1(ctmc_, phi1, phi2);
        }
        stats.push_back({"graph", 0, 0, 0.0, 0, 0, 0.0});
        StateSet out;
        switch (f.bound.kind) {
        case ProbBound::Kind::Gt:
            return positive;
        case ProbBound::Kind::Ge:
            return one;
        case ProbBound::Kind::Le:
            out = positive;
            break;
        case ProbBound::Kind::Lt:
            out = one;
            break;
        default:
            throw ModelError("not a qualitative bound: " + to_string(f));
        }
        for (auto& b : out)
            b = !b;
        return out;
    }

private:
    const Ctmc& ctmc_;
    const CheckerOptions& options_;
};

} // namespace

StateSet prob0_complement(const Ctmc& ctmc, const StateSet& phi1, const StateSet& phi2)
{
    return backward_reach(predecessors(ctmc), phi2, phi1);
}

StateSet prob1(const Ctmc& ctmc, const StateSet& phi1, const StateSet& phi2)
{
    const auto pred = predecessors(ctmc);
    const StateSet positive = backward_reach(pred, phi2, phi1);
    StateSet no(positive.size());
    StateSet continuing(positive.size());
    for (std::size_t s = 0; s < no.size(); ++s) {
        no[s] = !positive[s];
        continuing[s] = phi1[s] && !phi2[s];
    }
    // States that can reach a zero-probability state without passing phi2.
    StateSet fail = backward_reach(pred, no, continuing);
    for (auto& b : fail)
        b = !b;
    return fail;
}

std::vector<double> prob_unbounded_until(const Ctmc& ctmc, const StateSet& phi1,
                                         const StateSet& phi2, const CheckerOptions& options,
                                         SolverStats* stats)
{
    const std::size_t n = ctmc.num_states();
    const StateSet positive = prob0_complement(ctmc, phi1, phi2);
    const StateSet one = prob1(ctmc, phi1, phi2);
    std::vector<double> x(n, 0.0);
    std::vector<std::size_t> unknowns;
    for (std::size_t s = 0; s < n; ++s) {
        if (one[s])
            x[s] = 1.0;
        else if (positive[s])
            unknowns.push_back(s);
    }
    SolverStats st;
    st.unknowns = unknowns.size();
    if (unknowns.empty()) {
        st.method = "graph";
    } else if (options.solver == Solver::Direct) {
        st.method = "direct";
        solve_direct(ctmc, unknowns, x);
    } else {
        st.method = "gauss-seidel";
        bool converged = false;
        while (st.iterations < options.max_iterations) {
            ++st.iterations;
            double residual = 0.0;
            for (auto s : unknowns) {
                double sum = 0.0;
                for (const auto& t : ctmc.outgoing(s))
                    sum += t.rate * x[t.target];
                const double next = sum / ctmc.exit_rates[s];
                residual = std::max(residual, std::abs(next - x[s]));
                x[s] = next;
            }
            st.residual = residual;
            if (residual < options.tolerance) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            if (unknowns.size() >= options.direct_limit)
                throw NonConvergence(st.iterations, st.residual);
            st.method = "direct";
            solve_direct(ctmc, unknowns, x);
        }
    }
    for (auto& p : x)
        p = clamp01(p);
    if (stats)
        *stats = st;
    return x;
}

std::vector<double> prob_bounded_until(const Ctmc& ctmc, const StateSet& phi1,
                                       const StateSet& phi2, double t,
                                       const CheckerOptions& options, SolverStats* stats)
{
    if (!(t >= 0.0))
        throw ModelError("time bound must be non-negative");
    const std::size_t n = ctmc.num_states();
    const StateSet positive = prob0_complement(ctmc, phi1, phi2);
    std::vector<double> v(n, 0.0);
    StateSet active(n, 0); // not absorbing
    double max_exit = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
        if (phi2[s])
            v[s] = 1.0;
        else if (positive[s]) {
            active[s] = 1;
            max_exit = std::max(max_exit, ctmc.exit_rates[s]);
        }
    }
    SolverStats st;
    st.method = "uniformisation";
    if (t == 0.0 || max_exit == 0.0) {
        if (stats)
            *stats = st;
        return v;
    }
    const double q = options.uniformisation_factor * max_exit;
    const PoissonWindow w = poisson_window(q * t, options.truncation_epsilon);
    st.rate = q;
    st.poisson_left = w.left;
    st.poisson_right = w.right();
    std::vector<double> result(n, 0.0);
    std::vector<double> next(n);
    for (std::size_t k = 0; k <= w.right(); ++k) {
        if (k >= w.left) {
            const double wk = w.weights[k - w.left];
            for (std::size_t s = 0; s < n; ++s)
                result[s] += wk * v[s];
        }
        if (k == w.right())
            break;
        for (std::size_t s = 0; s < n; ++s) {
            if (!active[s]) {
                next[s] = v[s];
                continue;
            }
            double acc = v[s] * (1.0 - ctmc.exit_rates[s] / q);
            for (const auto& tr : ctmc.outgoing(s))
                acc += tr.rate / q * v[tr.target];
            next[s] = acc;
        }
        v.swap(next);
        ++st.iterations;
    }
    for (std::size_t s = 0; s < n; ++s)
        result[s] = active[s] ? clamp01(result[s]) : v[s]; // absorbing: exact 0/1
    if (stats)
        *stats = st;
    return result;
}

StateSet eval_state_formula(const Ctmc& ctmc, const Formula& phi, const CheckerOptions& options)
{
    return Evaluator(ctmc, options).states(phi);
}

StateSet qualitative_check(const Ctmc& ctmc, const Formula& prob, const CheckerOptions& options)
{
    if (prob.kind != Formula::Kind::Prob || !prob.bound.is_qualitative())
        throw ModelError("qualitative check needs P>0, P<=0, P>=1 or P<1: " + to_string(prob));
    return Evaluator(ctmc, options).qualitative(prob);
}

CheckResult check_property(const Ctmc& ctmc, const Formula& prop, const CheckerOptions& options)
{
    Evaluator ev(ctmc, options);
    CheckResult r;
    if (prop.kind != Formula::Kind::Prob) {
        r.kind = CheckResult::Kind::Verdict;
        r.verdict = ev.states(prop)[ctmc.initial];
        r.diagnostics = std::move(ev.stats);
        return r;
    }

    std::vector<std::size_t> where{ctmc.initial};
    if (const Formula* filter = prop.filter_formula()) {
        const StateSet f = ev.states(*filter);
        where.clear();
        for (std::size_t s = 0; s < f.size(); ++s)
            if (f[s])
                where.push_back(s);
    }

    if (prop.bound.is_query()) {
        if (where.size() != 1)
            throw ModelError("filter of query '" + to_string(prop) + "' matches " +
                             std::to_string(where.size()) + " states; exactly one is required");
        r.kind = CheckResult::Kind::Probability;
        r.per_state = ev.probabilities(prop.args[0]);
        r.probability = r.per_state[where.front()];
    } else {
        r.kind = CheckResult::Kind::Verdict;
        StateSet holds;
        if (prop.bound.is_qualitative()) {
            holds = ev.qualitative(prop);
        } else {
            r.per_state = ev.probabilities(prop.args[0]);
            holds.resize(r.per_state.size());
            for (std::size_t s = 0; s < holds.size(); ++s)
                holds[s] = prop.bound.holds(r.per_state[s]);
            r.probability = r.per_state[ctmc.initial];
        }
        if (where.empty())
            r.warnings.push_back("filter of '" + to_string(prop) +
                                 "' matches no reachable state; verdict is vacuously true");
        r.verdict = std::all_of(where.begin(), where.end(), [&](std::size_t s) { return holds[s]; });
    }
    r.diagnostics = std::move(ev.stats);
    return r;
}

} // namespace xtalk
