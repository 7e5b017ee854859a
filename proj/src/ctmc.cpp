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

#include "crosstalk/ctmc.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <unordered_map>

namespace xtalk {

std::optional<std::size_t> Ctmc::variable_index(std::string_view name) const
{
    for (std::size_t i = 0; i < variables.size(); ++i)
        if (variables[i].name == name)
            return i;
    return std::nullopt;
}

std::optional<std::size_t> Ctmc::label_index(std::string_view name) const
{
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == name)
            return i;
    return std::nullopt;
}

int Ctmc::value(std::size_t s, std::string_view var) const
{
    const auto i = variable_index(var);
    if (!i)
        throw ModelError("unknown variable '" + std::string(var) + "'");
    return state(s)[*i];
}

namespace {

struct CompiledCommand {
    CompiledExpr guard;
    CompiledExpr rate;
    std::vector<std::pair<std::size_t, CompiledExpr>> updates;
    std::string text; // for diagnostics
};

struct CompiledVector {
    std::size_t label = 0;
    // Per participant, the commands it may fire.
    std::vector<std::vector<const CompiledCommand*>> choices;
};

struct Successor {
    std::vector<int> target;
    std::size_t label;
    double rate;
};

std::string key_of(std::span<const int> v)
{
    return {reinterpret_cast<const char*>(v.data()), v.size() * sizeof(int)};
}

class Builder {
public:
    Builder(const FlatSystem& flat, const BuildOptions& options) : flat_(flat), options_(options)
    {
        for (const auto& m : flat.modules) {
            for (const auto& v : m.variables) {
                slots_.emplace(v.name, ctmc_.variables.size());
                ctmc_.variables.push_back(v);
            }
        }
        commands_.resize(flat.modules.size());
        for (std::size_t i = 0; i < flat.modules.size(); ++i) {
            for (const auto& c : flat.modules[i].commands) {
                CompiledCommand cc{CompiledExpr(c.guard, slots_), CompiledExpr(c.rate, slots_),
                                   {}, flat.modules[i].name + " [" + c.label + "]"};
                for (const auto& a : c.updates)
                    cc.updates.emplace_back(slots_.at(a.variable), CompiledExpr(a.value, slots_));
                commands_[i].emplace(c.label, std::vector<CompiledCommand>{})
                    .first->second.push_back(std::move(cc));
            }
        }
        std::map<std::string, std::size_t> label_ids;
        for (const auto& v : flat.vectors) {
            auto [it, fresh] = label_ids.emplace(v.label, ctmc_.labels.size());
            if (fresh)
                ctmc_.labels.push_back(v.label);
            CompiledVector cv{it->second, {}};
            for (const auto& p : v.participants) {
                std::vector<const CompiledCommand*> opts;
                if (auto found = commands_[p.module].find(p.label); found != commands_[p.module].end())
                    for (const auto& c : found->second)
                        opts.push_back(&c);
                cv.choices.push_back(std::move(opts));
            }
            vectors_.push_back(std::move(cv));
        }
    }

    Ctmc run()
    {
        std::vector<int> init;
        for (const auto& v : ctmc_.variables)
            init.push_back(v.init);
        intern(init);
        std::vector<Successor> succ;
        for (std::size_t s = 0; s < ctmc_.num_states(); ++s) {
            const std::vector<int> src(ctmc_.state(s).begin(), ctmc_.state(s).end());
            successors(src, succ);
            ctmc_.row_offsets.push_back(ctmc_.transitions.size());
            double exit = 0.0;
            for (auto& x : succ) {
                const std::size_t t = intern(x.target);
                ctmc_.transitions.push_back({s, x.label, x.rate, t});
                exit += x.rate;
            }
            ctmc_.exit_rates[s] = exit;
        }
        ctmc_.row_offsets.push_back(ctmc_.transitions.size());
        return std::move(ctmc_);
    }

private:
    std::size_t intern(const std::vector<int>& v)
    {
        auto [it, fresh] = index_.emplace(key_of(v), ctmc_.exit_rates.size());
        if (fresh) {
            if (ctmc_.exit_rates.size() >= options_.state_cap)
                throw StateCapExceeded(options_.state_cap);
            ctmc_.valuations.insert(ctmc_.valuations.end(), v.begin(), v.end());
            ctmc_.exit_rates.push_back(0.0);
        }
        return it->second;
    }

    void successors(const std::vector<int>& src, std::vector<Successor>& out)
    {
        out.clear();
        std::vector<std::vector<std::pair<const CompiledCommand*, double>>> enabled;
        std::vector<std::size_t> pick;
        for (const auto& v : vectors_) {
            enabled.assign(v.choices.size(), {});
            bool any = true;
            for (std::size_t p = 0; p < v.choices.size() && any; ++p) {
                for (const auto* c : v.choices[p]) {
                    if (!c->guard.eval(src))
                        continue;
                    const auto r = c->rate.eval(src);
                    if (r < 0)
                        throw BuildError("negative rate " + std::to_string(r) + " for " + c->text);
                    if (r > 0)
                        enabled[p].emplace_back(c, static_cast<double>(r));
                }
                any = !enabled[p].empty();
            }
            if (!any || enabled.empty())
                continue;
            pick.assign(enabled.size(), 0);
            for (;;) {
                fire(v.label, src, enabled, pick, out);
                std::size_t p = 0;
                while (p < pick.size() && ++pick[p] == enabled[p].size())
                    pick[p++] = 0;
                if (p == pick.size())
                    break;
            }
        }
        std::sort(out.begin(), out.end(), [](const Successor& a, const Successor& b) {
            return std::tie(a.target, a.label) < std::tie(b.target, b.label);
        });
        // Merge parallel edges with the same label.
        std::size_t w = 0;
        for (std::size_t r = 0; r < out.size(); ++r) {
            if (w > 0 && out[w - 1].target == out[r].target && out[w - 1].label == out[r].label)
                out[w - 1].rate += out[r].rate;
            else if (w++ != r)
                out[w - 1] = std::move(out[r]);
        }
        out.resize(w);
    }

    void fire(std::size_t label, const std::vector<int>& src,
              const std::vector<std::vector<std::pair<const CompiledCommand*, double>>>& enabled,
              const std::vector<std::size_t>& pick, std::vector<Successor>& out)
    {
        std::vector<int> dst = src;
        std::vector<bool> written(src.size(), false);
        double rate = 1.0;
        for (std::size_t p = 0; p < pick.size(); ++p) {
            const auto& [cmd, r] = enabled[p][pick[p]];
            rate *= r;
            for (const auto& [slot, expr] : cmd->updates) {
                if (written[slot])
                    throw BuildError("variable '" + ctmc_.variables[slot].name +
                                     "' written twice by one transition labelled '" +
                                     ctmc_.labels[label] + "'");
                written[slot] = true;
                const auto value = expr.eval(src);
                const auto& decl = ctmc_.variables[slot];
                if (value < decl.lower || value > decl.upper)
                    return;
                dst[slot] = static_cast<int>(value);
            }
        }
        if (dst != src)
            out.push_back({std::move(dst), label, rate});
    }

    const FlatSystem& flat_;
    BuildOptions options_;
    Ctmc ctmc_;
    std::map<std::string, std::size_t> slots_;
    std::vector<std::map<std::string, std::vector<CompiledCommand>>> commands_;
    std::vector<CompiledVector> vectors_;
    std::unordered_map<std::string, std::size_t> index_;
};

} // namespace

Ctmc build(const FlatSystem& flat, const BuildOptions& options)
{
    return Builder(flat, options).run();
}

std::vector<Transition> label_transitions(const Ctmc& ctmc, std::string_view label)
{
    std::vector<Transition> out;
    const auto id = ctmc.label_index(label);
    if (!id)
        return out;
    for (const auto& t : ctmc.transitions)
        if (t.label == *id)
            out.push_back(t);
    return out;
}

void export_ctmc(const Ctmc& ctmc, const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir);
    std::ofstream states(dir / "states.tsv");
    std::ofstream trans(dir / "transitions.tsv");
    if (!states || !trans)
        throw Error("cannot write CTMC export to '" + dir.string() + "'");
    states << "index";
    for (const auto& v : ctmc.variables)
        states << '\t' << v.name;
    states << '\n';
    for (std::size_t s = 0; s < ctmc.num_states(); ++s) {
        states << s;
        for (int x : ctmc.state(s))
            states << '\t' << x;
        states << '\n';
    }
    trans << "source\tlabel\trate\ttarget\n";
    trans.precision(17);
    for (const auto& t : ctmc.transitions) {
        const auto& l = ctmc.labels[t.label];
        trans << t.source << '\t' << (l.empty() ? "-" : l) << '\t' << t.rate << '\t' << t.target
              << '\n';
    }
}

} // namespace xtalk
