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

#include "crosstalk/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace xtalk {

// ---------------------------------------------------------------------------
// CompositionExpr

CompositionExpr CompositionExpr::instance(std::string module, int index)
{
    return CompositionExpr(InstanceNode{std::move(module), index});
}

CompositionExpr CompositionExpr::rename(CompositionExpr child,
                                        std::vector<std::pair<std::string, std::string>> mapping)
{
    return CompositionExpr(RenameNode{std::make_shared<const CompositionExpr>(std::move(child)),
                                      std::move(mapping)});
}

CompositionExpr CompositionExpr::hide(CompositionExpr child, std::vector<std::string> labels)
{
    return CompositionExpr(
        HideNode{std::make_shared<const CompositionExpr>(std::move(child)), std::move(labels)});
}

CompositionExpr CompositionExpr::par(CompositionExpr left, CompositionExpr right,
                                     std::vector<std::string> sync)
{
    return CompositionExpr(ParNode{std::make_shared<const CompositionExpr>(std::move(left)),
                                   std::make_shared<const CompositionExpr>(std::move(right)),
                                   std::move(sync)});
}

CompositionExpr CompositionExpr::par_auto(CompositionExpr left, CompositionExpr right)
{
    return CompositionExpr(ParAutoNode{std::make_shared<const CompositionExpr>(std::move(left)),
                                       std::make_shared<const CompositionExpr>(std::move(right))});
}

bool operator==(const CompositionExpr& a, const CompositionExpr& b)
{
    if (a.node_ == b.node_)
        return true;
    if (a.node().index() != b.node().index())
        return false;
    if (const auto* x = a.as<InstanceNode>())
        return *x == *b.as<InstanceNode>();
    if (const auto* x = a.as<RenameNode>()) {
        const auto* y = b.as<RenameNode>();
        return x->mapping == y->mapping && *x->child == *y->child;
    }
    if (const auto* x = a.as<HideNode>()) {
        const auto* y = b.as<HideNode>();
        return x->labels == y->labels && *x->child == *y->child;
    }
    if (const auto* x = a.as<ParNode>()) {
        const auto* y = b.as<ParNode>();
        return x->sync == y->sync && *x->left == *y->left && *x->right == *y->right;
    }
    const auto* x = a.as<ParAutoNode>();
    const auto* y = b.as<ParAutoNode>();
    return *x->left == *y->left && *x->right == *y->right;
}

namespace {

bool is_parallel(const CompositionExpr& e)
{
    return e.as<ParNode>() || e.as<ParAutoNode>();
}

std::string join(const std::vector<std::string>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? ", " : "") + xs[i];
    return out;
}

std::string operand(const CompositionExpr& e)
{
    return is_parallel(e) ? "(" + to_string(e) + ")" : to_string(e);
}

} // namespace

std::string to_string(const CompositionExpr& e)
{
    if (const auto* n = e.as<InstanceNode>())
        return instance_name(n->module, n->index);
    if (const auto* n = e.as<RenameNode>()) {
        std::string out = operand(*n->child) + " {";
        for (std::size_t i = 0; i < n->mapping.size(); ++i)
            out += (i ? ", " : "") + n->mapping[i].first + " <- " + n->mapping[i].second;
        return out + "}";
    }
    if (const auto* n = e.as<HideNode>())
        return operand(*n->child) + " / {" + join(n->labels) + "}";
    if (const auto* n = e.as<ParNode>())
        return to_string(*n->left) + " |[" + join(n->sync) + "]| " + operand(*n->right);
    const auto* n = e.as<ParAutoNode>();
    return to_string(*n->left) + " || " + operand(*n->right);
}

// ---------------------------------------------------------------------------
// Instantiation

std::string instance_name(const std::string& module, int index)
{
    return index == 0 ? module : module + "_" + std::to_string(index);
}

namespace {

std::optional<int> trailing_index(const std::string& label)
{
    const auto us = label.rfind('_');
    if (us == std::string::npos || us + 1 >= label.size())
        return std::nullopt;
    for (std::size_t i = us + 1; i < label.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(label[i])))
            return std::nullopt;
    return std::stoi(label.substr(us + 1));
}

std::string rename_label(const std::string& label, std::optional<int> home, int index)
{
    if (label.empty())
        return label;
    if (home && trailing_index(label) == home)
        return label.substr(0, label.rfind('_') + 1) + std::to_string(index);
    return label + "_" + std::to_string(index);
}

std::string rename_variable(const std::string& name, std::optional<int> home, int index)
{
    if (home) {
        const std::string h = std::to_string(*home);
        // Last maximal digit run equal to the home index.
        std::size_t end = name.size();
        while (end > 0) {
            std::size_t j = end;
            while (j > 0 && !std::isdigit(static_cast<unsigned char>(name[j - 1])))
                --j;
            if (j == 0)
                break;
            std::size_t i = j;
            while (i > 0 && std::isdigit(static_cast<unsigned char>(name[i - 1])))
                --i;
            if (name.compare(i, j - i, h) == 0)
                return name.substr(0, i) + std::to_string(index) + name.substr(j);
            end = i;
        }
    }
    return name + "_" + std::to_string(index);
}

} // namespace

std::optional<int> home_index(const ModuleDef& generic)
{
    std::optional<int> home;
    for (const auto& l : generic.labels()) {
        const auto k = trailing_index(l);
        if (!k || (home && *home != *k))
            return std::nullopt;
        home = k;
    }
    return home;
}

ModuleDef instantiate(const ModuleDef& generic, int index)
{
    if (index < 0)
        throw ModelError("instance index must be positive, got " + std::to_string(index));
    if (index == 0)
        return generic;
    const auto home = home_index(generic);
    std::map<std::string, std::string> vars;
    std::set<std::string> seen;
    for (const auto& v : generic.variables) {
        auto renamed = rename_variable(v.name, home, index);
        if (!seen.insert(renamed).second)
            throw ModelError("instance " + std::to_string(index) + " of '" + generic.name +
                             "' maps two variables to '" + renamed + "'");
        vars.emplace(v.name, std::move(renamed));
    }
    auto var = [&](const std::string& n) {
        auto it = vars.find(n);
        return it == vars.end() ? n : it->second;
    };
    ModuleDef out = generic;
    out.name = instance_name(generic.name, index);
    for (auto& v : out.variables)
        v.name = var(v.name);
    for (auto& c : out.commands) {
        c.label = rename_label(c.label, home, index);
        c.guard = c.guard.rename_variables(var);
        c.rate = c.rate.rename_variables(var);
        for (auto& a : c.updates) {
            a.variable = var(a.variable);
            a.value = a.value.rename_variables(var);
        }
    }
    return out;
}

ModuleDef Instantiator::make(const std::string& module, int index)
{
    const ModuleDef* generic = model_.find_module(module);
    if (!generic)
        throw ModelError("unknown module '" + module + "'");
    if (!used_.insert({module, index}).second)
        throw ModelError("index " + std::to_string(index) + " already used for module '" + module +
                         "'");
    return instantiate(*generic, index);
}

// ---------------------------------------------------------------------------
// Alphabets

namespace {

void check_rename(const RenameNode& n, const Alphabet& child)
{
    std::set<std::string> olds;
    std::set<std::string> news;
    for (const auto& [from, to] : n.mapping) {
        if (!child.count(from))
            throw ModelError("rename of undeclared label '" + from + "'");
        if (!olds.insert(from).second)
            throw ModelError("label '" + from + "' renamed twice");
        if (!news.insert(to).second)
            throw ModelError("renaming is not injective: two labels renamed to '" + to + "'");
    }
    for (const auto& to : news) {
        if (child.count(to) && !olds.count(to))
            throw ModelError("renaming is not injective: '" + to + "' already in the alphabet");
    }
}

} // namespace

Alphabet alphabet(const CompositionExpr& expr, const Model& model)
{
    if (const auto* n = expr.as<InstanceNode>()) {
        const ModuleDef* m = model.find_module(n->module);
        if (!m)
            throw ModelError("unknown module '" + n->module + "'");
        const auto labels = instantiate(*m, n->index).labels();
        return {labels.begin(), labels.end()};
    }
    if (const auto* n = expr.as<RenameNode>()) {
        Alphabet child = alphabet(*n->child, model);
        check_rename(*n, child);
        std::map<std::string, std::string> map(n->mapping.begin(), n->mapping.end());
        Alphabet out;
        for (const auto& l : child) {
            auto it = map.find(l);
            out.insert(it == map.end() ? l : it->second);
        }
        return out;
    }
    if (const auto* n = expr.as<HideNode>()) {
        Alphabet out = alphabet(*n->child, model);
        for (const auto& l : n->labels)
            out.erase(l);
        return out;
    }
    const CompositionExpr* l = nullptr;
    const CompositionExpr* r = nullptr;
    if (const auto* n = expr.as<ParNode>()) {
        l = n->left.get();
        r = n->right.get();
    } else {
        const auto* p = expr.as<ParAutoNode>();
        l = p->left.get();
        r = p->right.get();
    }
    Alphabet out = alphabet(*l, model);
    const Alphabet right = alphabet(*r, model);
    out.insert(right.begin(), right.end());
    return out;
}

IndependenceResult independence_check(const CompositionExpr& p1, const CompositionExpr& p2,
                                      const Model& model)
{
    const Alphabet a = alphabet(p1, model);
    const Alphabet b = alphabet(p2, model);
    IndependenceResult r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(r.shared, r.shared.end()));
    r.independent = r.shared.empty();
    return r;
}

// ---------------------------------------------------------------------------
// Flattening

std::set<std::size_t> FlatSystem::participation(const std::string& label) const
{
    std::set<std::size_t> out;
    for (const auto& v : vectors)
        if (v.label == label)
            for (const auto& p : v.participants)
                out.insert(p.module);
    return out;
}

namespace {

class Flattener {
public:
    explicit Flattener(const Model& model) : model_(model), inst_(model) {}

    FlatSystem run(const CompositionExpr& e)
    {
        flat_.vectors = walk(e);
        std::map<std::string, std::string> owner;
        for (const auto& m : flat_.modules) {
            for (const auto& v : m.variables) {
                auto [it, fresh] = owner.emplace(v.name, m.name);
                if (!fresh)
                    throw ModelError("variable '" + v.name + "' declared by both '" + it->second +
                                     "' and '" + m.name + "'");
            }
        }
        return std::move(flat_);
    }

private:
    std::vector<SyncVector> walk(const CompositionExpr& e)
    {
        if (const auto* n = e.as<InstanceNode>()) {
            const std::size_t idx = flat_.modules.size();
            flat_.modules.push_back(inst_.make(n->module, n->index));
            const ModuleDef& m = flat_.modules.back();
            std::vector<SyncVector> out;
            for (const auto& l : m.labels())
                out.push_back({l, false, {{idx, l}}});
            const bool unlabelled = std::any_of(m.commands.begin(), m.commands.end(),
                                                [](const Command& c) { return c.label.empty(); });
            if (unlabelled)
                out.push_back({"", true, {{idx, ""}}});
            return out;
        }
        if (const auto* n = e.as<RenameNode>()) {
            check_rename(*n, alphabet(*n->child, model_));
            auto vs = walk(*n->child);
            std::map<std::string, std::string> map(n->mapping.begin(), n->mapping.end());
            for (auto& v : vs) {
                if (v.hidden)
                    continue;
                if (auto it = map.find(v.label); it != map.end())
                    v.label = it->second;
            }
            return vs;
        }
        if (const auto* n = e.as<HideNode>()) {
            auto vs = walk(*n->child);
            const std::set<std::string> hidden(n->labels.begin(), n->labels.end());
            for (auto& v : vs)
                if (hidden.count(v.label))
                    v.hidden = true;
            return vs;
        }
        if (const auto* n = e.as<ParNode>())
            return parallel(*n->left, *n->right, n->sync);
        const auto* p = e.as<ParAutoNode>();
        const Alphabet a = alphabet(*p->left, model_);
        const Alphabet b = alphabet(*p->right, model_);
        std::vector<std::string> sync;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(sync));
        return parallel(*p->left, *p->right, sync);
    }

    std::vector<SyncVector> parallel(const CompositionExpr& l, const CompositionExpr& r,
                                     const std::vector<std::string>& sync)
    {
        auto left = walk(l);
        auto right = walk(r);
        const std::set<std::string> sync_set(sync.begin(), sync.end());
        std::vector<SyncVector> out;
        auto keep_free = [&](const std::vector<SyncVector>& side) {
            for (const auto& v : side)
                if (v.hidden || !sync_set.count(v.label))
                    out.push_back(v);
        };
        keep_free(left);
        keep_free(right);
        std::set<std::string> done;
        for (const auto& label : sync) {
            if (!done.insert(label).second)
                continue;
            std::vector<const SyncVector*> a;
            std::vector<const SyncVector*> b;
            for (const auto& v : left)
                if (!v.hidden && v.label == label)
                    a.push_back(&v);
            for (const auto& v : right)
                if (!v.hidden && v.label == label)
                    b.push_back(&v);
            if (a.empty() != b.empty()) {
                flat_.blocked.insert(label);
                continue;
            }
            for (const auto* x : a) {
                for (const auto* y : b) {
                    SyncVector joint{label, false, x->participants};
                    joint.participants.insert(joint.participants.end(), y->participants.begin(),
                                              y->participants.end());
                    out.push_back(std::move(joint));
                }
            }
        }
        return out;
    }

    const Model& model_;
    Instantiator inst_;
    FlatSystem flat_;
};

} // namespace

FlatSystem flatten(const CompositionExpr& expr, const Model& model)
{
    return Flattener(model).run(expr);
}

// ---------------------------------------------------------------------------
// Label provenance

std::map<std::string, std::vector<LabelOrigin>> label_origins(const CompositionExpr& expr,
                                                              const Model& model)
{
    using Origins = std::map<std::string, std::vector<LabelOrigin>>;
    if (const auto* n = expr.as<InstanceNode>()) {
        const ModuleDef* m = model.find_module(n->module);
        if (!m)
            throw ModelError("unknown module '" + n->module + "'");
        const auto generic = m->labels();
        const auto inst = instantiate(*m, n->index).labels();
        Origins out;
        for (std::size_t i = 0; i < inst.size(); ++i)
            out[inst[i]].push_back({n->module, n->index, generic[i]});
        return out;
    }
    if (const auto* n = expr.as<RenameNode>()) {
        Origins child = label_origins(*n->child, model);
        std::map<std::string, std::string> map(n->mapping.begin(), n->mapping.end());
        Origins out;
        for (auto& [label, origins] : child) {
            auto it = map.find(label);
            auto& dst = out[it == map.end() ? label : it->second];
            dst.insert(dst.end(), origins.begin(), origins.end());
        }
        return out;
    }
    if (const auto* n = expr.as<HideNode>()) {
        Origins out = label_origins(*n->child, model);
        for (const auto& l : n->labels)
            out.erase(l);
        return out;
    }
    const CompositionExpr* l = nullptr;
    const CompositionExpr* r = nullptr;
    if (const auto* n = expr.as<ParNode>()) {
        l = n->left.get();
        r = n->right.get();
    } else {
        const auto* p = expr.as<ParAutoNode>();
        l = p->left.get();
        r = p->right.get();
    }
    Origins out = label_origins(*l, model);
    for (auto& [label, origins] : label_origins(*r, model)) {
        auto& dst = out[label];
        dst.insert(dst.end(), origins.begin(), origins.end());
    }
    return out;
}

} // namespace xtalk
