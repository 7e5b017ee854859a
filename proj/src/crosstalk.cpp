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

#include "crosstalk/crosstalk.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "crosstalk/algebra.hpp"
#include "crosstalk/parser.hpp"

namespace xtalk {

std::string_view to_string(Category c)
{
    switch (c) {
    case Category::Independent:
        return "independent";
    case Category::SignalFlow:
        return "signal-flow";
    case Category::SubstrateAvailability:
        return "substrate-availability";
    case Category::ReceptorFunction:
        return "receptor-function";
    case Category::GeneExpression:
        return "gene-expression";
    case Category::IntracellularCommunication:
        return "intracellular-communication";
    case Category::Unclassified:
        return "unclassified";
    }
    return "?";
}

namespace {

using Side = std::vector<SharedOrigin>;

std::vector<SharedOrigin> annotate(const std::string& label, const std::vector<LabelOrigin>& from,
                                   const Model& model)
{
    std::vector<SharedOrigin> out;
    for (const auto& o : from) {
        const RoleAnnotation* a = model.find_annotation(o.module, o.generic_label);
        if (!a)
            throw AnnotationError("shared label '" + label + "' comes from '" + o.generic_label +
                                  "' of module '" + o.module + "', which has no role annotation");
        out.push_back({instance_name(o.module, o.index), o.generic_label, a->role, a->kind});
    }
    return out;
}

bool has(const Side& s, const std::function<bool(const SharedOrigin&)>& p)
{
    return std::any_of(s.begin(), s.end(), p);
}

bool all(const Side& s, const std::function<bool(const SharedOrigin&)>& p)
{
    return std::all_of(s.begin(), s.end(), p);
}

bool modifier(Role r)
{
    return r == Role::Catalysis || r == Role::Inhibition;
}

bool cascade_like(ModuleKind k)
{
    return k == ModuleKind::Cascade || k == ModuleKind::ProteinActivation ||
           k == ModuleKind::Translocation || k == ModuleKind::ProteinBinding;
}

bool producing(Role r)
{
    return r == Role::Activation || r == Role::AlternativeActivation || r == Role::Expression ||
           r == Role::LigandProduction;
}

// Holds for one side under `a` and the other under `b`, either way round.
bool either_way(const SharedLabel& l, const std::function<bool(const Side&)>& a,
                const std::function<bool(const Side&)>& b)
{
    return (a(l.left) && b(l.right)) || (a(l.right) && b(l.left));
}

bool intracellular(const SharedLabel& l)
{
    return either_way(
        l,
        [](const Side& s) {
            return has(s, [](const SharedOrigin& o) {
                return o.kind == ModuleKind::GeneExpression && o.role == Role::Degradation;
            });
        },
        [](const Side& s) {
            return has(s, [](const SharedOrigin& o) {
                return o.kind == ModuleKind::Receptor && o.role == Role::LigandProduction;
            });
        });
}

bool gene_expression(const SharedLabel& l)
{
    return either_way(
        l,
        [](const Side& s) {
            return has(s, [](const SharedOrigin& o) { return o.kind == ModuleKind::GeneExpression; });
        },
        [](const Side& s) {
            return all(s, [](const SharedOrigin& o) {
                return cascade_like(o.kind) && modifier(o.role);
            });
        });
}

bool receptor_function(const SharedLabel& l)
{
    return either_way(
        l,
        [](const Side& s) {
            return has(s, [](const SharedOrigin& o) {
                return o.kind == ModuleKind::Receptor && o.role != Role::Catalysis;
            });
        },
        [](const Side& s) {
            return all(s, [](const SharedOrigin& o) {
                return modifier(o.role) &&
                       (o.kind == ModuleKind::Receptor || cascade_like(o.kind));
            });
        });
}

bool cascade_label(const SharedLabel& l)
{
    auto ok = [](const SharedOrigin& o) {
        return cascade_like(o.kind) || (o.kind == ModuleKind::Receptor && modifier(o.role));
    };
    return all(l.left, ok) && all(l.right, ok);
}

bool competition(const SharedLabel& l)
{
    return either_way(
        l,
        [](const Side& s) {
            return has(s, [](const SharedOrigin& o) { return o.role == Role::Degradation; });
        },
        [](const Side& s) {
            return has(s, [](const SharedOrigin& o) { return producing(o.role); });
        });
}

} // namespace

Classification classify(const CompositionExpr& p1, const CompositionExpr& p2, const Model& model)
{
    Classification c;
    c.shared = independence_check(p1, p2, model).shared;
    if (c.shared.empty())
        return c;
    const auto left = label_origins(p1, model);
    const auto right = label_origins(p2, model);
    for (const auto& l : c.shared)
        c.origins.push_back({l, annotate(l, left.at(l), model), annotate(l, right.at(l), model)});

    auto every = [&](bool (*rule)(const SharedLabel&)) {
        return std::all_of(c.origins.begin(), c.origins.end(), rule);
    };
    if (every(intracellular))
        c.category = Category::IntracellularCommunication;
    else if (every(gene_expression))
        c.category = Category::GeneExpression;
    else if (every(receptor_function))
        c.category = Category::ReceptorFunction;
    else if (every(cascade_label))
        c.category = std::any_of(c.origins.begin(), c.origins.end(), competition)
                         ? Category::SubstrateAvailability
                         : Category::SignalFlow;
    else
        c.category = Category::Unclassified;
    return c;
}

std::vector<NamedProperty> detection_properties()
{
    return {
        {"competitive_signal_flow", parse_property("P=? [ F (Protein1=1 & Protein2=0) ]")},
        {"time_dependent_p1", parse_property("P=? [ F<=3 (Protein1=1) ]")},
        {"time_dependent_p2", parse_property("P=? [ F<=3 (Protein2=1) ]")},
    };
}

DetectionReport detect(const Ctmc& baseline, const Ctmc& model, double threshold,
                       const CheckerOptions& options)
{
    DetectionReport r;
    r.threshold = threshold;
    for (auto& p : detection_properties()) {
        DetectionRow row{p.name, p.formula, 0.0, 0.0, 0.0};
        row.baseline = check_property(baseline, p.formula, options).probability;
        row.model = check_property(model, p.formula, options).probability;
        row.delta = row.model - row.baseline;
        r.detected = r.detected || std::abs(row.delta) > threshold;
        r.rows.push_back(std::move(row));
    }
    return r;
}

std::vector<NamedProperty> signature_properties()
{
    return {
        {"signal_flow", parse_property("P>0 [ F (R1Active=0 & Protein1=1) ]")},
        {"substrate_availability", parse_property("P<=0 [ F (Protein1=1 & Protein2=1) ]")},
        {"receptor_function", parse_property("P>0 [ F (R2Active=1 & L2=1) ]")},
        {"gene_expression",
         parse_property("P<=0 [ F (Protein1=1) {Protein1=0 & Protein2=1} ]")},
        {"intracellular_communication",
         parse_property("P>0 [ (L2=1) & (L2=1) U ((L2=0) & (L2=0) U (L2=1)) ]")},
    };
}

NamedProperty independence_property()
{
    return {"independence",
            parse_property("P<=0 [ F (R1Active=0 & Protein1=1) | F (R2Active=0 & Protein2=1) ]")};
}

CharacterisationReport characterise(const Ctmc& model, const CheckerOptions& options)
{
    static constexpr Category order[] = {Category::SignalFlow, Category::SubstrateAvailability,
                                         Category::ReceptorFunction, Category::GeneExpression,
                                         Category::IntracellularCommunication};
    CharacterisationReport r;
    const auto props = signature_properties();
    for (std::size_t i = 0; i < props.size(); ++i) {
        const CheckResult res = check_property(model, props[i].formula, options);
        r.verdicts.push_back({props[i].name, order[i], props[i].formula, res.verdict, res.warnings});
    }
    return r;
}

} // namespace xtalk
