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


#include <gtest/gtest.h>

#include <numeric>
#include <set>
#include <string>

#include "crosstalk/algebra.hpp"
#include "crosstalk/ctmc.hpp"
#include "crosstalk/error.hpp"
#include "crosstalk/fixtures.hpp"
#include "crosstalk/parser.hpp"
#include "support.hpp"

using namespace xtalk;
using C = CompositionExpr;

namespace {

const std::set<std::string> kU = {"e2_1", "e3_1", "e4_1", "e7_1", "e8_1", "e9_1",
                                  "e10_1", "e12_1", "e14_1", "e2_2", "e3_2", "e4_2",
                                  "e7_2", "e8_2", "e9_2", "e10_2", "e12_2", "e14_2"};

std::size_t command_count(const FlatSystem& f)
{
    std::size_t n = 0;
    for (const auto& m : f.modules)
        n += m.commands.size();
    return n;
}

std::set<std::string> labels_of(const ModuleDef& m)
{
    auto l = m.labels();
    return {l.begin(), l.end()};
}

std::set<std::string> vars_of(const ModuleDef& m)
{
    std::set<std::string> out;
    for (const auto& v : m.variables)
        out.insert(v.name);
    return out;
}

} // namespace

TEST(Instantiate, ReceptorIndexTwo)
{
    const ModuleDef r2 = instantiate(*test::pathways().find_module("Receptor"), 2);
    EXPECT_EQ(labels_of(r2), (std::set<std::string>{"i1_2", "e1_2", "e2_2", "e3_2", "e4_2"}));
    EXPECT_EQ(vars_of(r2), (std::set<std::string>{"R2", "L2", "R2Active"}));
    EXPECT_EQ(r2.commands.size(), 5u);
    // guards follow the variables
    std::set<std::string> used;
    for (const auto& c : r2.commands)
        c.guard.collect_variables(used);
    EXPECT_TRUE(std::includes(vars_of(r2).begin(), vars_of(r2).end(), used.begin(), used.end()));
}

TEST(Instantiate, CascadeIndexOneKeepsNames)
{
    const ModuleDef c1 = instantiate(*test::pathways().find_module("Cascade3"), 1);
    EXPECT_EQ(vars_of(c1), (std::set<std::string>{"X1Inactive", "X1Active", "Y1Inactive",
                                                  "Y1Active", "Z1Inactive", "Z1Active"}));
}

TEST(Instantiate, DistinctIndicesAreDisjoint)
{
    for (const auto& g : test::pathways().modules) {
        const ModuleDef a = instantiate(g, 1), b = instantiate(g, 2);
        for (const auto& v : vars_of(a))
            EXPECT_EQ(vars_of(b).count(v), 0u) << g.name << " " << v;
        for (const auto& l : labels_of(a))
            EXPECT_EQ(labels_of(b).count(l), 0u) << g.name << " " << l;
        EXPECT_EQ(a.commands.size(), b.commands.size());
    }
}

TEST(Instantiate, NoHomeIndexAppendsSuffix)
{
    Model m = parse_model("module M x : [0..1] init 0; [go] x = 0 -> 1 : (x' = 1); endmodule");
    const ModuleDef m3 = instantiate(m.modules[0], 3);
    EXPECT_EQ(m3.variables[0].name, "x_3");
    EXPECT_EQ(m3.labels(), std::vector<std::string>{"go_3"});
}

TEST(Instantiate, IndexReuseRejected)
{
    Instantiator inst(test::pathways());
    EXPECT_NO_THROW(inst.make("Receptor", 1));
    EXPECT_NO_THROW(inst.make("Receptor", 2));
    EXPECT_THROW(inst.make("Receptor", 1), ModelError);
    EXPECT_THROW(inst.make("Nope", 1), ModelError);
    EXPECT_THROW(instantiate(*test::pathways().find_module("Receptor"), -1), ModelError);
}

TEST(Alphabet, P1ByHand)
{
    const auto& m = test::pathways();
    EXPECT_EQ(alphabet(m.composition("P1"), m),
              (Alphabet{"e2_1", "e3_1", "e4_1", "e5_1", "e6_1", "e7_1", "e8_1", "e9_1", "e10_1",
                        "e12_1", "e13_1", "e14_1"}));
}

TEST(Alphabet, HideEverything)
{
    const auto& m = test::pathways();
    const C p1 = m.composition("P1");
    const Alphabet a = alphabet(p1, m);
    EXPECT_TRUE(alphabet(C::hide(p1, {a.begin(), a.end()}), m).empty());
}

TEST(Alphabet, ParIsUnion)
{
    const auto& m = test::pathways();
    for (const auto& nc : m.compositions) {
        const auto* par = nc.expr.as<ParNode>();
        if (!par)
            continue;
        Alphabet want = alphabet(*par->left, m);
        const Alphabet r = alphabet(*par->right, m);
        want.insert(r.begin(), r.end());
        EXPECT_EQ(alphabet(nc.expr, m), want) << nc.name;
    }
}

TEST(Independence, PathwaysOneAndTwo)
{
    const auto& m = test::pathways();
    const auto r = independence_check(m.composition("P1"), m.composition("P2"), m);
    EXPECT_TRUE(r.independent);
    EXPECT_TRUE(r.shared.empty());
}

TEST(Independence, RenamedCatalysis)
{
    const auto& m = test::pathways();
    const auto r = independence_check(m.composition("P1"),
                                      C::rename(m.composition("P2"), {{"e8_2", "e7_1"}}), m);
    EXPECT_FALSE(r.independent);
    EXPECT_EQ(r.shared, (std::set<std::string>{"e7_1"}));
}

TEST(Independence, SelfIntersection)
{
    const auto& m = test::pathways();
    const auto r = independence_check(m.composition("P1"), m.composition("P1"), m);
    EXPECT_FALSE(r.independent);
    EXPECT_EQ(r.shared, alphabet(m.composition("P1"), m));
}

TEST(Flatten, IndependentBlocksAllOfU)
{
    const auto& m = test::pathways();
    const FlatSystem flat = flatten(m.composition("Independent"), m);
    EXPECT_EQ(flat.blocked, kU);
}

TEST(Flatten, ReceptorCascadeSynchronise)
{
    const auto& m = test::pathways();
    const FlatSystem flat =
        flatten(parse_composition("Receptor_1 / {i1_1} {e1_1 <- e5_1} |[e5_1]| Cascade3_1", m).expr, m);
    EXPECT_EQ(flat.participation("e5_1"), (std::set<std::size_t>{0, 1}));
    EXPECT_TRUE(flat.blocked.empty());
}

TEST(Flatten, SingleInstance)
{
    const auto& m = test::pathways();
    const FlatSystem flat = flatten(C::instance("Cascade3", 1), m);
    EXPECT_TRUE(flat.blocked.empty());
    for (const auto& l : flat.modules[0].labels())
        EXPECT_EQ(flat.participation(l).size(), 1u) << l;
}

TEST(Flatten, NestedMultiwaySync)
{
    // e9_2 joins Receptor_2's e2_2, Cascade3_2's e9_2 and Cascade3_1's e12_1
    const auto& m = test::pathways();
    const FlatSystem flat = flatten(m.composition("SubstrateAvailability"), m);
    bool found = false;
    for (const auto& v : flat.vectors)
        if (v.label == "e9_2") {
            found = true;
            EXPECT_EQ(v.participants.size(), 3u);
        }
    EXPECT_TRUE(found);
}

TEST(Flatten, Rejections)
{
    Model m = parse_model(R"(
module A a : [0..1] init 0; [p] a = 0 -> 1 : (a' = 1); [q] a = 1 -> 1 : (a' = 0); endmodule
module B a : [0..1] init 0; endmodule
)");
    EXPECT_THROW(flatten(C::par(C::instance("A", 1), C::instance("A", 1), {}), m), ModelError);
    EXPECT_THROW(flatten(C::par(C::instance("A", 0), C::instance("B", 0), {}), m), ModelError);
    EXPECT_THROW(flatten(C::rename(C::instance("A", 0), {{"p", "r"}, {"q", "r"}}), m), ModelError);
    EXPECT_THROW(flatten(C::rename(C::instance("A", 0), {{"p", "q"}}), m), ModelError);
    EXPECT_THROW(flatten(C::rename(C::instance("A", 0), {{"z", "q"}}), m), ModelError);
    EXPECT_NO_THROW(flatten(C::rename(C::instance("A", 0), {{"p", "q"}, {"q", "p"}}), m));
}

TEST(Flatten, HiddenSyncLabelBecomesVacuous)
{
    Model m = parse_model(R"(
module A a : [0..1] init 0; [s] a = 0 -> 1 : (a' = 1); endmodule
module B b : [0..1] init 0; endmodule
)");
    const Ctmc blocked = test::build_expr(C::par(C::instance("A", 0), C::instance("B", 0), {"s"}), m);
    const Ctmc hidden =
        test::build_expr(C::par(C::hide(C::instance("A", 0), {"s"}), C::instance("B", 0), {"s"}), m);
    EXPECT_EQ(blocked.num_states(), 1u);
    EXPECT_EQ(hidden.num_states(), 2u);
}

// Algebraic invariants over the six two-pathway fixtures.

TEST(Invariant, BlockingOnIndependent)
{
    const auto& m = test::pathways();
    const Ctmc ctmc = test::build_named(m, "Independent");
    for (const auto& l : kU)
        EXPECT_TRUE(label_transitions(ctmc, l).empty()) << l;
}

TEST(Invariant, BlockedLabelsNeverFire)
{
    const auto& m = test::pathways();
    for (const auto& [fixture, system] : test::fixture_systems()) {
        const FlatSystem flat = flatten(m.composition(system), m);
        const Ctmc ctmc = build(flat);
        for (const auto& l : flat.blocked)
            EXPECT_TRUE(label_transitions(ctmc, l).empty()) << fixture << " " << l;
    }
}

TEST(Invariant, RenamePreservesCommandsAndTransitions)
{
    const auto& m = test::pathways();
    for (const auto& [fixture, system] : test::fixture_systems()) {
        const C base = m.composition(system);
        const FlatSystem flat = flatten(base, m);
        const Ctmc ctmc = build(flat);
        for (const auto& l : alphabet(base, m)) {
            const std::string fresh = l + "_renamed";
            const FlatSystem rflat = flatten(C::rename(base, {{l, fresh}}), m);
            const Ctmc renamed = build(rflat);
            EXPECT_EQ(command_count(rflat), command_count(flat));
            EXPECT_EQ(renamed.transitions.size(), ctmc.transitions.size()) << fixture << " " << l;
            EXPECT_EQ(label_transitions(renamed, fresh).size(), label_transitions(ctmc, l).size());
            EXPECT_TRUE(label_transitions(renamed, l).empty());
        }
    }
}

TEST(Invariant, ParCommutes)
{
    const auto& m = test::pathways();
    for (const auto& [fixture, system] : test::fixture_systems()) {
        const auto* par = m.composition(system).as<ParNode>();
        ASSERT_NE(par, nullptr) << fixture;
        const Ctmc ab = test::build_expr(C::par(*par->left, *par->right, par->sync), m);
        const Ctmc ba = test::build_expr(C::par(*par->right, *par->left, par->sync), m);
        EXPECT_EQ(ab.num_states(), ba.num_states()) << fixture;
        EXPECT_EQ(test::canonical_edges(ab), test::canonical_edges(ba)) << fixture;
    }
}

TEST(Invariant, HidingKeepsStates)
{
    const auto& m = test::pathways();
    for (const auto& [fixture, system] : test::fixture_systems()) {
        const C base = m.composition(system);
        const auto states = test::canonical_states(test::build_expr(base, m));
        const Alphabet a = alphabet(base, m);
        for (const auto& l : a)
            EXPECT_EQ(test::canonical_states(test::build_expr(C::hide(base, {l}), m)), states)
                << fixture << " " << l;
        EXPECT_EQ(test::canonical_states(test::build_expr(C::hide(base, {a.begin(), a.end()}), m)),
                  states);
    }
}

TEST(Invariant, HidingInsidePathway)
{
    const auto& m = test::pathways();
    const Ctmc plain = test::build_named(m, "P1");
    const Ctmc hidden = test::build_text(
        m, "Receptor_1 / {i1_1, e2_1, e3_1, e4_1} {e1_1 <- e5_1} |[e5_1]| "
           "Cascade3_1 / {i2_1, e6_1, e7_1, e8_1, e9_1, e10_1, e12_1} {e11_1 <- e13_1} |[e13_1]| "
           "GeneExpression_1 / {e14_1}");
    EXPECT_EQ(test::canonical_states(hidden), test::canonical_states(plain));
    EXPECT_EQ(hidden.transitions.size(), plain.transitions.size());
}

TEST(LabelOrigins, RenamedLabel)
{
    const auto& m = test::pathways();
    const auto o = label_origins(m.composition("P1"), m);
    ASSERT_EQ(o.count("e5_1"), 1u);
    std::set<std::string> mods;
    for (const auto& x : o.at("e5_1"))
        mods.insert(x.module + ":" + x.generic_label);
    EXPECT_EQ(mods, (std::set<std::string>{"Receptor:e1_1", "Cascade3:e5_1"}));
}
