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

#include "crosstalk/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "crosstalk/parser.hpp"

#ifndef CROSSTALK_FIXTURES_DIR
#define CROSSTALK_FIXTURES_DIR "fixtures"
#endif

namespace xtalk {

double Expected::tolerance() const
{
    const auto dot = value.find('.');
    if (dot == std::string::npos)
        return 0.5;
    const auto decimals = static_cast<int>(value.size() - dot - 1);
    double tol = 0.5;
    for (int i = 0; i < decimals; ++i)
        tol /= 10.0;
    return tol;
}

std::filesystem::path fixtures_dir()
{
    if (const char* env = std::getenv("CROSSTALK_FIXTURES"); env && *env)
        return env;
    return CROSSTALK_FIXTURES_DIR;
}

const std::vector<std::string>& crosstalk_fixture_names()
{
    static const std::vector<std::string> names = {
        "independent",      "signal-flow",     "substrate-availability",
        "receptor-function", "gene-expression", "intracellular-communication",
    };
    return names;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ModelError("cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Expected> parse_expected(std::string_view tsv)
{
    std::vector<Expected> out;
    std::istringstream in{std::string(tsv)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.front() == '#')
            continue;
        std::vector<std::string> cols;
        std::istringstream ls(line);
        for (std::string c; std::getline(ls, c, '\t');)
            cols.push_back(c);
        if (cols.size() != 4)
            throw ModelError("expected.tsv line " + std::to_string(lineno) + ": 4 columns needed");
        out.push_back({cols[0], cols[1], cols[2], cols[3]});
    }
    return out;
}

namespace {

const std::map<std::string, std::string, std::less<>>& systems()
{
    static const std::map<std::string, std::string, std::less<>> m = {
        {"independent", "Independent"},
        {"signal-flow", "SignalFlow"},
        {"substrate-availability", "SubstrateAvailability"},
        {"receptor-function", "ReceptorFunction"},
        {"gene-expression", "GeneExpressionCrosstalk"},
        {"intracellular-communication", "IntracellularCommunication"},
        {"case-study", "CaseCombined"},
    };
    return m;
}

Fixture assemble(std::string name, std::string system, const std::string& model_file,
                 const std::vector<std::string>& property_files, std::string_view expected_prefix)
{
    const auto dir = fixtures_dir();
    Fixture f;
    f.name = std::move(name);
    f.system = std::move(system);
    f.model_path = dir / model_file;
    f.property_path = dir / property_files.front();
    f.model_text = read_file(f.model_path);
    f.model = parse_model(f.model_text);
    for (const auto& pf : property_files)
        f.property_text += read_file(dir / pf);
    f.properties = parse_property_file(f.property_text);
    (void)f.model.composition(f.system);
    for (auto& e : parse_expected(read_file(dir / "expected.tsv")))
        if (e.fixture.rfind(expected_prefix, 0) == 0)
            f.expected.push_back(std::move(e));
    return f;
}

} // namespace

Fixture load_fixture(std::string_view name)
{
    if (name == "case-study")
        return case_study_skeleton();
    const auto it = systems().find(name);
    if (it == systems().end())
        throw ModelError("unknown fixture '" + std::string(name) + "'");
    Fixture f = assemble(it->first, it->second, "pathways.ctk",
                         {"detection.csl", "characterisation.csl"}, it->first);
    std::erase_if(f.expected, [&](const Expected& e) { return e.fixture != f.name; });
    return f;
}

Fixture case_study_skeleton()
{
    return assemble("case-study", "CaseCombined", "case_study.ctk", {"case_study.csl"},
                    "case-study/");
}

std::pair<CompositionExpr, CompositionExpr> split_system(const CompositionExpr& system)
{
    if (const auto* p = system.as<ParNode>())
        return {*p->left, *p->right};
    if (const auto* p = system.as<ParAutoNode>())
        return {*p->left, *p->right};
    throw ModelError("'" + to_string(system) + "' is not a parallel composition of two pathways");
}

} // namespace xtalk
