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

#include "crosstalk/report.hpp"

#include <algorithm>
#include <sstream>

#include <fmt/format.h>

namespace xtalk {

std::string format_number(double v)
{
    return fmt::format("{:.6g}", v);
}

namespace {

using Json = nlohmann::ordered_json;

Json number(double v)
{
    return std::stod(format_number(v));
}

std::string value_text(const CheckResult& r)
{
    if (r.kind == CheckResult::Kind::Probability)
        return format_number(r.probability);
    return r.verdict ? "true" : "false";
}

Json stats_json(const SolverStats& s)
{
    Json j;
    j["method"] = s.method;
    j["unknowns"] = s.unknowns;
    j["iterations"] = s.iterations;
    j["residual"] = number(s.residual);
    if (s.method == "uniformisation") {
        j["rate"] = number(s.rate);
        j["poisson_left"] = s.poisson_left;
        j["poisson_right"] = s.poisson_right;
    }
    return j;
}

// Aligned columns; the first row is the header.
std::string table(const std::vector<std::vector<std::string>>& rows)
{
    if (rows.empty())
        return {};
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i)
            width[i] = std::max(width[i], r[i].size());
    std::string out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size())
                line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        out += line + "\n";
    }
    return out;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string origins_text(const std::vector<SharedOrigin>& side)
{
    std::string out;
    for (const auto& o : side) {
        if (!out.empty())
            out += "; ";
        out += o.module + "." + o.label + " " + std::string(to_string(o.role)) + " " +
               std::string(to_string(o.kind));
    }
    return out;
}

} // namespace

Json canonical_json(const Report& r)
{
    Json j;
    j["command"] = r.command;
    j["models"] = Json::array();
    for (const auto& m : r.models)
        j["models"].push_back({{"role", m.role},
                               {"file", m.file},
                               {"composition", m.composition},
                               {"states", m.states},
                               {"transitions", m.transitions}});
    j["properties"] = Json::array();
    for (const auto& p : r.properties) {
        Json e;
        e["name"] = p.name;
        e["formula"] = to_string(p.formula);
        if (p.result.kind == CheckResult::Kind::Probability)
            e["probability"] = number(p.result.probability);
        else
            e["verdict"] = p.result.verdict;
        e["warnings"] = p.result.warnings;
        e["diagnostics"] = Json::array();
        for (const auto& s : p.result.diagnostics)
            e["diagnostics"].push_back(stats_json(s));
        j["properties"].push_back(std::move(e));
    }
    if (r.detection) {
        Json d;
        d["threshold"] = number(r.detection->threshold);
        d["detected"] = r.detection->detected;
        d["rows"] = Json::array();
        for (const auto& row : r.detection->rows)
            d["rows"].push_back({{"name", row.name},
                                 {"baseline", number(row.baseline)},
                                 {"model", number(row.model)},
                                 {"delta", number(row.delta)}});
        j["detection"] = std::move(d);
    }
    if (r.classification) {
        Json c;
        c["category"] = std::string(to_string(r.classification->category));
        c["shared"] = r.classification->shared;
        c["origins"] = Json::array();
        for (const auto& l : r.classification->origins)
            c["origins"].push_back({{"label", l.label},
                                    {"left", origins_text(l.left)},
                                    {"right", origins_text(l.right)}});
        j["classification"] = std::move(c);
    }
    if (r.characterisation) {
        Json c = Json::array();
        for (const auto& v : r.characterisation->verdicts)
            c.push_back({{"signature", v.name},
                         {"category", std::string(to_string(v.category))},
                         {"formula", to_string(v.property)},
                         {"holds", v.holds}});
        j["characterisation"] = std::move(c);
    }
    j["warnings"] = r.warnings;
    return j;
}

std::string render(const Report& r, Format f)
{
    if (f == Format::Json) {
        Json j;
        j["canonical"] = canonical_json(r);
        j["timing"] = {{"wall_seconds", r.wall_seconds}};
        return j.dump(2) + "\n";
    }

    if (f == Format::Csv) {
        std::string out = "section,name,field,value\n";
        auto row = [&](const std::string& s, const std::string& n, const std::string& k,
                       const std::string& v) {
            out += csv_field(s) + "," + csv_field(n) + "," + csv_field(k) + "," + csv_field(v) +
                   "\n";
        };
        for (const auto& m : r.models) {
            row("model", m.role, "file", m.file);
            row("model", m.role, "composition", m.composition);
            row("model", m.role, "states", std::to_string(m.states));
            row("model", m.role, "transitions", std::to_string(m.transitions));
        }
        for (const auto& p : r.properties)
            row("property", p.name,
                p.result.kind == CheckResult::Kind::Probability ? "probability" : "verdict",
                value_text(p.result));
        if (r.detection) {
            for (const auto& d : r.detection->rows) {
                row("detection", d.name, "baseline", format_number(d.baseline));
                row("detection", d.name, "model", format_number(d.model));
                row("detection", d.name, "delta", format_number(d.delta));
            }
            row("detection", "", "threshold", format_number(r.detection->threshold));
            row("detection", "", "detected", r.detection->detected ? "true" : "false");
        }
        if (r.classification) {
            row("classification", "", "category", std::string(to_string(r.classification->category)));
            for (const auto& l : r.classification->shared)
                row("classification", l, "shared", "true");
        }
        if (r.characterisation)
            for (const auto& v : r.characterisation->verdicts)
                row("characterisation", v.name, "holds", v.holds ? "true" : "false");
        for (const auto& w : r.warnings)
            row("warning", "", "", w);
        return out;
    }

    std::string out;
    for (const auto& m : r.models) {
        out += m.role + ": " + m.file + "  composition: " + m.composition;
        if (m.states)
            out += "  states: " + std::to_string(m.states) +
                   "  transitions: " + std::to_string(m.transitions);
        out += "\n";
    }
    if (!r.properties.empty()) {
        std::vector<std::vector<std::string>> rows{{"property", "result", "formula"}};
        for (const auto& p : r.properties)
            rows.push_back({p.name, value_text(p.result), to_string(p.formula)});
        out += "\n" + table(rows);
    }
    if (r.detection) {
        std::vector<std::vector<std::string>> rows{{"property", "baseline", "model", "delta"}};
        for (const auto& d : r.detection->rows)
            rows.push_back({d.name, format_number(d.baseline), format_number(d.model),
                            format_number(d.delta)});
        out += "\n" + table(rows);
        out += "cross-talk detected: " + std::string(r.detection->detected ? "yes" : "no") +
               " (threshold " + format_number(r.detection->threshold) + ")\n";
    }
    if (r.classification) {
        out += "\ncategory: " + std::string(to_string(r.classification->category)) + "\n";
        std::string e;
        for (const auto& l : r.classification->shared)
            e += (e.empty() ? "" : ", ") + l;
        out += "shared labels: {" + e + "}\n";
        for (const auto& l : r.classification->origins)
            out += "  " + l.label + ": " + origins_text(l.left) + " | " + origins_text(l.right) +
                   "\n";
    }
    if (r.characterisation) {
        std::vector<std::vector<std::string>> rows{{"signature", "holds", "formula"}};
        for (const auto& v : r.characterisation->verdicts)
            rows.push_back({v.name, v.holds ? "true" : "false", to_string(v.property)});
        out += "\n" + table(rows);
    }
    for (const auto& w : r.warnings)
        out += "warning: " + w + "\n";
    return out;
}

} // namespace xtalk
