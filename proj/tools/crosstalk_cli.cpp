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

// crosstalk: build CTMCs from pathway compositions, check CSL properties,
// detect, classify and characterise cross-talk.

#include <chrono>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "crosstalk/algebra.hpp"
#include "crosstalk/checker.hpp"
#include "crosstalk/crosstalk.hpp"
#include "crosstalk/ctmc.hpp"
#include "crosstalk/fixtures.hpp"
#include "crosstalk/parser.hpp"
#include "crosstalk/report.hpp"

namespace {

using namespace xtalk;

enum Exit { Ok = 0, Input = 2, Cap = 3, NoConvergence = 4, Annotation = 5 };

const auto g_start = std::chrono::steady_clock::now();

struct Common {
    std::string format = "text";
    std::string solver = "iterative";
    std::size_t state_cap = BuildOptions{}.state_cap;
    double epsilon = CheckerOptions{}.truncation_epsilon;
    std::size_t max_iterations = CheckerOptions{}.max_iterations;
    std::size_t direct_limit = CheckerOptions{}.direct_limit;
    std::string export_dir;
    std::string fixture;

    CheckerOptions checker() const
    {
        CheckerOptions o;
        o.solver = solver == "direct" ? xtalk::Solver::Direct : xtalk::Solver::Iterative;
        o.truncation_epsilon = epsilon;
        o.max_iterations = max_iterations;
        o.direct_limit = direct_limit;
        return o;
    }
    Format output() const
    {
        if (format == "json")
            return Format::Json;
        if (format == "csv")
            return Format::Csv;
        return Format::Text;
    }
};

void add_common(CLI::App* cmd, Common& c, bool builds = true)
{
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--fixture", c.fixture, "Use a shipped fixture instead of files");
    if (!builds)
        return;
    cmd->add_option("--solver", c.solver, "Linear solver for unbounded until")
        ->check(CLI::IsMember({"iterative", "direct"}))
        ->capture_default_str();
    cmd->add_option("--state-cap", c.state_cap, "Maximum number of states")->capture_default_str();
    cmd->add_option("--time-bound-epsilon", c.epsilon,
                    "Poisson mass left out by uniformisation")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--max-iterations", c.max_iterations, "Gauss-Seidel sweep cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--direct-limit", c.direct_limit,
                    "Largest system solved directly when Gauss-Seidel stalls (0: never)")
        ->capture_default_str();
    cmd->add_option("--export-ctmc", c.export_dir, "Write states.tsv and transitions.tsv here");
}

void print(Report& report, const Common& c)
{
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - g_start).count();
    std::cout << render(report, c.output());
}

Ctmc build_system(const Model& model, const std::string& file, const std::string& name,
                  const std::string& role, const Common& c, Report& report,
                  const std::string& export_suffix = {})
{
    FlatSystem flat = flatten(model.composition(name), model);
    for (const auto& w : flat.warnings)
        report.warnings.push_back(w);
    Ctmc ctmc = build(flat, BuildOptions{c.state_cap});
    report.models.push_back({role, file, name, ctmc.num_states(), ctmc.transitions.size()});
    if (!c.export_dir.empty())
        export_ctmc(ctmc, std::filesystem::path(c.export_dir) / export_suffix);
    return ctmc;
}

int run_check(const Common& c, const std::vector<std::string>& args)
{
    Report report;
    report.command = "check";
    std::string file, system, props_text;
    Model model;
    if (!c.fixture.empty()) {
        Fixture f = load_fixture(c.fixture);
        file = f.model_path.string();
        system = args.empty() ? f.system : args[0];
        model = std::move(f.model);
        props_text = f.property_text;
    } else {
        if (args.size() != 3)
            throw CLI::ValidationError("check", "expects MODEL COMPOSITION PROPERTIES");
        file = args[0];
        system = args[1];
        model = parse_model(read_file(file));
        props_text = read_file(args[2]);
    }
    const auto props = parse_property_file(props_text);
    report.warnings = model.warnings;
    const Ctmc ctmc = build_system(model, file, system, "model", c, report);
    for (const auto& p : props) {
        CheckResult r = check_property(ctmc, p.formula, c.checker());
        for (const auto& w : r.warnings)
            report.warnings.push_back(p.name + ": " + w);
        report.properties.push_back({p.name, p.formula, std::move(r)});
    }
    print(report, c);
    return Ok;
}

int run_detect(const Common& c, const std::vector<std::string>& args, double threshold,
               const std::string& candidate_file)
{
    Report report;
    report.command = "detect";
    std::string base_file, cand_file, base_sys, cand_sys;
    Model base_model, cand_model;
    if (!c.fixture.empty()) {
        Fixture base = load_fixture("independent");
        Fixture cand = load_fixture(c.fixture);
        base_file = base.model_path.string();
        cand_file = cand.model_path.string();
        base_sys = base.system;
        cand_sys = cand.system;
        base_model = std::move(base.model);
        cand_model = std::move(cand.model);
    } else {
        if (args.size() != 3)
            throw CLI::ValidationError("detect", "expects MODEL BASELINE CANDIDATE");
        base_file = args[0];
        base_sys = args[1];
        cand_sys = args[2];
        base_model = parse_model(read_file(base_file));
        cand_file = candidate_file.empty() ? base_file : candidate_file;
        cand_model = candidate_file.empty() ? base_model : parse_model(read_file(cand_file));
    }
    const Ctmc base = build_system(base_model, base_file, base_sys, "baseline", c, report, "baseline");
    const Ctmc cand = build_system(cand_model, cand_file, cand_sys, "candidate", c, report, "candidate");
    report.detection = detect(base, cand, threshold, c.checker());
    print(report, c);
    return Ok;
}

int run_classify(const Common& c, const std::vector<std::string>& args)
{
    Report report;
    report.command = "classify";
    std::string file;
    Model model;
    std::vector<std::string> names = args;
    if (!c.fixture.empty()) {
        Fixture f = load_fixture(c.fixture);
        file = f.model_path.string();
        model = std::move(f.model);
        if (names.empty())
            names = {f.system};
    } else {
        if (args.size() < 2 || args.size() > 3)
            throw CLI::ValidationError("classify", "expects MODEL PATHWAY1 PATHWAY2 or MODEL SYSTEM");
        file = args[0];
        model = parse_model(read_file(file));
        names.erase(names.begin());
    }
    std::optional<CompositionExpr> p1, p2;
    if (names.size() == 1) {
        auto [l, r] = split_system(model.composition(names[0]));
        p1 = l;
        p2 = r;
        report.models.push_back({"model", file, names[0], 0, 0});
    } else if (names.size() == 2) {
        p1 = parse_composition(names[0], model).expr;
        p2 = parse_composition(names[1], model).expr;
        report.models.push_back({"model", file, names[0] + " | " + names[1], 0, 0});
    } else {
        throw CLI::ValidationError("classify", "expects one system or two pathways");
    }
    report.classification = classify(*p1, *p2, model);
    print(report, c);
    return Ok;
}

int run_characterise(const Common& c, const std::vector<std::string>& args)
{
    Report report;
    report.command = "characterise";
    std::string file, system;
    Model model;
    if (!c.fixture.empty()) {
        Fixture f = load_fixture(c.fixture);
        file = f.model_path.string();
        system = args.empty() ? f.system : args[0];
        model = std::move(f.model);
    } else {
        if (args.size() != 2)
            throw CLI::ValidationError("characterise", "expects MODEL COMPOSITION");
        file = args[0];
        system = args[1];
        model = parse_model(read_file(file));
    }
    const Ctmc ctmc = build_system(model, file, system, "model", c, report);
    report.characterisation = characterise(ctmc, c.checker());
    for (const auto& v : report.characterisation->verdicts)
        for (const auto& w : v.warnings)
            report.warnings.push_back(v.name + ": " + w);
    print(report, c);
    return Ok;
}

int fail(int code, const std::string& message)
{
    std::cerr << "crosstalk: error: " << message << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cross-talk analysis of signalling pathway compositions"};
    app.require_subcommand(1);

    Common check_opts, detect_opts, classify_opts, char_opts;
    std::vector<std::string> check_args, detect_args, classify_args, char_args;
    double threshold = 1e-5;
    std::string candidate_file;

    auto* check = app.add_subcommand("check", "Check every property of a file against a composition");
    check->add_option("args", check_args, "MODEL COMPOSITION PROPERTIES");
    add_common(check, check_opts);

    auto* det = app.add_subcommand("detect", "Compare a candidate against a baseline composition");
    det->add_option("args", detect_args, "MODEL BASELINE CANDIDATE");
    det->add_option("--threshold", threshold, "Probability delta counted as cross-talk")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    det->add_option("--candidate-model", candidate_file, "Model file of the candidate");
    add_common(det, detect_opts);

    auto* cls = app.add_subcommand("classify", "Categorise the cross-talk between two pathways");
    cls->add_option("args", classify_args, "MODEL PATHWAY1 PATHWAY2 | MODEL SYSTEM");
    add_common(cls, classify_opts, false);

    auto* chr = app.add_subcommand("characterise", "Evaluate the five signature properties");
    chr->add_option("args", char_args, "MODEL COMPOSITION");
    add_common(chr, char_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Input;
    }

    try {
        if (*check)
            return run_check(check_opts, check_args);
        if (*det)
            return run_detect(detect_opts, detect_args, threshold, candidate_file);
        if (*cls)
            return run_classify(classify_opts, classify_args);
        return run_characterise(char_opts, char_args);
    } catch (const CLI::ValidationError& e) {
        return fail(Input, e.what());
    } catch (const StateCapExceeded& e) {
        return fail(Cap, e.what());
    } catch (const NonConvergence& e) {
        return fail(NoConvergence, e.what());
    } catch (const AnnotationError& e) {
        return fail(Annotation, e.what());
    } catch (const Error& e) {
        return fail(Input, e.what());
    } catch (const std::filesystem::filesystem_error& e) {
        return fail(Input, e.what());
    }
}
