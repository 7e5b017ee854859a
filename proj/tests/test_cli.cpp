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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "crosstalk/report.hpp"

#ifndef CROSSTALK_CLI
#error "CROSSTALK_CLI must name the built executable"
#endif

namespace {

struct Outcome {
    int code = -1;
    std::string out;
};

Outcome run(const std::string& args, bool merge_stderr = false)
{
    const std::string cmd =
        std::string(CROSSTALK_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    Outcome r;
    FILE* p = ::popen(cmd.c_str(), "r");
    if (!p)
        return r;
    std::array<char, 4096> buf{};
    for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), p)) > 0;)
        r.out.append(buf.data(), n);
    const int status = ::pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text)
{
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p;
}

const std::string kPathways = std::string(CROSSTALK_FIXTURES_DIR) + "/pathways.ctk";
const std::string kDetection = std::string(CROSSTALK_FIXTURES_DIR) + "/detection.csl";

} // namespace

TEST(Cli, CheckIndependent)
{
    const Outcome r = run("check " + kPathways + " Independent " + kDetection + " --format json");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto& props = j["canonical"]["properties"];
    ASSERT_EQ(props.size(), 3u);
    EXPECT_NEAR(props[0]["probability"].get<double>(), 0.500, 5e-4);
    EXPECT_NEAR(props[1]["probability"].get<double>(), 0.184, 1e-3);
    EXPECT_NEAR(props[2]["probability"].get<double>(), 0.18473, 1e-5);
    EXPECT_EQ(j["canonical"]["models"][0]["states"], 36);
}

TEST(Cli, EmptyPropertyFile)
{
    const auto empty = write_temp("crosstalk_empty.csl", "");
    const Outcome r = run("check " + kPathways + " Independent " + empty.string() + " --format json");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(nlohmann::json::parse(r.out)["canonical"]["properties"].empty());
}

TEST(Cli, UnknownVariable)
{
    const auto bad = write_temp("crosstalk_bad.csl", "p : P=? [ F (Protein9 = 1) ]\n");
    const Outcome r = run("check " + kPathways + " Independent " + bad.string(), true);
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("Protein9"), std::string::npos);
}

TEST(Cli, InputErrors)
{
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("check").code, 2);
    EXPECT_EQ(run("check /no/such/file.ctk X y.csl").code, 2);
    EXPECT_EQ(run("check " + kPathways + " Nope " + kDetection).code, 2);
    EXPECT_EQ(run("check --fixture nope").code, 2);
    EXPECT_EQ(run("check --fixture independent --format yaml").code, 2);
    const auto syntax = write_temp("crosstalk_syntax.ctk", "module M\n x : [0..1] init 0;\n [a] x = 0 1 : (x'=1);\nendmodule\n");
    const Outcome r = run("check " + syntax.string() + " M " + kDetection, true);
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("3:"), std::string::npos);
}

TEST(Cli, StateCap)
{
    EXPECT_EQ(run("check --fixture independent --state-cap 10").code, 3);
}

TEST(Cli, NonConvergence)
{
    EXPECT_EQ(run("check --fixture case-study CaseWNT --max-iterations 2 --direct-limit 0").code, 4);
}

TEST(Cli, MissingAnnotation)
{
    const auto model = write_temp("crosstalk_unannotated.ctk", R"(
module A a : [0..1] init 0; [s] a = 0 -> 1 : (a' = 1); endmodule
module B b : [0..1] init 0; [s] b = 0 -> 1 : (b' = 1); endmodule
system S = A |[s]| B;
)");
    EXPECT_EQ(run("classify " + model.string() + " S").code, 5);
    EXPECT_EQ(run("classify " + model.string() + " A B").code, 5);
}

TEST(Cli, Classify)
{
    Outcome r = run("classify --fixture signal-flow --format json");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out)["canonical"]["classification"];
    EXPECT_EQ(j["category"], "signal-flow");
    EXPECT_EQ(j["shared"], nlohmann::json::array({"e7_1"}));
    r = run("classify " + kPathways + " P1 P2 --format json");
    ASSERT_EQ(r.code, 0);
    j = nlohmann::json::parse(r.out)["canonical"]["classification"];
    EXPECT_EQ(j["category"], "independent");
    EXPECT_TRUE(j["shared"].empty());
}

TEST(Cli, Detect)
{
    Outcome r = run("detect --fixture signal-flow --format json");
    ASSERT_EQ(r.code, 0);
    auto d = nlohmann::json::parse(r.out)["canonical"]["detection"];
    EXPECT_TRUE(d["detected"].get<bool>());
    r = run("detect " + kPathways + " SignalFlow SignalFlow --format json");
    ASSERT_EQ(r.code, 0);
    EXPECT_FALSE(nlohmann::json::parse(r.out)["canonical"]["detection"]["detected"].get<bool>());
    r = run("detect --fixture intracellular-communication --threshold 1e-3 --format json");
    ASSERT_EQ(r.code, 0);
    EXPECT_FALSE(nlohmann::json::parse(r.out)["canonical"]["detection"]["detected"].get<bool>());
}

TEST(Cli, Characterise)
{
    const Outcome r = run("characterise --fixture receptor-function --format csv");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("characterisation,receptor_function,holds,true"), std::string::npos);
    EXPECT_NE(r.out.find("characterisation,signal_flow,holds,false"), std::string::npos);
}

TEST(Cli, FormatsAgree)
{
    const std::string base = "check --fixture gene-expression ";
    const auto j = nlohmann::json::parse(run(base + "--format json").out)["canonical"];
    const std::string csv = run(base + "--format csv").out;
    const std::string text = run(base + "--format text").out;
    for (const auto& p : j["properties"]) {
        const std::string value = p.contains("probability")
                                      ? xtalk::format_number(p["probability"].get<double>())
                                      : (p["verdict"].get<bool>() ? "true" : "false");
        EXPECT_NE(csv.find(value), std::string::npos) << value;
        EXPECT_NE(text.find(value), std::string::npos) << value;
    }
}

TEST(Cli, DeterministicJson)
{
    for (const char* cmd : {"check --fixture substrate-availability", "detect --fixture receptor-function",
                            "characterise --fixture intracellular-communication", "classify --fixture gene-expression"}) {
        const auto a = nlohmann::json::parse(run(std::string(cmd) + " --format json").out);
        const auto b = nlohmann::json::parse(run(std::string(cmd) + " --format json").out);
        EXPECT_EQ(a["canonical"].dump(), b["canonical"].dump()) << cmd;
        EXPECT_TRUE(a.contains("timing"));
    }
}

TEST(Cli, ExportCtmc)
{
    const auto dir = std::filesystem::temp_directory_path() / "crosstalk_cli_export";
    std::filesystem::remove_all(dir);
    EXPECT_EQ(run("check --fixture independent --export-ctmc " + dir.string()).code, 0);
    EXPECT_TRUE(std::filesystem::exists(dir / "states.tsv"));
    EXPECT_TRUE(std::filesystem::exists(dir / "transitions.tsv"));
    std::filesystem::remove_all(dir);
}

TEST(Cli, Help)
{
    const Outcome r = run("--help");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("classify"), std::string::npos);
}
