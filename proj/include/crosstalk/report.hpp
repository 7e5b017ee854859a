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

#ifndef CROSSTALK_REPORT_HPP
#define CROSSTALK_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "crosstalk/checker.hpp"
#include "crosstalk/crosstalk.hpp"

namespace xtalk {

struct ModelInfo {
    std::string role; // "model", "baseline", "candidate"
    std::string file;
    std::string composition;
    std::size_t states = 0;
    std::size_t transitions = 0;
};

struct PropertyResult {
    std::string name;
    Formula formula;
    CheckResult result;
};

struct Report {
    std::string command;
    std::vector<ModelInfo> models;
    std::vector<PropertyResult> properties;
    std::optional<DetectionReport> detection;
    std::optional<Classification> classification;
    std::optional<CharacterisationReport> characterisation;
    std::vector<std::string> warnings;
    double wall_seconds = 0.0; // excluded from the canonical section
};

enum class Format { Text, Csv, Json };

/// Six significant digits, the precision used by every rendering.
std::string format_number(double v);

/// Everything except timing, with keys in a fixed order.
nlohmann::ordered_json canonical_json(const Report& r);

std::string render(const Report& r, Format f);

} // namespace xtalk

#endif // CROSSTALK_REPORT_HPP
