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

#ifndef CROSSTALK_SRC_PARSERS_HPP
#define CROSSTALK_SRC_PARSERS_HPP

#include <string>
#include <vector>

#include "crosstalk/composition.hpp"
#include "crosstalk/model.hpp"
#include "lexer.hpp"

namespace xtalk::detail {

/// Parses one composition expression from `ts`, stopping before the first
/// token that cannot continue it.
CompositionExpr parse_composition_expr(TokenStream& ts, const Model& model,
                                       std::vector<std::string>& warnings);

} // namespace xtalk::detail

#endif // CROSSTALK_SRC_PARSERS_HPP
