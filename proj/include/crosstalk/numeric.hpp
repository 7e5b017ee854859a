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

#ifndef CROSSTALK_NUMERIC_HPP
#define CROSSTALK_NUMERIC_HPP

#include <cstddef>
#include <vector>

namespace xtalk {

/// Poisson(lambda) probabilities on [left, left + weights.size()), a window
/// around the mode grown until it holds at least 1 - epsilon of the mass.
struct PoissonWindow {
    std::size_t left = 0;
    std::vector<double> weights;
    double total = 0.0;

    std::size_t right() const { return left + weights.size() - 1; }
};

PoissonWindow poisson_window(double lambda, double epsilon);

} // namespace xtalk

#endif // CROSSTALK_NUMERIC_HPP
