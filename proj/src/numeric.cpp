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

#include "crosstalk/numeric.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace xtalk {

PoissonWindow poisson_window(double lambda, double epsilon)
{
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("Poisson rate must be finite and non-negative");
    PoissonWindow w;
    if (lambda == 0.0) {
        w.weights = {1.0};
        w.total = 1.0;
        return w;
    }
    const double log_lambda = std::log(lambda);
    auto pmf = [&](double k) { return std::exp(k * log_lambda - lambda - std::lgamma(k + 1.0)); };

    const auto mode = static_cast<std::size_t>(std::floor(lambda));
    std::deque<double> mass{pmf(static_cast<double>(mode))};
    std::size_t left = mode;
    std::size_t right = mode;
    double total = mass.front();
    while (total < 1.0 - epsilon) {
        const double below = left > 0 ? pmf(static_cast<double>(left - 1)) : 0.0;
        const double above = pmf(static_cast<double>(right + 1));
        if (below == 0.0 && above == 0.0)
            break;
        if (left > 0 && below >= above) {
            mass.push_front(below);
            --left;
            total += below;
        } else {
            mass.push_back(above);
            ++right;
            total += above;
        }
    }
    w.left = left;
    w.weights.assign(mass.begin(), mass.end());
    w.total = total;
    return w;
}

} // namespace xtalk
