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

#ifndef CROSSTALK_COMPOSITION_HPP
#define CROSSTALK_COMPOSITION_HPP

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace xtalk {

class CompositionExpr;

/// Instance of a generic module. Index 0 denotes the module exactly as
/// declared (no renaming of its variables or labels).
struct InstanceNode {
    std::string module;
    int index = 0;
    bool operator==(const InstanceNode&) const = default;
};

/// Relabelling `old <- new`; all pairs apply simultaneously.
struct RenameNode {
    std::shared_ptr<const CompositionExpr> child;
    std::vector<std::pair<std::string, std::string>> mapping;
};

struct HideNode {
    std::shared_ptr<const CompositionExpr> child;
    std::vector<std::string> labels;
};

/// `left |[sync]| right`
struct ParNode {
    std::shared_ptr<const CompositionExpr> left;
    std::shared_ptr<const CompositionExpr> right;
    std::vector<std::string> sync;
};

/// `left || right`: synchronise on the intersection of the alphabets.
struct ParAutoNode {
    std::shared_ptr<const CompositionExpr> left;
    std::shared_ptr<const CompositionExpr> right;
};

/// Immutable composition tree; copies share structure.
class CompositionExpr {
public:
    using Node = std::variant<InstanceNode, RenameNode, HideNode, ParNode, ParAutoNode>;

    static CompositionExpr instance(std::string module, int index);
    static CompositionExpr rename(CompositionExpr child,
                                  std::vector<std::pair<std::string, std::string>> mapping);
    static CompositionExpr hide(CompositionExpr child, std::vector<std::string> labels);
    static CompositionExpr par(CompositionExpr left, CompositionExpr right,
                               std::vector<std::string> sync);
    static CompositionExpr par_auto(CompositionExpr left, CompositionExpr right);

    const Node& node() const { return *node_; }

    template <typename T>
    const T* as() const { return std::get_if<T>(node_.get()); }

    friend bool operator==(const CompositionExpr& a, const CompositionExpr& b);

private:
    explicit CompositionExpr(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
    std::shared_ptr<const Node> node_;
};

/// Concrete syntax, e.g. `Receptor_1 / {i1_1} {e1_1 <- e5_1} |[e5_1]| Cascade3_1`.
std::string to_string(const CompositionExpr& e);

} // namespace xtalk

#endif // CROSSTALK_COMPOSITION_HPP
