// Copyright 2026 The mathbow Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATHBOW_MATH_NODE_HPP
#define MATHBOW_MATH_NODE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mathbow/error.hpp"

namespace mathbow {

namespace xml {
struct Node;
}

enum class NodeKind {
    Row,
    Identifier,
    Operator,
    Number,
    Sup,
    Sub,
    SubSup,
    Frac,
    Sqrt,
    Root,
    Fenced,
    Text,
    Other,
};

bool is_leaf_kind(NodeKind kind);
std::string_view kind_name(NodeKind kind);

/// Presentation-markup formula tree.
///
/// Leaves (Identifier, Operator, Number, Text) carry a nonempty value and no
/// children. Interior nodes carry children; Other additionally keeps the
/// source tag name in `value`.
struct MathNode {
    NodeKind kind = NodeKind::Row;
    std::string value;
    std::vector<MathNode> children;

    static MathNode leaf(NodeKind kind, std::string value);
    static MathNode node(NodeKind kind, std::vector<MathNode> children);
    static MathNode other(std::string tag, std::vector<MathNode> children);

    bool is_leaf() const { return is_leaf_kind(kind); }
    std::size_t size() const;  // number of nodes in the subtree

    friend bool operator==(const MathNode&, const MathNode&) = default;
};

// Shorthands used heavily by tests and the synthetic generator.
inline MathNode mi(std::string v) { return MathNode::leaf(NodeKind::Identifier, std::move(v)); }
inline MathNode mo(std::string v) { return MathNode::leaf(NodeKind::Operator, std::move(v)); }
inline MathNode mn(std::string v) { return MathNode::leaf(NodeKind::Number, std::move(v)); }
inline MathNode mrow(std::vector<MathNode> c) { return MathNode::node(NodeKind::Row, std::move(c)); }
inline MathNode msup(MathNode base, MathNode exponent)
{
    return MathNode::node(NodeKind::Sup, {std::move(base), std::move(exponent)});
}

class StructureError : public Error {
public:
    using Error::Error;
};

/// Throws StructureError naming the first node that breaks the arity or
/// leaf-value rules, e.g. "node /1 (Sup): expected 2 children, got 1".
void validate(const MathNode& tree);

/// Converts a <math> element into a tree. Single-child rows collapse into
/// their child and layout-only wrappers (mstyle, mpadded) are transparent.
/// Returns nullopt with `reason` set when the markup cannot be represented
/// (wrong arity, empty token element, no presentation content).
std::optional<MathNode> from_mathml(const xml::Node& math, std::string* reason = nullptr);

}  // namespace mathbow

#endif  // MATHBOW_MATH_NODE_HPP
