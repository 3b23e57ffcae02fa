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

#include "mathbow/math_node.hpp"

#include <numeric>

#include "mathbow/xml.hpp"

namespace mathbow {

namespace {

int required_arity(NodeKind kind)
{
    switch (kind) {
    case NodeKind::Sup:
    case NodeKind::Sub:
    case NodeKind::Frac:
    case NodeKind::Root:
        return 2;
    case NodeKind::SubSup:
        return 3;
    case NodeKind::Sqrt:
        return 1;
    default:
        return -1;
    }
}

void validate_at(const MathNode& node, const std::string& path)
{
    const auto where = [&] { return "node " + (path.empty() ? std::string("/") : path) + " (" +
                                    std::string(kind_name(node.kind)) + "): "; };
    if (node.is_leaf()) {
        if (node.value.empty())
            throw StructureError(where() + "leaf without value");
        if (!node.children.empty())
            throw StructureError(where() + "leaf with children");
        return;
    }
    if (node.kind == NodeKind::Other) {
        if (node.value.empty())
            throw StructureError(where() + "missing tag name");
    } else if (!node.value.empty()) {
        throw StructureError(where() + "interior node with value");
    }
    const int arity = required_arity(node.kind);
    if (arity >= 0 && static_cast<int>(node.children.size()) != arity)
        throw StructureError(where() + "expected " + std::to_string(arity) + " children, got " +
                             std::to_string(node.children.size()));
    for (std::size_t i = 0; i < node.children.size(); ++i)
        validate_at(node.children[i], path + "/" + std::to_string(i));
}

std::string trim(std::string_view s)
{
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(ws);
    return std::string(s.substr(b, e - b + 1));
}

struct Converter {
    std::string* reason;

    bool fail(std::string why)
    {
        if (reason)
            *reason = std::move(why);
        return false;
    }

    // Appends the converted form of `el` to `out`. Transparent wrappers may
    // append several nodes; ignorable elements append none.
    bool convert(const xml::Node& el, std::vector<MathNode>& out)
    {
        const std::string& tag = el.name;
        if (tag == "mi" || tag == "mo" || tag == "mn" || tag == "mtext" || tag == "ms") {
            std::string text = trim(el.inner_text());
            if (text.empty()) {
                // Empty operators are layout placeholders in exported markup.
                if (tag == "mo" || tag == "mtext")
                    return true;
                return fail("empty <" + tag + ">");
            }
            NodeKind kind = tag == "mi"   ? NodeKind::Identifier
                            : tag == "mo" ? NodeKind::Operator
                            : tag == "mn" ? NodeKind::Number
                                          : NodeKind::Text;
            out.push_back(MathNode::leaf(kind, std::move(text)));
            return true;
        }
        if (tag == "mspace" || tag == "none" || tag == "mprescripts" || tag == "annotation" ||
            tag == "annotation-xml" || tag == "maligngroup" || tag == "malignmark")
            return true;
        if (tag == "mstyle" || tag == "mpadded" || tag == "mphantom" || tag == "semantics") {
            if (tag == "semantics") {
                // Only the first child carries presentation markup.
                for (const auto& child : el.children)
                    if (child.is_element())
                        return convert(child, out);
                return true;
            }
            for (const auto& child : el.children)
                if (child.is_element() && !convert(child, out))
                    return false;
            return true;
        }

        std::vector<MathNode> kids;
        for (const auto& child : el.children)
            if (child.is_element() && !convert(child, kids))
                return false;

        if (tag == "mrow" || tag == "math") {
            if (kids.size() == 1)
                out.push_back(std::move(kids.front()));
            else
                out.push_back(MathNode::node(NodeKind::Row, std::move(kids)));
            return true;
        }

        struct Fixed {
            const char* tag;
            NodeKind kind;
            std::size_t arity;
        };
        static constexpr Fixed fixed[] = {
            {"msup", NodeKind::Sup, 2},   {"msub", NodeKind::Sub, 2},
            {"msubsup", NodeKind::SubSup, 3}, {"mfrac", NodeKind::Frac, 2},
            {"mroot", NodeKind::Root, 2},
        };
        for (const auto& f : fixed) {
            if (tag == f.tag) {
                if (kids.size() != f.arity)
                    return fail("<" + tag + "> expects " + std::to_string(f.arity) + " children, got " +
                                std::to_string(kids.size()));
                out.push_back(MathNode::node(f.kind, std::move(kids)));
                return true;
            }
        }
        if (tag == "msqrt") {
            if (kids.empty())
                return fail("empty <msqrt>");
            MathNode body = kids.size() == 1 ? std::move(kids.front())
                                             : MathNode::node(NodeKind::Row, std::move(kids));
            out.push_back(MathNode::node(NodeKind::Sqrt, {std::move(body)}));
            return true;
        }
        if (tag == "mfenced") {
            out.push_back(MathNode::node(NodeKind::Fenced, std::move(kids)));
            return true;
        }
        out.push_back(MathNode::other(tag, std::move(kids)));
        return true;
    }
};

}  // namespace

bool is_leaf_kind(NodeKind kind)
{
    return kind == NodeKind::Identifier || kind == NodeKind::Operator || kind == NodeKind::Number ||
           kind == NodeKind::Text;
}

std::string_view kind_name(NodeKind kind)
{
    switch (kind) {
    case NodeKind::Row: return "Row";
    case NodeKind::Identifier: return "Identifier";
    case NodeKind::Operator: return "Operator";
    case NodeKind::Number: return "Number";
    case NodeKind::Sup: return "Sup";
    case NodeKind::Sub: return "Sub";
    case NodeKind::SubSup: return "SubSup";
    case NodeKind::Frac: return "Frac";
    case NodeKind::Sqrt: return "Sqrt";
    case NodeKind::Root: return "Root";
    case NodeKind::Fenced: return "Fenced";
    case NodeKind::Text: return "Text";
    case NodeKind::Other: return "Other";
    }
    return "?";
}

MathNode MathNode::leaf(NodeKind kind, std::string value)
{
    return MathNode{kind, std::move(value), {}};
}

MathNode MathNode::node(NodeKind kind, std::vector<MathNode> children)
{
    return MathNode{kind, {}, std::move(children)};
}

MathNode MathNode::other(std::string tag, std::vector<MathNode> children)
{
    return MathNode{NodeKind::Other, std::move(tag), std::move(children)};
}

std::size_t MathNode::size() const
{
    return std::accumulate(children.begin(), children.end(), std::size_t{1},
                           [](std::size_t acc, const MathNode& c) { return acc + c.size(); });
}

void validate(const MathNode& tree)
{
    validate_at(tree, "");
}

std::optional<MathNode> from_mathml(const xml::Node& math, std::string* reason)
{
    Converter conv{reason};
    std::vector<MathNode> top;
    if (!conv.convert(math, top))
        return std::nullopt;
    if (top.empty() || (top.size() == 1 && top.front().kind == NodeKind::Row && top.front().children.empty())) {
        if (reason)
            *reason = "no presentation content";
        return std::nullopt;
    }
    MathNode tree = top.size() == 1 ? std::move(top.front()) : MathNode::node(NodeKind::Row, std::move(top));
    try {
        validate(tree);
    } catch (const StructureError& e) {
        if (reason)
            *reason = e.what();
        return std::nullopt;
    }
    return tree;
}

}  // namespace mathbow
