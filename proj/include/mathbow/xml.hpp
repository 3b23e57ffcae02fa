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

#ifndef MATHBOW_XML_HPP
#define MATHBOW_XML_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mathbow::xml {

/// A node of a parsed XHTML document: either an element or a text run.
/// Comments and processing instructions are dropped; CDATA becomes text.
struct Node {
    enum class Type { Element, Text };

    Type type = Type::Element;
    std::string name;  // local name with any namespace prefix stripped
    std::vector<std::pair<std::string, std::string>> attributes;
    std::string text;
    std::vector<Node> children;
    std::size_t offset = 0;  // byte offset of the node in the source

    bool is_element() const { return type == Type::Element; }
    bool is_element(std::string_view local_name) const
    {
        return type == Type::Element && name == local_name;
    }
    const std::string* attribute(std::string_view local_name) const;

    /// Concatenation of all descendant text, in document order.
    std::string inner_text() const;
};

/// Parses a well-formed XML/XHTML document and returns its root element.
/// Throws ParseError with the failing byte offset.
Node parse(std::string_view source);

}  // namespace mathbow::xml

#endif  // MATHBOW_XML_HPP
