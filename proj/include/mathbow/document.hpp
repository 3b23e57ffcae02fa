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

#ifndef MATHBOW_DOCUMENT_HPP
#define MATHBOW_DOCUMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "mathbow/math_node.hpp"

namespace mathbow {

/// One math element: its TeX annotation and/or its presentation tree.
struct Formula {
    std::string tex;
    std::optional<MathNode> tree;
};

struct Document {
    std::string id;
    std::vector<std::string> msc_codes;
    std::string title;
    std::vector<std::string> authors;
    std::string abstract_text;
    std::string body_text;  // full text with every math element removed
    std::vector<Formula> formulae;

    /// Primary (first) MSC code; empty when none is assigned.
    const std::string& primary_msc() const;
};

}  // namespace mathbow

#endif  // MATHBOW_DOCUMENT_HPP
