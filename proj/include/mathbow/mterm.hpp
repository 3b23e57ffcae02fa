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

#ifndef MATHBOW_MTERM_HPP
#define MATHBOW_MTERM_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mathbow/document.hpp"
#include "mathbow/error.hpp"
#include "mathbow/math_node.hpp"

// Formula -> weighted MTerm pipeline: canonical operand order, subformula
// derivation, identifier/number generalization and weight assignment.
namespace mathbow::mathrep {

enum class Origin { Top, Subformula, VarGeneralized, VarConstGeneralized };

std::string_view origin_name(Origin origin);

struct WeightedMTerm {
    std::string mterm;
    double mias_weight = 0.0;
    Origin origin = Origin::Top;
    int depth = 0;

    friend bool operator==(const WeightedMTerm&, const WeightedMTerm&) = default;
};

/// Multiplicative weight decay. level_coeff applies once per derivation
/// level, var_coeff to identifier-generalized variants and const_coeff on top
/// of that for number-generalized variants.
struct WeightScheme {
    double level_coeff = 0.5;
    double var_coeff = 0.8;
    double const_coeff = 0.8;

    /// Throws Error unless every coefficient lies strictly inside (0, 1).
    void validate() const;
};

struct DerivedFormula {
    MathNode tree;
    int depth = 0;
};

struct DeriveOptions {
    /// Also emit multi-node operand runs of rows (e.g. `2x` in `2x + 1`).
    bool operand_runs = true;
};

/// Serializes a tree: leaves as K(value) with K in {I,O,N,T}; interior nodes
/// as R, J (sup), U (sub), V (subsup), F (frac), Q (sqrt), W (root),
/// P (fenced) followed by the children in parentheses. Other elements are
/// written X[tag](...). Backslash, '(' and ')' inside leaf values are
/// backslash-escaped so that the encoding stays injective.
std::string encode_mterm(const MathNode& tree);

/// Inverse of encode_mterm. Throws ParseError on malformed input.
MathNode decode_mterm(std::string_view mterm);

/// Sorts commutative operand runs inside every row, bottom-up. Idempotent.
MathNode canonical_order(MathNode tree);

/// Breadth-first enumeration of the subformula set with minimal depths.
/// The input itself is the only depth-0 entry.
std::vector<DerivedFormula> derive_subformulae(const MathNode& tree, const DeriveOptions& options = {});

struct Generalized {
    MathNode vars;         // identifiers -> `id`
    MathNode vars_consts;  // identifiers -> `id`, numbers -> `const`
};

Generalized generalize(const MathNode& tree);

/// Weights one formula's subformula set: w_top = 2^-D with D the maximum
/// depth, level d scaled by level_coeff^d, generalized variants by var_coeff
/// (and const_coeff). Duplicate serializations keep their highest weight.
/// Result is sorted by descending weight, ties by MTerm string.
std::vector<WeightedMTerm> assign_weights(std::span<const DerivedFormula> subformulae,
                                          const WeightScheme& scheme);

std::vector<WeightedMTerm> formula_to_weighted_mterms(const Formula& formula, const WeightScheme& scheme,
                                                      const DeriveOptions& options = {},
                                                      Warnings* warnings = nullptr);

/// Debug dump: `w_m<TAB>mterm` per line.
std::string dump_weighted(std::span<const WeightedMTerm> mterms);

}  // namespace mathbow::mathrep

#endif  // MATHBOW_MTERM_HPP
