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

#ifndef MATHBOW_EVAL_HPP
#define MATHBOW_EVAL_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace mathbow::eval {

/// Permutation that sorts documents by MSC code, then id.
std::vector<std::size_t> msc_order(std::span<const std::string> ids, std::span<const std::string> codes);

/// Pairwise similarities of documents listed in MSC order.
struct SimilarityMatrix {
    std::vector<std::string> ids;
    std::vector<std::string> codes;
    Eigen::MatrixXd values;
};

/// Reorders ids, codes and both matrix axes into MSC order.
SimilarityMatrix order_by_msc(std::vector<std::string> ids, std::vector<std::string> codes,
                              const Eigen::MatrixXd& values);

/// Block-diagonal 0/1 matrix: 1 where two documents share the first two
/// MSC characters.
struct ReferenceMatrix {
    Eigen::MatrixXd values;
    /// Indices where a new region starts, excluding 0.
    std::vector<std::size_t> boundaries;

    std::size_t num_regions() const { return values.rows() == 0 ? 0 : boundaries.size() + 1; }
};

/// `codes` must already be in MSC order; equal prefixes must be contiguous.
ReferenceMatrix reference_matrix(std::span<const std::string> codes);

/// 1 where s >= t. Throws Error unless 0 <= t <= 1.
Eigen::MatrixXd binarize(const Eigen::MatrixXd& matrix, double threshold);

struct PrPoint {
    double threshold = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    /// Confusion counts behind the point; zero positives means unknown.
    std::size_t true_positives = 0;
    std::size_t predicted = 0;
    std::size_t positives = 0;
};

/// Thresholds strictly decreasing.
using PrCurve = std::vector<PrPoint>;

/// Exact sweep over every distinct similarity value. Throws Error when the
/// lengths differ, the input is empty or the reference has no positives.
PrCurve pr_curve(std::span<const double> similarities, std::span<const double> reference);

/// Curve over all n*n cells, or all off-diagonal cells.
PrCurve pr_curve(const SimilarityMatrix& matrix, const ReferenceMatrix& reference, bool include_diagonal = true);

/// 2pr/(p+r), or 0 when p+r = 0.
double f1_micro(double precision, double recall);

struct BreakEven {
    double threshold = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    /// False when p-r never reaches zero; the point then minimizes |p-r|.
    bool crossed = true;
};

/// Point where p = r. When the curve carries confusion counts this is where
/// the predicted count equals the positive count, admitting a fraction of
/// the tied cells at the crossing threshold; the result is attainable in
/// expectation and never beats max_f1. Without counts the first sign change
/// of p-r is interpolated linearly, skipping points with p = r = 0.
/// Throws Error on an empty curve.
BreakEven break_even(const PrCurve& curve);

struct MaxF1 {
    double threshold = 0.0;
    double f1 = 0.0;
};

/// Best F1 over the curve points; ties go to the highest threshold.
MaxF1 max_f1(const PrCurve& curve);

struct Summary {
    double mean = 0.0;
    double variance = 0.0;  // population variance
};

Summary summarize(std::span<const double> values);

}  // namespace mathbow::eval

#endif  // MATHBOW_EVAL_HPP
