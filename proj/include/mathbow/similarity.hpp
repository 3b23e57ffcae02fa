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

#ifndef MATHBOW_SIMILARITY_HPP
#define MATHBOW_SIMILARITY_HPP

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace mathbow::models {

/// Unit-normalized topic-space vectors of one document set. Zero vectors are
/// stored as zeros and flagged.
class SimilarityIndex {
public:
    explicit SimilarityIndex(std::span<const Eigen::VectorXd> vectors);

    std::size_t size() const { return zero_.size(); }
    bool is_zero(std::size_t i) const { return zero_.at(i); }
    const Eigen::MatrixXd& rows() const { return rows_; }

private:
    Eigen::MatrixXd rows_;  // n x k
    std::vector<bool> zero_;
};

/// s_ij = max(0, cos(v_i, v_j)), clipped to 1. The diagonal is exactly 1
/// for nonzero vectors and 0 for zero vectors.
Eigen::MatrixXd pairwise_similarity(const SimilarityIndex& index);

}  // namespace mathbow::models

#endif  // MATHBOW_SIMILARITY_HPP
