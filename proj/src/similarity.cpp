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

#include "mathbow/similarity.hpp"

#include <algorithm>

#include "mathbow/error.hpp"

namespace mathbow::models {

SimilarityIndex::SimilarityIndex(std::span<const Eigen::VectorXd> vectors)
{
    const Eigen::Index dim = vectors.empty() ? 0 : vectors.front().size();
    rows_ = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(vectors.size()), dim);
    zero_.assign(vectors.size(), false);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != dim)
            throw Error("similarity index: vectors differ in dimension");
        const double norm = vectors[i].norm();
        if (norm > 0.0 && std::isfinite(norm))
            rows_.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose() / norm;
        else
            zero_[i] = true;
    }
}

Eigen::MatrixXd pairwise_similarity(const SimilarityIndex& index)
{
    Eigen::MatrixXd s = index.rows() * index.rows().transpose();
    const Eigen::Index n = s.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            // Symmetrize exactly; the product may differ in the last bit.
            const double v = std::clamp(0.5 * (s(i, j) + s(j, i)), 0.0, 1.0);
            s(i, j) = v;
            s(j, i) = v;
        }
        s(i, i) = index.is_zero(static_cast<std::size_t>(i)) ? 0.0 : 1.0;
    }
    return s;
}

}  // namespace mathbow::models
