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

#ifndef MATHBOW_LSI_HPP
#define MATHBOW_LSI_HPP

#include <cstdint>
#include <span>

#include <Eigen/Dense>

#include "mathbow/dictionary.hpp"
#include "mathbow/error.hpp"

namespace mathbow::models {

enum class SvdSolver { Auto, Dense, Randomized };

/// How fold-in coordinates are scaled.
enum class LsiProjection {
    InverseSigma,  // Sigma^-1 U^T q, i.e. rows of V for training columns
    Basis,         // U^T q
};

struct LsiOptions {
    SvdSolver solver = SvdSolver::Auto;
    LsiProjection projection = LsiProjection::InverseSigma;
    int oversample = 10;
    int power_iterations = 4;
    /// Auto uses the dense SVD when V*N does not exceed this many entries.
    std::size_t dense_limit = 4'000'000;
};

/// Rank-k truncated SVD of a term-document matrix.
struct LsiModel {
    std::size_t num_terms = 0;
    int num_topics = 0;
    std::uint64_t seed = 0;
    LsiProjection projection = LsiProjection::InverseSigma;
    Eigen::VectorXd singular_values;  // nonincreasing, >= 0
    Eigen::MatrixXd basis;            // V x k, orthonormal columns
};

/// Trains on the V x N matrix whose columns are `docs`. k larger than
/// min(V, N) is clamped with a warning. Each singular vector's sign is fixed
/// so that its largest-magnitude entry is positive.
LsiModel lsi_train(std::span<const DocVector> docs, std::size_t num_terms, int num_topics, std::uint64_t seed,
                   const LsiOptions& options = {}, Warnings* warnings = nullptr);

LsiModel lsi_train_dense(const Eigen::MatrixXd& a, int num_topics, std::uint64_t seed,
                         const LsiOptions& options = {}, Warnings* warnings = nullptr);

/// Topic coordinates of a document. Directions with a zero singular value
/// contribute zero.
Eigen::VectorXd lsi_project(const LsiModel& model, const DocVector& doc);
Eigen::VectorXd lsi_project(const LsiModel& model, const Eigen::VectorXd& doc);

}  // namespace mathbow::models

#endif  // MATHBOW_LSI_HPP
