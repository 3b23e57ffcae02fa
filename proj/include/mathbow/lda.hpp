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

#ifndef MATHBOW_LDA_HPP
#define MATHBOW_LDA_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "mathbow/dictionary.hpp"
#include "mathbow/error.hpp"

namespace mathbow::models {

struct LdaOptions {
    /// Per-document inference stops once the mean absolute change of the
    /// topic posterior drops below this value...
    double gamma_threshold = 0.001;
    /// ...or after this many updates.
    int iterations = 100;
    /// Full E/M sweeps over the training corpus.
    int passes = 10;
    /// Symmetric Dirichlet priors; non-positive means 1/k.
    double alpha = 0.0;
    double eta = 0.0;
};

/// Batch variational-Bayes LDA.
struct LdaModel {
    std::size_t num_terms = 0;
    int num_topics = 0;
    std::uint64_t seed = 0;
    double alpha = 0.0;
    double eta = 0.0;
    double gamma_threshold = 0.001;
    int iterations = 100;
    Eigen::MatrixXd lambda;           // k x V variational topic-word parameters
    std::vector<double> bound_trace;  // evidence lower bound after each pass
    Eigen::MatrixXd exp_elog_beta;    // exp(E[log beta]), derived from lambda

    /// Recomputes exp_elog_beta after lambda changed.
    void refresh();

    /// Rows of lambda normalized into probability distributions.
    Eigen::MatrixXd topic_word() const;
};

/// Throws Error on an empty corpus or invalid options.
LdaModel lda_train(std::span<const DocVector> docs, std::size_t num_terms, int num_topics, const LdaOptions& options,
                   std::uint64_t seed, Warnings* warnings = nullptr);

/// Normalized topic posterior of one document. Documents without known
/// tokens get the uniform distribution and a warning.
Eigen::VectorXd lda_infer(const LdaModel& model, const DocVector& doc, Warnings* warnings = nullptr);

/// Evidence lower bound of `docs` under the model, with per-document
/// posteriors `gamma` (N x k).
double lda_bound(const LdaModel& model, std::span<const DocVector> docs, const Eigen::MatrixXd& gamma);

}  // namespace mathbow::models

#endif  // MATHBOW_LDA_HPP
