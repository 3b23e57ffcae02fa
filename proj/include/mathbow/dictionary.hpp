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

#ifndef MATHBOW_DICTIONARY_HPP
#define MATHBOW_DICTIONARY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "mathbow/error.hpp"
#include "mathbow/tokenize.hpp"

namespace mathbow::models {

/// Sparse document vector; indices strictly increasing.
struct DocVector {
    std::vector<std::pair<std::uint32_t, double>> entries;

    bool empty() const { return entries.empty(); }
    double norm() const;
    Eigen::VectorXd dense(std::size_t dimension) const;
};

/// Token universe of a training corpus. Indices follow token order, so the
/// same corpus always yields the same numbering.
class Dictionary {
public:
    /// Throws Error on an empty corpus. A corpus without tokens yields an
    /// empty dictionary and a warning.
    static Dictionary build(std::span<const tokenize::BagOfWords> bows, Warnings* warnings = nullptr);

    std::size_t size() const { return tokens_.size(); }
    std::size_t num_docs() const { return num_docs_; }
    std::optional<std::uint32_t> index(const std::string& token) const;
    const std::string& token(std::uint32_t index) const { return tokens_.at(index); }
    std::uint64_t document_frequency(std::uint32_t index) const { return df_.at(index); }

    /// Raw term counts; tokens outside the dictionary are skipped.
    DocVector counts(const tokenize::BagOfWords& bow) const;

private:
    std::unordered_map<std::string, std::uint32_t> index_;
    std::vector<std::string> tokens_;
    std::vector<std::uint64_t> df_;
    std::size_t num_docs_ = 0;
};

/// tf * log2(N / df), L2-normalized. N and df come from the dictionary's
/// training corpus; unseen tokens are skipped.
DocVector tfidf_transform(const tokenize::BagOfWords& bow, const Dictionary& dictionary);

/// V x N column-per-document matrix.
Eigen::SparseMatrix<double> term_document_matrix(std::span<const DocVector> docs, std::size_t num_terms);

}  // namespace mathbow::models

#endif  // MATHBOW_DICTIONARY_HPP
