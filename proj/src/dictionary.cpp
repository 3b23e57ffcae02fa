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

#include "mathbow/dictionary.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace mathbow::models {

double DocVector::norm() const
{
    double sum = 0.0;
    for (const auto& [i, w] : entries)
        sum += w * w;
    return std::sqrt(sum);
}

Eigen::VectorXd DocVector::dense(std::size_t dimension) const
{
    Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dimension));
    for (const auto& [i, w] : entries)
        v(i) = w;
    return v;
}

Dictionary Dictionary::build(std::span<const tokenize::BagOfWords> bows, Warnings* warnings)
{
    if (bows.empty())
        throw Error("cannot build a dictionary from an empty corpus");
    std::map<std::string, std::uint64_t> df;
    for (const auto& bow : bows)
        for (const auto& [token, count] : bow.counts())
            ++df[token];

    Dictionary dict;
    dict.num_docs_ = bows.size();
    dict.tokens_.reserve(df.size());
    dict.df_.reserve(df.size());
    for (auto& [token, freq] : df) {
        dict.index_.emplace(token, static_cast<std::uint32_t>(dict.tokens_.size()));
        dict.tokens_.push_back(token);
        dict.df_.push_back(freq);
    }
    if (dict.tokens_.empty())
        warn(warnings, "dictionary is empty: no document has any token");
    return dict;
}

std::optional<std::uint32_t> Dictionary::index(const std::string& token) const
{
    auto it = index_.find(token);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

DocVector Dictionary::counts(const tokenize::BagOfWords& bow) const
{
    DocVector v;
    for (const auto& [token, count] : bow.counts())
        if (auto idx = index(token))
            v.entries.emplace_back(*idx, static_cast<double>(count));
    // Token order equals index order, so entries are already sorted.
    return v;
}

DocVector tfidf_transform(const tokenize::BagOfWords& bow, const Dictionary& dictionary)
{
    DocVector v;
    const double n = static_cast<double>(dictionary.num_docs());
    for (const auto& [token, count] : bow.counts()) {
        auto idx = dictionary.index(token);
        if (!idx)
            continue;
        const double df = static_cast<double>(dictionary.document_frequency(*idx));
        const double weight = static_cast<double>(count) * std::log2(n / df);
        if (weight != 0.0)
            v.entries.emplace_back(*idx, weight);
    }
    const double norm = v.norm();
    if (norm > 0.0)
        for (auto& [i, w] : v.entries)
            w /= norm;
    return v;
}

Eigen::SparseMatrix<double> term_document_matrix(std::span<const DocVector> docs, std::size_t num_terms)
{
    std::vector<Eigen::Triplet<double>> triplets;
    for (std::size_t col = 0; col < docs.size(); ++col)
        for (const auto& [row, w] : docs[col].entries)
            triplets.emplace_back(static_cast<int>(row), static_cast<int>(col), w);
    Eigen::SparseMatrix<double> a(static_cast<Eigen::Index>(num_terms), static_cast<Eigen::Index>(docs.size()));
    a.setFromTriplets(triplets.begin(), triplets.end());
    return a;
}

}  // namespace mathbow::models
