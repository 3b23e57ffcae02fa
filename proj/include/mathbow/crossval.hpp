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

#ifndef MATHBOW_CROSSVAL_HPP
#define MATHBOW_CROSSVAL_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "mathbow/document.hpp"
#include "mathbow/error.hpp"
#include "mathbow/eval.hpp"
#include "mathbow/ingest.hpp"
#include "mathbow/lda.hpp"
#include "mathbow/lsi.hpp"
#include "mathbow/tokenize.hpp"

namespace mathbow::eval {

enum class Method { Lsi, TfidfLsi, Lda, TfidfLda };

std::string_view method_name(Method method);  // "LSI", "TfIdf-LSI", ...
Method parse_method(std::string_view name);   // case-insensitive; throws Error

struct CrossValConfig {
    tokenize::RepresentationConfig representation;
    Method method = Method::TfidfLsi;
    int num_topics = 50;
    models::LsiOptions lsi;
    models::LdaOptions lda;
    int folds = 2;
    int reruns = 4;
    std::uint64_t seed = 0;  // model seed of rerun r is seed + r
    bool include_diagonal = true;
    int jobs = 1;

    void validate() const;  // throws Error
};

struct RunResult {
    int fold = 0;
    int rerun = 0;
    std::size_t train_docs = 0;
    std::size_t test_docs = 0;
    BreakEven break_even;
    MaxF1 max_f1;
    Warnings warnings;
};

/// Everything a run computed on its test fold.
struct RunArtifacts {
    SimilarityMatrix matrix;
    ReferenceMatrix reference;
    PrCurve curve;
};

struct EvalReport {
    std::vector<RunResult> runs;  // fold-major, then rerun
    Summary threshold;
    Summary precision;
    Summary recall;
    Summary f1;
    Summary max_f1;
};

/// Called once per run as soon as it finishes. With jobs > 1 calls may come
/// from several threads at once, each with a different run.
using RunCallback = std::function<void(const RunResult&, const RunArtifacts&)>;

/// [begin, end) of each contiguous fold; earlier folds take the remainder.
std::vector<std::pair<std::size_t, std::size_t>> fold_ranges(std::size_t n, int folds);

/// Trains on each fold and evaluates on the remaining documents, once per
/// rerun. Documents follow `ordering`; ordering ids absent from the corpus
/// are skipped with a warning, corpus documents absent from the ordering
/// are an error.
EvalReport cross_validate(std::span<const Document> corpus, const ingest::CorpusOrdering& ordering,
                          const CrossValConfig& config, const RunCallback& on_run = {},
                          Warnings* warnings = nullptr);

/// Builds all four summaries from `runs`.
void aggregate(EvalReport& report);

}  // namespace mathbow::eval

#endif  // MATHBOW_CROSSVAL_HPP
