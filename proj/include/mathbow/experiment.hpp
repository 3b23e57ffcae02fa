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

#ifndef MATHBOW_EXPERIMENT_HPP
#define MATHBOW_EXPERIMENT_HPP

#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mathbow/config.hpp"
#include "mathbow/crossval.hpp"
#include "mathbow/document.hpp"
#include "mathbow/ingest.hpp"

namespace mathbow::cli {

struct ExperimentResult {
    ExperimentConfig config;
    eval::EvalReport report;
    std::string status = "ok";  // or "failed: <reason>"
    Warnings warnings;

    bool ok() const { return status == "ok"; }
};

/// Corpus and ordering shared by the experiments of one invocation.
struct CorpusInput {
    std::vector<Document> documents;
    ingest::CorpusOrdering ordering;
};

/// Loads and filters the corpus at `corpus_dir` and reads `ordering`.
/// Throws Error when either is missing.
CorpusInput load_input(const std::filesystem::path& corpus_dir, const std::filesystem::path& ordering,
                       Warnings* warnings = nullptr);

/// Cross-validates one configuration and writes its artifacts into
/// `out_dir`: curve-{id}-{fold}-{rerun}.tsv, matrix-{id}-{fold}-{rerun}.png,
/// matrix-{id}-{fold}-{rerun}.f32 with a .ids.tsv sidecar, and
/// bow-debug-{id}.tsv, each when enabled. Errors propagate.
ExperimentResult run_experiment(const ExperimentConfig& config, const CorpusInput& input,
                                const std::filesystem::path& out_dir);

/// Column names of report.csv.
std::string report_header();

/// One row per run followed by the aggregate row (fold and rerun "all").
std::string report_rows(const ExperimentResult& result);

/// Aggregate row only; failed results carry only the identifying columns
/// and the status.
std::string aggregate_row(const ExperimentResult& result);

/// Header plus report_rows.
std::string format_report(const ExperimentResult& result);

/// Runs every configuration, recording failures instead of stopping.
/// `input_for` supplies the corpus of each configuration. Duplicate ids
/// throw Error before anything runs.
std::vector<ExperimentResult> run_suite(std::span<const ExperimentConfig> configs,
                                        const std::function<const CorpusInput&(const ExperimentConfig&)>& input_for,
                                        const std::filesystem::path& out_dir);

/// Header plus aggregate rows: successes by descending mean break-even F1
/// (ties by id), then failures in input order.
std::string format_suite(std::span<const ExperimentResult> results);

/// Config id reduced to [A-Za-z0-9._-] for file names.
std::string file_stem(const std::string& config_id);

}  // namespace mathbow::cli

#endif  // MATHBOW_EXPERIMENT_HPP
