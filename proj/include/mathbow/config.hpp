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

#ifndef MATHBOW_CONFIG_HPP
#define MATHBOW_CONFIG_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "mathbow/crossval.hpp"

namespace mathbow::cli {

/// One experiment, read from an INI file:
///
///   [experiment]     id, method, topics, seed, reruns, folds, jobs
///   [representation] text, tex, mterms, mtmod_scale, thirds, stopwords,
///                    stem, operand_runs
///   [weights]        level, var, const
///   [lda]            gamma_threshold, iterations, passes, alpha, eta
///   [lsi]            solver, projection, oversample, power_iterations
///   [corpus]         dir, ordering (relative to the config file)
///   [eval]           include_diagonal
///   [output]         png, tsv, f32, bow_debug
///
/// Every key is optional except experiment.id. Comments are whole lines
/// starting with '#' or ';'.
struct ExperimentConfig {
    std::string config_id;
    eval::CrossValConfig cv;
    std::filesystem::path corpus_dir;
    std::filesystem::path ordering;
    bool write_png = true;
    bool write_tsv = true;
    bool write_f32 = false;
    bool bow_debug = false;
};

/// Throws ConfigError naming the offending key for unknown sections or keys,
/// unparsable values and invalid combinations. Relative paths resolve
/// against `base_dir`.
ExperimentConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

/// INI text that parse_config reads back to an equal configuration.
std::string format_config(const ExperimentConfig& config);

}  // namespace mathbow::cli

#endif  // MATHBOW_CONFIG_HPP
