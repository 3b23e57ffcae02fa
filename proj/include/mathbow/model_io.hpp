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

#ifndef MATHBOW_MODEL_IO_HPP
#define MATHBOW_MODEL_IO_HPP

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "mathbow/lda.hpp"
#include "mathbow/lsi.hpp"

namespace mathbow::models {

// Text container:
//
//   mathbow-model 1
//   kind LSI|LDA
//   topics <k>
//   terms <V>
//   seed <seed>
//   <key> <value>            (scalar parameters)
//   matrix <name> <rows> <cols>
//   <row of hexfloat values>  (one line per row)
//
// Hexfloats make the round trip exact.

std::string format_lsi(const LsiModel& model);
std::string format_lda(const LdaModel& model);
LsiModel parse_lsi(std::string_view text);  // throws ParseError
LdaModel parse_lda(std::string_view text);

void save_lsi(const std::filesystem::path& path, const LsiModel& model);
void save_lda(const std::filesystem::path& path, const LdaModel& model);
LsiModel load_lsi(const std::filesystem::path& path);
LdaModel load_lda(const std::filesystem::path& path);

/// `n <N>\n` followed by N*N little-endian float32 values, row-major.
std::string format_matrix_f32(const Eigen::MatrixXd& matrix);
Eigen::MatrixXd parse_matrix_f32(std::string_view bytes);

}  // namespace mathbow::models

#endif  // MATHBOW_MODEL_IO_HPP
