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

#ifndef MATHBOW_VIZ_HPP
#define MATHBOW_VIZ_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "mathbow/eval.hpp"

namespace mathbow::viz {

/// 8-bit grayscale raster, row-major.
struct MatrixImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(std::size_t x, std::size_t y) const { return pixels.at(y * width + x); }
};

/// round(255 * ln(1 + 255 s) / ln 256), with s clamped to [0, 1].
std::uint8_t brightness(double s);

/// One pixel per cell plus a white row and column before every region
/// boundary index.
MatrixImage render_matrix(const Eigen::MatrixXd& matrix, std::span<const std::size_t> boundaries);

/// PNG bytes: 8-bit grayscale, no interlacing, fixed compression settings.
std::string encode_png(const MatrixImage& image);
MatrixImage decode_png(std::string_view bytes);  // throws Error
void write_png(const std::filesystem::path& path, const MatrixImage& image);

/// `threshold<TAB>precision<TAB>recall<TAB>f1` header plus one line per
/// point. Values use 17 significant digits, so parsing restores them.
std::string format_pr_tsv(const eval::PrCurve& curve);
eval::PrCurve parse_pr_tsv(std::string_view text);  // throws ParseError

}  // namespace mathbow::viz

#endif  // MATHBOW_VIZ_HPP
