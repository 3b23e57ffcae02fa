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

#include "mathbow/viz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include <png.h>

#include "mathbow/error.hpp"
#include "mathbow/ingest.hpp"

namespace mathbow::viz {

namespace {

void on_png_error(png_structp png, png_const_charp message)
{
    auto* text = static_cast<std::string*>(png_get_error_ptr(png));
    *text = message;
    png_longjmp(png, 1);
}

void on_png_warning(png_structp, png_const_charp) {}

void on_write(png_structp png, png_bytep data, png_size_t length)
{
    auto* out = static_cast<std::string*>(png_get_io_ptr(png));
    out->append(reinterpret_cast<const char*>(data), length);
}

void on_flush(png_structp) {}

struct ReadCursor {
    std::string_view bytes;
    std::size_t pos = 0;
};

void on_read(png_structp png, png_bytep data, png_size_t length)
{
    auto* cur = static_cast<ReadCursor*>(png_get_io_ptr(png));
    if (cur->bytes.size() - cur->pos < length)
        png_error(png, "unexpected end of PNG data");
    std::copy_n(cur->bytes.data() + cur->pos, length, reinterpret_cast<char*>(data));
    cur->pos += length;
}

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::uint8_t brightness(double s)
{
    const double c = std::clamp(std::isnan(s) ? 0.0 : s, 0.0, 1.0);
    return static_cast<std::uint8_t>(std::lround(255.0 * std::log1p(255.0 * c) / std::log(256.0)));
}

MatrixImage render_matrix(const Eigen::MatrixXd& matrix, std::span<const std::size_t> boundaries)
{
    if (matrix.rows() != matrix.cols())
        throw Error("render_matrix: matrix must be square");
    const auto n = static_cast<std::size_t>(matrix.rows());
    std::vector<std::size_t> cuts(boundaries.begin(), boundaries.end());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t b : cuts)
        if (b == 0 || b >= n)
            throw Error("render_matrix: region boundary " + std::to_string(b) + " outside (0, n)");

    // Pixel coordinate of each cell index; separators fill the gaps.
    std::vector<std::size_t> pos(n);
    std::size_t shift = 0;
    for (std::size_t i = 0, c = 0; i < n; ++i) {
        if (c < cuts.size() && cuts[c] == i) {
            ++shift;
            ++c;
        }
        pos[i] = i + shift;
    }

    MatrixImage img;
    img.width = img.height = n + cuts.size();
    img.pixels.assign(img.width * img.height, 255);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            img.pixels[pos[i] * img.width + pos[j]] =
                brightness(matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    return img;
}

std::string encode_png(const MatrixImage& image)
{
    if (image.width == 0 || image.height == 0 || image.pixels.size() != image.width * image.height)
        throw Error("encode_png: image is empty or inconsistent");
    std::string out;
    std::string error;
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &error, on_png_error, on_png_warning);
    if (!png)
        throw Error("libpng: cannot create write struct");
    png_infop info = png_create_info_struct(png);
    if (!info || setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw Error("libpng: " + error);
    }
    png_set_write_fn(png, &out, on_write, on_flush);
    png_set_IHDR(png, info, static_cast<png_uint_32>(image.width), static_cast<png_uint_32>(image.height), 8,
                 PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_set_compression_level(png, 9);
    png_write_info(png, info);
    for (std::size_t y = 0; y < image.height; ++y)
        png_write_row(png, image.pixels.data() + y * image.width);
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    return out;
}

MatrixImage decode_png(std::string_view bytes)
{
    if (bytes.size() < 8 || png_sig_cmp(reinterpret_cast<png_const_bytep>(bytes.data()), 0, 8) != 0)
        throw Error("not a PNG file");
    ReadCursor cursor{bytes, 0};
    std::string error;
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &error, on_png_error, on_png_warning);
    if (!png)
        throw Error("libpng: cannot create read struct");
    png_infop info = png_create_info_struct(png);
    MatrixImage img;
    if (!info || setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw Error("libpng: " + error);
    }
    png_set_read_fn(png, &cursor, on_read);
    png_read_info(png, info);
    if (png_get_color_type(png, info) != PNG_COLOR_TYPE_GRAY || png_get_bit_depth(png, info) != 8 ||
        png_get_interlace_type(png, info) != PNG_INTERLACE_NONE) {
        error = "only 8-bit non-interlaced grayscale PNGs are supported";
        png_error(png, error.c_str());
    }
    img.width = png_get_image_width(png, info);
    img.height = png_get_image_height(png, info);
    img.pixels.resize(img.width * img.height);
    for (std::size_t y = 0; y < img.height; ++y)
        png_read_row(png, img.pixels.data() + y * img.width, nullptr);
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

void write_png(const std::filesystem::path& path, const MatrixImage& image)
{
    ingest::write_file(path, encode_png(image));
}

std::string format_pr_tsv(const eval::PrCurve& curve)
{
    std::string out = "threshold\tprecision\trecall\tf1\n";
    for (const auto& p : curve)
        out += format_double(p.threshold) + '\t' + format_double(p.precision) + '\t' + format_double(p.recall) +
               '\t' + format_double(eval::f1_micro(p.precision, p.recall)) + '\n';
    return out;
}

eval::PrCurve parse_pr_tsv(std::string_view text)
{
    eval::PrCurve curve;
    std::size_t pos = 0;
    bool header = true;
    while (pos < text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const std::string line(text.substr(pos, end - pos));
        const std::size_t at = pos;
        pos = end + 1;
        if (header) {
            if (line != "threshold\tprecision\trecall\tf1")
                throw ParseError("unexpected PR header", at);
            header = false;
            continue;
        }
        if (line.empty())
            continue;
        double t = 0, p = 0, r = 0, f = 0;
        int consumed = 0;
        if (std::sscanf(line.c_str(), "%lf\t%lf\t%lf\t%lf%n", &t, &p, &r, &f, &consumed) != 4 ||
            static_cast<std::size_t>(consumed) != line.size())
            throw ParseError("malformed PR line", at);
        curve.push_back({t, p, r});
    }
    if (header)
        throw ParseError("missing PR header", 0);
    return curve;
}

}  // namespace mathbow::viz
