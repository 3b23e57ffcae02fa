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

#include <doctest.h>

#include <cmath>
#include <random>

#include "mathbow/error.hpp"
#include "mathbow/viz.hpp"

using namespace mathbow;
using namespace mathbow::viz;

TEST_CASE("brightness mapping")
{
    CHECK(brightness(0.0) == 0);
    CHECK(brightness(1.0) == 255);
    CHECK(brightness(0.1) == 151);
    CHECK(brightness(-0.5) == 0);
    CHECK(brightness(2.0) == 255);
    for (int i = 0; i <= 1000; ++i) {
        const double s = i / 1000.0;
        const double expected = std::round(255.0 * std::log1p(255.0 * s) / std::log(256.0));
        CHECK(brightness(s) == static_cast<int>(expected));
        if (i > 0)
            CHECK(brightness(s) >= brightness((i - 1) / 1000.0));
    }
}

TEST_CASE("separator geometry")
{
    Eigen::MatrixXd m(3, 3);
    m << 1, 0, 0, 0, 1, 0.5, 0, 0.5, 1;
    const std::vector<std::size_t> boundaries{1};
    const auto img = render_matrix(m, boundaries);
    CHECK(img.width == 4);
    CHECK(img.height == 4);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(img.at(1, k) == 255);
        CHECK(img.at(k, 1) == 255);
    }
    CHECK(img.at(0, 0) == 255);
    CHECK(img.at(2, 0) == 0);
    CHECK(img.at(3, 2) == brightness(0.5));

    const auto plain = render_matrix(m, std::vector<std::size_t>{});
    CHECK(plain.width == 3);
    CHECK_THROWS_AS(render_matrix(m, std::vector<std::size_t>{0}), Error);
    CHECK_THROWS_AS(render_matrix(m, std::vector<std::size_t>{3}), Error);
}

TEST_CASE("property: image size is n plus regions minus one")
{
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng() % 20;
        std::vector<std::size_t> b;
        for (std::size_t i = 1; i < n; ++i)
            if (rng() % 4 == 0)
                b.push_back(i);
        const auto img = render_matrix(Eigen::MatrixXd::Zero(long(n), long(n)), b);
        CHECK(img.width == n + b.size());
        CHECK(img.height == n + b.size());
    }
}

TEST_CASE("png encoding is deterministic and decodes back")
{
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Eigen::MatrixXd m(9, 9);
    for (Eigen::Index i = 0; i < m.size(); ++i)
        m.data()[i] = u(rng);
    const std::vector<std::size_t> b{3, 7};
    const auto img = render_matrix(m, b);
    const auto png = encode_png(img);
    CHECK(png.substr(1, 3) == "PNG");
    CHECK(encode_png(render_matrix(m, b)) == png);
    const auto back = decode_png(png);
    CHECK(back.width == img.width);
    CHECK(back.height == img.height);
    CHECK(back.pixels == img.pixels);
    CHECK_THROWS_AS(decode_png("not a png"), Error);
}

TEST_CASE("pr tsv round trip")
{
    const eval::PrCurve curve{{0.9, 1.0, 0.1, 0, 0, 0}, {1.0 / 3.0, 0.123456789012345678, 1.0, 0, 0, 0}};
    const auto text = format_pr_tsv(curve);
    CHECK(text.rfind("threshold\tprecision\trecall\tf1\n", 0) == 0);
    const auto back = parse_pr_tsv(text);
    REQUIRE(back.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(back[i].threshold == curve[i].threshold);
        CHECK(back[i].precision == curve[i].precision);
        CHECK(back[i].recall == curve[i].recall);
    }
    CHECK_THROWS_AS(parse_pr_tsv("bad\n1\t2\n"), ParseError);
}
