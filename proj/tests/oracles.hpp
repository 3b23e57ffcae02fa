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

// Independent reference implementations for the evaluation tests.

#ifndef MATHBOW_TESTS_ORACLES_HPP
#define MATHBOW_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

struct Point {
    double threshold;
    double precision;
    double recall;
    std::size_t tp;
    std::size_t predicted;
};

// Recounts the confusion matrix from scratch at every distinct value.
inline std::vector<Point> brute_force_curve(const std::vector<double>& s, const std::vector<double>& r)
{
    std::set<double, std::greater<>> thresholds(s.begin(), s.end());
    std::vector<Point> out;
    for (double t : thresholds) {
        std::size_t tp = 0, fp = 0, fn = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const bool pred = s[i] >= t;
            const bool ref = r[i] == 1.0;
            tp += pred && ref;
            fp += pred && !ref;
            fn += !pred && ref;
        }
        out.push_back({t, double(tp) / double(tp + fp), double(tp) / double(tp + fn), tp, tp + fp});
    }
    return out;
}

struct BreakEven {
    double threshold;
    double value;
};

// Admits cells in descending similarity, tie groups at once, and stops
// where exactly `positives` cells have been admitted; the straddling tie
// group is admitted fractionally.
inline BreakEven sorted_break_even(const std::vector<double>& s, const std::vector<double>& r)
{
    std::vector<std::pair<double, double>> cells;
    double positives = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        cells.emplace_back(s[i], r[i]);
        positives += r[i];
    }
    std::sort(cells.begin(), cells.end(), [](auto a, auto b) { return a.first > b.first; });
    double admitted = 0, hits = 0, prev_t = cells.front().first;
    std::size_t i = 0;
    while (i < cells.size()) {
        const double t = cells[i].first;
        double group = 0, group_hits = 0;
        for (; i < cells.size() && cells[i].first == t; ++i) {
            group += 1;
            group_hits += cells[i].second;
        }
        if (admitted + group >= positives) {
            const double f = (positives - admitted) / group;
            return {prev_t + f * (t - prev_t), (hits + f * group_hits) / positives};
        }
        admitted += group;
        hits += group_hits;
        prev_t = t;
    }
    return {0.0, 1.0};
}

// Symmetric similarity matrix with unit diagonal and a block reference from
// random region sizes. Values are quantized to create ties.
struct Instance {
    Eigen::MatrixXd similarity;
    Eigen::MatrixXd reference;
};

inline Instance random_instance(int n, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Instance in;
    in.similarity = Eigen::MatrixXd::Identity(n, n);
    in.reference = Eigen::MatrixXd::Zero(n, n);
    std::vector<int> region(static_cast<std::size_t>(n));
    int current = 0;
    for (int i = 0; i < n; ++i) {
        if (i > 0 && u(rng) < 0.3)
            ++current;
        region[static_cast<std::size_t>(i)] = current;
    }
    const bool quantize = u(rng) < 0.5;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            in.reference(i, j) = region[std::size_t(i)] == region[std::size_t(j)] ? 1.0 : 0.0;
            if (j > i) {
                double v = u(rng) * (in.reference(i, j) == 1.0 ? 1.0 : 0.8);
                if (quantize)
                    v = std::round(v * 10.0) / 10.0;
                in.similarity(i, j) = in.similarity(j, i) = v;
            }
        }
    return in;
}

inline std::vector<double> flatten(const Eigen::MatrixXd& m)
{
    std::vector<double> out;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out.push_back(m(i, j));
    return out;
}

}  // namespace oracle

#endif  // MATHBOW_TESTS_ORACLES_HPP
