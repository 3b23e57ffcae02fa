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

#include "mathbow/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mathbow/error.hpp"

namespace mathbow::eval {

namespace {

std::string_view prefix(const std::string& code) { return std::string_view(code).substr(0, 2); }

bool has_counts(const PrCurve& curve)
{
    const std::size_t positives = curve.front().positives;
    if (positives == 0)
        return false;
    std::size_t prev = 0;
    for (const PrPoint& p : curve) {
        if (p.positives != positives || p.predicted <= prev || p.true_positives > p.predicted)
            return false;
        prev = p.predicted;
    }
    return curve.back().predicted >= positives;
}

// p = r exactly where the number of predicted cells equals the number of
// positives. Between two sweep points a fraction of the tied cells is
// admitted; before the first point the origin (0 predicted) is used.
BreakEven break_even_counts(const PrCurve& curve)
{
    const auto pos = static_cast<double>(curve.front().positives);
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const PrPoint& b = curve[i];
        if (static_cast<double>(b.predicted) < pos)
            continue;
        const double a_pred = i == 0 ? 0.0 : static_cast<double>(curve[i - 1].predicted);
        const double a_tp = i == 0 ? 0.0 : static_cast<double>(curve[i - 1].true_positives);
        const double a_t = i == 0 ? b.threshold : curve[i - 1].threshold;
        const double f = (pos - a_pred) / (static_cast<double>(b.predicted) - a_pred);
        const double tp = a_tp + f * (static_cast<double>(b.true_positives) - a_tp);
        const double v = tp / pos;
        return {a_t + f * (b.threshold - a_t), v, v, v, true};
    }
    throw Error("break_even: curve never predicts every positive");
}

}  // namespace

std::vector<std::size_t> msc_order(std::span<const std::string> ids, std::span<const std::string> codes)
{
    if (ids.size() != codes.size())
        throw Error("msc_order: ids and codes differ in length");
    std::vector<std::size_t> order(ids.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (codes[a] != codes[b])
            return codes[a] < codes[b];
        return ids[a] < ids[b];
    });
    return order;
}

SimilarityMatrix order_by_msc(std::vector<std::string> ids, std::vector<std::string> codes,
                              const Eigen::MatrixXd& values)
{
    const auto n = static_cast<Eigen::Index>(ids.size());
    if (values.rows() != n || values.cols() != n)
        throw Error("order_by_msc: matrix does not match the document count");
    const auto order = msc_order(ids, codes);
    SimilarityMatrix out;
    out.values.resize(n, n);
    for (std::size_t i = 0; i < order.size(); ++i) {
        out.ids.push_back(ids[order[i]]);
        out.codes.push_back(codes[order[i]]);
        for (std::size_t j = 0; j < order.size(); ++j)
            out.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                values(static_cast<Eigen::Index>(order[i]), static_cast<Eigen::Index>(order[j]));
    }
    return out;
}

ReferenceMatrix reference_matrix(std::span<const std::string> codes)
{
    const auto n = static_cast<Eigen::Index>(codes.size());
    ReferenceMatrix ref;
    ref.values = Eigen::MatrixXd::Zero(n, n);
    std::size_t start = 0;
    for (std::size_t i = 1; i <= codes.size(); ++i) {
        if (i < codes.size() && prefix(codes[i]) == prefix(codes[start]))
            continue;
        const auto len = static_cast<Eigen::Index>(i - start);
        const auto s = static_cast<Eigen::Index>(start);
        ref.values.block(s, s, len, len).setOnes();
        if (i < codes.size()) {
            for (std::size_t j = 0; j < start; ++j)
                if (prefix(codes[j]) == prefix(codes[i]))
                    throw Error("reference_matrix: codes are not grouped by prefix");
            ref.boundaries.push_back(i);
        }
        start = i;
    }
    return ref;
}

Eigen::MatrixXd binarize(const Eigen::MatrixXd& matrix, double threshold)
{
    if (!(threshold >= 0.0 && threshold <= 1.0))
        throw Error("threshold must lie in [0, 1]");
    return matrix.unaryExpr([threshold](double s) { return s >= threshold ? 1.0 : 0.0; });
}

PrCurve pr_curve(std::span<const double> similarities, std::span<const double> reference)
{
    if (similarities.size() != reference.size())
        throw Error("pr_curve: similarity and reference lengths differ");
    if (similarities.empty())
        throw Error("pr_curve: no cells to evaluate");
    std::size_t positives = 0;
    for (double r : reference) {
        if (r != 0.0 && r != 1.0)
            throw Error("pr_curve: reference must be binary");
        positives += r == 1.0;
    }
    if (positives == 0)
        throw Error("pr_curve: reference has no positive cells, recall is undefined");

    std::vector<std::size_t> order(similarities.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return similarities[a] > similarities[b]; });

    PrCurve curve;
    std::size_t tp = 0;
    std::size_t predicted = 0;
    for (std::size_t i = 0; i < order.size();) {
        const double t = similarities[order[i]];
        while (i < order.size() && similarities[order[i]] == t) {
            tp += reference[order[i]] == 1.0;
            ++predicted;
            ++i;
        }
        curve.push_back({t, static_cast<double>(tp) / static_cast<double>(predicted),
                         static_cast<double>(tp) / static_cast<double>(positives), tp, predicted, positives});
    }
    return curve;
}

PrCurve pr_curve(const SimilarityMatrix& matrix, const ReferenceMatrix& reference, bool include_diagonal)
{
    const Eigen::Index n = matrix.values.rows();
    if (reference.values.rows() != n || reference.values.cols() != n || matrix.values.cols() != n)
        throw Error("pr_curve: matrix and reference shapes differ");
    std::vector<double> s;
    std::vector<double> r;
    s.reserve(static_cast<std::size_t>(n * n));
    r.reserve(static_cast<std::size_t>(n * n));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i == j && !include_diagonal)
                continue;
            s.push_back(matrix.values(i, j));
            r.push_back(reference.values(i, j));
        }
    return pr_curve(s, r);
}

double f1_micro(double precision, double recall)
{
    const double sum = precision + recall;
    return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

BreakEven break_even(const PrCurve& curve)
{
    if (curve.empty())
        throw Error("break_even: empty curve");
    auto at_point = [](const PrPoint& p, bool crossed) {
        return BreakEven{p.threshold, p.precision, p.recall, f1_micro(p.precision, p.recall), crossed};
    };
    if (has_counts(curve))
        return break_even_counts(curve);
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const PrPoint& a = curve[i];
        // p = r = 0 carries no information and is skipped.
        if (a.precision == 0.0 && a.recall == 0.0)
            continue;
        const double da = a.precision - a.recall;
        if (da == 0.0)
            return at_point(a, true);
        if (i + 1 == curve.size())
            break;
        const PrPoint& b = curve[i + 1];
        const double db = b.precision - b.recall;
        if ((da > 0.0) != (db > 0.0) && db != 0.0) {
            const double f = da / (da - db);
            BreakEven be;
            be.threshold = a.threshold + f * (b.threshold - a.threshold);
            be.precision = a.precision + f * (b.precision - a.precision);
            be.recall = a.recall + f * (b.recall - a.recall);
            be.f1 = f1_micro(be.precision, be.recall);
            return be;
        }
    }
    const auto best = std::min_element(curve.begin(), curve.end(), [](const PrPoint& a, const PrPoint& b) {
        return std::abs(a.precision - a.recall) < std::abs(b.precision - b.recall);
    });
    return at_point(*best, false);
}

MaxF1 max_f1(const PrCurve& curve)
{
    if (curve.empty())
        throw Error("max_f1: empty curve");
    MaxF1 best{curve.front().threshold, f1_micro(curve.front().precision, curve.front().recall)};
    for (const PrPoint& p : curve) {
        const double f = f1_micro(p.precision, p.recall);
        if (f > best.f1)
            best = {p.threshold, f};
    }
    return best;
}

Summary summarize(std::span<const double> values)
{
    if (values.empty())
        return {};
    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values)
        mean += v;
    mean /= n;
    double var = 0.0;
    for (double v : values)
        var += (v - mean) * (v - mean);
    return {mean, var / n};
}

}  // namespace mathbow::eval
