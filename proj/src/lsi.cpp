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

#include "mathbow/lsi.hpp"

#include <algorithm>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "mathbow/rng.hpp"

namespace mathbow::models {

namespace {

Eigen::MatrixXd thin_q(const Eigen::MatrixXd& y)
{
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(y);
    return qr.householderQ() * Eigen::MatrixXd::Identity(y.rows(), y.cols());
}

void fix_signs(Eigen::MatrixXd& u)
{
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
        Eigen::Index arg = 0;
        u.col(j).cwiseAbs().maxCoeff(&arg);
        if (u(arg, j) < 0.0)
            u.col(j) *= -1.0;
    }
}

int clamp_topics(int k, Eigen::Index rows, Eigen::Index cols, Warnings* warnings)
{
    if (k < 1)
        throw Error("LSI needs at least one topic");
    if (rows == 0 || cols == 0)
        throw Error("LSI needs a nonempty term-document matrix");
    const int limit = static_cast<int>(std::min(rows, cols));
    if (k > limit) {
        warn(warnings, "LSI topic count " + std::to_string(k) + " clamped to " + std::to_string(limit));
        return limit;
    }
    return k;
}

template <typename Matrix>
void randomized_svd(const Matrix& a, int k, const LsiOptions& options, std::uint64_t seed, Eigen::MatrixXd& u,
                    Eigen::VectorXd& sigma)
{
    const Eigen::Index rank_cap = std::min(a.rows(), a.cols());
    const Eigen::Index l = std::min<Eigen::Index>(k + std::max(options.oversample, 0), rank_cap);

    Rng rng(seed);
    Eigen::MatrixXd omega(a.cols(), l);
    for (Eigen::Index j = 0; j < l; ++j)
        for (Eigen::Index i = 0; i < a.cols(); ++i)
            omega(i, j) = rng.normal();

    Eigen::MatrixXd q = thin_q(a * omega);
    for (int it = 0; it < options.power_iterations; ++it) {
        Eigen::MatrixXd z = thin_q(a.transpose() * q);
        q = thin_q(a * z);
    }
    Eigen::MatrixXd b = (a.transpose() * q).transpose();  // l x N
    Eigen::BDCSVD<Eigen::MatrixXd> svd(b, Eigen::ComputeThinU);
    u = q * svd.matrixU().leftCols(k);
    sigma = svd.singularValues().head(k);
}

LsiModel finish(Eigen::MatrixXd u, Eigen::VectorXd sigma, std::size_t num_terms, int k, std::uint64_t seed,
                const LsiOptions& options)
{
    fix_signs(u);
    LsiModel model;
    model.num_terms = num_terms;
    model.num_topics = k;
    model.seed = seed;
    model.projection = options.projection;
    model.singular_values = std::move(sigma);
    model.basis = std::move(u);
    return model;
}

Eigen::VectorXd scale_coordinates(const LsiModel& model, Eigen::VectorXd v)
{
    if (model.projection == LsiProjection::Basis)
        return v;
    // Relative cutoff treats numerically zero singular values as exact zeros.
    const double cutoff = model.singular_values.size() > 0 ? model.singular_values(0) * 1e-12 : 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double s = model.singular_values(i);
        v(i) = s > cutoff && s > 0.0 ? v(i) / s : 0.0;
    }
    return v;
}

bool use_dense(const LsiOptions& options, Eigen::Index rows, Eigen::Index cols)
{
    switch (options.solver) {
    case SvdSolver::Dense: return true;
    case SvdSolver::Randomized: return false;
    case SvdSolver::Auto: break;
    }
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) <= options.dense_limit;
}

}  // namespace

LsiModel lsi_train_dense(const Eigen::MatrixXd& a, int num_topics, std::uint64_t seed, const LsiOptions& options,
                         Warnings* warnings)
{
    const int k = clamp_topics(num_topics, a.rows(), a.cols(), warnings);
    Eigen::MatrixXd u;
    Eigen::VectorXd sigma;
    if (use_dense(options, a.rows(), a.cols())) {
        Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU);
        u = svd.matrixU().leftCols(k);
        sigma = svd.singularValues().head(k);
    } else {
        randomized_svd(a, k, options, seed, u, sigma);
    }
    return finish(std::move(u), std::move(sigma), static_cast<std::size_t>(a.rows()), k, seed, options);
}

LsiModel lsi_train(std::span<const DocVector> docs, std::size_t num_terms, int num_topics, std::uint64_t seed,
                   const LsiOptions& options, Warnings* warnings)
{
    const Eigen::SparseMatrix<double> a = term_document_matrix(docs, num_terms);
    const int k = clamp_topics(num_topics, a.rows(), a.cols(), warnings);
    if (use_dense(options, a.rows(), a.cols())) {
        LsiOptions dense = options;
        dense.solver = SvdSolver::Dense;
        return lsi_train_dense(Eigen::MatrixXd(a), k, seed, dense, nullptr);
    }
    Eigen::MatrixXd u;
    Eigen::VectorXd sigma;
    randomized_svd(a, k, options, seed, u, sigma);
    return finish(std::move(u), std::move(sigma), num_terms, k, seed, options);
}

Eigen::VectorXd lsi_project(const LsiModel& model, const Eigen::VectorXd& doc)
{
    return scale_coordinates(model, model.basis.transpose() * doc);
}

Eigen::VectorXd lsi_project(const LsiModel& model, const DocVector& doc)
{
    Eigen::VectorXd v = Eigen::VectorXd::Zero(model.num_topics);
    for (const auto& [row, w] : doc.entries)
        if (row < model.num_terms)
            v += w * model.basis.row(row).transpose();
    return scale_coordinates(model, std::move(v));
}

}  // namespace mathbow::models
