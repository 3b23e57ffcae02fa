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

#include "mathbow/lda.hpp"

#include <cmath>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "mathbow/rng.hpp"

namespace mathbow::models {

namespace {

using Eigen::ArrayXd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

double digamma(double x) { return boost::math::digamma(x); }
double lgamma(double x) { return boost::math::lgamma(x); }

// E[log theta] for a Dirichlet with parameters `gamma`.
VectorXd dirichlet_expectation(const VectorXd& gamma)
{
    const double total = digamma(gamma.sum());
    return gamma.unaryExpr([&](double g) { return digamma(g) - total; });
}

MatrixXd dirichlet_expectation_rows(const MatrixXd& lambda)
{
    MatrixXd out(lambda.rows(), lambda.cols());
    for (Eigen::Index k = 0; k < lambda.rows(); ++k) {
        const double total = digamma(lambda.row(k).sum());
        for (Eigen::Index w = 0; w < lambda.cols(); ++w)
            out(k, w) = digamma(lambda(k, w)) - total;
    }
    return out;
}

struct DocView {
    std::vector<Eigen::Index> ids;
    ArrayXd counts;
};

DocView view_of(const DocVector& doc, std::size_t num_terms)
{
    DocView v;
    std::vector<double> counts;
    for (const auto& [idx, w] : doc.entries)
        if (idx < num_terms && w > 0.0) {
            v.ids.push_back(idx);
            counts.push_back(w);
        }
    v.counts = Eigen::Map<const ArrayXd>(counts.data(), static_cast<Eigen::Index>(counts.size()));
    return v;
}

/// Variational E-step for one document. `gamma` is updated in place; when
/// `sstats` is given, the document's expected topic-word counts (still to
/// be multiplied by exp(E[log beta])) are accumulated into it.
void infer_document(const DocView& doc, const MatrixXd& exp_elog_beta, double alpha, double threshold,
                    int iterations, VectorXd& gamma, MatrixXd* sstats)
{
    const Eigen::Index k = gamma.size();
    const Eigen::Index n = static_cast<Eigen::Index>(doc.ids.size());
    MatrixXd beta_d(k, n);
    for (Eigen::Index j = 0; j < n; ++j)
        beta_d.col(j) = exp_elog_beta.col(doc.ids[j]);

    VectorXd exp_elog_theta = dirichlet_expectation(gamma).array().exp();
    ArrayXd phinorm = (exp_elog_theta.transpose() * beta_d).transpose().array() + 1e-100;
    for (int it = 0; it < iterations; ++it) {
        const VectorXd last = gamma;
        const VectorXd ratio = (doc.counts / phinorm).matrix();
        gamma = (alpha + exp_elog_theta.array() * (beta_d * ratio).array()).matrix();
        exp_elog_theta = dirichlet_expectation(gamma).array().exp();
        phinorm = (exp_elog_theta.transpose() * beta_d).transpose().array() + 1e-100;
        if ((gamma - last).cwiseAbs().mean() < threshold)
            break;
    }
    if (sstats) {
        const VectorXd ratio = (doc.counts / phinorm).matrix();
        for (Eigen::Index j = 0; j < n; ++j)
            sstats->col(doc.ids[j]) += exp_elog_theta * ratio(j);
    }
}

}  // namespace

void LdaModel::refresh()
{
    exp_elog_beta = dirichlet_expectation_rows(lambda).array().exp();
}

MatrixXd LdaModel::topic_word() const
{
    MatrixXd out = lambda;
    for (Eigen::Index k = 0; k < out.rows(); ++k)
        out.row(k) /= out.row(k).sum();
    return out;
}

double lda_bound(const LdaModel& model, std::span<const DocVector> docs, const MatrixXd& gamma)
{
    const double alpha = model.alpha;
    const double eta = model.eta;
    const Eigen::Index k = model.num_topics;
    const MatrixXd elog_beta = dirichlet_expectation_rows(model.lambda);

    double score = 0.0;
    for (std::size_t d = 0; d < docs.size(); ++d) {
        const DocView doc = view_of(docs[d], model.num_terms);
        const VectorXd g = gamma.row(static_cast<Eigen::Index>(d)).transpose();
        const VectorXd elog_theta = dirichlet_expectation(g);
        for (std::size_t j = 0; j < doc.ids.size(); ++j) {
            // log sum_k exp(E[log theta_k] + E[log beta_kw])
            const VectorXd terms = elog_theta + elog_beta.col(doc.ids[j]);
            const double top = terms.maxCoeff();
            score += doc.counts(static_cast<Eigen::Index>(j)) * (top + std::log((terms.array() - top).exp().sum()));
        }
        for (Eigen::Index t = 0; t < k; ++t)
            score += (alpha - g(t)) * elog_theta(t) + lgamma(g(t)) - lgamma(alpha);
        score += lgamma(alpha * static_cast<double>(k)) - lgamma(g.sum());
    }
    const double v = static_cast<double>(model.num_terms);
    for (Eigen::Index t = 0; t < k; ++t) {
        for (Eigen::Index w = 0; w < model.lambda.cols(); ++w)
            score += (eta - model.lambda(t, w)) * elog_beta(t, w) + lgamma(model.lambda(t, w)) - lgamma(eta);
        score += lgamma(eta * v) - lgamma(model.lambda.row(t).sum());
    }
    return score;
}

LdaModel lda_train(std::span<const DocVector> docs, std::size_t num_terms, int num_topics, const LdaOptions& options,
                   std::uint64_t seed, Warnings* warnings)
{
    if (docs.empty())
        throw Error("cannot train LDA on an empty corpus");
    if (num_topics < 1)
        throw Error("LDA needs at least one topic");
    if (!(options.gamma_threshold > 0.0))
        throw Error("LDA gamma_threshold must be positive");
    if (options.iterations < 1 || options.passes < 1)
        throw Error("LDA iterations and passes must be at least 1");
    if (num_terms == 0)
        throw Error("cannot train LDA with an empty dictionary");

    LdaModel model;
    model.num_terms = num_terms;
    model.num_topics = num_topics;
    model.seed = seed;
    model.alpha = options.alpha > 0.0 ? options.alpha : 1.0 / num_topics;
    model.eta = options.eta > 0.0 ? options.eta : 1.0 / num_topics;
    model.gamma_threshold = options.gamma_threshold;
    model.iterations = options.iterations;

    const Eigen::Index k = num_topics;
    const Eigen::Index v = static_cast<Eigen::Index>(num_terms);
    Rng rng(seed);
    model.lambda.resize(k, v);
    for (Eigen::Index t = 0; t < k; ++t)
        for (Eigen::Index w = 0; w < v; ++w)
            model.lambda(t, w) = rng.gamma(100.0, 0.01);

    std::vector<DocView> views;
    views.reserve(docs.size());
    std::size_t empty_docs = 0;
    for (const auto& d : docs) {
        views.push_back(view_of(d, num_terms));
        if (views.back().ids.empty())
            ++empty_docs;
    }
    if (empty_docs > 0)
        warn(warnings, std::to_string(empty_docs) + " training documents have no tokens");

    // Posteriors persist across passes, so every pass starts where the last
    // one stopped and the bound cannot decrease.
    MatrixXd gamma(static_cast<Eigen::Index>(docs.size()), k);
    for (Eigen::Index d = 0; d < gamma.rows(); ++d)
        for (Eigen::Index t = 0; t < k; ++t)
            gamma(d, t) = rng.gamma(100.0, 0.01);

    for (int pass = 0; pass < options.passes; ++pass) {
        const MatrixXd exp_elog_beta = dirichlet_expectation_rows(model.lambda).array().exp();
        MatrixXd sstats = MatrixXd::Zero(k, v);
        for (std::size_t d = 0; d < views.size(); ++d) {
            VectorXd g = gamma.row(static_cast<Eigen::Index>(d)).transpose();
            if (!views[d].ids.empty())
                infer_document(views[d], exp_elog_beta, model.alpha, options.gamma_threshold, options.iterations, g,
                               &sstats);
            else
                g.setConstant(model.alpha);
            gamma.row(static_cast<Eigen::Index>(d)) = g.transpose();
        }
        model.lambda = (sstats.array() * exp_elog_beta.array() + model.eta).matrix();
        model.bound_trace.push_back(lda_bound(model, docs, gamma));
    }
    model.refresh();
    return model;
}

VectorXd lda_infer(const LdaModel& model, const DocVector& doc, Warnings* warnings)
{
    const Eigen::Index k = model.num_topics;
    const DocView view = view_of(doc, model.num_terms);
    if (view.ids.empty()) {
        warn(warnings, "LDA inference on a document without known tokens; returning uniform topics");
        return VectorXd::Constant(k, 1.0 / static_cast<double>(k));
    }
    if (model.exp_elog_beta.cols() != model.lambda.cols())
        throw Error("LDA model used before refresh()");
    VectorXd gamma = VectorXd::Constant(k, model.alpha + view.counts.sum() / static_cast<double>(k));
    infer_document(view, model.exp_elog_beta, model.alpha, model.gamma_threshold, model.iterations, gamma, nullptr);
    return gamma / gamma.sum();
}

}  // namespace mathbow::models
