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

#include "mathbow/crossval.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <optional>
#include <thread>
#include <unordered_map>

#include "mathbow/dictionary.hpp"
#include "mathbow/similarity.hpp"

namespace mathbow::eval {

namespace {

using tokenize::BagOfWords;

bool iequals(std::string_view a, std::string_view b)
{
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
           });
}

bool uses_tfidf(Method m) { return m == Method::TfidfLsi || m == Method::TfidfLda; }
bool uses_lda(Method m) { return m == Method::Lda || m == Method::TfidfLda; }

/// Fold-specific inputs shared by all reruns of that fold.
struct FoldData {
    std::vector<models::DocVector> train;
    std::vector<models::DocVector> test;  // in MSC order
    std::vector<std::string> test_ids;
    std::vector<std::string> test_codes;
    std::size_t num_terms = 0;
    Warnings warnings;
};

FoldData prepare_fold(const std::vector<const Document*>& train_docs, const std::vector<const Document*>& test_docs,
                      const CrossValConfig& config)
{
    FoldData fold;
    const auto& rep = config.representation;

    std::optional<tokenize::ThirdCutoffs> cutoffs;
    if (rep.thirds == tokenize::ThirdsScope::Corpus) {
        std::vector<Document> copy;
        copy.reserve(train_docs.size());
        for (const Document* d : train_docs)
            copy.push_back(*d);
        cutoffs = tokenize::corpus_third_cutoffs(copy, rep);
    }
    const tokenize::ThirdCutoffs* cut = cutoffs ? &*cutoffs : nullptr;

    std::vector<BagOfWords> train_bows;
    train_bows.reserve(train_docs.size());
    for (const Document* d : train_docs)
        train_bows.push_back(tokenize::build_bow(*d, rep, cut, &fold.warnings));
    const auto dictionary = models::Dictionary::build(train_bows, &fold.warnings);
    fold.num_terms = dictionary.size();

    auto vectorize = [&](const BagOfWords& bow) {
        return uses_tfidf(config.method) ? models::tfidf_transform(bow, dictionary) : dictionary.counts(bow);
    };
    for (const auto& bow : train_bows)
        fold.train.push_back(vectorize(bow));

    std::vector<std::string> ids;
    std::vector<std::string> codes;
    for (const Document* d : test_docs) {
        ids.push_back(d->id);
        codes.push_back(d->primary_msc());
    }
    for (std::size_t i : msc_order(ids, codes)) {
        fold.test.push_back(vectorize(tokenize::build_bow(*test_docs[i], rep, cut, &fold.warnings)));
        fold.test_ids.push_back(ids[i]);
        fold.test_codes.push_back(codes[i]);
    }
    return fold;
}

RunResult run_one(const FoldData& fold, int fold_index, int rerun, const CrossValConfig& config,
                  const RunCallback& on_run)
{
    RunResult result;
    result.fold = fold_index;
    result.rerun = rerun;
    result.train_docs = fold.train.size();
    result.test_docs = fold.test.size();
    const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(rerun);

    std::vector<Eigen::VectorXd> topics;
    topics.reserve(fold.test.size());
    if (fold.num_terms == 0) {
        result.warnings.add("empty training vocabulary; every test document maps to the zero vector");
        topics.assign(fold.test.size(), Eigen::VectorXd::Zero(config.num_topics));
    } else if (uses_lda(config.method)) {
        const auto model =
            models::lda_train(fold.train, fold.num_terms, config.num_topics, config.lda, seed, &result.warnings);
        for (const auto& doc : fold.test)
            topics.push_back(models::lda_infer(model, doc, &result.warnings));
    } else {
        const auto model =
            models::lsi_train(fold.train, fold.num_terms, config.num_topics, seed, config.lsi, &result.warnings);
        for (const auto& doc : fold.test)
            topics.push_back(models::lsi_project(model, doc));
    }

    RunArtifacts artifacts;
    artifacts.matrix.ids = fold.test_ids;
    artifacts.matrix.codes = fold.test_codes;
    artifacts.matrix.values = models::pairwise_similarity(models::SimilarityIndex(topics));
    artifacts.reference = reference_matrix(fold.test_codes);
    artifacts.curve = pr_curve(artifacts.matrix, artifacts.reference, config.include_diagonal);
    result.break_even = break_even(artifacts.curve);
    result.max_f1 = max_f1(artifacts.curve);
    if (!result.break_even.crossed)
        result.warnings.add("precision and recall never cross; break-even is the closest point");
    if (on_run)
        on_run(result, artifacts);
    return result;
}

}  // namespace

std::string_view method_name(Method method)
{
    switch (method) {
    case Method::Lsi: return "LSI";
    case Method::TfidfLsi: return "TfIdf-LSI";
    case Method::Lda: return "LDA";
    case Method::TfidfLda: return "TfIdf-LDA";
    }
    return "?";
}

Method parse_method(std::string_view name)
{
    for (Method m : {Method::Lsi, Method::TfidfLsi, Method::Lda, Method::TfidfLda})
        if (iequals(name, method_name(m)))
            return m;
    throw Error("unknown method '" + std::string(name) + "' (expected LSI, TfIdf-LSI, LDA or TfIdf-LDA)");
}

void CrossValConfig::validate() const
{
    representation.validate();
    if (num_topics < 1)
        throw Error("num_topics must be at least 1");
    if (folds < 2)
        throw Error("cross-validation needs at least 2 folds");
    if (reruns < 1)
        throw Error("reruns must be at least 1");
    if (jobs < 1)
        throw Error("jobs must be at least 1");
    if (uses_lda(method)) {
        if (!(lda.gamma_threshold > 0.0))
            throw Error("LDA gamma_threshold must be positive");
        if (lda.iterations < 1 || lda.passes < 1)
            throw Error("LDA iterations and passes must be at least 1");
    }
}

std::vector<std::pair<std::size_t, std::size_t>> fold_ranges(std::size_t n, int folds)
{
    if (folds < 1)
        throw Error("fold count must be positive");
    const auto k = static_cast<std::size_t>(folds);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t begin = 0;
    for (std::size_t f = 0; f < k; ++f) {
        const std::size_t size = n / k + (f < n % k ? 1 : 0);
        out.emplace_back(begin, begin + size);
        begin += size;
    }
    return out;
}

void aggregate(EvalReport& report)
{
    std::vector<double> t, p, r, f, m;
    for (const auto& run : report.runs) {
        t.push_back(run.break_even.threshold);
        p.push_back(run.break_even.precision);
        r.push_back(run.break_even.recall);
        f.push_back(run.break_even.f1);
        m.push_back(run.max_f1.f1);
    }
    report.threshold = summarize(t);
    report.precision = summarize(p);
    report.recall = summarize(r);
    report.f1 = summarize(f);
    report.max_f1 = summarize(m);
}

EvalReport cross_validate(std::span<const Document> corpus, const ingest::CorpusOrdering& ordering,
                          const CrossValConfig& config, const RunCallback& on_run, Warnings* warnings)
{
    config.validate();
    std::unordered_map<std::string, const Document*> by_id;
    for (const auto& d : corpus)
        if (!by_id.emplace(d.id, &d).second)
            throw Error("duplicate document id '" + d.id + "'");

    std::vector<const Document*> ordered;
    std::size_t missing = 0;
    for (const auto& id : ordering.ordered_ids) {
        const auto it = by_id.find(id);
        if (it == by_id.end()) {
            ++missing;
            continue;
        }
        ordered.push_back(it->second);
        by_id.erase(it);
    }
    if (!by_id.empty()) {
        std::vector<std::string> ids;
        for (const auto& [id, _] : by_id)
            ids.push_back(id);
        std::sort(ids.begin(), ids.end());
        throw Error("ordering does not list document '" + ids.front() + "' (" + std::to_string(ids.size()) +
                    " missing); regenerate it with shuffle");
    }
    if (missing > 0)
        warn(warnings, std::to_string(missing) + " ordering ids are not in the corpus and were skipped");
    if (ordered.size() < static_cast<std::size_t>(config.folds))
        throw Error("corpus has " + std::to_string(ordered.size()) + " documents, fewer than the " +
                    std::to_string(config.folds) + " folds");

    const auto ranges = fold_ranges(ordered.size(), config.folds);
    std::vector<FoldData> folds;
    for (std::size_t f = 0; f < ranges.size(); ++f) {
        std::vector<const Document*> train(ordered.begin() + static_cast<std::ptrdiff_t>(ranges[f].first),
                                           ordered.begin() + static_cast<std::ptrdiff_t>(ranges[f].second));
        std::vector<const Document*> test;
        for (std::size_t i = 0; i < ordered.size(); ++i)
            if (i < ranges[f].first || i >= ranges[f].second)
                test.push_back(ordered[i]);
        folds.push_back(prepare_fold(train, test, config));
        if (warnings)
            warnings->merge(folds.back().warnings);
    }

    const std::size_t total = folds.size() * static_cast<std::size_t>(config.reruns);
    std::vector<std::optional<RunResult>> results(total);
    std::vector<std::exception_ptr> errors(total);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t job = next++; job < total; job = next++) {
            const int f = static_cast<int>(job / static_cast<std::size_t>(config.reruns));
            const int r = static_cast<int>(job % static_cast<std::size_t>(config.reruns));
            try {
                results[job] = run_one(folds[static_cast<std::size_t>(f)], f, r, config, on_run);
            } catch (...) {
                errors[job] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(config.jobs), total);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < threads; ++i)
            pool.emplace_back(worker);
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    EvalReport report;
    for (auto& r : results) {
        if (warnings)
            warnings->merge(r->warnings);
        report.runs.push_back(std::move(*r));
    }
    aggregate(report);
    return report;
}

}  // namespace mathbow::eval
