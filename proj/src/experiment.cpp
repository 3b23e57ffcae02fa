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

#include "mathbow/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <optional>
#include <set>

#include "mathbow/model_io.hpp"
#include "mathbow/tokenize.hpp"
#include "mathbow/viz.hpp"

namespace mathbow::cli {

namespace {

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

std::string prefix_columns(const ExperimentConfig& c)
{
    return csv_field(c.config_id) + ',' + csv_field(c.cv.representation.describe()) + ',' +
           std::string(eval::method_name(c.cv.method)) + ',' + std::to_string(c.cv.num_topics);
}

// Run rows leave the variance column empty.
std::string pair(double avg) { return num(avg) + ",,"; }
std::string pair(const eval::Summary& s) { return num(s.mean) + ',' + num(s.variance); }

std::string bow_debug(const ExperimentConfig& config, std::span<const Document> documents)
{
    const auto& rep = config.cv.representation;
    std::optional<tokenize::ThirdCutoffs> cutoffs;
    if (rep.thirds == tokenize::ThirdsScope::Corpus)
        cutoffs = tokenize::corpus_third_cutoffs(documents, rep);
    std::vector<const Document*> sorted;
    for (const auto& d : documents)
        sorted.push_back(&d);
    std::sort(sorted.begin(), sorted.end(), [](const Document* a, const Document* b) { return a->id < b->id; });
    std::string out = "doc_id\ttoken\tcount\n";
    for (const Document* d : sorted) {
        const auto bow = tokenize::build_bow(*d, rep, cutoffs ? &*cutoffs : nullptr);
        for (const auto& [token, count] : bow.counts())
            out += d->id + '\t' + token + '\t' + std::to_string(count) + '\n';
    }
    return out;
}

}  // namespace

std::string file_stem(const std::string& config_id)
{
    std::string out;
    for (char c : config_id) {
        const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '.' ||
                          c == '_' || c == '-';
        out += keep ? c : '_';
    }
    return out.empty() ? "_" : out;
}

CorpusInput load_input(const std::filesystem::path& corpus_dir, const std::filesystem::path& ordering,
                       Warnings* warnings)
{
    if (corpus_dir.empty())
        throw Error("no corpus directory given (use --corpus or [corpus] dir)");
    if (ordering.empty())
        throw Error("no ordering file given (use --ordering or [corpus] ordering)");
    const auto layout = ingest::CorpusLayout::in(corpus_dir);
    if (!std::filesystem::is_regular_file(layout.metadata))
        throw Error("corpus metadata not found: " + layout.metadata.string());
    if (!std::filesystem::is_regular_file(layout.msc_spec))
        throw Error("MSC specification not found: " + layout.msc_spec.string());
    if (!std::filesystem::is_regular_file(ordering))
        throw Error("ordering file not found: " + ordering.string() + " (create it with 'shuffle')");
    CorpusInput input;
    input.documents = ingest::load_corpus(layout, warnings);
    input.ordering = ingest::load_ordering(ordering);
    return input;
}

ExperimentResult run_experiment(const ExperimentConfig& config, const CorpusInput& input,
                                const std::filesystem::path& out_dir)
{
    ExperimentResult result;
    result.config = config;
    std::filesystem::create_directories(out_dir);
    const std::string stem = file_stem(config.config_id);

    eval::RunCallback on_run = [&](const eval::RunResult& run, const eval::RunArtifacts& art) {
        const std::string tag = stem + '-' + std::to_string(run.fold) + '-' + std::to_string(run.rerun);
        if (config.write_tsv)
            ingest::write_file(out_dir / ("curve-" + tag + ".tsv"), viz::format_pr_tsv(art.curve));
        if (config.write_png && art.matrix.values.rows() > 0)
            viz::write_png(out_dir / ("matrix-" + tag + ".png"),
                           viz::render_matrix(art.matrix.values, art.reference.boundaries));
        if (config.write_f32) {
            ingest::write_file(out_dir / ("matrix-" + tag + ".f32"), models::format_matrix_f32(art.matrix.values));
            std::string ids;
            for (std::size_t i = 0; i < art.matrix.ids.size(); ++i)
                ids += art.matrix.ids[i] + '\t' + art.matrix.codes[i] + '\n';
            ingest::write_file(out_dir / ("matrix-" + tag + ".ids.tsv"), ids);
        }
    };
    result.report = eval::cross_validate(input.documents, input.ordering, config.cv, on_run, &result.warnings);
    if (config.bow_debug)
        ingest::write_file(out_dir / ("bow-debug-" + stem + ".tsv"), bow_debug(config, input.documents));
    return result;
}

std::string report_header()
{
    return "config_id,representation,method,topics,fold,rerun,threshold_avg,threshold_var,precision_avg,"
           "precision_var,recall_avg,recall_var,f1_avg,f1_var,maxf1_avg,maxf1_var,status\n";
}

std::string report_rows(const ExperimentResult& result)
{
    std::string out;
    const std::string prefix = prefix_columns(result.config);
    for (const auto& run : result.report.runs) {
        out += prefix + ',' + std::to_string(run.fold) + ',' + std::to_string(run.rerun) + ',' +
               pair(run.break_even.threshold) + pair(run.break_even.precision) + pair(run.break_even.recall) +
               pair(run.break_even.f1) + pair(run.max_f1.f1) + (run.break_even.crossed ? "ok" : "no-crossing") +
               '\n';
    }
    return out + aggregate_row(result);
}

std::string aggregate_row(const ExperimentResult& result)
{
    const std::string prefix = prefix_columns(result.config) + ",all,all,";
    if (!result.ok())
        return prefix + ",,,,,,,,,," + csv_field(result.status) + '\n';
    const auto& r = result.report;
    return prefix + pair(r.threshold) + ',' + pair(r.precision) + ',' + pair(r.recall) + ',' + pair(r.f1) + ',' +
           pair(r.max_f1) + ",ok\n";
}

std::string format_report(const ExperimentResult& result) { return report_header() + report_rows(result); }

std::vector<ExperimentResult> run_suite(std::span<const ExperimentConfig> configs,
                                        const std::function<const CorpusInput&(const ExperimentConfig&)>& input_for,
                                        const std::filesystem::path& out_dir)
{
    std::set<std::string> seen;
    std::set<std::string> stems;
    for (const auto& c : configs) {
        if (!seen.insert(c.config_id).second)
            throw Error("duplicate config id '" + c.config_id + "'");
        if (!stems.insert(file_stem(c.config_id)).second)
            throw Error("config ids collide after file-name sanitizing: '" + c.config_id + "'");
    }
    std::vector<ExperimentResult> results;
    for (const auto& c : configs) {
        try {
            results.push_back(run_experiment(c, input_for(c), out_dir));
        } catch (const std::exception& e) {
            ExperimentResult failed;
            failed.config = c;
            failed.status = std::string("failed: ") + e.what();
            results.push_back(std::move(failed));
        }
    }
    return results;
}

std::string format_suite(std::span<const ExperimentResult> results)
{
    std::vector<std::size_t> order(results.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& x = results[a];
        const auto& y = results[b];
        if (x.ok() != y.ok())
            return x.ok();
        if (!x.ok())
            return false;
        if (x.report.f1.mean != y.report.f1.mean)
            return x.report.f1.mean > y.report.f1.mean;
        return x.config.config_id < y.config.config_id;
    });
    std::string out = report_header();
    for (std::size_t i : order)
        out += aggregate_row(results[i]);
    return out;
}

}  // namespace mathbow::cli
