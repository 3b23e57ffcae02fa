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

// Command-line driver: ingest, synth, shuffle, run, suite, render.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "mathbow/config.hpp"
#include "mathbow/experiment.hpp"
#include "mathbow/ingest.hpp"
#include "mathbow/model_io.hpp"
#include "mathbow/synth.hpp"
#include "mathbow/tokenize.hpp"
#include "mathbow/viz.hpp"

namespace fs = std::filesystem;
using namespace mathbow;

namespace {

void report_warnings(const Warnings& w, bool verbose)
{
    if (w.empty())
        return;
    std::cerr << w.count() << " warning(s)\n";
    const std::size_t shown = verbose ? w.count() : std::min<std::size_t>(w.count(), 5);
    for (std::size_t i = 0; i < shown; ++i)
        std::cerr << "  " << w.messages()[i] << '\n';
    if (shown < w.count())
        std::cerr << "  ... (use --verbose for all)\n";
}

struct RunFlags {
    std::vector<fs::path> configs;
    fs::path corpus;
    fs::path ordering;
    fs::path out = "out";
    std::optional<int> jobs;
    std::optional<std::uint64_t> seed;
};

void add_run_flags(CLI::App* cmd, RunFlags& f, bool many)
{
    auto* opt = cmd->add_option("--config", f.configs, many ? "Experiment INI files" : "Experiment INI file")
                    ->required()
                    ->check(CLI::ExistingFile);
    if (!many)
        opt->expected(1);
    cmd->add_option("--corpus", f.corpus, "Corpus directory (overrides [corpus] dir)");
    cmd->add_option("--ordering", f.ordering, "Ordering file (overrides [corpus] ordering)");
    cmd->add_option("--out", f.out, "Output directory")->capture_default_str();
    cmd->add_option("--jobs", f.jobs, "Parallel fold x rerun jobs")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", f.seed, "Base model seed (overrides [experiment] seed)");
}

cli::ExperimentConfig apply_flags(cli::ExperimentConfig c, const RunFlags& f)
{
    if (!f.corpus.empty())
        c.corpus_dir = f.corpus;
    if (!f.ordering.empty())
        c.ordering = f.ordering;
    if (f.jobs)
        c.cv.jobs = *f.jobs;
    if (f.seed)
        c.cv.seed = *f.seed;
    return c;
}

void print_summary(const cli::ExperimentResult& r)
{
    if (!r.ok()) {
        std::printf("%-24s %s\n", r.config.config_id.c_str(), r.status.c_str());
        return;
    }
    std::printf("%-24s break-even F1 %.4f (var %.2e)  max F1 %.4f  threshold %.4f\n", r.config.config_id.c_str(),
                r.report.f1.mean, r.report.f1.variance, r.report.max_f1.mean, r.report.threshold.mean);
}

int cmd_ingest(const fs::path& corpus, const fs::path& out, bool verbose)
{
    Warnings w;
    const auto docs = ingest::load_corpus(ingest::CorpusLayout::in(corpus), &w);
    std::size_t formulae = 0;
    std::size_t trees = 0;
    std::string table = "doc_id\tmsc\tformulae\ttrees\ttext_tokens\n";
    for (const auto& d : docs) {
        std::size_t t = 0;
        for (const auto& f : d.formulae)
            t += f.tree.has_value();
        formulae += d.formulae.size();
        trees += t;
        table += d.id + '\t' + d.primary_msc() + '\t' + std::to_string(d.formulae.size()) + '\t' +
                 std::to_string(t) + '\t' + std::to_string(tokenize::tokenize_text(d.body_text).size()) + '\n';
    }
    std::printf("%zu documents retained, %zu formulae (%zu with a tree)\n", docs.size(), formulae, trees);
    if (!out.empty()) {
        ingest::write_file(out, table);
        std::printf("wrote %s\n", out.string().c_str());
    }
    report_warnings(w, verbose);
    return 0;
}

int cmd_shuffle(const fs::path& corpus, std::uint64_t seed, fs::path out, bool verbose)
{
    Warnings w;
    const auto docs = ingest::load_corpus(ingest::CorpusLayout::in(corpus), &w);
    if (docs.empty())
        throw Error("no documents survive filtering in " + corpus.string());
    if (out.empty())
        out = corpus / "ordering.txt";
    ingest::save_ordering(out, ingest::shuffle_once(docs, seed));
    std::printf("wrote ordering of %zu documents to %s\n", docs.size(), out.string().c_str());
    report_warnings(w, verbose);
    return 0;
}

int cmd_run(const RunFlags& flags, bool verbose)
{
    const auto config = apply_flags(cli::load_config(flags.configs.front()), flags);
    Warnings w;
    const auto input = cli::load_input(config.corpus_dir, config.ordering, &w);
    const auto result = cli::run_experiment(config, input, flags.out);
    ingest::write_file(flags.out / "report.csv", cli::format_report(result));
    print_summary(result);
    w.merge(result.warnings);
    report_warnings(w, verbose);
    return 0;
}

int cmd_suite(const RunFlags& flags, bool verbose)
{
    std::vector<cli::ExperimentConfig> configs;
    for (const auto& p : flags.configs)
        configs.push_back(apply_flags(cli::load_config(p), flags));

    Warnings w;
    std::map<std::pair<fs::path, fs::path>, cli::CorpusInput> inputs;
    auto input_for = [&](const cli::ExperimentConfig& c) -> const cli::CorpusInput& {
        const auto key = std::make_pair(c.corpus_dir, c.ordering);
        auto it = inputs.find(key);
        if (it == inputs.end())
            it = inputs.emplace(key, cli::load_input(c.corpus_dir, c.ordering, &w)).first;
        return it->second;
    };
    const auto results = cli::run_suite(configs, input_for, flags.out);
    ingest::write_file(flags.out / "report.csv", cli::format_suite(results));
    std::string runs = cli::report_header();
    for (const auto& r : results) {
        if (r.ok())
            runs += cli::report_rows(r);
        print_summary(r);
        w.merge(r.warnings);
    }
    ingest::write_file(flags.out / "runs.csv", runs);
    report_warnings(w, verbose);
    return 0;
}

int cmd_render(const fs::path& matrix_path, const fs::path& ids_path, const fs::path& out)
{
    const auto matrix = models::parse_matrix_f32(ingest::read_file(matrix_path));
    std::vector<std::size_t> boundaries;
    if (!ids_path.empty()) {
        std::vector<std::string> codes;
        const std::string text = ingest::read_file(ids_path);
        std::size_t pos = 0;
        while (pos < text.size()) {
            const std::size_t end = std::min(text.find('\n', pos), text.size());
            const std::string line = text.substr(pos, end - pos);
            pos = end + 1;
            if (line.empty())
                continue;
            const std::size_t tab = line.find('\t');
            codes.push_back(tab == std::string::npos ? line : line.substr(tab + 1));
        }
        if (codes.size() != static_cast<std::size_t>(matrix.rows()))
            throw Error("ids file lists " + std::to_string(codes.size()) + " documents, matrix has " +
                        std::to_string(matrix.rows()));
        boundaries = eval::reference_matrix(codes).boundaries;
    }
    viz::write_png(out, viz::render_matrix(matrix, boundaries));
    std::printf("wrote %s\n", out.string().c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Math-aware bag-of-words topic-model benchmark"};
    app.require_subcommand(1);
    bool verbose = false;
    app.add_flag("-v,--verbose", verbose, "Print every warning");

    fs::path corpus;
    fs::path out;
    auto* ingest_cmd = app.add_subcommand("ingest", "Parse and filter a corpus, print a summary");
    ingest_cmd->add_option("--corpus", corpus, "Corpus directory")->required()->check(CLI::ExistingDirectory);
    ingest_cmd->add_option("--out", out, "Write a per-document summary TSV");

    synth::SynthSpec spec;
    auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic corpus");
    synth_cmd->add_option("--out", out, "Corpus directory to create")->required();
    synth_cmd->add_option("--categories", spec.num_categories)->capture_default_str();
    synth_cmd->add_option("--docs-per-category", spec.docs_per_category)->capture_default_str();
    synth_cmd->add_option("--vocab", spec.vocab_size_per_category, "Vocabulary size per category")
        ->capture_default_str();
    synth_cmd->add_option("--vocab-overlap", spec.vocab_overlap)->capture_default_str();
    synth_cmd->add_option("--words", spec.words_per_doc, "Words per document")->capture_default_str();
    synth_cmd->add_option("--formulae", spec.formulae_per_doc, "Formulae per document")->capture_default_str();
    synth_cmd->add_option("--notation-overlap", spec.formula_notation_overlap)->capture_default_str();
    synth_cmd->add_option("--seed", spec.seed)->capture_default_str();

    std::uint64_t shuffle_seed = 0;
    auto* shuffle_cmd = app.add_subcommand("shuffle", "Persist a seeded random document ordering");
    shuffle_cmd->add_option("--corpus", corpus, "Corpus directory")->required()->check(CLI::ExistingDirectory);
    shuffle_cmd->add_option("--seed", shuffle_seed)->capture_default_str();
    shuffle_cmd->add_option("--out", out, "Ordering file (default: <corpus>/ordering.txt)");

    RunFlags run_flags;
    auto* run_cmd = app.add_subcommand("run", "Cross-validate one configuration");
    add_run_flags(run_cmd, run_flags, false);

    RunFlags suite_flags;
    auto* suite_cmd = app.add_subcommand("suite", "Run several configurations and rank them");
    add_run_flags(suite_cmd, suite_flags, true);

    fs::path matrix;
    fs::path ids;
    auto* render_cmd = app.add_subcommand("render", "Render an exported similarity matrix as PNG");
    render_cmd->add_option("--matrix", matrix, "Float32 matrix file")->required()->check(CLI::ExistingFile);
    render_cmd->add_option("--ids", ids, "id<TAB>code sidecar for region separators")->check(CLI::ExistingFile);
    render_cmd->add_option("--out", out, "PNG file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ingest_cmd)
            return cmd_ingest(corpus, out, verbose);
        if (*synth_cmd) {
            const auto generated = synth::generate(spec);
            synth::write_corpus(generated, out);
            std::printf("wrote %zu documents in %zu categories to %s\n", generated.documents.size(),
                        generated.prefixes.size(), out.string().c_str());
            return 0;
        }
        if (*shuffle_cmd)
            return cmd_shuffle(corpus, shuffle_seed, out, verbose);
        if (*run_cmd)
            return cmd_run(run_flags, verbose);
        if (*suite_cmd)
            return cmd_suite(suite_flags, verbose);
        if (*render_cmd)
            return cmd_render(matrix, ids, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
