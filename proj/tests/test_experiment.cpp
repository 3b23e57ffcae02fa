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

#include <filesystem>
#include <sstream>

#include "mathbow/experiment.hpp"
#include "mathbow/synth.hpp"

using namespace mathbow;
using namespace mathbow::cli;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

std::vector<std::string> fields(const std::string& line)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

// Small synthetic corpus on disk with a persisted ordering.
struct Fixture {
    fs::path root = fs::temp_directory_path() / "mathbow_test_experiment";
    CorpusInput input;

    Fixture()
    {
        fs::remove_all(root);
        synth::SynthSpec spec;
        spec.num_categories = 3;
        spec.docs_per_category = 8;
        spec.words_per_doc = 40;
        synth::write_corpus(synth::generate(spec), root / "corpus");
        const auto docs = ingest::load_corpus(ingest::CorpusLayout::in(root / "corpus"));
        ingest::save_ordering(root / "corpus" / "ordering.txt", ingest::shuffle_once(docs, 42));
        input = load_input(root / "corpus", root / "corpus" / "ordering.txt");
    }
    ~Fixture() { fs::remove_all(root); }
};

ExperimentConfig small_config(const std::string& id)
{
    return parse_config("[experiment]\nid = " + id + "\ntopics = 6\n[output]\npng = true\ntsv = true\n");
}

}  // namespace

TEST_CASE("config parsing")
{
    const auto cfg = parse_config(R"(# comment
[experiment]
id = text-top
method = tfidf-lda
topics = 20
seed = 5
reruns = 2
[representation]
text = true
tex = true
mterms = top
thirds = corpus
stem = s
[weights]
level = 0.4
[lda]
passes = 3
[lsi]
projection = basis
[corpus]
dir = corpus
ordering = corpus/ordering.txt
[eval]
include_diagonal = false
[output]
f32 = true
)",
                                  "/base");
    CHECK(cfg.config_id == "text-top");
    CHECK(cfg.cv.method == eval::Method::TfidfLda);
    CHECK(cfg.cv.num_topics == 20);
    CHECK(cfg.cv.seed == 5);
    CHECK(cfg.cv.reruns == 2);
    CHECK(cfg.cv.representation.use_tex);
    CHECK(cfg.cv.representation.mterm_strategy == tokenize::MTermStrategy::Top);
    CHECK(cfg.cv.representation.thirds == tokenize::ThirdsScope::Corpus);
    CHECK(cfg.cv.representation.stemmer == tokenize::Stemmer::SStemmer);
    CHECK(cfg.cv.representation.weights.level_coeff == 0.4);
    CHECK(cfg.cv.lda.passes == 3);
    CHECK(cfg.cv.lsi.projection == models::LsiProjection::Basis);
    CHECK(cfg.corpus_dir == fs::path("/base/corpus"));
    CHECK(cfg.ordering == fs::path("/base/corpus/ordering.txt"));
    CHECK_FALSE(cfg.cv.include_diagonal);
    CHECK(cfg.write_f32);

    const auto again = parse_config(format_config(cfg));
    CHECK(format_config(again) == format_config(cfg));
}

TEST_CASE("config errors name the key")
{
    try {
        parse_config("[experiment]\nid = x\ntopix = 5\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.key() == "experiment.topix");
    }
    try {
        parse_config("[experiment]\nid = x\n[model]\nk = 1\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.key() == "model");
    }
    try {
        parse_config("[experiment]\nid = x\ntopics = many\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.key() == "experiment.topics");
    }
    CHECK_THROWS_AS(parse_config("[representation]\ntext = true\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[experiment]\nid = x\nid = y\n"), Error);
    CHECK_THROWS_AS(parse_config("[experiment\nid = x\n"), Error);
}

TEST_CASE("file stems")
{
    CHECK(file_stem("text+top mterms") == "text_top_mterms");
    CHECK(file_stem("a.b-c_d") == "a.b-c_d");
}

TEST_CASE("experiment report and artifacts")
{
    Fixture fx;
    auto cfg = small_config("exp one");
    cfg.cv.representation.mterm_strategy = tokenize::MTermStrategy::Top;
    cfg.bow_debug = true;
    const auto out = fx.root / "out";
    const auto result = run_experiment(cfg, fx.input, out);
    REQUIRE(result.ok());
    CHECK(result.report.runs.size() == 8);

    const auto report = lines(format_report(result));
    REQUIRE(report.size() == 10);
    CHECK(report[0] == report_header().substr(0, report_header().size() - 1));
    const auto header = fields(report[0]);
    CHECK(header.size() == 17);
    for (std::size_t i = 1; i < report.size(); ++i)
        CHECK(fields(report[i]).size() == 17);
    const auto agg = fields(report.back());
    CHECK(agg[4] == "all");
    CHECK(agg[5] == "all");
    CHECK(agg[16] == "ok");
    CHECK(agg[1] == "text+mterms(top)");
    CHECK(agg[2] == "TfIdf-LSI");

    CHECK(fs::exists(out / "curve-exp_one-0-0.tsv"));
    CHECK(fs::exists(out / "matrix-exp_one-1-3.png"));
    CHECK_FALSE(fs::exists(out / "matrix-exp_one-0-0.f32"));
    const auto debug = ingest::read_file(out / "bow-debug-exp_one.tsv");
    CHECK(debug.rfind("doc_id\ttoken\tcount\n", 0) == 0);
    CHECK(debug.find("\t$") != std::string::npos);

    // Same inputs, same numbers.
    const auto again = run_experiment(cfg, fx.input, fx.root / "out2");
    CHECK(format_report(again) == format_report(result));
}

TEST_CASE("suite ranking and failures")
{
    Fixture fx;
    std::vector<ExperimentConfig> configs{small_config("b-text"), small_config("a-tex"), small_config("broken")};
    configs[1].cv.representation.use_text = false;
    configs[1].cv.representation.use_tex = true;
    for (auto& c : configs) {
        c.write_png = false;
        c.write_tsv = false;
    }
    const auto input_for = [&](const ExperimentConfig& c) -> const CorpusInput& {
        if (c.config_id == "broken")
            throw Error("no corpus");
        return fx.input;
    };
    const auto results = run_suite(configs, input_for, fx.root / "out");
    REQUIRE(results.size() == 3);
    CHECK_FALSE(results[2].ok());
    const auto table = lines(format_suite(results));
    REQUIRE(table.size() == 4);
    CHECK(fields(table[1])[0] == "b-text");
    CHECK(fields(table[2])[0] == "a-tex");
    CHECK(fields(table[3])[0] == "broken");
    CHECK(fields(table[3]).size() == 17);
    CHECK(fields(table[3])[16].rfind("failed", 0) == 0);
    CHECK(results[0].report.f1.mean >= results[1].report.f1.mean);

    CHECK(lines(format_suite(std::vector<ExperimentResult>{})).size() == 1);
    std::vector<ExperimentConfig> dup{small_config("x"), small_config("x")};
    CHECK_THROWS_AS(run_suite(dup, input_for, fx.root / "out"), Error);
    std::vector<ExperimentConfig> collide{small_config("x y"), small_config("x_y")};
    CHECK_THROWS_AS(run_suite(collide, input_for, fx.root / "out"), Error);
}

TEST_CASE("missing inputs are reported")
{
    CHECK_THROWS_AS(load_input("/nonexistent/corpus", "/nonexistent/ordering.txt"), Error);
}
