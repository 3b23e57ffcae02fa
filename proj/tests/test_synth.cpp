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
#include <map>
#include <set>

#include "mathbow/ingest.hpp"
#include "mathbow/synth.hpp"
#include "mathbow/tokenize.hpp"

using namespace mathbow;
using namespace mathbow::synth;

namespace {

std::vector<Document> parse_all(const SynthCorpus& corpus, Warnings* warnings)
{
    const auto meta = ingest::parse_metadata(corpus.metadata_tsv, warnings);
    REQUIRE(meta.size() == corpus.documents.size());
    std::vector<Document> docs;
    for (std::size_t i = 0; i < meta.size(); ++i)
        docs.push_back(ingest::parse_document(corpus.documents[i].xhtml, meta[i], warnings));
    return docs;
}

void collect_leaves(const MathNode& node, std::set<std::string>& out)
{
    if (node.kind == NodeKind::Identifier || node.kind == NodeKind::Number)
        out.insert(node.value);
    for (const auto& c : node.children)
        collect_leaves(c, out);
}

// Per-category token sets of the body text and of the formula leaves.
struct Channels {
    std::map<std::string, std::set<std::string>> words;
    std::map<std::string, std::set<std::string>> leaves;
};

Channels channels(const std::vector<Document>& docs)
{
    Channels ch;
    for (const auto& d : docs) {
        const auto prefix = d.primary_msc().substr(0, 2);
        for (const auto& t : tokenize::tokenize_text(d.body_text))
            ch.words[prefix].insert(t);
        for (const auto& f : d.formulae) {
            REQUIRE(f.tree.has_value());
            collect_leaves(*f.tree, ch.leaves[prefix]);
        }
    }
    return ch;
}

std::size_t shared(const std::set<std::string>& a, const std::set<std::string>& b)
{
    std::size_t n = 0;
    for (const auto& x : a)
        n += b.count(x);
    return n;
}

}  // namespace

TEST_CASE("default corpus shape")
{
    const auto corpus = generate(SynthSpec{});
    CHECK(corpus.documents.size() == 200);
    CHECK(corpus.prefixes.size() == 4);
    Warnings warnings;
    const auto meta = ingest::parse_metadata(corpus.metadata_tsv, &warnings);
    CHECK(meta.size() == 200);
    const auto spec = ingest::parse_msc_spec(corpus.msc_tsv, &warnings);
    const auto docs = parse_all(corpus, &warnings);
    CHECK(warnings.empty());
    const auto kept = ingest::filter_corpus(docs, spec, &warnings);
    CHECK(kept.size() == 200);
    std::map<std::string, int> per_prefix;
    for (const auto& d : docs) {
        CHECK(ingest::is_valid_msc_code(d.primary_msc()));
        CHECK(d.formulae.size() == 4);
        ++per_prefix[d.primary_msc().substr(0, 2)];
    }
    CHECK(per_prefix.size() == 4);
    for (const auto& [p, n] : per_prefix)
        CHECK(n == 50);
    CHECK(corpus.documents.front().id == "synth-00001");
}

TEST_CASE("zero overlap gives disjoint categories")
{
    SynthSpec spec;
    spec.docs_per_category = 10;
    Warnings warnings;
    const auto ch = channels(parse_all(generate(spec), &warnings));
    for (auto a = ch.words.begin(); a != ch.words.end(); ++a)
        for (auto b = std::next(a); b != ch.words.end(); ++b) {
            CHECK(shared(a->second, b->second) == 0);
            CHECK(shared(ch.leaves.at(a->first), ch.leaves.at(b->first)) == 0);
        }
}

TEST_CASE("overlap shares part of the vocabulary")
{
    SynthSpec spec;
    spec.docs_per_category = 10;
    spec.vocab_overlap = 0.8;
    spec.formula_notation_overlap = 0.8;
    const auto ch = channels(parse_all(generate(spec), nullptr));
    const auto& a = ch.words.begin()->second;
    const auto& b = std::next(ch.words.begin())->second;
    CHECK(shared(a, b) > 0);
    CHECK(shared(ch.leaves.begin()->second, std::next(ch.leaves.begin())->second) > 0);
}

TEST_CASE("same seed gives identical bytes")
{
    SynthSpec spec;
    spec.docs_per_category = 5;
    spec.seed = 9;
    const auto a = generate(spec);
    const auto b = generate(spec);
    REQUIRE(a.documents.size() == b.documents.size());
    for (std::size_t i = 0; i < a.documents.size(); ++i)
        CHECK(a.documents[i].xhtml == b.documents[i].xhtml);
    CHECK(a.metadata_tsv == b.metadata_tsv);
    spec.seed = 10;
    CHECK(generate(spec).documents[0].xhtml != a.documents[0].xhtml);
}

TEST_CASE("corpus files load through ingest")
{
    SynthSpec spec;
    spec.num_categories = 3;
    spec.docs_per_category = 4;
    const auto corpus = generate(spec);
    const auto root = std::filesystem::temp_directory_path() / "mathbow_test_synth";
    std::filesystem::remove_all(root);
    write_corpus(corpus, root);
    Warnings warnings;
    const auto docs = ingest::load_corpus(ingest::CorpusLayout::in(root), &warnings);
    std::filesystem::remove_all(root);
    CHECK(docs.size() == 12);
    CHECK(warnings.empty());
}

TEST_CASE("pseudo words are distinct")
{
    std::set<std::string> seen;
    for (std::uint64_t i = 0; i < 5000; ++i) {
        const auto w = pseudo_word(i);
        CHECK(w.size() >= 6);
        CHECK(tokenize::tokenize_text(w) == std::vector<std::string>{w});
        seen.insert(w);
    }
    CHECK(seen.size() == 5000);
}

TEST_CASE("spec validation")
{
    SynthSpec bad;
    bad.vocab_overlap = 1.5;
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = SynthSpec{};
    bad.num_categories = 0;
    CHECK_THROWS_AS(bad.validate(), Error);
}
