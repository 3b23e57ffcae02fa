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

#ifndef MATHBOW_SYNTH_HPP
#define MATHBOW_SYNTH_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace mathbow::synth {

struct SynthSpec {
    int num_categories = 4;
    int docs_per_category = 50;
    int vocab_size_per_category = 200;
    /// Fraction of each category vocabulary taken from a pool shared by all
    /// categories.
    double vocab_overlap = 0.0;
    int words_per_doc = 120;
    int formulae_per_doc = 4;
    /// Fraction of each category's identifier and constant pools taken from
    /// a shared pool.
    double formula_notation_overlap = 0.0;
    std::uint64_t seed = 1;

    void validate() const;  // throws Error
};

struct GeneratedDocument {
    std::string id;
    std::string msc_code;
    std::string title;
    std::string xhtml;
};

struct SynthCorpus {
    std::vector<std::string> prefixes;  // one per category, ascending
    std::vector<GeneratedDocument> documents;
    std::string metadata_tsv;
    std::string msc_tsv;
};

SynthCorpus generate(const SynthSpec& spec);

/// Writes the ingest layout: docs/<id>.xhtml, metadata.tsv, msc.tsv.
void write_corpus(const SynthCorpus& corpus, const std::filesystem::path& root);

/// Distinct pronounceable lowercase word for every index.
std::string pseudo_word(std::uint64_t index);

}  // namespace mathbow::synth

#endif  // MATHBOW_SYNTH_HPP
