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

#ifndef MATHBOW_INGEST_HPP
#define MATHBOW_INGEST_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mathbow/document.hpp"
#include "mathbow/error.hpp"

namespace mathbow::ingest {

/// One row of the metadata sidecar: `doc_id<TAB>codes(;-separated)<TAB>title`.
struct MetadataRecord {
    std::string id;
    std::vector<std::string> msc_codes;
    std::string title;
};

/// MSC code -> description.
using MscSpec = std::map<std::string, std::string>;

struct CorpusOrdering {
    std::uint64_t seed = 0;
    std::vector<std::string> ordered_ids;
};

/// 5 characters, the first two digits.
bool is_valid_msc_code(std::string_view code);

/// Parses one XHTML document. Math elements are removed from the body text
/// (each replaced by a single space) and turned into formulae in document
/// order. Math whose presentation markup cannot be converted keeps its TeX
/// and bumps `warnings`; a math element with neither is dropped.
/// Throws ParseError for malformed markup.
Document parse_document(std::string_view xhtml, const MetadataRecord& metadata, Warnings* warnings = nullptr);

/// Keeps documents with exactly one MSC code whose third character is
/// neither '-' nor '.', and whose description exists in `spec` and does not
/// mention "see also" (case-insensitive).
std::vector<Document> filter_corpus(std::span<const Document> documents, const MscSpec& spec,
                                    Warnings* warnings = nullptr);

/// Sorts the ids, then applies a seeded Fisher-Yates shuffle.
CorpusOrdering shuffle_once(std::span<const Document> documents, std::uint64_t seed);
CorpusOrdering shuffle_ids(std::vector<std::string> ids, std::uint64_t seed);

std::vector<MetadataRecord> parse_metadata(std::string_view tsv, Warnings* warnings = nullptr);
MscSpec parse_msc_spec(std::string_view tsv, Warnings* warnings = nullptr);

std::string format_ordering(const CorpusOrdering& ordering);
CorpusOrdering parse_ordering(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

void save_ordering(const std::filesystem::path& path, const CorpusOrdering& ordering);
CorpusOrdering load_ordering(const std::filesystem::path& path);

/// Paths of an on-disk corpus: `docs/<id>.xhtml`, `metadata.tsv`, `msc.tsv`.
struct CorpusLayout {
    std::filesystem::path docs_dir;
    std::filesystem::path metadata;
    std::filesystem::path msc_spec;

    static CorpusLayout in(const std::filesystem::path& root);
};

/// Parses every metadata row's XHTML file and filters the result.
/// Missing files are skipped with a warning.
std::vector<Document> load_corpus(const CorpusLayout& layout, Warnings* warnings = nullptr);

}  // namespace mathbow::ingest

#endif  // MATHBOW_INGEST_HPP
