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

#ifndef MATHBOW_TOKENIZE_HPP
#define MATHBOW_TOKENIZE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mathbow/document.hpp"
#include "mathbow/error.hpp"
#include "mathbow/mterm.hpp"

namespace mathbow::tokenize {

enum class MTermStrategy { None, AllWeighted, Top, High, Mid, Low };

/// Whether High/Mid/Low thirds are cut per formula or by corpus-wide
/// weight cutoffs.
enum class ThirdsScope { Formula, Corpus };

enum class Stemmer { None, SStemmer };

std::string_view strategy_name(MTermStrategy strategy);
MTermStrategy parse_strategy(std::string_view name);  // throws Error

struct RepresentationConfig {
    bool use_text = true;
    bool use_tex = false;
    MTermStrategy mterm_strategy = MTermStrategy::None;
    double mtmod_scale = 390.0;
    ThirdsScope thirds = ThirdsScope::Formula;
    bool remove_stopwords = false;
    Stemmer stemmer = Stemmer::None;
    mathrep::WeightScheme weights;
    mathrep::DeriveOptions derive;

    /// Throws Error when every channel is disabled or the scale is not positive.
    void validate() const;
    /// Short label such as "text+tex+mterms(top)".
    std::string describe() const;
};

/// Token -> positive count. Iteration is in token order.
class BagOfWords {
public:
    void add(const std::string& token, std::uint64_t count = 1);
    void merge(const BagOfWords& other);

    std::uint64_t count(const std::string& token) const;
    std::uint64_t total() const;
    std::size_t size() const { return counts_.size(); }
    bool empty() const { return counts_.empty(); }
    const std::map<std::string, std::uint64_t>& counts() const { return counts_; }

    friend bool operator==(const BagOfWords&, const BagOfWords&) = default;

private:
    std::map<std::string, std::uint64_t> counts_;
};

/// Lowercased maximal runs of letters/digits; everything else separates.
std::vector<std::string> tokenize_text(std::string_view text);

/// tokenize_text followed by the optional stopword and stemming passes.
std::vector<std::string> text_tokens(std::string_view text, const RepresentationConfig& config);

std::string s_stem(std::string_view word);
bool is_stopword(std::string_view word);

std::string wrap_math_token(std::string_view token);

/// Tokens longer than 32 bytes become their lowercase MD4 hex digest.
std::string hash_long_math_token(std::string_view token);

/// hash_long_math_token then wrap_math_token.
std::string math_token(std::string_view raw);

/// Number of times an MTerm of weight w_m enters the BoW:
/// ceil(round(trunc(scale * w_m))). Zero drops the MTerm.
std::uint64_t mterm_repeat_count(double mias_weight, double mtmod_scale);

struct TokenCount {
    std::string token;  // raw MTerm, not yet hashed or wrapped
    std::uint64_t count = 0;

    friend bool operator==(const TokenCount&, const TokenCount&) = default;
};

/// Corpus-wide weight cutoffs for ThirdsScope::Corpus.
struct ThirdCutoffs {
    double high_min = 0.0;  // weights >= high_min are High
    double mid_min = 0.0;   // weights in [mid_min, high_min) are Mid
};

ThirdCutoffs corpus_third_cutoffs(std::span<const Document> documents, const RepresentationConfig& config);

/// Selects MTerms of one formula. `weighted` must be sorted by descending
/// weight (ties by MTerm), as returned by formula_to_weighted_mterms.
/// With `cutoffs` the High/Mid/Low strategies use corpus-wide cutoffs.
std::vector<TokenCount> select_mterms(std::span<const mathrep::WeightedMTerm> weighted, MTermStrategy strategy,
                                      double mtmod_scale = 390.0, const ThirdCutoffs* cutoffs = nullptr);

BagOfWords build_bow(const Document& document, const RepresentationConfig& config,
                     const ThirdCutoffs* cutoffs = nullptr, Warnings* warnings = nullptr);

/// `token<TAB>count` lines sorted by token.
std::string dump_bow(const BagOfWords& bow);

}  // namespace mathbow::tokenize

#endif  // MATHBOW_TOKENIZE_HPP
