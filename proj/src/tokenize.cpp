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

#include "mathbow/tokenize.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "mathbow/md4.hpp"
#include "mathbow/unicode.hpp"

namespace mathbow::tokenize {

namespace {

constexpr std::size_t kHashThreshold = 32;

bool ends_with(std::string_view s, std::string_view suffix)
{
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::string_view trim(std::string_view s)
{
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

}  // namespace

std::string_view strategy_name(MTermStrategy strategy)
{
    switch (strategy) {
    case MTermStrategy::None: return "none";
    case MTermStrategy::AllWeighted: return "all";
    case MTermStrategy::Top: return "top";
    case MTermStrategy::High: return "high";
    case MTermStrategy::Mid: return "mid";
    case MTermStrategy::Low: return "low";
    }
    return "?";
}

MTermStrategy parse_strategy(std::string_view name)
{
    for (auto s : {MTermStrategy::None, MTermStrategy::AllWeighted, MTermStrategy::Top, MTermStrategy::High,
                   MTermStrategy::Mid, MTermStrategy::Low})
        if (strategy_name(s) == name)
            return s;
    throw Error("unknown MTerm strategy '" + std::string(name) + "'");
}

void RepresentationConfig::validate() const
{
    if (!use_text && !use_tex && mterm_strategy == MTermStrategy::None)
        throw Error("representation enables no token channel");
    if (!(mtmod_scale > 0.0))
        throw Error("mtmod_scale must be positive");
    weights.validate();
}

std::string RepresentationConfig::describe() const
{
    std::string out;
    const auto add = [&](std::string_view part) {
        if (!out.empty())
            out.push_back('+');
        out += part;
    };
    if (use_text)
        add("text");
    if (use_tex)
        add("tex");
    if (mterm_strategy != MTermStrategy::None)
        add("mterms(" + std::string(strategy_name(mterm_strategy)) + ")");
    return out;
}

void BagOfWords::add(const std::string& token, std::uint64_t count)
{
    if (token.empty() || count == 0)
        return;
    counts_[token] += count;
}

void BagOfWords::merge(const BagOfWords& other)
{
    for (const auto& [token, count] : other.counts_)
        counts_[token] += count;
}

std::uint64_t BagOfWords::count(const std::string& token) const
{
    auto it = counts_.find(token);
    return it == counts_.end() ? 0 : it->second;
}

std::uint64_t BagOfWords::total() const
{
    std::uint64_t sum = 0;
    for (const auto& [token, count] : counts_)
        sum += count;
    return sum;
}

std::vector<std::string> tokenize_text(std::string_view text)
{
    std::vector<std::string> tokens;
    std::string current;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char32_t cp = unicode::decode(text, pos);
        if (unicode::is_word_char(cp)) {
            unicode::append(current, unicode::to_lower(cp));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty())
        tokens.push_back(std::move(current));
    return tokens;
}

bool is_stopword(std::string_view word)
{
    static const std::unordered_set<std::string_view> words{
        "a",     "about", "above", "after", "again", "all",   "also",  "am",    "an",    "and",
        "any",   "are",   "as",    "at",    "be",    "been",  "being", "both",  "but",   "by",
        "can",   "could", "did",   "do",    "does",  "each",  "for",   "from",  "further", "had",
        "has",   "have",  "he",    "her",   "here",  "him",   "his",   "how",   "i",     "if",
        "in",    "into",  "is",    "it",    "its",   "may",   "more",  "most",  "no",    "not",
        "of",    "on",    "once",  "only",  "or",    "other", "our",   "out",   "over",  "same",
        "she",   "should", "so",   "some",  "such",  "than",  "that",  "the",   "their", "them",
        "then",  "there", "these", "they",  "this",  "those", "through", "to",  "too",   "under",
        "until", "up",    "very",  "was",   "we",    "were",  "what",  "when",  "where", "which",
        "while", "who",   "whom",  "why",   "will",  "with",  "would", "you",   "your",  "let",
    };
    return words.count(word) > 0;
}

// Harman's S-stemmer: first matching rule only.
std::string s_stem(std::string_view word)
{
    std::string w(word);
    if (ends_with(w, "ies") && !ends_with(w, "eies") && !ends_with(w, "aies")) {
        w.replace(w.size() - 3, 3, "y");
    } else if (ends_with(w, "es") && !ends_with(w, "aes") && !ends_with(w, "ees") && !ends_with(w, "oes")) {
        w.pop_back();
    } else if (ends_with(w, "s") && !ends_with(w, "us") && !ends_with(w, "ss") && w.size() > 1) {
        w.pop_back();
    }
    return w;
}

std::vector<std::string> text_tokens(std::string_view text, const RepresentationConfig& config)
{
    auto tokens = tokenize_text(text);
    if (config.remove_stopwords)
        std::erase_if(tokens, [](const std::string& t) { return is_stopword(t); });
    if (config.stemmer == Stemmer::SStemmer)
        for (auto& t : tokens)
            t = s_stem(t);
    return tokens;
}

std::string wrap_math_token(std::string_view token)
{
    std::string out;
    out.reserve(token.size() + 2);
    out.push_back('$');
    out += token;
    out.push_back('$');
    return out;
}

std::string hash_long_math_token(std::string_view token)
{
    if (token.size() > kHashThreshold)
        return md4_hex(token);
    return std::string(token);
}

std::string math_token(std::string_view raw)
{
    return wrap_math_token(hash_long_math_token(raw));
}

std::uint64_t mterm_repeat_count(double mias_weight, double mtmod_scale)
{
    const double modified = std::trunc(mtmod_scale * mias_weight);
    const double repeats = std::ceil(std::round(modified));
    return repeats > 0.0 ? static_cast<std::uint64_t>(repeats) : 0;
}

ThirdCutoffs corpus_third_cutoffs(std::span<const Document> documents, const RepresentationConfig& config)
{
    std::vector<double> weights;
    for (const auto& doc : documents)
        for (const auto& f : doc.formulae)
            for (const auto& m : mathrep::formula_to_weighted_mterms(f, config.weights, config.derive))
                weights.push_back(m.mias_weight);
    if (weights.empty())
        return {};
    std::sort(weights.begin(), weights.end(), std::greater<>());
    const std::size_t n = weights.size();
    const std::size_t high_end = (n + 2) / 3;
    const std::size_t mid_end = (2 * n + 2) / 3;
    ThirdCutoffs cut;
    cut.high_min = weights[high_end - 1];
    cut.mid_min = mid_end > high_end ? weights[mid_end - 1] : cut.high_min;
    return cut;
}

std::vector<TokenCount> select_mterms(std::span<const mathrep::WeightedMTerm> weighted, MTermStrategy strategy,
                                      double mtmod_scale, const ThirdCutoffs* cutoffs)
{
    std::vector<TokenCount> out;
    const std::size_t n = weighted.size();
    switch (strategy) {
    case MTermStrategy::None:
        break;
    case MTermStrategy::AllWeighted:
        for (const auto& m : weighted)
            if (auto reps = mterm_repeat_count(m.mias_weight, mtmod_scale); reps > 0)
                out.push_back({m.mterm, reps});
        break;
    case MTermStrategy::Top:
        for (const auto& m : weighted)
            if (m.origin == mathrep::Origin::Top)
                out.push_back({m.mterm, 1});
        break;
    case MTermStrategy::High:
    case MTermStrategy::Mid:
    case MTermStrategy::Low:
        for (std::size_t i = 0; i < n; ++i) {
            MTermStrategy band;
            if (cutoffs) {
                const double w = weighted[i].mias_weight;
                band = w >= cutoffs->high_min ? MTermStrategy::High
                       : w >= cutoffs->mid_min ? MTermStrategy::Mid
                                               : MTermStrategy::Low;
            } else {
                const std::size_t high_end = (n + 2) / 3;      // ceil(n/3)
                const std::size_t mid_end = (2 * n + 2) / 3;   // ceil(2n/3)
                band = i < high_end ? MTermStrategy::High
                       : i < mid_end ? MTermStrategy::Mid
                                     : MTermStrategy::Low;
            }
            if (band == strategy)
                out.push_back({weighted[i].mterm, 1});
        }
        break;
    }
    return out;
}

BagOfWords build_bow(const Document& document, const RepresentationConfig& config, const ThirdCutoffs* cutoffs,
                     Warnings* warnings)
{
    BagOfWords bow;
    if (config.use_text)
        for (const auto& token : text_tokens(document.body_text, config))
            bow.add(token);
    if (config.use_tex) {
        for (const auto& f : document.formulae) {
            auto tex = trim(f.tex);
            if (!tex.empty())
                bow.add(math_token(tex));
        }
    }
    if (config.mterm_strategy != MTermStrategy::None) {
        const ThirdCutoffs* cut = config.thirds == ThirdsScope::Corpus ? cutoffs : nullptr;
        if (config.thirds == ThirdsScope::Corpus && !cutoffs)
            warn(warnings, "corpus-wide thirds requested without cutoffs; using per-formula thirds");
        for (const auto& f : document.formulae) {
            const auto weighted = mathrep::formula_to_weighted_mterms(f, config.weights, config.derive, warnings);
            for (const auto& [mterm, count] : select_mterms(weighted, config.mterm_strategy, config.mtmod_scale, cut))
                bow.add(math_token(mterm), count);
        }
    }
    return bow;
}

std::string dump_bow(const BagOfWords& bow)
{
    std::string out;
    for (const auto& [token, count] : bow.counts()) {
        out += token;
        out.push_back('\t');
        out += std::to_string(count);
        out.push_back('\n');
    }
    return out;
}

}  // namespace mathbow::tokenize
