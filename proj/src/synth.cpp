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

#include "mathbow/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <set>
#include <string_view>

#include "mathbow/error.hpp"
#include "mathbow/ingest.hpp"
#include "mathbow/rng.hpp"

namespace mathbow::synth {

namespace {

constexpr std::string_view kConsonants = "bdfgklmnprstvz";
constexpr std::string_view kVowels = "aeiou";

struct Symbol {
    std::string mathml;  // UTF-8 text of the mi element
    std::string tex;
};

// Latin letters, then Greek, then two-letter names.
Symbol identifier(std::size_t index)
{
    static constexpr std::array<std::pair<const char*, const char*>, 19> greek{{
        {"α", "\\alpha"},  {"β", "\\beta"},   {"γ", "\\gamma"}, {"δ", "\\delta"},
        {"ε", "\\epsilon"}, {"ζ", "\\zeta"},  {"η", "\\eta"},   {"θ", "\\theta"},
        {"κ", "\\kappa"},  {"λ", "\\lambda"}, {"μ", "\\mu"},    {"ν", "\\nu"},
        {"ξ", "\\xi"},     {"π", "\\pi"},     {"ρ", "\\rho"},   {"σ", "\\sigma"},
        {"τ", "\\tau"},    {"φ", "\\phi"},    {"ω", "\\omega"},
    }};
    if (index < 26)
        return {std::string(1, static_cast<char>('a' + index)), std::string(1, static_cast<char>('a' + index))};
    index -= 26;
    if (index < 26)
        return {std::string(1, static_cast<char>('A' + index)), std::string(1, static_cast<char>('A' + index))};
    index -= 26;
    if (index < greek.size())
        return {greek[index].first, greek[index].second};
    index -= greek.size();
    const std::string name{static_cast<char>('a' + index / 26 % 26), static_cast<char>('a' + index % 26)};
    return {name, "\\mathit{" + name + "}"};
}

std::string xml_escape(std::string_view s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

/// Splits `pool_size` slots into a shared prefix and category-specific
/// rest, and returns the per-category pools as indices into a universe.
std::vector<std::vector<std::size_t>> make_pools(int categories, int pool_size, double overlap)
{
    const int shared = static_cast<int>(std::lround(overlap * pool_size));
    std::vector<std::vector<std::size_t>> pools(static_cast<std::size_t>(categories));
    std::size_t next = static_cast<std::size_t>(shared);
    for (auto& pool : pools) {
        for (int i = 0; i < shared; ++i)
            pool.push_back(static_cast<std::size_t>(i));
        for (int i = shared; i < pool_size; ++i)
            pool.push_back(next++);
    }
    return pools;
}

struct Expr {
    std::string mathml;
    std::string tex;
    bool leaf = false;
};

class FormulaGenerator {
public:
    FormulaGenerator(Rng& rng, const std::vector<std::size_t>& identifiers, const std::vector<std::size_t>& numbers)
        : rng_(rng), identifiers_(identifiers), numbers_(numbers)
    {
    }

    Expr formula() { return composite(0); }

private:
    static constexpr int kMaxDepth = 3;

    Expr ident()
    {
        const Symbol s = identifier(identifiers_[rng_.below(identifiers_.size())]);
        return {"<mi>" + xml_escape(s.mathml) + "</mi>", s.tex, true};
    }

    Expr number()
    {
        const std::string n = std::to_string(numbers_[rng_.below(numbers_.size())] + 2);
        return {"<mn>" + n + "</mn>", n, true};
    }

    Expr leaf() { return rng_.uniform() < 0.75 ? ident() : number(); }

    Expr any(int depth)
    {
        if (depth >= kMaxDepth || rng_.uniform() < 0.35 + 0.2 * depth)
            return leaf();
        return composite(depth);
    }

    Expr composite(int depth)
    {
        const int d = depth + 1;
        switch (rng_.below(6)) {
        case 0: {
            const int operands = 2 + static_cast<int>(rng_.below(2));
            Expr out{"<mrow>", "", false};
            for (int i = 0; i < operands; ++i) {
                if (i > 0) {
                    const bool minus = rng_.uniform() < 0.2;
                    out.mathml += minus ? "<mo>\u2212</mo>" : "<mo>+</mo>";
                    out.tex += minus ? " - " : " + ";
                }
                const Expr t = any(d);
                out.mathml += t.mathml;
                out.tex += t.tex;
            }
            out.mathml += "</mrow>";
            return out;
        }
        case 1: {
            const Expr a = leaf();
            const Expr b = any(d);
            return {"<mrow>" + a.mathml + "<mo>\u2062</mo>" + b.mathml + "</mrow>", a.tex + " " + b.tex, false};
        }
        case 2: {
            const Expr base = ident();
            const Expr exp = any(d);
            return {"<msup>" + base.mathml + exp.mathml + "</msup>", base.tex + "^{" + exp.tex + "}", false};
        }
        case 3: {
            const Expr num = any(d);
            const Expr den = any(d);
            return {"<mfrac>" + num.mathml + den.mathml + "</mfrac>", "\\frac{" + num.tex + "}{" + den.tex + "}",
                    false};
        }
        case 4: {
            const Expr base = ident();
            const Expr sub = leaf();
            return {"<msub>" + base.mathml + sub.mathml + "</msub>", base.tex + "_{" + sub.tex + "}", false};
        }
        default: {
            const Expr inner = any(d);
            return {"<msqrt>" + inner.mathml + "</msqrt>", "\\sqrt{" + inner.tex + "}", false};
        }
        }
    }

    Rng& rng_;
    const std::vector<std::size_t>& identifiers_;
    const std::vector<std::size_t>& numbers_;
};

std::string pad(int value, int width)
{
    std::string s = std::to_string(value);
    return std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(s.size()))), '0') + s;
}

}  // namespace

void SynthSpec::validate() const
{
    if (num_categories < 1 || num_categories > 90)
        throw Error("synth: num_categories must be in [1, 90]");
    if (docs_per_category < 1 || vocab_size_per_category < 1 || words_per_doc < 1)
        throw Error("synth: document, vocabulary and word counts must be positive");
    if (formulae_per_doc < 0)
        throw Error("synth: formulae_per_doc must not be negative");
    if (!(vocab_overlap >= 0.0 && vocab_overlap <= 1.0) ||
        !(formula_notation_overlap >= 0.0 && formula_notation_overlap <= 1.0))
        throw Error("synth: overlaps must lie in [0, 1]");
}

std::string pseudo_word(std::uint64_t index)
{
    const std::uint64_t syllables = kConsonants.size() * kVowels.size();
    std::string word;
    // Three syllables minimum keeps words clear of common short words.
    for (int i = 0; i < 3 || index > 0; ++i) {
        const std::uint64_t s = index % syllables;
        index /= syllables;
        word += kConsonants[s / kVowels.size()];
        word += kVowels[s % kVowels.size()];
    }
    return word;
}

SynthCorpus generate(const SynthSpec& spec)
{
    spec.validate();
    Rng rng(spec.seed);
    SynthCorpus corpus;

    std::vector<int> candidates;
    for (int p = 10; p < 100; ++p)
        candidates.push_back(p);
    rng.shuffle(std::span<int>(candidates));
    std::vector<int> chosen(candidates.begin(), candidates.begin() + spec.num_categories);
    std::sort(chosen.begin(), chosen.end());
    for (int p : chosen)
        corpus.prefixes.push_back(pad(p, 2));

    const auto vocab = make_pools(spec.num_categories, spec.vocab_size_per_category, spec.vocab_overlap);
    constexpr int kIdentifierPool = 8;
    constexpr int kNumberPool = 3;
    const auto idents = make_pools(spec.num_categories, kIdentifierPool, spec.formula_notation_overlap);
    const auto numbers = make_pools(spec.num_categories, kNumberPool, spec.formula_notation_overlap);

    // Spread the universe indices so consecutive pool slots are unrelated
    // words; the permutation is fixed by the seed.
    std::size_t universe = 0;
    for (const auto& pool : vocab)
        universe = std::max(universe, pool.back() + 1);
    std::vector<std::uint64_t> word_ids(universe);
    for (std::size_t i = 0; i < universe; ++i)
        word_ids[i] = i;
    rng.shuffle(std::span<std::uint64_t>(word_ids));

    std::set<std::string> codes;
    int serial = 0;
    for (int c = 0; c < spec.num_categories; ++c) {
        const std::string& prefix = corpus.prefixes[static_cast<std::size_t>(c)];
        FormulaGenerator formulas(rng, idents[static_cast<std::size_t>(c)], numbers[static_cast<std::size_t>(c)]);
        const auto& words = vocab[static_cast<std::size_t>(c)];
        for (int d = 0; d < spec.docs_per_category; ++d) {
            GeneratedDocument doc;
            doc.id = "synth-" + pad(++serial, 5);
            doc.msc_code = prefix + static_cast<char>('A' + rng.below(4)) + pad(5 * (1 + static_cast<int>(rng.below(19))), 2);
            doc.title = "Synthetic document " + pad(serial, 5);
            codes.insert(doc.msc_code);

            // Formulae land after evenly spaced words.
            std::vector<int> slots;
            for (int f = 0; f < spec.formulae_per_doc; ++f)
                slots.push_back((f + 1) * spec.words_per_doc / (spec.formulae_per_doc + 1));

            std::string body = "<p>";
            std::size_t slot = 0;
            for (int w = 0; w < spec.words_per_doc; ++w) {
                if (w > 0 && w % 20 == 0)
                    body += "</p>\n<p>";
                else if (w > 0)
                    body += ' ';
                body += pseudo_word(word_ids[words[rng.below(words.size())]]);
                while (slot < slots.size() && slots[slot] == w + 1) {
                    const Expr e = formulas.formula();
                    body += " <math xmlns=\"http://www.w3.org/1998/Math/MathML\" alttext=\"" + xml_escape(e.tex) +
                            "\"><semantics>" + e.mathml + "<annotation encoding=\"application/x-tex\">" +
                            xml_escape(e.tex) + "</annotation></semantics></math>";
                    ++slot;
                }
            }
            body += "</p>\n";

            doc.xhtml = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<!DOCTYPE html>\n"
                        "<html xmlns=\"http://www.w3.org/1999/xhtml\">\n<head><meta charset=\"UTF-8\"/><title>" +
                        doc.title + "</title></head>\n<body>\n" + body + "</body>\n</html>\n";
            corpus.metadata_tsv += doc.id + '\t' + doc.msc_code + '\t' + doc.title + '\n';
            corpus.documents.push_back(std::move(doc));
        }
    }
    corpus.msc_tsv = "# code\tdescription\n";
    for (const auto& code : codes)
        corpus.msc_tsv += code + "\tSynthetic subject " + code + '\n';
    return corpus;
}

void write_corpus(const SynthCorpus& corpus, const std::filesystem::path& root)
{
    const auto layout = ingest::CorpusLayout::in(root);
    std::filesystem::create_directories(layout.docs_dir);
    for (const auto& doc : corpus.documents)
        ingest::write_file(layout.docs_dir / (doc.id + ".xhtml"), doc.xhtml);
    ingest::write_file(layout.metadata, "# doc_id\tmsc_codes\ttitle\n" + corpus.metadata_tsv);
    ingest::write_file(layout.msc_spec, corpus.msc_tsv);
}

}  // namespace mathbow::synth
