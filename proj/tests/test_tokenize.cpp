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

#include <random>
#include <set>

#include "mathbow/tokenize.hpp"

using namespace mathbow;
using namespace mathbow::tokenize;
using mathrep::WeightedMTerm;

namespace {

std::vector<WeightedMTerm> ranked(std::size_t n)
{
    std::vector<WeightedMTerm> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back({"I(t" + std::to_string(i) + ")", 1.0 / static_cast<double>(i + 1), mathrep::Origin::Subformula, 1});
    return out;
}

Document sample_document()
{
    Document d;
    d.id = "d1";
    d.msc_codes = {"05C10"};
    d.body_text = "Let the graphs be planar graphs.";
    Formula f;
    f.tex = " a+b^{2+c} ";
    f.tree = mrow({mi("a"), mo("+"), msup(mi("b"), mrow({mn("2"), mo("+"), mi("c")}))});
    d.formulae.push_back(f);
    return d;
}

}  // namespace

TEST_CASE("text tokenization lowercases runs of letters and digits")
{
    CHECK(tokenize_text("Hello, World! x2 3-4") == std::vector<std::string>{"hello", "world", "x2", "3", "4"});
    CHECK(tokenize_text("") == std::vector<std::string>{});
    CHECK(tokenize_text("  ..  ") == std::vector<std::string>{});
    CHECK(tokenize_text("\xCE\xA9mega") == std::vector<std::string>{"\xCF\x89mega"});
}

TEST_CASE("stopwords and s-stemming")
{
    CHECK(is_stopword("the"));
    CHECK_FALSE(is_stopword("graph"));
    CHECK(s_stem("queries") == "query");
    CHECK(s_stem("cats") == "cat");
    CHECK(s_stem("glass") == "glass");
    CHECK(s_stem("corpus") == "corpus");
    CHECK(s_stem("does") == "doe");
    CHECK(s_stem("shoes") == "shoe");
    RepresentationConfig cfg;
    cfg.remove_stopwords = true;
    cfg.stemmer = Stemmer::SStemmer;
    CHECK(text_tokens("The graphs of queries", cfg) == std::vector<std::string>{"graph", "query"});
}

TEST_CASE("math tokens are hashed above 32 bytes and wrapped")
{
    const std::string t32(32, 'x');
    const std::string t33(33, 'x');
    CHECK(hash_long_math_token(t32) == t32);
    CHECK(hash_long_math_token(t33).size() == 32);
    CHECK(hash_long_math_token(t33) != t33);
    CHECK(hash_long_math_token("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789") ==
          "043f8582f241db351ce627e153e7f0e4");
    CHECK(wrap_math_token("I(a)") == "$I(a)$");
    CHECK(math_token("I(a)") == "$I(a)$");
    CHECK(math_token(t33) == "$" + hash_long_math_token(t33) + "$");
}

TEST_CASE("property: hashing is idempotent and bounded")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::string s(rng() % 80, 'a');
        for (auto& c : s)
            c = static_cast<char>('!' + rng() % 90);
        const auto h = hash_long_math_token(s);
        CHECK(h.size() <= 32);
        CHECK(hash_long_math_token(h) == h);
    }
}

TEST_CASE("repeat counts")
{
    CHECK(mterm_repeat_count(0.125, 390.0) == 48);
    CHECK(mterm_repeat_count(0.002, 390.0) == 0);
    CHECK(mterm_repeat_count(1.0, 390.0) == 390);
    CHECK(mterm_repeat_count(0.0, 390.0) == 0);
}

TEST_CASE("property: repeat counts are monotone in the weight")
{
    std::uint64_t prev = 0;
    for (int i = 0; i <= 10000; ++i) {
        const auto c = mterm_repeat_count(i / 10000.0, 390.0);
        CHECK(c >= prev);
        CHECK(c <= 390);
        prev = c;
    }
}

TEST_CASE("thirds selection")
{
    const auto six = ranked(6);
    const auto high = select_mterms(six, MTermStrategy::High);
    REQUIRE(high.size() == 2);
    CHECK(high[0].token == "I(t0)");
    CHECK(high[1].token == "I(t1)");
    CHECK(select_mterms(ranked(1), MTermStrategy::Mid).empty());
    CHECK(select_mterms(ranked(1), MTermStrategy::High).size() == 1);
    CHECK(select_mterms(six, MTermStrategy::None).empty());
}

TEST_CASE("property: thirds partition the MTerms of a formula")
{
    for (std::size_t n = 0; n < 40; ++n) {
        const auto w = ranked(n);
        std::multiset<std::string> all;
        for (auto s : {MTermStrategy::High, MTermStrategy::Mid, MTermStrategy::Low})
            for (const auto& tc : select_mterms(w, s)) {
                CHECK(tc.count == 1);
                all.insert(tc.token);
            }
        CHECK(all.size() == n);
        CHECK(std::set<std::string>(all.begin(), all.end()).size() == n);
        const auto h = select_mterms(w, MTermStrategy::High).size();
        const auto l = select_mterms(w, MTermStrategy::Low).size();
        CHECK(h >= l);
    }
}

TEST_CASE("corpus-wide thirds use weight cutoffs")
{
    const auto w = ranked(6);
    ThirdCutoffs cut{0.5, 0.25};
    CHECK(select_mterms(w, MTermStrategy::High, 390.0, &cut).size() == 2);
    CHECK(select_mterms(w, MTermStrategy::Mid, 390.0, &cut).size() == 2);
    CHECK(select_mterms(w, MTermStrategy::Low, 390.0, &cut).size() == 2);

    std::vector<Document> docs{sample_document()};
    RepresentationConfig cfg;
    cfg.mterm_strategy = MTermStrategy::High;
    cfg.thirds = ThirdsScope::Corpus;
    const auto c = corpus_third_cutoffs(docs, cfg);
    CHECK(c.high_min >= c.mid_min);
    CHECK(c.high_min > 0.0);
}

TEST_CASE("all-weighted selection repeats by weight")
{
    std::vector<WeightedMTerm> w{{"I(a)", 1.0, mathrep::Origin::Top, 0},
                                 {"I(b)", 0.125, mathrep::Origin::Subformula, 3},
                                 {"I(c)", 0.001, mathrep::Origin::Subformula, 9}};
    const auto sel = select_mterms(w, MTermStrategy::AllWeighted);
    REQUIRE(sel.size() == 2);
    CHECK(sel[0] == TokenCount{"I(a)", 390});
    CHECK(sel[1] == TokenCount{"I(b)", 48});
    const auto top = select_mterms(w, MTermStrategy::Top);
    REQUIRE(top.size() == 1);
    CHECK(top[0].token == "I(a)");
}

TEST_CASE("bag of words by channel")
{
    const auto doc = sample_document();
    RepresentationConfig text;
    const auto t = build_bow(doc, text);
    CHECK(t.count("graphs") == 2);
    CHECK(t.count("let") == 1);
    CHECK(t.total() == 6);

    RepresentationConfig tex;
    tex.use_text = false;
    tex.use_tex = true;
    const auto x = build_bow(doc, tex);
    CHECK(x.size() == 1);
    CHECK(x.count("$a+b^{2+c}$") == 1);

    RepresentationConfig top;
    top.use_text = false;
    top.mterm_strategy = MTermStrategy::Top;
    const auto m = build_bow(doc, top);
    CHECK(m.size() == 1);
    // The 33-byte encoding is hashed; digest cross-checked with an external MD4.
    const std::string enc = "R(I(a)O(+)J(I(b)R(I(c)O(+)N(2))))";
    REQUIRE(enc.size() == 33);
    CHECK(m.count(math_token(enc)) == 1);
    CHECK(dump_bow(m) == "$99d5a195fd3121b070c2de97c6726718$\t1\n");
}

TEST_CASE("property: math and text tokens never collide")
{
    const auto doc = sample_document();
    RepresentationConfig all;
    all.use_tex = true;
    all.mterm_strategy = MTermStrategy::AllWeighted;
    const auto bow = build_bow(doc, all);
    RepresentationConfig text;
    const auto t = build_bow(doc, text);
    for (const auto& [token, count] : bow.counts()) {
        const bool math = token.front() == '$';
        CHECK(math == (t.count(token) == 0));
        if (math)
            CHECK(token.back() == '$');
        else
            CHECK(count == t.count(token));
    }
    BagOfWords merged = t;
    merged.merge(t);
    CHECK(merged.total() == 2 * t.total());
}

TEST_CASE("representation validation and labels")
{
    RepresentationConfig none;
    none.use_text = false;
    CHECK_THROWS_AS(none.validate(), Error);
    RepresentationConfig cfg;
    cfg.use_tex = true;
    cfg.mterm_strategy = MTermStrategy::Top;
    CHECK(cfg.describe() == "text+tex+mterms(top)");
    CHECK(parse_strategy("mid") == MTermStrategy::Mid);
    CHECK_THROWS_AS(parse_strategy("middle"), Error);
}
