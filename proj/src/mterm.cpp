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

#include "mathbow/mterm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <optional>
#include <unordered_map>
#include <unordered_set>

namespace mathbow::mathrep {

namespace {

char kind_letter(NodeKind kind)
{
    switch (kind) {
    case NodeKind::Row: return 'R';
    case NodeKind::Identifier: return 'I';
    case NodeKind::Operator: return 'O';
    case NodeKind::Number: return 'N';
    case NodeKind::Sup: return 'J';
    case NodeKind::Sub: return 'U';
    case NodeKind::SubSup: return 'V';
    case NodeKind::Frac: return 'F';
    case NodeKind::Sqrt: return 'Q';
    case NodeKind::Root: return 'W';
    case NodeKind::Fenced: return 'P';
    case NodeKind::Text: return 'T';
    case NodeKind::Other: return 'X';
    }
    return '?';
}

std::optional<NodeKind> letter_kind(char c)
{
    switch (c) {
    case 'R': return NodeKind::Row;
    case 'I': return NodeKind::Identifier;
    case 'O': return NodeKind::Operator;
    case 'N': return NodeKind::Number;
    case 'J': return NodeKind::Sup;
    case 'U': return NodeKind::Sub;
    case 'V': return NodeKind::SubSup;
    case 'F': return NodeKind::Frac;
    case 'Q': return NodeKind::Sqrt;
    case 'W': return NodeKind::Root;
    case 'P': return NodeKind::Fenced;
    case 'T': return NodeKind::Text;
    case 'X': return NodeKind::Other;
    default: return std::nullopt;
    }
}

void encode_into(const MathNode& node, std::string& out)
{
    out.push_back(kind_letter(node.kind));
    if (node.kind == NodeKind::Other) {
        out.push_back('[');
        out += node.value;
        out.push_back(']');
    }
    out.push_back('(');
    if (node.is_leaf()) {
        for (char c : node.value) {
            if (c == '\\' || c == '(' || c == ')')
                out.push_back('\\');
            out.push_back(c);
        }
    } else {
        for (const auto& child : node.children)
            encode_into(child, out);
    }
    out.push_back(')');
}

class Decoder {
public:
    explicit Decoder(std::string_view s) : s_(s) {}

    MathNode run()
    {
        MathNode node = parse_node();
        if (pos_ != s_.size())
            throw ParseError("trailing characters in MTerm", pos_);
        return node;
    }

private:
    MathNode parse_node()
    {
        if (pos_ >= s_.size())
            throw ParseError("unexpected end of MTerm", pos_);
        auto kind = letter_kind(s_[pos_]);
        if (!kind)
            throw ParseError(std::string("unknown node letter '") + s_[pos_] + "'", pos_);
        ++pos_;
        MathNode node;
        node.kind = *kind;
        if (*kind == NodeKind::Other) {
            expect('[');
            auto close = s_.find(']', pos_);
            if (close == std::string_view::npos)
                throw ParseError("unterminated tag name", pos_);
            node.value = std::string(s_.substr(pos_, close - pos_));
            pos_ = close + 1;
        }
        expect('(');
        if (node.is_leaf()) {
            while (pos_ < s_.size() && s_[pos_] != ')') {
                if (s_[pos_] == '\\') {
                    if (++pos_ >= s_.size())
                        throw ParseError("dangling escape", pos_);
                } else if (s_[pos_] == '(') {
                    throw ParseError("unescaped '(' in leaf value", pos_);
                }
                node.value.push_back(s_[pos_++]);
            }
        } else {
            while (pos_ < s_.size() && s_[pos_] != ')')
                node.children.push_back(parse_node());
        }
        expect(')');
        return node;
    }

    void expect(char c)
    {
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

// Operator precedence levels used to split flat rows into operand runs.
// Unknown operators land in the loosest level and block reordering there.
enum class Level { Relation = 0, Additive = 1, Multiplicative = 2 };

const std::unordered_set<std::string>& additive_ops()
{
    static const std::unordered_set<std::string> ops{"+", "-", "\u2212", "\u00b1", "\u2213"};
    return ops;
}

const std::unordered_set<std::string>& multiplicative_ops()
{
    static const std::unordered_set<std::string> ops{
        "*", "\u22c5", "\u00b7", "\u00d7", "\u2062", "\u2217", "/", "\u00f7"};
    return ops;
}

Level level_of(const std::string& op)
{
    if (additive_ops().count(op))
        return Level::Additive;
    if (multiplicative_ops().count(op))
        return Level::Multiplicative;
    return Level::Relation;
}

bool commutative_at(Level level, const std::string& op)
{
    switch (level) {
    case Level::Relation: return op == "=";
    case Level::Additive: return op == "+";
    case Level::Multiplicative: return op != "/" && op != "\u00f7";
    }
    return false;
}

struct Split {
    std::vector<std::vector<MathNode>> runs;
    std::vector<MathNode> separators;
    bool commutative = false;
};

// Splits `seq` at the operators of the loosest level present. Returns
// nullopt when the sequence holds no operators at all.
std::optional<Split> split_runs(const std::vector<MathNode>& seq)
{
    std::optional<Level> loosest;
    for (const auto& n : seq)
        if (n.kind == NodeKind::Operator) {
            Level l = level_of(n.value);
            if (!loosest || l < *loosest)
                loosest = l;
        }
    if (!loosest)
        return std::nullopt;

    Split split;
    split.runs.emplace_back();
    std::optional<std::string> common_op;
    bool same_op = true;
    for (const auto& n : seq) {
        if (n.kind == NodeKind::Operator && level_of(n.value) == *loosest) {
            if (common_op && *common_op != n.value)
                same_op = false;
            common_op = n.value;
            split.separators.push_back(n);
            split.runs.emplace_back();
        } else {
            split.runs.back().push_back(n);
        }
    }
    const bool no_empty_run = std::none_of(split.runs.begin(), split.runs.end(),
                                           [](const auto& run) { return run.empty(); });
    split.commutative = same_op && no_empty_run && commutative_at(*loosest, *common_op);
    return split;
}

int kind_rank(NodeKind kind)
{
    switch (kind) {
    case NodeKind::Identifier: return 0;
    case NodeKind::Number: return 1;
    default: return 2;
    }
}

struct RunKey {
    int rank;
    std::string encoded;
    auto operator<=>(const RunKey&) const = default;
};

RunKey run_key(const std::vector<MathNode>& run)
{
    RunKey key{run.size() == 1 ? kind_rank(run.front().kind) : 2, {}};
    for (const auto& n : run)
        encode_into(n, key.encoded);
    return key;
}

std::vector<MathNode> canonical_sequence(std::vector<MathNode> seq)
{
    auto split = split_runs(seq);
    if (!split)
        return seq;
    for (auto& run : split->runs)
        run = canonical_sequence(std::move(run));
    if (split->commutative && split->runs.size() > 1) {
        std::vector<std::pair<RunKey, std::vector<MathNode>>> keyed;
        keyed.reserve(split->runs.size());
        for (auto& run : split->runs)
            keyed.emplace_back(run_key(run), std::move(run));
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i < keyed.size(); ++i)
            split->runs[i] = std::move(keyed[i].second);
    }
    std::vector<MathNode> out;
    out.reserve(seq.size());
    for (std::size_t i = 0; i < split->runs.size(); ++i) {
        if (i > 0)
            out.push_back(std::move(split->separators[i - 1]));
        for (auto& n : split->runs[i])
            out.push_back(std::move(n));
    }
    return out;
}

void generalize_into(MathNode& node, bool consts)
{
    if (node.kind == NodeKind::Identifier)
        node.value = "id";
    else if (consts && node.kind == NodeKind::Number)
        node.value = "const";
    for (auto& child : node.children)
        generalize_into(child, consts);
}

}  // namespace

std::string_view origin_name(Origin origin)
{
    switch (origin) {
    case Origin::Top: return "top";
    case Origin::Subformula: return "subformula";
    case Origin::VarGeneralized: return "var";
    case Origin::VarConstGeneralized: return "var+const";
    }
    return "?";
}

void WeightScheme::validate() const
{
    const auto check = [](double v, const char* name) {
        if (!(v > 0.0 && v < 1.0))
            throw Error(std::string("weight coefficient ") + name + " must lie in (0, 1)");
    };
    check(level_coeff, "level");
    check(var_coeff, "var");
    check(const_coeff, "const");
}

std::string encode_mterm(const MathNode& tree)
{
    validate(tree);
    std::string out;
    encode_into(tree, out);
    return out;
}

MathNode decode_mterm(std::string_view mterm)
{
    return Decoder(mterm).run();
}

MathNode canonical_order(MathNode tree)
{
    for (auto& child : tree.children)
        child = canonical_order(std::move(child));
    if (tree.kind == NodeKind::Row)
        tree.children = canonical_sequence(std::move(tree.children));
    return tree;
}

std::vector<DerivedFormula> derive_subformulae(const MathNode& tree, const DeriveOptions& options)
{
    std::vector<DerivedFormula> out;
    std::unordered_set<std::string> seen;
    std::deque<DerivedFormula> queue;
    queue.push_back({tree, 0});
    // Breadth-first, so the first visit of a serialization is its minimal depth.
    while (!queue.empty()) {
        DerivedFormula current = std::move(queue.front());
        queue.pop_front();
        std::string key;
        encode_into(current.tree, key);
        if (!seen.insert(std::move(key)).second)
            continue;
        const int next = current.depth + 1;
        for (const auto& child : current.tree.children)
            if (child.kind != NodeKind::Operator)
                queue.push_back({child, next});
        if (options.operand_runs && current.tree.kind == NodeKind::Row) {
            if (auto split = split_runs(current.tree.children))
                for (auto& run : split->runs)
                    if (run.size() > 1)
                        queue.push_back({MathNode::node(NodeKind::Row, std::move(run)), next});
        }
        out.push_back(std::move(current));
    }
    return out;
}

Generalized generalize(const MathNode& tree)
{
    Generalized g{tree, tree};
    generalize_into(g.vars, false);
    generalize_into(g.vars_consts, true);
    return g;
}

std::vector<WeightedMTerm> assign_weights(std::span<const DerivedFormula> subformulae, const WeightScheme& scheme)
{
    if (subformulae.empty())
        throw Error("assign_weights: empty subformula set");
    scheme.validate();

    int max_depth = 0;
    for (const auto& d : subformulae)
        max_depth = std::max(max_depth, d.depth);
    const double top_weight = std::ldexp(1.0, -max_depth);

    std::vector<WeightedMTerm> entries;
    std::unordered_map<std::string, std::size_t> index;
    const auto offer = [&](std::string mterm, double weight, Origin origin, int depth) {
        auto [it, inserted] = index.try_emplace(mterm, entries.size());
        if (inserted) {
            entries.push_back({std::move(mterm), weight, origin, depth});
        } else if (weight > entries[it->second].mias_weight) {
            entries[it->second] = {std::move(mterm), weight, origin, depth};
        }
    };

    for (const auto& d : subformulae) {
        const double w = top_weight * std::pow(scheme.level_coeff, d.depth);
        offer(encode_mterm(d.tree), w, d.depth == 0 ? Origin::Top : Origin::Subformula, d.depth);
        const Generalized g = generalize(d.tree);
        offer(encode_mterm(g.vars), w * scheme.var_coeff, Origin::VarGeneralized, d.depth + 1);
        offer(encode_mterm(g.vars_consts), w * scheme.var_coeff * scheme.const_coeff,
              Origin::VarConstGeneralized, d.depth + 2);
    }
    std::sort(entries.begin(), entries.end(), [](const WeightedMTerm& a, const WeightedMTerm& b) {
        if (a.mias_weight != b.mias_weight)
            return a.mias_weight > b.mias_weight;
        return a.mterm < b.mterm;
    });
    return entries;
}

std::vector<WeightedMTerm> formula_to_weighted_mterms(const Formula& formula, const WeightScheme& scheme,
                                                      const DeriveOptions& options, Warnings* warnings)
{
    if (!formula.tree) {
        warn(warnings, "formula without presentation tree skipped: " + formula.tex);
        return {};
    }
    const MathNode canonical = canonical_order(*formula.tree);
    const auto derived = derive_subformulae(canonical, options);
    return assign_weights(derived, scheme);
}

std::string dump_weighted(std::span<const WeightedMTerm> mterms)
{
    std::string out;
    char buf[32];
    for (const auto& m : mterms) {
        std::snprintf(buf, sizeof buf, "%.17g", m.mias_weight);
        out += buf;
        out.push_back('\t');
        out += m.mterm;
        out.push_back('\n');
    }
    return out;
}

}  // namespace mathbow::mathrep
