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

#include "mathbow/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "mathbow/math_node.hpp"
#include "mathbow/rng.hpp"
#include "mathbow/xml.hpp"

namespace mathbow {

const std::string& Document::primary_msc() const
{
    static const std::string empty;
    return msc_codes.empty() ? empty : msc_codes.front();
}

namespace ingest {

namespace {

std::string_view trim(std::string_view s)
{
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        auto at = s.find(sep, start);
        parts.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
        if (at == std::string_view::npos)
            break;
        start = at + 1;
    }
    return parts;
}

// Iterates lines, dropping '\r', blank lines and '#' comments.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn)
{
    std::size_t line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (trim(line).empty() || line.front() == '#')
            continue;
        fn(line, line_no);
    }
}

bool has_class(const xml::Node& el, std::string_view wanted)
{
    const std::string* cls = el.attribute("class");
    if (!cls)
        return false;
    std::istringstream in(*cls);
    std::string token;
    while (in >> token)
        if (token == wanted)
            return true;
    return false;
}

bool is_block(const std::string& tag)
{
    static const std::unordered_set<std::string> blocks{
        "p", "div", "section", "article", "h1", "h2", "h3", "h4", "h5", "h6", "li", "ul", "ol",
        "br", "tr", "td", "th", "table", "blockquote", "pre", "figure", "figcaption", "header",
        "footer", "dd", "dt", "dl"};
    return blocks.count(tag) > 0;
}

std::string tex_of(const xml::Node& math)
{
    // <semantics><presentation/><annotation encoding="application/x-tex">..</annotation>
    for (const auto& child : math.children) {
        if (child.is_element("semantics")) {
            for (const auto& ann : child.children) {
                if (!ann.is_element("annotation"))
                    continue;
                const std::string* enc = ann.attribute("encoding");
                if (enc && (*enc == "application/x-tex" || *enc == "TeX" || *enc == "application/x-latex"))
                    return std::string(trim(ann.inner_text()));
            }
        }
    }
    if (const std::string* alt = math.attribute("alttext"))
        return std::string(trim(*alt));
    return {};
}

struct Walker {
    Document& doc;
    Warnings* warnings;

    void text_without_math(const xml::Node& node, std::string& out) const
    {
        if (node.type == xml::Node::Type::Text) {
            out += node.text;
            return;
        }
        if (node.is_element("math")) {
            out.push_back(' ');
            return;
        }
        if (node.is_element("script") || node.is_element("style"))
            return;
        for (const auto& child : node.children)
            text_without_math(child, out);
        if (is_block(node.name))
            out.push_back('\n');
    }

    void add_formula(const xml::Node& math)
    {
        Formula f;
        f.tex = tex_of(math);
        std::string reason;
        f.tree = from_mathml(math, &reason);
        const bool has_markup = std::any_of(math.children.begin(), math.children.end(),
                                            [](const xml::Node& c) { return c.is_element(); });
        if (!f.tree && has_markup)
            warn(warnings, doc.id + ": unparseable MathML at byte " + std::to_string(math.offset) + ": " + reason);
        if (f.tex.empty() && !f.tree)
            return;
        doc.formulae.push_back(std::move(f));
    }

    void walk(const xml::Node& node)
    {
        if (node.type == xml::Node::Type::Text) {
            doc.body_text += node.text;
            return;
        }
        if (node.is_element("math")) {
            add_formula(node);
            doc.body_text.push_back(' ');
            return;
        }
        if (node.is_element("script") || node.is_element("style") || node.is_element("head"))
            return;
        if (has_class(node, "ltx_abstract") || has_class(node, "abstract")) {
            std::string abstract;
            text_without_math(node, abstract);
            if (!doc.abstract_text.empty())
                doc.abstract_text.push_back(' ');
            doc.abstract_text += trim(abstract);
        }
        if (has_class(node, "ltx_personname") || has_class(node, "author")) {
            std::string name;
            text_without_math(node, name);
            if (auto t = trim(name); !t.empty())
                doc.authors.emplace_back(t);
        }
        for (const auto& child : node.children)
            walk(child);
        if (is_block(node.name))
            doc.body_text.push_back('\n');
    }
};

const xml::Node* find_element(const xml::Node& node, std::string_view name)
{
    if (node.is_element(name))
        return &node;
    for (const auto& child : node.children)
        if (child.is_element())
            if (const auto* found = find_element(child, name))
                return found;
    return nullptr;
}

bool contains_see_also(std::string_view description)
{
    std::string lower(description);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return lower.find("see also") != std::string::npos;
}

}  // namespace

bool is_valid_msc_code(std::string_view code)
{
    return code.size() == 5 && std::isdigit(static_cast<unsigned char>(code[0])) &&
           std::isdigit(static_cast<unsigned char>(code[1]));
}

Document parse_document(std::string_view xhtml, const MetadataRecord& metadata, Warnings* warnings)
{
    const xml::Node root = xml::parse(xhtml);
    Document doc;
    doc.id = metadata.id;
    doc.msc_codes = metadata.msc_codes;
    doc.title = metadata.title;
    if (doc.title.empty())
        if (const auto* title = find_element(root, "title"))
            doc.title = std::string(trim(title->inner_text()));

    Walker walker{doc, warnings};
    const xml::Node* body = find_element(root, "body");
    walker.walk(body ? *body : root);
    return doc;
}

std::vector<Document> filter_corpus(std::span<const Document> documents, const MscSpec& spec, Warnings* warnings)
{
    std::vector<Document> kept;
    for (const auto& doc : documents) {
        if (doc.msc_codes.size() != 1)
            continue;
        const std::string& code = doc.msc_codes.front();
        if (code.size() < 3 || code[2] == '-' || code[2] == '.')
            continue;
        auto it = spec.find(code);
        if (it == spec.end()) {
            warn(warnings, doc.id + ": MSC code " + code + " not in the MSC specification, excluded");
            continue;
        }
        if (contains_see_also(it->second))
            continue;
        kept.push_back(doc);
    }
    return kept;
}

CorpusOrdering shuffle_ids(std::vector<std::string> ids, std::uint64_t seed)
{
    std::sort(ids.begin(), ids.end());
    Rng rng(seed);
    rng.shuffle(std::span<std::string>(ids));
    return CorpusOrdering{seed, std::move(ids)};
}

CorpusOrdering shuffle_once(std::span<const Document> documents, std::uint64_t seed)
{
    if (documents.empty())
        throw Error("shuffle_once: empty corpus");
    std::vector<std::string> ids;
    ids.reserve(documents.size());
    for (const auto& d : documents)
        ids.push_back(d.id);
    return shuffle_ids(std::move(ids), seed);
}

std::vector<MetadataRecord> parse_metadata(std::string_view tsv, Warnings* warnings)
{
    std::vector<MetadataRecord> records;
    std::set<std::string> ids;
    for_each_line(tsv, [&](std::string_view line, std::size_t line_no) {
        auto fields = split(line, '\t');
        const std::string where = "metadata line " + std::to_string(line_no);
        if (fields.size() < 2) {
            warn(warnings, where + ": expected at least 2 tab-separated fields");
            return;
        }
        MetadataRecord rec;
        rec.id = std::string(trim(fields[0]));
        if (rec.id.empty()) {
            warn(warnings, where + ": empty document id");
            return;
        }
        for (auto code : split(fields[1], ';')) {
            code = trim(code);
            if (code.empty())
                continue;
            if (!is_valid_msc_code(code)) {
                warn(warnings, where + ": invalid MSC code '" + std::string(code) + "', record skipped");
                return;
            }
            rec.msc_codes.emplace_back(code);
        }
        if (fields.size() > 2)
            rec.title = std::string(trim(fields[2]));
        if (!ids.insert(rec.id).second) {
            warn(warnings, where + ": duplicate document id " + rec.id);
            return;
        }
        records.push_back(std::move(rec));
    });
    return records;
}

MscSpec parse_msc_spec(std::string_view tsv, Warnings* warnings)
{
    MscSpec spec;
    for_each_line(tsv, [&](std::string_view line, std::size_t line_no) {
        auto tab = line.find('\t');
        std::string_view code = trim(line.substr(0, tab));
        if (!is_valid_msc_code(code)) {
            warn(warnings, "MSC spec line " + std::to_string(line_no) + ": invalid code '" + std::string(code) + "'");
            return;
        }
        std::string_view description = tab == std::string_view::npos ? std::string_view{} : trim(line.substr(tab + 1));
        spec[std::string(code)] = std::string(description);
    });
    return spec;
}

std::string format_ordering(const CorpusOrdering& ordering)
{
    std::string out = "seed " + std::to_string(ordering.seed) + "\n";
    for (const auto& id : ordering.ordered_ids) {
        out += id;
        out.push_back('\n');
    }
    return out;
}

CorpusOrdering parse_ordering(std::string_view text)
{
    CorpusOrdering ordering;
    bool have_seed = false;
    std::unordered_set<std::string> seen;
    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        line = trim(line);
        if (!have_seed) {
            if (line.substr(0, 5) != "seed ")
                throw ParseError("ordering file must start with 'seed <N>'", 0);
            auto digits = trim(line.substr(5));
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), ordering.seed);
            if (ec != std::errc() || ptr != digits.data() + digits.size())
                throw ParseError("invalid seed on line " + std::to_string(line_no), 0);
            have_seed = true;
            return;
        }
        if (!seen.emplace(line).second)
            throw Error("ordering file lists id '" + std::string(line) + "' twice");
        ordering.ordered_ids.emplace_back(line);
    });
    if (!have_seed)
        throw ParseError("ordering file has no seed line", 0);
    return ordering;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot write " + path.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out)
        throw Error("write failed for " + path.string());
}

void save_ordering(const std::filesystem::path& path, const CorpusOrdering& ordering)
{
    write_file(path, format_ordering(ordering));
}

CorpusOrdering load_ordering(const std::filesystem::path& path)
{
    return parse_ordering(read_file(path));
}

CorpusLayout CorpusLayout::in(const std::filesystem::path& root)
{
    return {root / "docs", root / "metadata.tsv", root / "msc.tsv"};
}

std::vector<Document> load_corpus(const CorpusLayout& layout, Warnings* warnings)
{
    const auto records = parse_metadata(read_file(layout.metadata), warnings);
    const MscSpec spec = parse_msc_spec(read_file(layout.msc_spec), warnings);
    std::vector<Document> docs;
    docs.reserve(records.size());
    for (const auto& rec : records) {
        const auto path = layout.docs_dir / (rec.id + ".xhtml");
        if (!std::filesystem::exists(path)) {
            warn(warnings, rec.id + ": missing " + path.string());
            continue;
        }
        try {
            docs.push_back(parse_document(read_file(path), rec, warnings));
        } catch (const ParseError& e) {
            warn(warnings, rec.id + ": " + e.what());
        }
    }
    return filter_corpus(docs, spec, warnings);
}

}  // namespace ingest
}  // namespace mathbow
