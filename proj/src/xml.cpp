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

#include "mathbow/xml.hpp"

#include <charconv>
#include <unordered_map>

#include "mathbow/error.hpp"
#include "mathbow/unicode.hpp"

namespace mathbow::xml {

namespace {

constexpr int kMaxDepth = 1024;

// XML's five plus the HTML entities that commonly survive in XHTML exports.
const std::unordered_map<std::string_view, char32_t>& named_entities()
{
    static const std::unordered_map<std::string_view, char32_t> table{
        {"lt", U'<'},        {"gt", U'>'},         {"amp", U'&'},
        {"quot", U'"'},      {"apos", U'\''},      {"nbsp", 0x00A0},
        {"ndash", 0x2013},   {"mdash", 0x2014},    {"hellip", 0x2026},
        {"thinsp", 0x2009},  {"ensp", 0x2002},     {"emsp", 0x2003},
        {"lsquo", 0x2018},   {"rsquo", 0x2019},    {"ldquo", 0x201C},
        {"rdquo", 0x201D},   {"times", 0x00D7},    {"minus", 0x2212},
        {"copy", 0x00A9},    {"shy", 0x00AD},      {"InvisibleTimes", 0x2062},
        {"ApplyFunction", 0x2061},
    };
    return table;
}

std::string_view local_name(std::string_view qname)
{
    auto colon = qname.find(':');
    return colon == std::string_view::npos ? qname : qname.substr(colon + 1);
}

bool is_name_char(char c)
{
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '_' || c == '-' || c == '.' || c == ':' || u >= 0x80;
}

bool is_space(char c)
{
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Node parse_document()
    {
        if (src_.substr(0, 3) == "\xEF\xBB\xBF")
            pos_ = 3;
        skip_misc();
        if (eof() || peek() != '<')
            fail("expected root element");
        Node root = parse_element(0);
        skip_misc();
        if (!eof())
            fail("content after root element");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    bool eof() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }
    bool starts_with(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

    void expect(std::string_view s)
    {
        if (!starts_with(s))
            fail("expected '" + std::string(s) + "'");
        pos_ += s.size();
    }

    void skip_space()
    {
        while (!eof() && is_space(peek()))
            ++pos_;
    }

    void skip_until(std::string_view terminator, const char* what)
    {
        auto end = src_.find(terminator, pos_);
        if (end == std::string_view::npos)
            fail(std::string("unterminated ") + what);
        pos_ = end + terminator.size();
    }

    // Whitespace, comments, PIs and the doctype outside the root element.
    void skip_misc()
    {
        for (;;) {
            skip_space();
            if (starts_with("<?")) {
                skip_until("?>", "processing instruction");
            } else if (starts_with("<!--")) {
                skip_until("-->", "comment");
            } else if (starts_with("<!DOCTYPE") || starts_with("<!doctype")) {
                skip_doctype();
            } else {
                return;
            }
        }
    }

    void skip_doctype()
    {
        int bracket = 0;
        while (!eof()) {
            char c = src_[pos_++];
            if (c == '[')
                ++bracket;
            else if (c == ']')
                --bracket;
            else if (c == '>' && bracket == 0)
                return;
        }
        fail("unterminated doctype");
    }

    std::string parse_name()
    {
        std::size_t start = pos_;
        while (!eof() && is_name_char(peek()))
            ++pos_;
        if (pos_ == start)
            fail("expected name");
        return std::string(src_.substr(start, pos_ - start));
    }

    void decode_entity(std::string& out)
    {
        const std::size_t at = pos_;
        ++pos_;  // '&'
        auto semi = src_.find(';', pos_);
        if (semi == std::string_view::npos || semi - pos_ > 32) {
            pos_ = at;
            fail("unterminated entity reference");
        }
        std::string_view ref = src_.substr(pos_, semi - pos_);
        char32_t cp = 0;
        if (!ref.empty() && ref[0] == '#') {
            int base = 10;
            std::string_view digits = ref.substr(1);
            if (!digits.empty() && (digits[0] == 'x' || digits[0] == 'X')) {
                base = 16;
                digits = digits.substr(1);
            }
            std::uint32_t value = 0;
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, base);
            if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() ||
                value == 0 || value > 0x10FFFF) {
                pos_ = at;
                fail("invalid character reference");
            }
            cp = value;
        } else {
            auto it = named_entities().find(ref);
            if (it == named_entities().end()) {
                pos_ = at;
                fail("unknown entity '&" + std::string(ref) + ";'");
            }
            cp = it->second;
        }
        unicode::append(out, cp);
        pos_ = semi + 1;
    }

    std::string parse_attribute_value()
    {
        if (eof() || (peek() != '"' && peek() != '\''))
            fail("expected quoted attribute value");
        const char quote = src_[pos_++];
        std::string value;
        while (!eof() && peek() != quote) {
            if (peek() == '<')
                fail("'<' in attribute value");
            if (peek() == '&')
                decode_entity(value);
            else
                value.push_back(src_[pos_++]);
        }
        if (eof())
            fail("unterminated attribute value");
        ++pos_;
        return value;
    }

    Node parse_element(int depth)
    {
        if (depth > kMaxDepth)
            fail("element nesting too deep");
        Node node;
        node.offset = pos_;
        expect("<");
        const std::string qname = parse_name();
        node.name = std::string(local_name(qname));
        for (;;) {
            const std::size_t before = pos_;
            skip_space();
            if (eof())
                fail("unterminated start tag <" + qname + ">");
            if (starts_with("/>")) {
                pos_ += 2;
                return node;
            }
            if (peek() == '>') {
                ++pos_;
                break;
            }
            if (pos_ == before)
                fail("expected whitespace before attribute");
            std::string attr = parse_name();
            skip_space();
            expect("=");
            skip_space();
            std::string value = parse_attribute_value();
            for (const auto& [existing, ignored] : node.attributes) {
                (void)ignored;
                if (existing == local_name(attr))
                    fail("duplicate attribute '" + attr + "'");
            }
            node.attributes.emplace_back(std::string(local_name(attr)), std::move(value));
        }
        parse_content(node, qname, depth);
        return node;
    }

    void flush_text(Node& parent, std::string& text, std::size_t start)
    {
        if (text.empty())
            return;
        Node t;
        t.type = Node::Type::Text;
        t.text = std::move(text);
        t.offset = start;
        parent.children.push_back(std::move(t));
        text.clear();
    }

    void parse_content(Node& node, const std::string& qname, int depth)
    {
        std::string text;
        std::size_t text_start = pos_;
        for (;;) {
            if (eof())
                fail("missing end tag </" + qname + ">");
            const char c = peek();
            if (c == '<') {
                if (starts_with("</")) {
                    flush_text(node, text, text_start);
                    const std::size_t tag_at = pos_;
                    pos_ += 2;
                    const std::string closing = parse_name();
                    if (closing != qname) {
                        pos_ = tag_at;
                        fail("mismatched end tag </" + closing + ">, expected </" + qname + ">");
                    }
                    skip_space();
                    expect(">");
                    return;
                }
                if (starts_with("<!--")) {
                    skip_until("-->", "comment");
                } else if (starts_with("<![CDATA[")) {
                    if (text.empty())
                        text_start = pos_;
                    pos_ += 9;
                    auto end = src_.find("]]>", pos_);
                    if (end == std::string_view::npos)
                        fail("unterminated CDATA section");
                    text.append(src_.substr(pos_, end - pos_));
                    pos_ = end + 3;
                } else if (starts_with("<?")) {
                    skip_until("?>", "processing instruction");
                } else {
                    flush_text(node, text, text_start);
                    node.children.push_back(parse_element(depth + 1));
                    text_start = pos_;
                }
            } else if (c == '&') {
                if (text.empty())
                    text_start = pos_;
                decode_entity(text);
            } else {
                if (text.empty())
                    text_start = pos_;
                text.push_back(c);
                ++pos_;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

void collect_text(const Node& node, std::string& out)
{
    if (node.type == Node::Type::Text) {
        out += node.text;
        return;
    }
    for (const auto& child : node.children)
        collect_text(child, out);
}

}  // namespace

const std::string* Node::attribute(std::string_view local) const
{
    for (const auto& [key, value] : attributes)
        if (key == local)
            return &value;
    return nullptr;
}

std::string Node::inner_text() const
{
    std::string out;
    collect_text(*this, out);
    return out;
}

Node parse(std::string_view source)
{
    return Parser(source).parse_document();
}

}  // namespace mathbow::xml
