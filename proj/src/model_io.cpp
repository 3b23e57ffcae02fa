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

#include "mathbow/model_io.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <map>
#include <vector>

#include "mathbow/error.hpp"
#include "mathbow/ingest.hpp"

namespace mathbow::models {

namespace {

constexpr std::string_view kMagic = "mathbow-model 1";

void append_double(std::string& out, double v)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::hex);
    if (ec != std::errc())
        throw Error("cannot format model value");
    out.append(buf, end);
}

void append_matrix(std::string& out, std::string_view name, const Eigen::MatrixXd& m)
{
    out += "matrix ";
    out += name;
    out += ' ' + std::to_string(m.rows()) + ' ' + std::to_string(m.cols()) + '\n';
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c > 0)
                out += ' ';
            append_double(out, m(r, c));
        }
        out += '\n';
    }
}

std::string header(std::string_view kind, int topics, std::size_t terms, std::uint64_t seed)
{
    std::string out(kMagic);
    out += "\nkind ";
    out += kind;
    out += "\ntopics " + std::to_string(topics) + "\nterms " + std::to_string(terms) + "\nseed " +
           std::to_string(seed) + '\n';
    return out;
}

struct Container {
    std::map<std::string, std::string> scalars;
    std::map<std::string, Eigen::MatrixXd> matrices;
};

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    bool done() const { return pos_ >= text_.size(); }
    std::size_t offset() const { return pos_; }

    std::string_view next()
    {
        const std::size_t end = text_.find('\n', pos_);
        const std::size_t stop = end == std::string_view::npos ? text_.size() : end;
        std::string_view line = text_.substr(pos_, stop - pos_);
        pos_ = end == std::string_view::npos ? text_.size() : end + 1;
        return line;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::vector<std::string_view> fields(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ')
            ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ')
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

double parse_double(std::string_view s, std::size_t offset)
{
    double v = 0.0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v, std::chars_format::hex);
    if (ec != std::errc() || end != s.data() + s.size())
        throw ParseError("bad model value '" + std::string(s) + "'", offset);
    return v;
}

long long parse_int(std::string_view s, std::size_t offset)
{
    long long v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || v < 0)
        throw ParseError("bad model integer '" + std::string(s) + "'", offset);
    return v;
}

Container parse_container(std::string_view text, std::string_view kind)
{
    LineReader reader(text);
    if (reader.done() || reader.next() != kMagic)
        throw ParseError("not a mathbow model file", 0);
    Container c;
    while (!reader.done()) {
        const std::size_t at = reader.offset();
        const std::string_view line = reader.next();
        const auto f = fields(line);
        if (f.empty())
            continue;
        if (f[0] == "matrix") {
            if (f.size() != 4)
                throw ParseError("bad matrix header", at);
            const auto rows = static_cast<Eigen::Index>(parse_int(f[2], at));
            const auto cols = static_cast<Eigen::Index>(parse_int(f[3], at));
            Eigen::MatrixXd m(rows, cols);
            for (Eigen::Index r = 0; r < rows; ++r) {
                if (reader.done())
                    throw ParseError("truncated matrix", reader.offset());
                const std::size_t row_at = reader.offset();
                const auto values = fields(reader.next());
                if (static_cast<Eigen::Index>(values.size()) != cols)
                    throw ParseError("matrix row has wrong width", row_at);
                for (Eigen::Index col = 0; col < cols; ++col)
                    m(r, col) = parse_double(values[static_cast<std::size_t>(col)], row_at);
            }
            c.matrices[std::string(f[1])] = std::move(m);
        } else {
            if (f.size() != 2)
                throw ParseError("expected 'key value'", at);
            c.scalars[std::string(f[0])] = std::string(f[1]);
        }
    }
    if (c.scalars["kind"] != kind)
        throw ParseError("model kind is '" + c.scalars["kind"] + "', expected '" + std::string(kind) + "'", 0);
    return c;
}

const std::string& scalar(const Container& c, const std::string& key)
{
    const auto it = c.scalars.find(key);
    if (it == c.scalars.end())
        throw ParseError("model lacks '" + key + "'", 0);
    return it->second;
}

const Eigen::MatrixXd& matrix(const Container& c, const std::string& name)
{
    const auto it = c.matrices.find(name);
    if (it == c.matrices.end())
        throw ParseError("model lacks matrix '" + name + "'", 0);
    return it->second;
}

}  // namespace

std::string format_lsi(const LsiModel& model)
{
    std::string out = header("LSI", model.num_topics, model.num_terms, model.seed);
    out += "projection ";
    out += model.projection == LsiProjection::Basis ? "basis" : "inverse-sigma";
    out += '\n';
    append_matrix(out, "sigma", model.singular_values.transpose());
    append_matrix(out, "basis", model.basis);
    return out;
}

std::string format_lda(const LdaModel& model)
{
    std::string out = header("LDA", model.num_topics, model.num_terms, model.seed);
    out += "alpha ";
    append_double(out, model.alpha);
    out += "\neta ";
    append_double(out, model.eta);
    out += "\ngamma_threshold ";
    append_double(out, model.gamma_threshold);
    out += "\niterations " + std::to_string(model.iterations) + '\n';
    append_matrix(out, "lambda", model.lambda);
    return out;
}

LsiModel parse_lsi(std::string_view text)
{
    const Container c = parse_container(text, "LSI");
    LsiModel m;
    m.num_topics = static_cast<int>(parse_int(scalar(c, "topics"), 0));
    m.num_terms = static_cast<std::size_t>(parse_int(scalar(c, "terms"), 0));
    m.seed = std::stoull(scalar(c, "seed"));
    const std::string& projection = scalar(c, "projection");
    if (projection == "basis")
        m.projection = LsiProjection::Basis;
    else if (projection == "inverse-sigma")
        m.projection = LsiProjection::InverseSigma;
    else
        throw ParseError("unknown LSI projection '" + projection + "'", 0);
    const Eigen::MatrixXd& sigma = matrix(c, "sigma");
    m.singular_values = sigma.row(0).transpose();
    m.basis = matrix(c, "basis");
    if (m.basis.rows() != static_cast<Eigen::Index>(m.num_terms) || m.basis.cols() != m.num_topics ||
        m.singular_values.size() != m.num_topics)
        throw ParseError("LSI matrix shapes disagree with the header", 0);
    return m;
}

LdaModel parse_lda(std::string_view text)
{
    const Container c = parse_container(text, "LDA");
    LdaModel m;
    m.num_topics = static_cast<int>(parse_int(scalar(c, "topics"), 0));
    m.num_terms = static_cast<std::size_t>(parse_int(scalar(c, "terms"), 0));
    m.seed = std::stoull(scalar(c, "seed"));
    m.alpha = parse_double(scalar(c, "alpha"), 0);
    m.eta = parse_double(scalar(c, "eta"), 0);
    m.gamma_threshold = parse_double(scalar(c, "gamma_threshold"), 0);
    m.iterations = static_cast<int>(parse_int(scalar(c, "iterations"), 0));
    m.lambda = matrix(c, "lambda");
    if (m.lambda.rows() != m.num_topics || m.lambda.cols() != static_cast<Eigen::Index>(m.num_terms))
        throw ParseError("LDA matrix shape disagrees with the header", 0);
    m.refresh();
    return m;
}

void save_lsi(const std::filesystem::path& path, const LsiModel& model)
{
    ingest::write_file(path, format_lsi(model));
}

void save_lda(const std::filesystem::path& path, const LdaModel& model)
{
    ingest::write_file(path, format_lda(model));
}

LsiModel load_lsi(const std::filesystem::path& path) { return parse_lsi(ingest::read_file(path)); }

LdaModel load_lda(const std::filesystem::path& path) { return parse_lda(ingest::read_file(path)); }

std::string format_matrix_f32(const Eigen::MatrixXd& matrix)
{
    if (matrix.rows() != matrix.cols())
        throw Error("similarity matrix must be square");
    const auto n = static_cast<std::size_t>(matrix.rows());
    std::string out = "n " + std::to_string(n) + '\n';
    const std::size_t start = out.size();
    out.resize(start + n * n * 4);
    char* p = out.data() + start;
    for (Eigen::Index r = 0; r < matrix.rows(); ++r)
        for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
            auto bits = std::bit_cast<std::uint32_t>(static_cast<float>(matrix(r, c)));
            for (int b = 0; b < 4; ++b)
                *p++ = static_cast<char>((bits >> (8 * b)) & 0xffu);
        }
    return out;
}

Eigen::MatrixXd parse_matrix_f32(std::string_view bytes)
{
    const std::size_t nl = bytes.find('\n');
    if (nl == std::string_view::npos || bytes.substr(0, 2) != "n ")
        throw ParseError("missing 'n <N>' header", 0);
    const auto n = static_cast<std::size_t>(parse_int(bytes.substr(2, nl - 2), 2));
    const std::string_view body = bytes.substr(nl + 1);
    if (body.size() != n * n * 4)
        throw ParseError("matrix body has " + std::to_string(body.size()) + " bytes, expected " +
                             std::to_string(n * n * 4),
                         nl + 1);
    Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    const auto* p = reinterpret_cast<const unsigned char*>(body.data());
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            std::uint32_t bits = 0;
            for (int b = 0; b < 4; ++b)
                bits |= static_cast<std::uint32_t>(*p++) << (8 * b);
            m(r, c) = std::bit_cast<float>(bits);
        }
    return m;
}

}  // namespace mathbow::models
