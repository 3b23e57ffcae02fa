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

#include "mathbow/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "mathbow/ingest.hpp"

namespace mathbow::cli {

namespace {

using boost::property_tree::ptree;
using Setter = std::function<void(ExperimentConfig&, const std::string& value, const std::string& key)>;

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

bool parse_bool(const std::string& v, const std::string& key)
{
    if (v == "true" || v == "yes" || v == "on" || v == "1")
        return true;
    if (v == "false" || v == "no" || v == "off" || v == "0")
        return false;
    throw ConfigError(key, "expected a boolean, got '" + v + "'");
}

template <typename T>
T parse_number(const std::string& v, const std::string& key)
{
    T out{};
    const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || end != v.data() + v.size())
        throw ConfigError(key, "expected a number, got '" + v + "'");
    return out;
}

double parse_real(const std::string& v, const std::string& key)
{
    const double d = parse_number<double>(v, key);
    if (!std::isfinite(d))
        throw ConfigError(key, "value must be finite");
    return d;
}

int parse_positive(const std::string& v, const std::string& key)
{
    const int n = parse_number<int>(v, key);
    if (n < 1)
        throw ConfigError(key, "must be at least 1");
    return n;
}

double parse_unit_open(const std::string& v, const std::string& key)
{
    const double d = parse_real(v, key);
    if (!(d > 0.0 && d < 1.0))
        throw ConfigError(key, "must lie strictly between 0 and 1");
    return d;
}

const std::map<std::string, std::map<std::string, Setter>>& schema()
{
    using tokenize::MTermStrategy;
    static const std::map<std::string, std::map<std::string, Setter>> table{
        {"experiment",
         {
             {"id", [](ExperimentConfig& c, const std::string& v, const std::string& k) {
                  if (v.empty())
                      throw ConfigError(k, "must not be empty");
                  c.config_id = v;
              }},
             {"method", [](ExperimentConfig& c, const std::string& v, const std::string& k) {
                  try {
                      c.cv.method = eval::parse_method(v);
                  } catch (const Error& e) {
                      throw ConfigError(k, e.what());
                  }
              }},
             {"topics", [](ExperimentConfig& c, const std::string& v,
                           const std::string& k) { c.cv.num_topics = parse_positive(v, k); }},
             {"seed", [](ExperimentConfig& c, const std::string& v,
                         const std::string& k) { c.cv.seed = parse_number<std::uint64_t>(v, k); }},
             {"reruns", [](ExperimentConfig& c, const std::string& v,
                           const std::string& k) { c.cv.reruns = parse_positive(v, k); }},
             {"folds", [](ExperimentConfig& c, const std::string& v, const std::string& k) {
                  c.cv.folds = parse_positive(v, k);
                  if (c.cv.folds < 2)
                      throw ConfigError(k, "must be at least 2");
              }},
             {"jobs", [](ExperimentConfig& c, const std::string& v,
                         const std::string& k) { c.cv.jobs = parse_positive(v, k); }},
         }},
        {"representation",
         {
             {"text", [](ExperimentConfig& c, const std::string& v,
                         const std::string& k) { c.cv.representation.use_text = parse_bool(v, k); }},
             {"tex", [](ExperimentConfig& c, const std::string& v,
                        const std::string& k) { c.cv.representation.use_tex = parse_bool(v, k); }},
             {"mterms", [](ExperimentConfig& c, const std::string& v, const std::string& k) {
                  try {
                      c.cv.representation.mterm_strategy = tokenize::parse_strategy(v);
                  } catch (const Error& e) {
                      throw ConfigError(k, e.what());
                  }
              }},
             {"mtmod_scale", [](ExperimentConfig& c, const std::string& v, const std::string& k) {
                  c.cv.representation.mtmod_scale = parse_real(v, k);
                  if (!(c.cv.representation.mtmod_scale > 0.0))
                      throw ConfigError(k, "must be positive");
              }},
             {"thirds", [](ExperimentConfig& c, const std::string& v, const std::string& k) {
                  if (v == "formula")
                      c.cv.representation.thirds = tokenize::ThirdsScope::Formula;
                  else if (v == "corpus")
                      c.cv.representation.thirds = tokenize::ThirdsScope::Corpus;
                  else
                      throw ConfigError(k, "expected 'formula' or 'corpus', got '" + v + "'");
              }},
             {"stopwords", [](ExperimentConfig& c, const std::string& v,
                              const std::string& k) { c.cv.representation.remove_stopwords = parse_bool(v, k); }},
             {"stem", [](ExperimentConfig& c, const std::string& v, const std::string& k) {
                  if (v == "none")
                      c.cv.representation.stemmer = tokenize::Stemmer::None;
                  else if (v == "s")
                      c.cv.representation.stemmer = tokenize::Stemmer::SStemmer;
                  else
                      throw ConfigError(k, "expected 'none' or 's', got '" + v + "'");
              }},
             {"operand_runs", [](ExperimentConfig& c, const std::string& v, const std::string& k) {
                  c.cv.representation.derive.operand_runs = parse_bool(v, k);
              }},
         }},
        {"weights",
         {
             {"level", [](ExperimentConfig& c, const std::string& v, const std::string& k) {
                  c.cv.representation.weights.level_coeff = parse_unit_open(v, k);
              }},
             {"var", [](ExperimentConfig& c, const std::string& v, const std::string& k) {
                  c.cv.representation.weights.var_coeff = parse_unit_open(v, k);
              }},
             {"const", [](ExperimentConfig& c, const std::string& v, const std::string& k) {
                  c.cv.representation.weights.const_coeff = parse_unit_open(v, k);
              }},
         }},
        {"lda",
         {
             {"gamma_threshold", [](ExperimentConfig& c, const std::string& v, const std::string& k) {
                  c.cv.lda.gamma_threshold = parse_real(v, k);
                  if (!(c.cv.lda.gamma_threshold > 0.0))
                      throw ConfigError(k, "must be positive");
              }},
             {"iterations", [](ExperimentConfig& c, const std::string& v,
                               const std::string& k) { c.cv.lda.iterations = parse_positive(v, k); }},
             {"passes", [](ExperimentConfig& c, const std::string& v,
                           const std::string& k) { c.cv.lda.passes = parse_positive(v, k); }},
             {"alpha", [](ExperimentConfig& c, const std::string& v,
                          const std::string& k) { c.cv.lda.alpha = parse_real(v, k); }},
             {"eta", [](ExperimentConfig& c, const std::string& v,
                        const std::string& k) { c.cv.lda.eta = parse_real(v, k); }},
         }},
        {"lsi",
         {
             {"solver", [](ExperimentConfig& c, const std::string& v, const std::string& k) {
                  if (v == "auto")
                      c.cv.lsi.solver = models::SvdSolver::Auto;
                  else if (v == "dense")
                      c.cv.lsi.solver = models::SvdSolver::Dense;
                  else if (v == "randomized")
                      c.cv.lsi.solver = models::SvdSolver::Randomized;
                  else
                      throw ConfigError(k, "expected auto, dense or randomized, got '" + v + "'");
              }},
             {"projection", [](ExperimentConfig& c, const std::string& v, const std::string& k) {
                  if (v == "inverse-sigma")
                      c.cv.lsi.projection = models::LsiProjection::InverseSigma;
                  else if (v == "basis")
                      c.cv.lsi.projection = models::LsiProjection::Basis;
                  else
                      throw ConfigError(k, "expected inverse-sigma or basis, got '" + v + "'");
              }},
             {"oversample", [](ExperimentConfig& c, const std::string& v, const std::string& k) {
                  c.cv.lsi.oversample = parse_number<int>(v, k);
                  if (c.cv.lsi.oversample < 0)
                      throw ConfigError(k, "must not be negative");
              }},
             {"power_iterations", [](ExperimentConfig& c, const std::string& v, const std::string& k) {
                  c.cv.lsi.power_iterations = parse_number<int>(v, k);
                  if (c.cv.lsi.power_iterations < 0)
                      throw ConfigError(k, "must not be negative");
              }},
         }},
        {"corpus",
         {
             {"dir", [](ExperimentConfig& c, const std::string& v, const std::string&) { c.corpus_dir = v; }},
             {"ordering", [](ExperimentConfig& c, const std::string& v, const std::string&) { c.ordering = v; }},
         }},
        {"eval",
         {
             {"include_diagonal", [](ExperimentConfig& c, const std::string& v,
                                     const std::string& k) { c.cv.include_diagonal = parse_bool(v, k); }},
         }},
        {"output",
         {
             {"png", [](ExperimentConfig& c, const std::string& v,
                        const std::string& k) { c.write_png = parse_bool(v, k); }},
             {"tsv", [](ExperimentConfig& c, const std::string& v,
                        const std::string& k) { c.write_tsv = parse_bool(v, k); }},
             {"f32", [](ExperimentConfig& c, const std::string& v,
                        const std::string& k) { c.write_f32 = parse_bool(v, k); }},
             {"bow_debug", [](ExperimentConfig& c, const std::string& v,
                              const std::string& k) { c.bow_debug = parse_bool(v, k); }},
         }},
    };
    return table;
}

std::string real(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string boolean(bool v) { return v ? "true" : "false"; }

}  // namespace

ExperimentConfig parse_config(std::string_view text, const std::filesystem::path& base_dir)
{
    ptree tree;
    std::istringstream in{std::string(text)};
    try {
        boost::property_tree::read_ini(in, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw Error("config line " + std::to_string(e.line()) + ": " + e.message());
    }

    ExperimentConfig config;
    for (const auto& [section, body] : tree) {
        const auto s = schema().find(section);
        if (s == schema().end()) {
            if (body.empty() && !body.data().empty())
                throw ConfigError(section, "key outside of any [section]");
            throw ConfigError(section, "unknown section");
        }
        for (const auto& [key, value] : body) {
            const std::string full = section + "." + key;
            const auto setter = s->second.find(key);
            if (setter == s->second.end())
                throw ConfigError(full, "unknown key");
            setter->second(config, trim(value.data()), full);
        }
    }
    if (config.config_id.empty())
        throw ConfigError("experiment.id", "missing");
    try {
        config.cv.validate();
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError("representation", e.what());
    }
    if (!config.corpus_dir.empty() && config.corpus_dir.is_relative())
        config.corpus_dir = base_dir / config.corpus_dir;
    if (!config.ordering.empty() && config.ordering.is_relative())
        config.ordering = base_dir / config.ordering;
    return config;
}

ExperimentConfig load_config(const std::filesystem::path& path)
{
    return parse_config(ingest::read_file(path), path.parent_path());
}

std::string format_config(const ExperimentConfig& c)
{
    const auto& r = c.cv.representation;
    std::string out;
    out += "[experiment]\nid = " + c.config_id + "\nmethod = " + std::string(eval::method_name(c.cv.method)) +
           "\ntopics = " + std::to_string(c.cv.num_topics) + "\nseed = " + std::to_string(c.cv.seed) +
           "\nreruns = " + std::to_string(c.cv.reruns) + "\nfolds = " + std::to_string(c.cv.folds) +
           "\njobs = " + std::to_string(c.cv.jobs) + "\n\n";
    out += "[representation]\ntext = " + boolean(r.use_text) + "\ntex = " + boolean(r.use_tex) +
           "\nmterms = " + std::string(tokenize::strategy_name(r.mterm_strategy)) +
           "\nmtmod_scale = " + real(r.mtmod_scale) +
           "\nthirds = " + (r.thirds == tokenize::ThirdsScope::Corpus ? "corpus" : "formula") +
           "\nstopwords = " + boolean(r.remove_stopwords) +
           "\nstem = " + (r.stemmer == tokenize::Stemmer::SStemmer ? "s" : "none") +
           "\noperand_runs = " + boolean(r.derive.operand_runs) + "\n\n";
    out += "[weights]\nlevel = " + real(r.weights.level_coeff) + "\nvar = " + real(r.weights.var_coeff) +
           "\nconst = " + real(r.weights.const_coeff) + "\n\n";
    out += "[lda]\ngamma_threshold = " + real(c.cv.lda.gamma_threshold) +
           "\niterations = " + std::to_string(c.cv.lda.iterations) +
           "\npasses = " + std::to_string(c.cv.lda.passes) + "\nalpha = " + real(c.cv.lda.alpha) +
           "\neta = " + real(c.cv.lda.eta) + "\n\n";
    const char* solver = c.cv.lsi.solver == models::SvdSolver::Dense        ? "dense"
                         : c.cv.lsi.solver == models::SvdSolver::Randomized ? "randomized"
                                                                            : "auto";
    out += std::string("[lsi]\nsolver = ") + solver + "\nprojection = " +
           (c.cv.lsi.projection == models::LsiProjection::Basis ? "basis" : "inverse-sigma") +
           "\noversample = " + std::to_string(c.cv.lsi.oversample) +
           "\npower_iterations = " + std::to_string(c.cv.lsi.power_iterations) + "\n\n";
    if (!c.corpus_dir.empty() || !c.ordering.empty()) {
        out += "[corpus]\n";
        if (!c.corpus_dir.empty())
            out += "dir = " + c.corpus_dir.string() + "\n";
        if (!c.ordering.empty())
            out += "ordering = " + c.ordering.string() + "\n";
        out += "\n";
    }
    out += "[eval]\ninclude_diagonal = " + boolean(c.cv.include_diagonal) + "\n\n";
    out += "[output]\npng = " + boolean(c.write_png) + "\ntsv = " + boolean(c.write_tsv) + "\nf32 = " + boolean(c.write_f32) +
           "\nbow_debug = " + boolean(c.bow_debug) + "\n";
    return out;
}

}  // namespace mathbow::cli
