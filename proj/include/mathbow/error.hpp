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

#ifndef MATHBOW_ERROR_HPP
#define MATHBOW_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mathbow {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input markup. Carries the byte offset where parsing stopped.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Unknown or invalid configuration key.
class ConfigError : public Error {
public:
    ConfigError(const std::string& key, const std::string& what);
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// Collects non-fatal diagnostics. Most pipeline stages take an optional
/// pointer to one of these; a null pointer discards the messages.
class Warnings {
public:
    void add(std::string message) { messages_.push_back(std::move(message)); }
    std::size_t count() const noexcept { return messages_.size(); }
    bool empty() const noexcept { return messages_.empty(); }
    const std::vector<std::string>& messages() const noexcept { return messages_; }
    void merge(const Warnings& other);

private:
    std::vector<std::string> messages_;
};

inline void warn(Warnings* sink, std::string message)
{
    if (sink)
        sink->add(std::move(message));
}

}  // namespace mathbow

#endif  // MATHBOW_ERROR_HPP
