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

#ifndef MATHBOW_UNICODE_HPP
#define MATHBOW_UNICODE_HPP

#include <string>
#include <string_view>

// Minimal, locale-independent UTF-8 helpers for the text tokenizer.
namespace mathbow::unicode {

/// Decodes one code point starting at text[pos] and advances pos.
/// Invalid sequences decode to U+FFFD and consume a single byte.
char32_t decode(std::string_view text, std::size_t& pos);

void append(std::string& out, char32_t cp);

/// Letters, digits, marks and letter-like symbols. Punctuation, spacing,
/// arrows, operators, box drawing and emoji are excluded.
bool is_word_char(char32_t cp);

/// Simple lowercase mapping for Latin, Greek and Cyrillic.
char32_t to_lower(char32_t cp);

}  // namespace mathbow::unicode

#endif  // MATHBOW_UNICODE_HPP
