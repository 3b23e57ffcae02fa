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

#ifndef MATHBOW_MD4_HPP
#define MATHBOW_MD4_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace mathbow {

/// RFC 1320 MD4 message digest.
std::array<std::uint8_t, 16> md4(std::string_view message);

/// Lowercase 32-character hex form of md4().
std::string md4_hex(std::string_view message);

}  // namespace mathbow

#endif  // MATHBOW_MD4_HPP
