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

#include <string>

#include "mathbow/md4.hpp"

using mathbow::md4_hex;

TEST_CASE("md4 matches the RFC 1320 test suite")
{
    // Appendix A.5 of the RFC.
    CHECK(md4_hex("") == "31d6cfe0d16ae931b73c59d7e0c089c0");
    CHECK(md4_hex("a") == "bde52cb31de33e46245e05fbdbd6fb24");
    CHECK(md4_hex("abc") == "a448017aaf21d8525fc10ae87aa6729d");
    CHECK(md4_hex("message digest") == "d9130a8164549fe818874806e1c7014b");
    CHECK(md4_hex("abcdefghijklmnopqrstuvwxyz") == "d79e1c308aa5bbcdeea8ed63df412da9");
    CHECK(md4_hex("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789") ==
          "043f8582f241db351ce627e153e7f0e4");
    CHECK(md4_hex("12345678901234567890123456789012345678901234567890123456789012345678901234567890") ==
          "e33b4ddc9c38f2199c3e7b164fcc0536");
}

TEST_CASE("md4 handles every padding boundary")
{
    // Lengths around the 56-byte and 64-byte block edges exercise both
    // one- and two-block padding; digests must be distinct and well formed.
    std::string previous;
    for (std::size_t n = 50; n <= 130; ++n) {
        const std::string digest = md4_hex(std::string(n, 'x'));
        REQUIRE(digest.size() == 32);
        CHECK(digest.find_first_not_of("0123456789abcdef") == std::string::npos);
        CHECK(digest != previous);
        previous = digest;
    }
}

TEST_CASE("md4 hashes raw bytes")
{
    const std::string with_nul("a\0b", 3);
    CHECK(md4_hex(with_nul) != md4_hex("ab"));
    CHECK(md4_hex("\xce\xb1") == md4_hex("α"));
}
