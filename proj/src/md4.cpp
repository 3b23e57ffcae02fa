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

#include "mathbow/md4.hpp"

#include <bit>
#include <vector>

namespace mathbow {

namespace {

constexpr std::uint32_t F(std::uint32_t x, std::uint32_t y, std::uint32_t z) { return (x & y) | (~x & z); }
constexpr std::uint32_t G(std::uint32_t x, std::uint32_t y, std::uint32_t z) { return (x & y) | (x & z) | (y & z); }
constexpr std::uint32_t H(std::uint32_t x, std::uint32_t y, std::uint32_t z) { return x ^ y ^ z; }

void process_block(std::array<std::uint32_t, 4>& state, const std::uint8_t* block)
{
    std::uint32_t x[16];
    for (int i = 0; i < 16; ++i)
        x[i] = static_cast<std::uint32_t>(block[4 * i]) | (static_cast<std::uint32_t>(block[4 * i + 1]) << 8) |
               (static_cast<std::uint32_t>(block[4 * i + 2]) << 16) |
               (static_cast<std::uint32_t>(block[4 * i + 3]) << 24);

    std::uint32_t a = state[0], b = state[1], c = state[2], d = state[3];

    const auto r1 = [&](std::uint32_t& w, std::uint32_t p, std::uint32_t q, std::uint32_t r, int k, int s) {
        w = std::rotl(w + F(p, q, r) + x[k], s);
    };
    const auto r2 = [&](std::uint32_t& w, std::uint32_t p, std::uint32_t q, std::uint32_t r, int k, int s) {
        w = std::rotl(w + G(p, q, r) + x[k] + 0x5A827999u, s);
    };
    const auto r3 = [&](std::uint32_t& w, std::uint32_t p, std::uint32_t q, std::uint32_t r, int k, int s) {
        w = std::rotl(w + H(p, q, r) + x[k] + 0x6ED9EBA1u, s);
    };

    for (int i = 0; i < 16; i += 4) {
        r1(a, b, c, d, i, 3);
        r1(d, a, b, c, i + 1, 7);
        r1(c, d, a, b, i + 2, 11);
        r1(b, c, d, a, i + 3, 19);
    }
    for (int i = 0; i < 4; ++i) {
        r2(a, b, c, d, i, 3);
        r2(d, a, b, c, i + 4, 5);
        r2(c, d, a, b, i + 8, 9);
        r2(b, c, d, a, i + 12, 13);
    }
    static constexpr int order[4] = {0, 2, 1, 3};
    for (int i : order) {
        r3(a, b, c, d, i, 3);
        r3(d, a, b, c, i + 8, 9);
        r3(c, d, a, b, i + 4, 11);
        r3(b, c, d, a, i + 12, 15);
    }

    state[0] += a;
    state[1] += b;
    state[2] += c;
    state[3] += d;
}

}  // namespace

std::array<std::uint8_t, 16> md4(std::string_view message)
{
    std::array<std::uint32_t, 4> state{0x67452301u, 0xEFCDAB89u, 0x98BADCFEu, 0x10325476u};

    std::vector<std::uint8_t> data(message.begin(), message.end());
    const std::uint64_t bit_length = static_cast<std::uint64_t>(message.size()) * 8;
    data.push_back(0x80);
    while (data.size() % 64 != 56)
        data.push_back(0);
    for (int i = 0; i < 8; ++i)
        data.push_back(static_cast<std::uint8_t>(bit_length >> (8 * i)));

    for (std::size_t off = 0; off < data.size(); off += 64)
        process_block(state, data.data() + off);

    std::array<std::uint8_t, 16> digest{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            digest[4 * i + j] = static_cast<std::uint8_t>(state[i] >> (8 * j));
    return digest;
}

std::string md4_hex(std::string_view message)
{
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(32);
    for (std::uint8_t byte : md4(message)) {
        out.push_back(hex[byte >> 4]);
        out.push_back(hex[byte & 0xF]);
    }
    return out;
}

}  // namespace mathbow
