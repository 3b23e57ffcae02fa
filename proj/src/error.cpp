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

#include "mathbow/error.hpp"

namespace mathbow {

ParseError::ParseError(const std::string& what, std::size_t offset)
    : Error(what + " at byte " + std::to_string(offset)), offset_(offset)
{
}

ConfigError::ConfigError(const std::string& key, const std::string& what)
    : Error("config key '" + key + "': " + what), key_(key)
{
}

void Warnings::merge(const Warnings& other)
{
    messages_.insert(messages_.end(), other.messages_.begin(), other.messages_.end());
}

}  // namespace mathbow
