// Copyright 2026 The textdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TEXTDP_STRINGS_H_
#define TEXTDP_STRINGS_H_

#include <string>
#include <string_view>
#include <vector>

namespace textdp {

// Splits on runs of ASCII whitespace; no empty pieces are produced.
std::vector<std::string> SplitWhitespace(std::string_view text);

// Splits on a single delimiter character; empty pieces are kept.
std::vector<std::string> SplitChar(std::string_view text, char delimiter);

std::string JoinTokens(const std::vector<std::string>& tokens,
                       std::string_view separator = " ");

std::string ToLowerAscii(std::string_view text);

// Shortest decimal form that round-trips the value ("inf" for infinity).
// Used for every number we emit, so repeated runs are byte-identical.
std::string FormatDouble(double value);

bool ContainsWhitespace(std::string_view text);

}  // namespace textdp

#endif  // TEXTDP_STRINGS_H_
