// Copyright 2026 The mlspanner Authors
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

#ifndef MLSPANNER_FORMAT_H_
#define MLSPANNER_FORMAT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mlspanner {

// Shortest decimal text that parses back to exactly `value` ("3", "1.01",
// "inf"). Used by every text format so output is byte-stable.
std::string FormatNumber(double value);

// Strict full-token parsers; nullopt on trailing junk or overflow.
std::optional<double> ParseNumber(std::string_view token);
std::optional<long long> ParseInteger(std::string_view token);

// Splits on ASCII whitespace after dropping a '#' comment.
std::vector<std::string_view> Tokenize(std::string_view line);

}  // namespace mlspanner

#endif  // MLSPANNER_FORMAT_H_
