// tqa/numbers_it.hpp

// Copyright 2026  The tqa Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace tqa {

inline constexpr std::int64_t kMaxSpelledNumber = 999999;

/// Italian cardinal for 0..999999, e.g. 21 -> "ventuno", 23 -> "ventitré",
/// 101 -> "centouno", 180 -> "centottanta", 2000 -> "duemila".
/// Tens drop their final vowel before "uno" and "otto"; "cento" keeps its
/// vowel except before "ottanta". Returns std::nullopt outside the range.
std::optional<std::string> number_to_words_it(std::int64_t n);

}  // namespace tqa
