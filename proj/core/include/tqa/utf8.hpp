// tqa/utf8.hpp

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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// Minimal UTF-8 support for the Latin-script text found in Italian corpora.
// Letter classification and case mapping cover ASCII, Latin-1 Supplement and
// Latin Extended-A; that is enough for accented Italian and loan words.
namespace tqa::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

struct CodePoint {
  char32_t value;
  std::size_t offset;  // byte offset of the first byte
  std::size_t length;  // encoded length in bytes
};

/// Decodes `text`. Invalid sequences decode to U+FFFD, one byte each.
std::vector<CodePoint> decode(std::string_view text);

void append(std::string& out, char32_t cp);
std::string encode(char32_t cp);

/// Number of code points.
std::size_t length(std::string_view text);

bool is_letter(char32_t cp);
bool is_upper(char32_t cp);
bool is_lower(char32_t cp);
char32_t to_lower(char32_t cp);
std::string to_lower(std::string_view text);

inline bool is_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }
inline bool is_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\v' ||
         cp == U'\f' || cp == 0xA0;
}

}  // namespace tqa::utf8
