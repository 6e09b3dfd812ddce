// core/src/numbers_it.cpp

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

#include "tqa/numbers_it.hpp"

#include <array>
#include <string_view>

namespace tqa {

namespace {

constexpr std::array<std::string_view, 20> kUnits = {
    "zero",     "uno",     "due",      "tre",         "quattro",  "cinque",   "sei",
    "sette",    "otto",    "nove",     "dieci",       "undici",   "dodici",   "tredici",
    "quattordici", "quindici", "sedici", "diciassette", "diciotto", "diciannove"};

constexpr std::array<std::string_view, 10> kTens = {
    "", "", "venti", "trenta", "quaranta", "cinquanta", "sessanta", "settanta", "ottanta",
    "novanta"};

// 1..99, without the final accent on "-tre".
std::string below_hundred(int n) {
  if (n < 20) return std::string(kUnits[n]);
  std::string tens(kTens[n / 10]);
  const int unit = n % 10;
  if (unit == 0) return tens;
  if (unit == 1 || unit == 8) tens.pop_back();
  return tens + std::string(kUnits[unit]);
}

// 1..999
std::string below_thousand(int n) {
  const int hundreds = n / 100;
  const int rest = n % 100;
  std::string out;
  if (hundreds > 0) {
    out = hundreds == 1 ? "cento" : std::string(kUnits[hundreds]) + "cento";
    if (rest >= 80 && rest < 90) out.pop_back();  // centottanta
  }
  if (rest > 0) out += below_hundred(rest);
  return out;
}

void accent_final_tre(std::string& s) {
  if (s.size() > 3 && s.compare(s.size() - 3, 3, "tre") == 0) {
    s.replace(s.size() - 1, 1, "\xC3\xA9");  // é
  }
}

}  // namespace

std::optional<std::string> number_to_words_it(std::int64_t n) {
  if (n < 0 || n > kMaxSpelledNumber) return std::nullopt;
  if (n == 0) return std::string(kUnits[0]);

  const int thousands = static_cast<int>(n / 1000);
  const int rest = static_cast<int>(n % 1000);
  std::string out;
  if (thousands == 1) {
    out = "mille";
  } else if (thousands > 1) {
    out = below_thousand(thousands) + "mila";
  }
  if (rest > 0) out += below_thousand(rest);
  accent_final_tre(out);
  return out;
}

}  // namespace tqa
