// tests/unit/test_numbers_it.cpp

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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "tqa/numbers_it.hpp"

namespace tqa {
namespace {

// Typed by hand from a standard Italian numeral table; shares nothing with
// the composition rules in core.
const std::vector<std::string> kOracle = {
    "zero",          "uno",          "due",           "tre",           "quattro",
    "cinque",        "sei",          "sette",         "otto",          "nove",
    "dieci",         "undici",       "dodici",        "tredici",       "quattordici",
    "quindici",      "sedici",       "diciassette",   "diciotto",      "diciannove",
    "venti",         "ventuno",      "ventidue",      "ventitré",      "ventiquattro",
    "venticinque",   "ventisei",     "ventisette",    "ventotto",      "ventinove",
    "trenta",        "trentuno",     "trentadue",     "trentatré",     "trentaquattro",
    "trentacinque",  "trentasei",    "trentasette",   "trentotto",     "trentanove",
    "quaranta",      "quarantuno",   "quarantadue",   "quarantatré",   "quarantaquattro",
    "quarantacinque", "quarantasei", "quarantasette", "quarantotto",   "quarantanove",
    "cinquanta",     "cinquantuno",  "cinquantadue",  "cinquantatré",  "cinquantaquattro",
    "cinquantacinque", "cinquantasei", "cinquantasette", "cinquantotto", "cinquantanove",
    "sessanta",      "sessantuno",   "sessantadue",   "sessantatré",   "sessantaquattro",
    "sessantacinque", "sessantasei", "sessantasette", "sessantotto",   "sessantanove",
    "settanta",      "settantuno",   "settantadue",   "settantatré",   "settantaquattro",
    "settantacinque", "settantasei", "settantasette", "settantotto",   "settantanove",
    "ottanta",       "ottantuno",    "ottantadue",    "ottantatré",    "ottantaquattro",
    "ottantacinque", "ottantasei",   "ottantasette",  "ottantotto",    "ottantanove",
    "novanta",       "novantuno",    "novantadue",    "novantatré",    "novantaquattro",
    "novantacinque", "novantasei",   "novantasette",  "novantotto",    "novantanove",
    "cento",
};

TEST(NumbersIt, MatchesOracleTableUpToOneHundred) {
  ASSERT_EQ(kOracle.size(), 101u);
  for (std::int64_t n = 0; n <= 100; ++n) {
    EXPECT_EQ(number_to_words_it(n), kOracle[static_cast<std::size_t>(n)]) << n;
  }
}

TEST(NumbersIt, HundredsAndThousands) {
  EXPECT_EQ(number_to_words_it(101), "centouno");
  EXPECT_EQ(number_to_words_it(108), "centootto");
  EXPECT_EQ(number_to_words_it(180), "centottanta");
  EXPECT_EQ(number_to_words_it(200), "duecento");
  EXPECT_EQ(number_to_words_it(999), "novecentonovantanove");
  EXPECT_EQ(number_to_words_it(1000), "mille");
  EXPECT_EQ(number_to_words_it(1001), "milleuno");
  EXPECT_EQ(number_to_words_it(2000), "duemila");
  EXPECT_EQ(number_to_words_it(21000), "ventunomila");
  EXPECT_EQ(number_to_words_it(999999),
            "novecentonovantanovemilanovecentonovantanove");
}

TEST(NumbersIt, OutOfRange) {
  EXPECT_FALSE(number_to_words_it(-1));
  EXPECT_FALSE(number_to_words_it(1000000));
}

}  // namespace
}  // namespace tqa
