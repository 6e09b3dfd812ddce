// tests/unit/test_utf8.cpp

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

#include "tqa/utf8.hpp"

namespace tqa {
namespace {

TEST(Utf8, DecodesMultiByteSequences) {
  const auto cps = utf8::decode("aè°’");
  ASSERT_EQ(cps.size(), 4u);
  EXPECT_EQ(cps[0].value, U'a');
  EXPECT_EQ(cps[1].value, U'è');
  EXPECT_EQ(cps[1].offset, 1u);
  EXPECT_EQ(cps[1].length, 2u);
  EXPECT_EQ(cps[2].value, U'°');
  EXPECT_EQ(cps[3].value, U'’');
  EXPECT_EQ(cps[3].length, 3u);
}

TEST(Utf8, InvalidBytesBecomeReplacementCharacters) {
  const auto cps = utf8::decode("a\xFF" "b");
  ASSERT_EQ(cps.size(), 3u);
  EXPECT_EQ(cps[1].value, 0xFFFDu);
  EXPECT_EQ(cps[2].value, U'b');
}

TEST(Utf8, EncodeDecodeRoundTrip) {
  for (char32_t c : {U'a', U'é', U'°', U'’', U'\U0001F600'}) {
    const auto s = utf8::encode(c);
    const auto back = utf8::decode(s);
    ASSERT_EQ(back.size(), 1u);
    EXPECT_EQ(back[0].value, c);
  }
}

TEST(Utf8, CaseMappingCoversItalianLetters) {
  EXPECT_EQ(utf8::to_lower("PERCHÉ È"), "perché è");
  EXPECT_TRUE(utf8::is_upper(U'À'));
  EXPECT_TRUE(utf8::is_lower(U'ù'));
  EXPECT_TRUE(utf8::is_letter(U'ò'));
  EXPECT_FALSE(utf8::is_letter(U'°'));
  EXPECT_EQ(utf8::length("però"), 4u);
}

}  // namespace
}  // namespace tqa
