// tests/unit/test_normalizer.cpp

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

#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "tqa/error.hpp"
#include "tqa/normalizer.hpp"

namespace tqa {
namespace {

using testing::make_transcript;

std::size_t word_count(const std::string& s) {
  std::istringstream in(s);
  std::size_t n = 0;
  for (std::string w; in >> w;) ++n;
  return n;
}

TEST(Corrections, DefaultsFixKnownMisspellings) {
  const auto rules = default_corrections();
  EXPECT_EQ(apply_corrections("pò", rules), "po'");
  EXPECT_EQ(apply_corrections("perchè", rules), "perché");
  EXPECT_EQ(apply_corrections("casa", rules), "casa");
  EXPECT_EQ(apply_corrections("perchèe", rules), "perchèe");
}

TEST(Corrections, DuplicatePatternsAreConfigErrors) {
  const std::vector<CorrectionRule> rules = {{"a", "b"}, {"a", "c"}};
  EXPECT_THROW(apply_corrections("a", rules), ConfigError);
}

TEST(Corrections, RuleInvariants) {
  EXPECT_THROW(CorrectionRule("", "x"), ConfigError);
  EXPECT_THROW(CorrectionRule("x", ""), ConfigError);
  EXPECT_THROW(CorrectionRule("x", "x"), ConfigError);
}

TEST(CorrectionTable, RejectsDuplicatesAndChains) {
  EXPECT_THROW(CorrectionTable({{"a", "b"}, {"a", "c"}}), ConfigError);
  EXPECT_THROW(CorrectionTable({{"a", "b"}, {"b", "c"}}), ConfigError);
  const CorrectionTable ok(default_corrections());
  EXPECT_EQ(ok.apply("pò"), "po'");
}

TEST(Corrections, ReadRulesFile) {
  std::istringstream in("# comment\nvabbe\tvabbè\n\ncmq\tcomunque\n");
  const auto rules = read_correction_rules(in, "rules.tsv");
  ASSERT_EQ(rules.size(), 2u);
  EXPECT_EQ(rules[0].replacement, "vabbè");
  std::istringstream bad("onlyone\n");
  EXPECT_THROW(read_correction_rules(bad, "bad.tsv"), ParseError);
}

TEST(Corrections, MergeOverridesPatterns) {
  const auto merged = merge_rules(default_corrections(), {{"pò", "po"}, {"vabbe", "vabbè"}});
  EXPECT_EQ(apply_corrections("pò", merged), "po");
  EXPECT_EQ(apply_corrections("vabbe", merged), "vabbè");
  EXPECT_EQ(merged.size(), default_corrections().size() + 1);
}

TEST(Corrections, TokenCountUnchanged) {
  const auto rules = default_corrections();
  for (const std::string s : {"pò", "perchè", "casa"}) {
    EXPECT_EQ(word_count(apply_corrections(s, rules)), 1u);
  }
}

TEST(NormalizeText, Examples) {
  const NormalizationConfig cfg;
  EXPECT_EQ(normalize_text("perchè  no", cfg), "perché no");
  EXPECT_EQ(normalize_text("(.) ciao (.)", cfg), "ciao");
  EXPECT_EQ(normalize_text("ciao", cfg), "ciao");
  EXPECT_EQ(normalize_text("pò", cfg), "po'");
}

TEST(NormalizeText, EdgePausesOnlyWhenEnabled) {
  NormalizationConfig cfg;
  EXPECT_EQ(normalize_text("(.) (.) sì (.) no (.)", cfg), "sì (.) no");
  cfg.strip_edge_pauses = false;
  EXPECT_EQ(normalize_text("(.) sì (.)", cfg), "(.) sì (.)");
}

TEST(NormalizeText, WhitespaceFolding) {
  const NormalizationConfig cfg;
  EXPECT_EQ(normalize_text(" a\tb\n\nc  ", cfg), "a b c");
}

TEST(NormalizeText, BracketAndPunctuationSpacing) {
  const NormalizationConfig cfg;
  EXPECT_EQ(normalize_text("allora , va bene", cfg), "allora, va bene");
  EXPECT_EQ(normalize_text("[ sì sì ]", cfg), "[sì sì]");
}

TEST(NormalizeText, RemovalsAreLogged) {
  const NormalizationConfig cfg;
  const auto r = normalize("ciao # mondo", cfg);
  EXPECT_EQ(r.text, "ciao mondo");
  ASSERT_EQ(r.removed.size(), 1u);
  EXPECT_EQ(r.removed[0].code_point, U'#');
}

TEST(NormalizeText, DigitsBecomeWords) {
  NormalizationConfig cfg;
  EXPECT_EQ(normalize_text("ho 21 anni", cfg), "ho ventuno anni");
  const auto big = normalize("1000000 euro", cfg);
  EXPECT_EQ(big.text, "1000000 euro");
  EXPECT_FALSE(big.warnings.empty());
  cfg.number_conversion = false;
  EXPECT_EQ(normalize_text("ho 21 anni", cfg), "ho 21 anni");
}

TEST(NormalizeText, CasePreserved) {
  EXPECT_EQ(normalize_text("PERÒ no", NormalizationConfig{}), "PERÒ no");
}

TEST(NormalizeProperty, IdempotentAndClean) {
  std::mt19937 rng(7);
  const NormalizationConfig cfg;
  for (int i = 0; i < 3000; ++i) {
    const auto x = testing::random_noisy_string(rng);
    const auto once = normalize_text(x, cfg);
    EXPECT_EQ(normalize_text(once, cfg), once) << x;
    EXPECT_EQ(once.find_first_of("\t\n\r"), std::string::npos);
    EXPECT_EQ(once.find("  "), std::string::npos);
  }
}

TEST(NormalizeTranscript, KeepsEmptiedUnitsAndLogsThem) {
  const auto t = make_transcript({{"A", 0, 1, "# @"}, {"A", 1, 2, "perchè"}});
  const auto r = normalize_transcript(t, NormalizationConfig{});
  ASSERT_EQ(r.transcript.size(), 2u);
  EXPECT_EQ(r.transcript[0].raw_text, "");
  EXPECT_EQ(r.transcript[1].raw_text, "perché");
  EXPECT_FALSE(r.log.empty());
}

}  // namespace
}  // namespace tqa
