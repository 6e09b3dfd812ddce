// tests/unit/test_overlap.cpp

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

#include <algorithm>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "oracles.hpp"
#include "tqa/error.hpp"
#include "tqa/io.hpp"
#include "tqa/jefferson.hpp"
#include "tqa/overlap.hpp"

namespace tqa {
namespace {

using testing::make_transcript;

std::vector<OverlapIssue> issues_of(const std::vector<testing::Row>& rows,
                                    double threshold = kDefaultMildThresholdS) {
  return detect_annotation_issues(tokenize_transcript(make_transcript(rows)), threshold);
}

bool only_non_verbal(const TranscriptionUnit& u) {
  return !u.tokens->empty() && std::all_of(u.tokens->begin(), u.tokens->end(), [](const Token& k) {
    return k.kind == TokenKind::NonVerbal;
  });
}

TEST(OverlappingPairs, Kps021AnnotatedPairIsFound) {
  const auto t = read_tsv(testing::fixture("kps021_extract.tsv")).transcript;
  const auto pairs = overlapping_pairs(t);
  // SP1 [6.34, 7.52] and SP2 [7.22, 10.09].
  EXPECT_NE(std::find(pairs.begin(), pairs.end(), TuPair{1, 2, 300}), pairs.end());
  EXPECT_TRUE(detect_annotation_issues(tokenize_transcript(t)).empty());
}

TEST(OverlappingPairs, SameSpeakerAndTouchingIntervalsAreIgnored) {
  const auto t = make_transcript({{"A", 0, 2, "a"}, {"A", 1, 3, "b"}, {"B", 3, 4, "c"}});
  EXPECT_TRUE(overlapping_pairs(t).empty());
}

TEST(OverlappingPairsProperty, MatchesBruteForce) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<std::size_t> n(0, 50);
  std::uniform_int_distribution<int> speakers(2, 5);
  for (int iter = 0; iter < 500; ++iter) {
    const auto t = testing::random_transcript(rng, n(rng), speakers(rng));
    std::set<std::tuple<std::size_t, std::size_t, std::int64_t>> got;
    for (const auto& p : overlapping_pairs(t)) got.emplace(p.first, p.second, p.overlap_ms);
    ASSERT_EQ(got, testing::brute_force_overlaps(t));
  }
}

TEST(Detect, HalfSecondUnannotatedIsSevere) {
  const auto is = issues_of({{"A", 0, 2, "sì sì"}, {"B", 1.5, 3, "no no"}});
  ASSERT_EQ(is.size(), 1u);
  EXPECT_EQ(is[0].kind, OverlapKind::MissingAnnotation);
  EXPECT_EQ(is[0].severity, Severity::Severe);
  EXPECT_EQ(is[0].overlap_ms, 500);
  EXPECT_EQ(is[0].tus, (std::vector<std::size_t>{0, 1}));
}

TEST(Detect, ShortUnannotatedIsMild) {
  const auto is = issues_of({{"A", 0, 2, "sì sì"}, {"B", 1.92, 3, "no no"}});
  ASSERT_EQ(is.size(), 1u);
  EXPECT_EQ(is[0].severity, Severity::Mild);
  EXPECT_EQ(is[0].overlap_ms, 80);
}

TEST(Detect, ThresholdIsStrict) {
  const auto is = issues_of({{"A", 0, 2, "sì"}, {"B", 1.9, 3, "no"}});
  ASSERT_EQ(is.size(), 1u);
  EXPECT_EQ(is[0].severity, Severity::Mild);
}

TEST(Detect, NonVerbalPairsAreIgnored) {
  EXPECT_TRUE(issues_of({{"A", 0, 2, "allora sì"}, {"B", 1, 3, "((ride))"}}).empty());
}

TEST(Detect, AsymmetricAnnotation) {
  const auto is = issues_of({{"A", 0, 2, "allora [sì]"}, {"B", 1.5, 3, "no no"}});
  ASSERT_EQ(is.size(), 1u);
  EXPECT_TRUE(is[0].asymmetric);
}

TEST(Detect, SpuriousAnnotationIsSevere) {
  const auto is = issues_of({{"A", 0, 2, "allora [sì]"}, {"B", 5, 6, "no"}});
  ASSERT_EQ(is.size(), 1u);
  EXPECT_EQ(is[0].kind, OverlapKind::SpuriousAnnotation);
  EXPECT_EQ(is[0].severity, Severity::Severe);
  EXPECT_EQ(is[0].tus, (std::vector<std::size_t>{0}));
}

TEST(Detect, PartialAnnotationOnLongTu) {
  const auto is = issues_of({{"A", 0, 10, "uno [due] tre quattro cinque sei"},
                             {"B", 1, 2, "[sì]"},
                             {"B", 6, 7, "[no]"}});
  ASSERT_FALSE(is.empty());
  EXPECT_EQ(is[0].kind, OverlapKind::PartialAnnotation);
  EXPECT_EQ(is[0].severity, Severity::Mild);
  EXPECT_EQ(is[0].tus.size(), 3u);
}

TEST(Detect, NotationIssuesAreNonSevere) {
  const auto is = issues_of({{"A", 0, 2, "[[vabbè]"}, {"B", 1, 3, "[sì]"}});
  ASSERT_FALSE(is.empty());
  EXPECT_TRUE(std::any_of(is.begin(), is.end(), [](const OverlapIssue& i) {
    return i.kind == OverlapKind::RepeatedOpenBracket && i.severity == Severity::NonSevere;
  }));
  const auto unclosed = issues_of({{"A", 0, 2, "[vabbè"}, {"B", 1, 3, "[sì]"}});
  EXPECT_TRUE(std::any_of(unclosed.begin(), unclosed.end(), [](const OverlapIssue& i) {
    return i.kind == OverlapKind::UnclosedBracket && i.severity == Severity::NonSevere;
  }));
}

TEST(Detect, RequiresTokens) {
  EXPECT_THROW(detect_annotation_issues(make_transcript({{"A", 0, 1, "a"}})), DomainError);
}

TEST(Detect, Sbib003BanglaPairIsAnnotated) {
  const auto t = tokenize_transcript(read_tsv(testing::fixture("sbib003_extract.tsv")).transcript);
  ASSERT_EQ(t[1].raw_text, "[quale li:-]");
  ASSERT_EQ(t[2].raw_text.rfind("[bangla]", 0), 0u);
  const auto pairs = overlapping_pairs(t);
  EXPECT_NE(std::find_if(pairs.begin(), pairs.end(),
                         [](const TuPair& p) { return p.first == 1 && p.second == 2; }),
            pairs.end());
  for (const auto& i : detect_annotation_issues(t)) {
    const bool both = std::count(i.tus.begin(), i.tus.end(), 1u) &&
                      std::count(i.tus.begin(), i.tus.end(), 2u);
    EXPECT_FALSE(both);
  }
}

TEST(DetectProperty, ThresholdMonotoneAndNonVerbalExcluded) {
  std::mt19937 rng(10);
  std::uniform_int_distribution<std::size_t> n(2, 40);
  std::uniform_int_distribution<int> speakers(2, 4);
  for (int iter = 0; iter < 300; ++iter) {
    const auto t = tokenize_transcript(testing::random_transcript(rng, n(rng), speakers(rng)));
    const auto low = detect_annotation_issues(t, 0.05);
    const auto high = detect_annotation_issues(t, 0.3);
    ASSERT_EQ(low.size(), high.size());
    for (std::size_t i = 0; i < low.size(); ++i) {
      ASSERT_EQ(low[i].tus, high[i].tus);
      ASSERT_FALSE(low[i].severity == Severity::Mild && high[i].severity == Severity::Severe);
      if (low[i].tus.size() == 2 && low[i].kind == OverlapKind::MissingAnnotation) {
        ASSERT_FALSE(only_non_verbal(t[low[i].tus[0]]) || only_non_verbal(t[low[i].tus[1]]));
      }
    }
  }
}

TEST(GroupSummary, Percentages) {
  OverlapIssue severe;
  severe.severity = Severity::Severe;
  OverlapIssue mild;
  mild.severity = Severity::Mild;
  const TranscriberMeta novice_manual{"T01", false, Phase::Manual, "interview"};
  const auto groups =
      summarize_by_group({{novice_manual, {severe, severe, mild}}, {novice_manual, {severe}}});
  ASSERT_EQ(groups.size(), 4u);
  EXPECT_EQ(groups[0].group, "novice_manual");
  EXPECT_EQ(groups[1].group, "novice_ASR");
  EXPECT_EQ(groups[2].group, "expert_manual");
  EXPECT_EQ(groups[3].group, "expert_ASR");
  ASSERT_TRUE(groups[0].percentages);
  const auto& p = *groups[0].percentages;
  EXPECT_DOUBLE_EQ(p[static_cast<int>(Severity::Severe)], 75.0);
  EXPECT_DOUBLE_EQ(p[static_cast<int>(Severity::Mild)], 25.0);
  EXPECT_DOUBLE_EQ(p[static_cast<int>(Severity::NonSevere)], 0.0);
  EXPECT_NEAR(p[0] + p[1] + p[2], 100.0, 0.01);
  EXPECT_FALSE(groups[1].percentages);
  EXPECT_FALSE(groups[1].note.empty());
}

TEST(Names, KindsAndSeverities) {
  EXPECT_EQ(severity_name(Severity::NonSevere), "non-severe");
  EXPECT_EQ(overlap_kind_name(OverlapKind::MissingAnnotation), "missing-annotation");
  EXPECT_EQ(group_label(true, Phase::Asr), "expert_ASR");
}

}  // namespace
}  // namespace tqa
