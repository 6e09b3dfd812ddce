// tqa/overlap.hpp

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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tqa/model.hpp"

namespace tqa {

enum class OverlapKind : std::uint8_t {
  MissingAnnotation,
  SpuriousAnnotation,
  PartialAnnotation,
  RepeatedOpenBracket,
  UnclosedBracket,
};

// Declared in increasing order so the built-in comparison gives
// Severe > Mild > NonSevere.
enum class Severity : std::uint8_t { NonSevere, Mild, Severe };

std::string_view overlap_kind_name(OverlapKind k);
std::string_view severity_name(Severity s);  // "severe" | "mild" | "non-severe"

struct OverlapIssue {
  OverlapKind kind = OverlapKind::MissingAnnotation;
  Severity severity = Severity::NonSevere;
  std::vector<std::size_t> tus;  // 1 to 3 indices into the transcript
  std::int64_t overlap_ms = 0;   // 0 for notation-only issues
  bool asymmetric = false;       // brackets on only one of the two TUs
  std::string note;

  double temporal_overlap_s() const { return static_cast<double>(overlap_ms) / 1000.0; }
};

struct TuPair {
  std::size_t first = 0;  // first < second
  std::size_t second = 0;
  std::int64_t overlap_ms = 0;
  friend bool operator==(const TuPair&, const TuPair&) = default;
  friend auto operator<=>(const TuPair&, const TuPair&) = default;
};

/// All pairs of TUs from different speakers whose intervals share a stretch
/// of positive length, sorted by (first, second).
std::vector<TuPair> overlapping_pairs(const Transcript& t);

inline constexpr double kDefaultMildThresholdS = 0.1;

/// Requires a tokenized transcript (DomainError otherwise). Overlaps longer
/// than `mild_threshold_s` (strictly) are Severe. Pairs where one TU holds
/// only non-verbal tokens are ignored. Issues are ordered by first TU index.
std::vector<OverlapIssue> detect_annotation_issues(const Transcript& t,
                                                   double mild_threshold_s = kDefaultMildThresholdS);

// ---- group summary -----------------------------------------------------------------

struct GroupSeverity {
  std::string group;  // e.g. "novice_manual", "expert_ASR"
  std::array<std::size_t, 3> counts{};  // indexed by Severity
  std::optional<std::array<double, 3>> percentages;
  std::string note;

  std::size_t total() const { return counts[0] + counts[1] + counts[2]; }
};

struct TranscriptIssues {
  TranscriberMeta meta;
  std::vector<OverlapIssue> issues;
};

std::string group_label(bool expert, Phase phase);

/// Always returns the four groups novice_manual, novice_ASR, expert_manual,
/// expert_ASR, in that order. Groups without issues have no percentages.
std::vector<GroupSeverity> summarize_by_group(const std::vector<TranscriptIssues>& runs);

}  // namespace tqa
