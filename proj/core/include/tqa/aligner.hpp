// tqa/aligner.hpp

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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tqa/model.hpp"

namespace tqa {

/// Needleman-Wunsch scores. Note that with the defaults (+1/-1/-1) the best
/// alignment maximizes 3C + S, which can trade one extra edit for two more
/// matches; WER computed from it is not always the minimum edit distance.
struct ScoringParams {
  int match_score = 1;
  int mismatch_score = -1;
  int gap_score = -1;

  /// Throws ConfigError unless match > mismatch and match > gap.
  void validate() const;
};

enum class OpKind : std::uint8_t { Match, Substitution, Insertion, Deletion };

std::string_view op_kind_name(OpKind k);

/// Deletion: a reference token with no hypothesis counterpart.
/// Insertion: a hypothesis token with no reference counterpart.
struct AlignmentOp {
  OpKind kind = OpKind::Match;
  std::optional<std::size_t> ref_index;
  std::optional<std::size_t> hyp_index;
  friend bool operator==(const AlignmentOp&, const AlignmentOp&) = default;
};

struct EditCounts {
  std::size_t substitutions = 0;
  std::size_t deletions = 0;
  std::size_t insertions = 0;
  std::size_t correct = 0;

  std::size_t reference_length() const { return substitutions + deletions + correct; }
  std::size_t errors() const { return substitutions + deletions + insertions; }
  EditCounts& operator+=(const EditCounts& o);
  friend bool operator==(const EditCounts&, const EditCounts&) = default;
};

struct Alignment {
  std::vector<AlignmentOp> ops;
  EditCounts counts;
  Window window;
  std::int64_t score = 0;
  std::size_t ref_length = 0;
  std::size_t hyp_length = 0;
};

/// Global alignment of two key sequences. Among maximum-score alignments
/// the one with the fewest edits is chosen; remaining ties prefer the
/// diagonal (match/substitution), then deletion, then insertion, so the op
/// sequence is fully determined by the inputs. Runs in O(|ref|·|hyp|) time and
/// O(|ref|·|hyp|) bytes of traceback.
Alignment needleman_wunsch(std::span<const std::string> ref, std::span<const std::string> hyp,
                           const ScoringParams& params = {});

/// Score an op sequence would receive; used to cross-check alignments.
std::int64_t score_ops(const std::vector<AlignmentOp>& ops, std::span<const std::string> ref,
                       std::span<const std::string> hyp, const ScoringParams& params);

enum class AlignMode : std::uint8_t { Merged, PerSpeaker };

std::string_view align_mode_name(AlignMode m);
std::optional<AlignMode> parse_align_mode(std::string_view s);

/// One aligned pair of token streams. Only alignable tokens (Linguistic and
/// Unintelligible) are kept; indices in `alignment.ops` refer to these.
struct AlignedStreams {
  std::string speaker;  // empty in merged mode
  Alignment alignment;
  std::vector<Token> ref_tokens;
  std::vector<Token> hyp_tokens;
  std::vector<std::string> ref_keys;
  std::vector<std::string> hyp_keys;
  // Uncertain "(word)" guesses are aligned like any other word; these count
  // them so reports can flag their influence.
  std::size_t ref_uncertain = 0;
  std::size_t hyp_uncertain = 0;
};

struct AlignmentResult {
  AlignMode mode = AlignMode::Merged;
  TimeInterval window;
  std::vector<AlignedStreams> parts;  // one in merged mode, one per speaker otherwise
  EditCounts total;
};

/// Restricts both transcripts to their shared temporal window, linearizes
/// them and aligns the comparison keys. Throws DomainError("no temporal
/// overlap between transcripts") when the window is empty, and DomainError
/// when either transcript is empty or untokenized.
AlignmentResult align_transcripts(const Transcript& ref, const Transcript& hyp,
                                  AlignMode mode = AlignMode::Merged,
                                  const ScoringParams& params = {});

/// Alignable tokens of `tokens`, in order.
std::vector<Token> alignable_tokens(const std::vector<Token>& tokens);

/// Side-by-side text view; gaps are shown as kGapSymbol.
std::string render_alignment(const AlignedStreams& s);

inline constexpr std::string_view kGapSymbol = "\xE2\x80\x94";  // U+2014

}  // namespace tqa
