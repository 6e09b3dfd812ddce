// tqa/jefferson.hpp

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

#include <string>
#include <string_view>
#include <vector>

#include "tqa/error.hpp"
#include "tqa/model.hpp"
#include "tqa/token.hpp"

namespace tqa {

/// Thrown by tokenize_tu() when paired symbols do not balance.
class MarkupError : public Error {
 public:
  explicit MarkupError(std::vector<ValidationIssue> issues);
  const std::vector<ValidationIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<ValidationIssue> issues_;
};

struct ScanResult {
  std::vector<Token> tokens;
  std::vector<ValidationIssue> issues;
};

/// Tokenizes one TU and collects markup problems without failing. Unclosed
/// spans extend to the end of the TU; stray closers are ignored.
///
/// Segmentation is on whitespace, except that "((...))" is always one
/// NonVerbal token and "(.)" always one ShortPause token. Paired spans
/// (°..°, >..<, <..>, [..], (..)) may cover several tokens; a token carries
/// the span's feature when at least one of its surface characters lies
/// inside the span. A trailing ",", "?" or "." becomes an intonation feature.
/// "=" ends the current token and marks it as prosodically linked.
ScanResult scan_tu(std::string_view raw_text);

/// Strict variant: throws MarkupError on UnbalancedBracket or
/// RepeatedOpenBracket issues.
std::vector<Token> tokenize_tu(std::string_view raw_text);

/// All markup issues in `raw_text`; empty iff the text is well formed.
std::vector<ValidationIssue> validate_markup(std::string_view raw_text,
                                             std::size_t tu_index = 0);

inline constexpr std::string_view kUnintelligibleKey = "xxx";

/// Lowercased surface for Linguistic tokens, "xxx" for Unintelligible ones.
/// Throws DomainError for ShortPause and NonVerbal tokens.
std::string comparison_key(const Token& tok);

/// Joins rendered tokens with single spaces ("=" links join without one).
std::string render_tokens(const std::vector<Token>& tokens);

/// Number of "[" overlap openings in `raw_text` ("[[" counts once).
std::size_t count_overlap_spans(std::string_view raw_text);

/// Tokenizes every TU leniently and stores its tokens and issues.
Transcript tokenize_transcript(const Transcript& t);

/// Issues of every TU, tu_index set to the TU's position.
std::vector<ValidationIssue> validate_transcript(const Transcript& t);

}  // namespace tqa
