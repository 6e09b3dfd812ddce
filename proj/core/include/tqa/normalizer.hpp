// tqa/normalizer.hpp

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

#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tqa/model.hpp"

namespace tqa {

/// Whole-token spelling fix, e.g. "perchè" -> "perché".
struct CorrectionRule {
  std::string pattern;
  std::string replacement;

  /// Throws ConfigError if either side is empty or both are equal.
  CorrectionRule(std::string pattern, std::string replacement);
  friend bool operator==(const CorrectionRule&, const CorrectionRule&) = default;
};

/// pò -> po', perchè -> perché, plus the other common "-chè" misspellings.
std::vector<CorrectionRule> default_corrections();

/// Reads "pattern<TAB>replacement" lines; '#' starts a comment line.
std::vector<CorrectionRule> read_correction_rules(std::istream& in,
                                                  const std::string& source = "<stream>");
std::vector<CorrectionRule> load_correction_rules(const std::string& path);

/// `base` with every pattern in `overrides` replaced or appended.
std::vector<CorrectionRule> merge_rules(std::vector<CorrectionRule> base,
                                        const std::vector<CorrectionRule>& overrides);

/// Validated lookup table. Rejects duplicate patterns and rules whose
/// replacement is itself a pattern (chains would make normalization
/// order-dependent).
class CorrectionTable {
 public:
  explicit CorrectionTable(const std::vector<CorrectionRule>& rules);
  std::string apply(std::string_view token) const;
  std::size_t size() const noexcept { return map_.size(); }

 private:
  std::unordered_map<std::string, std::string> map_;
};

/// Exact whole-token replacement; first matching rule wins.
std::string apply_corrections(std::string_view token, const std::vector<CorrectionRule>& rules);

struct NormalizationConfig {
  std::vector<CorrectionRule> corrections = default_corrections();
  bool strip_edge_pauses = true;
  bool number_conversion = true;
  // Allowed besides letters, digits, apostrophe, hyphen, space and the
  // Jefferson symbols , ? . : ( ) = ° [ ] > <
  std::u32string extra_allowed;
};

struct Removal {
  char32_t code_point;
  std::size_t offset;  // byte offset in the text handed to that pass
};

struct NormalizeResult {
  std::string text;
  std::vector<Removal> removed;
  std::vector<std::string> warnings;
};

/// Cleans one TU text: whitespace folding, whitelist filtering (each removal
/// logged), digit spelling, bracket/punctuation spacing, edge short-pause
/// stripping and spelling corrections. The pipeline is iterated to a fixed
/// point, so normalize(normalize(x)) == normalize(x). Case is preserved.
NormalizeResult normalize(std::string_view raw, const NormalizationConfig& cfg);
std::string normalize_text(std::string_view raw, const NormalizationConfig& cfg);

struct TranscriptNormalization {
  Transcript transcript;
  std::vector<std::string> log;  // one line per removal or warning
};

/// Normalizes every TU. TUs whose text becomes empty are kept (segmentation
/// is data) and reported in the log.
TranscriptNormalization normalize_transcript(const Transcript& t, const NormalizationConfig& cfg);

}  // namespace tqa
