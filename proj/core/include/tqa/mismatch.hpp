// tqa/mismatch.hpp

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
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tqa/aligner.hpp"

namespace tqa {

enum class MismatchCategory : std::uint8_t {
  OrthographicVariant,
  InterruptionCompletion,
  Elision,
  Approximation,
  AddedContent,
  SkippedContent,
  Unclassified,
  // Assigned by reviewers only; the heuristics never produce these.
  ProperName,
  GrammaticalFeature,
};

std::string_view category_name(MismatchCategory c);
std::optional<MismatchCategory> parse_category(std::string_view s);

enum class Confidence : std::uint8_t { Heuristic, Manual };

std::string_view confidence_name(Confidence c);

struct MismatchRecord {
  std::size_t id = 0;
  AlignmentOp op;
  std::optional<std::string> ref_token;  // absent for insertions
  std::optional<std::string> hyp_token;  // absent for deletions
  MismatchCategory category = MismatchCategory::Unclassified;
  Confidence confidence = Confidence::Heuristic;
};

/// One record per non-Match op, in op order, ids counting from 1. Throws
/// std::logic_error if an op index is outside the token vectors.
std::vector<MismatchRecord> extract_mismatches(const Alignment& a,
                                               const std::vector<std::string>& ref_tokens,
                                               const std::vector<std::string>& hyp_tokens);

/// Unordered pairs of spellings that denote the same word. Entries may hold
/// several words ("fior di latte"). Lookups ignore case.
class VariantLexicon {
 public:
  VariantLexicon() = default;

  static VariantLexicon defaults();

  /// Two TAB-separated columns per line; '#' starts a comment line.
  static VariantLexicon read(std::istream& in, const std::string& source = "<lexicon>");
  static VariantLexicon load(const std::string& path);

  void add(std::string_view a, std::string_view b);
  bool contains(std::string_view a, std::string_view b) const;
  std::size_t size() const { return pairs_.size(); }
  void merge(const VariantLexicon& other);

 private:
  std::set<std::pair<std::string, std::string>> pairs_;
};

struct ClassifierConfig {
  std::optional<VariantLexicon> lexicon = VariantLexicon::defaults();
  double approximation_threshold = 0.5;  // normalized Levenshtein distance
};

/// Levenshtein distance over code points divided by the longer length.
double normalized_edit_distance(std::string_view a, std::string_view b);

/// True if one token is an interrupted ("sala-") form of the other.
bool is_interruption_completion(std::string_view a, std::string_view b);

/// True for apostrophe elision ("l'avevi" / "la avevi") or final-vowel
/// truncation ("son" / "sono"). Spaces inside either side are ignored.
bool is_elision(std::string_view a, std::string_view b);

/// Fixed rule cascade: lexicon, interruption, elision, insertion/deletion,
/// edit distance, otherwise Unclassified. Confidence becomes Heuristic.
MismatchRecord classify_mismatch(MismatchRecord rec, const ClassifierConfig& cfg = {});

/// Runs of adjacent non-Match ops merged into one record whose tokens are
/// the space-joined tokens of the run; single ops pass through unchanged.
/// The merged record keeps the op of its first member.
struct MismatchGroup {
  std::vector<std::size_t> member_ids;
  MismatchRecord merged;
};

std::vector<MismatchGroup> group_adjacent(const Alignment& a,
                                          const std::vector<MismatchRecord>& records);

struct ContentLengthStats {
  std::size_t added = 0;
  std::size_t skipped = 0;
  std::optional<double> added_avg_chars;
  std::optional<double> skipped_avg_chars;
  std::optional<double> reference_avg_chars;  // over all reference tokens
};

ContentLengthStats content_length_stats(const std::vector<MismatchRecord>& records,
                                        const std::vector<std::string>& ref_tokens);

std::map<MismatchCategory, std::size_t> category_counts(const std::vector<MismatchRecord>& recs);

// ---- review CSV ----------------------------------------------------------------------

/// Columns: id, op, ref_token, hyp_token, category, override (empty).
void write_review_csv(std::ostream& out, const std::vector<MismatchRecord>& records);

/// Returns id -> category for every row with a non-empty override. Throws
/// ParseError on unknown categories or malformed rows.
std::map<std::size_t, MismatchCategory> read_review_overrides(std::istream& in,
                                                              const std::string& source);

/// Overridden records take the reviewer's category with Manual confidence.
/// Throws DomainError for ids that do not exist.
void apply_overrides(std::vector<MismatchRecord>& records,
                     const std::map<std::size_t, MismatchCategory>& overrides);

}  // namespace tqa
