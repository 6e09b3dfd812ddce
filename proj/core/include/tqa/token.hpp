// tqa/token.hpp

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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tqa {

/// One Jefferson convention a token can carry.
enum class Feature : std::uint8_t {
  WeaklyRising,    // word,
  Rising,          // word?
  Falling,         // word.
  Prolongation,    // wo:rd
  ShortPause,      // (.)
  LowerVolume,     // °word°
  HigherVolume,    // WORD
  Interrupted,     // wor-
  Faster,          // >word<
  Slower,          // <word>
  Overlap,         // [word]
  Uncertain,       // (word)
  Unintelligible,  // xxx
  NonVerbal,       // ((laughs))
  ProsodicLink,    // word=word
};

inline constexpr std::size_t kFeatureCount = 15;

std::string_view feature_name(Feature f);
std::optional<Feature> feature_from_name(std::string_view name);

class FeatureSet {
 public:
  constexpr FeatureSet() = default;
  constexpr FeatureSet(std::initializer_list<Feature> fs) {
    for (Feature f : fs) insert(f);
  }

  constexpr bool contains(Feature f) const { return (bits_ >> bit(f)) & 1U; }
  constexpr void insert(Feature f) { bits_ |= 1U << bit(f); }
  constexpr void erase(Feature f) { bits_ &= ~(1U << bit(f)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr FeatureSet& operator|=(FeatureSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr bool has_intonation() const {
    return contains(Feature::WeaklyRising) || contains(Feature::Rising) ||
           contains(Feature::Falling);
  }

  std::vector<Feature> to_vector() const;

  friend constexpr bool operator==(FeatureSet, FeatureSet) = default;

 private:
  static constexpr unsigned bit(Feature f) { return static_cast<unsigned>(f); }
  std::uint32_t bits_ = 0;
};

enum class TokenKind : std::uint8_t { Linguistic, ShortPause, Unintelligible, NonVerbal };

std::string_view token_kind_name(TokenKind k);

/// Half-open byte range into a TU's raw text.
struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const CharSpan&, const CharSpan&) = default;
};

/// A markup symbol removed from the surface. `at` is the byte offset in the
/// surface before which the symbol stood; re-inserting every mark in order
/// reproduces the original chunk.
struct Mark {
  std::size_t at = 0;
  std::string symbol;
  friend bool operator==(const Mark&, const Mark&) = default;
};

struct Token {
  std::string surface;
  FeatureSet features;
  TokenKind kind = TokenKind::Linguistic;
  CharSpan span;
  std::vector<Mark> marks;
  // Unintelligible: number of syllables (one per 'x').
  std::size_t syllables = 0;
  // NonVerbal: the description between the double parentheses.
  std::string description;

  bool is_word() const {
    return kind == TokenKind::Linguistic || kind == TokenKind::Unintelligible;
  }

  /// Surface with all marks re-inserted.
  std::string render() const;

  friend bool operator==(const Token&, const Token&) = default;
};

enum class IssueKind : std::uint8_t {
  UnbalancedBracket,
  RepeatedOpenBracket,
  UnknownSymbol,
  MalformedPause
};

std::string_view issue_kind_name(IssueKind k);

struct ValidationIssue {
  std::size_t tu_index = 0;
  IssueKind kind = IssueKind::UnknownSymbol;
  std::string detail;
  CharSpan span;
  // The bracket symbol involved, for bracket issues ("[", "°", ...).
  std::string symbol;
  friend bool operator==(const ValidationIssue&, const ValidationIssue&) = default;
};

}  // namespace tqa
