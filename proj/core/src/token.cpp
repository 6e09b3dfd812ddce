// core/src/token.cpp

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

#include "tqa/token.hpp"

namespace tqa {

namespace {

constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "WeaklyRising", "Rising",      "Falling", "Prolongation", "ShortPause",
    "LowerVolume",  "HigherVolume", "Interrupted", "Faster", "Slower",
    "Overlap",      "Uncertain",   "Unintelligible", "NonVerbal", "ProsodicLink"};

}  // namespace

std::string_view feature_name(Feature f) { return kFeatureNames[static_cast<std::size_t>(f)]; }

std::optional<Feature> feature_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kFeatureNames.size(); ++i) {
    if (kFeatureNames[i] == name) return static_cast<Feature>(i);
  }
  return std::nullopt;
}

std::vector<Feature> FeatureSet::to_vector() const {
  std::vector<Feature> out;
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    auto f = static_cast<Feature>(i);
    if (contains(f)) out.push_back(f);
  }
  return out;
}

std::string_view token_kind_name(TokenKind k) {
  switch (k) {
    case TokenKind::Linguistic: return "Linguistic";
    case TokenKind::ShortPause: return "ShortPause";
    case TokenKind::Unintelligible: return "Unintelligible";
    case TokenKind::NonVerbal: return "NonVerbal";
  }
  return "?";
}

std::string_view issue_kind_name(IssueKind k) {
  switch (k) {
    case IssueKind::UnbalancedBracket: return "UnbalancedBracket";
    case IssueKind::RepeatedOpenBracket: return "RepeatedOpenBracket";
    case IssueKind::UnknownSymbol: return "UnknownSymbol";
    case IssueKind::MalformedPause: return "MalformedPause";
  }
  return "?";
}

std::string Token::render() const {
  std::string out;
  out.reserve(surface.size() + 8);
  std::size_t pos = 0;
  for (const auto& m : marks) {
    out.append(surface, pos, m.at - pos);
    pos = m.at;
    out += m.symbol;
  }
  out.append(surface, pos, std::string::npos);
  return out;
}

}  // namespace tqa
