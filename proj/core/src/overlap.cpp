// core/src/overlap.cpp

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

#include "tqa/overlap.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include <fmt/format.h>

#include "tqa/error.hpp"
#include "tqa/jefferson.hpp"

namespace tqa {

std::string_view overlap_kind_name(OverlapKind k) {
  switch (k) {
    case OverlapKind::MissingAnnotation: return "missing-annotation";
    case OverlapKind::SpuriousAnnotation: return "spurious-annotation";
    case OverlapKind::PartialAnnotation: return "partial-annotation";
    case OverlapKind::RepeatedOpenBracket: return "repeated-open-bracket";
    case OverlapKind::UnclosedBracket: return "unclosed-bracket";
  }
  return "?";
}

std::string_view severity_name(Severity s) {
  switch (s) {
    case Severity::Severe: return "severe";
    case Severity::Mild: return "mild";
    case Severity::NonSevere: return "non-severe";
  }
  return "?";
}

std::vector<TuPair> overlapping_pairs(const Transcript& t) {
  // Units are sorted by start, so the scan for partners of i can stop at
  // the first unit starting at or after i's end.
  const auto& us = t.units();
  std::vector<TuPair> pairs;
  for (std::size_t i = 0; i < us.size(); ++i) {
    const auto& a = us[i];
    for (std::size_t j = i + 1; j < us.size(); ++j) {
      const auto& b = us[j];
      if (b.interval.start_ms() >= a.interval.end_ms()) break;
      if (a.speaker == b.speaker) continue;
      const auto ms = intersection_ms(a.interval, b.interval);
      if (ms > 0) pairs.push_back({i, j, ms});
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

namespace {

bool only_non_verbal(const TranscriptionUnit& u) {
  bool any = false;
  for (const auto& tok : *u.tokens) {
    if (tok.kind == TokenKind::ShortPause) continue;
    if (tok.kind != TokenKind::NonVerbal) return false;
    any = true;
  }
  return any;
}

}  // namespace

std::vector<OverlapIssue> detect_annotation_issues(const Transcript& t, double mild_threshold_s) {
  if (!t.tokenized()) throw DomainError("transcript is not tokenized");
  if (mild_threshold_s < 0) throw DomainError("mild threshold must be non-negative");
  const std::int64_t threshold_ms = seconds_to_millis(mild_threshold_s);
  const auto& us = t.units();
  const auto n = us.size();

  std::vector<std::size_t> spans(n);
  std::vector<bool> non_verbal(n);
  for (std::size_t i = 0; i < n; ++i) {
    spans[i] = count_overlap_spans(us[i].raw_text);
    non_verbal[i] = only_non_verbal(us[i]);
  }

  const auto all_pairs = overlapping_pairs(t);
  std::vector<bool> has_partner(n, false);
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> partners(n);
  std::vector<TuPair> pairs;
  for (const auto& p : all_pairs) {
    has_partner[p.first] = has_partner[p.second] = true;
    if (non_verbal[p.first] || non_verbal[p.second]) continue;
    partners[p.first].push_back({p.second, p.overlap_ms});
    partners[p.second].push_back({p.first, p.overlap_ms});
    pairs.push_back(p);
  }

  std::vector<OverlapIssue> issues;
  const auto severity = [&](std::int64_t ms) {
    return ms > threshold_ms ? Severity::Severe : Severity::Mild;
  };

  // One long TU overlapped by two or more shorter ones but bracketed once.
  std::set<std::pair<std::size_t, std::size_t>> covered;
  for (std::size_t i = 0; i < n; ++i) {
    if (spans[i] != 1) continue;
    std::vector<std::pair<std::size_t, std::int64_t>> shorter;
    for (const auto& pr : partners[i]) {
      if (us[pr.first].interval.duration_ms() < us[i].interval.duration_ms()) shorter.push_back(pr);
    }
    if (shorter.size() < 2) continue;
    std::sort(shorter.begin(), shorter.end());
    OverlapIssue is;
    is.kind = OverlapKind::PartialAnnotation;
    is.severity = Severity::Mild;
    is.tus = {i, shorter[0].first, shorter[1].first};
    std::sort(is.tus.begin(), is.tus.end());
    is.overlap_ms = shorter[0].second + shorter[1].second;
    is.note = fmt::format("one overlap notation for {} overlapping shorter TUs", shorter.size());
    for (const auto& pr : shorter) covered.insert(std::minmax(i, pr.first));
    issues.push_back(std::move(is));
  }

  for (const auto& p : pairs) {
    if (covered.count({p.first, p.second})) continue;
    const bool a = spans[p.first] > 0;
    const bool b = spans[p.second] > 0;
    if (a && b) continue;
    OverlapIssue is;
    is.tus = {p.first, p.second};
    is.overlap_ms = p.overlap_ms;
    if (!a && !b) {
      is.kind = OverlapKind::MissingAnnotation;
      is.severity = severity(p.overlap_ms);
      is.note = "temporal overlap without overlap notation";
    } else {
      is.kind = OverlapKind::PartialAnnotation;
      is.severity = Severity::Mild;
      is.asymmetric = true;
      is.note = fmt::format("overlap notation only on TU {}", a ? p.first : p.second);
    }
    issues.push_back(std::move(is));
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (spans[i] > 0 && !has_partner[i]) {
      OverlapIssue is;
      is.kind = OverlapKind::SpuriousAnnotation;
      is.severity = Severity::Severe;
      is.tus = {i};
      is.note = "overlap notation without temporal overlap";
      issues.push_back(std::move(is));
    }
    for (const auto& v : us[i].issues) {
      const bool square = v.symbol == "[" || v.symbol == "]";
      if (v.kind == IssueKind::RepeatedOpenBracket) {
        issues.push_back({OverlapKind::RepeatedOpenBracket, Severity::NonSevere, {i}, 0, false,
                          v.detail});
      } else if (v.kind == IssueKind::UnbalancedBracket && square) {
        issues.push_back({OverlapKind::UnclosedBracket, Severity::NonSevere, {i}, 0, false,
                          v.detail});
      }
    }
  }

  std::stable_sort(issues.begin(), issues.end(), [](const OverlapIssue& x, const OverlapIssue& y) {
    if (x.tus != y.tus) return x.tus < y.tus;
    return x.kind < y.kind;
  });
  return issues;
}

std::string group_label(bool expert, Phase phase) {
  return std::string(expertise_name(expert)) + (phase == Phase::Manual ? "_manual" : "_ASR");
}

std::vector<GroupSeverity> summarize_by_group(const std::vector<TranscriptIssues>& runs) {
  std::vector<GroupSeverity> groups;
  for (const bool expert : {false, true}) {
    for (const Phase ph : {Phase::Manual, Phase::Asr}) {
      GroupSeverity g;
      g.group = group_label(expert, ph);
      for (const auto& r : runs) {
        if (r.meta.expert != expert || r.meta.phase != ph) continue;
        for (const auto& is : r.issues) ++g.counts[static_cast<std::size_t>(is.severity)];
      }
      if (const auto total = g.total(); total > 0) {
        std::array<double, 3> pct{};
        for (std::size_t k = 0; k < 3; ++k) {
          pct[k] = 100.0 * static_cast<double>(g.counts[k]) / static_cast<double>(total);
        }
        g.percentages = pct;
      } else {
        g.note = "no overlap issues in this group";
      }
      groups.push_back(std::move(g));
    }
  }
  return groups;
}

}  // namespace tqa
