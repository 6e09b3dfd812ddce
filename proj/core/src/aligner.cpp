// core/src/aligner.cpp

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

#include "tqa/aligner.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "tqa/error.hpp"
#include "tqa/jefferson.hpp"
#include "tqa/utf8.hpp"

namespace tqa {

void ScoringParams::validate() const {
  if (match_score <= mismatch_score) {
    throw ConfigError("match score must be greater than the mismatch score");
  }
  if (match_score <= gap_score) throw ConfigError("match score must be greater than the gap score");
}

std::string_view op_kind_name(OpKind k) {
  switch (k) {
    case OpKind::Match: return "match";
    case OpKind::Substitution: return "substitution";
    case OpKind::Insertion: return "insertion";
    case OpKind::Deletion: return "deletion";
  }
  return "?";
}

EditCounts& EditCounts::operator+=(const EditCounts& o) {
  substitutions += o.substitutions;
  deletions += o.deletions;
  insertions += o.insertions;
  correct += o.correct;
  return *this;
}

namespace {

constexpr std::uint8_t kDiag = 1;
constexpr std::uint8_t kUp = 2;    // consume ref only: deletion
constexpr std::uint8_t kLeft = 4;  // consume hyp only: insertion

// Maps both sequences onto small integer ids so the inner loop compares ints.
void intern(std::span<const std::string> ref, std::span<const std::string> hyp,
            std::vector<std::uint32_t>& ref_ids, std::vector<std::uint32_t>& hyp_ids) {
  std::unordered_map<std::string_view, std::uint32_t> ids;
  ids.reserve(ref.size() + hyp.size());
  const auto id_of = [&](const std::string& s) {
    return ids.emplace(s, static_cast<std::uint32_t>(ids.size())).first->second;
  };
  ref_ids.reserve(ref.size());
  hyp_ids.reserve(hyp.size());
  for (const auto& s : ref) ref_ids.push_back(id_of(s));
  for (const auto& s : hyp) hyp_ids.push_back(id_of(s));
}

}  // namespace

Alignment needleman_wunsch(std::span<const std::string> ref, std::span<const std::string> hyp,
                           const ScoringParams& params) {
  params.validate();
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  std::vector<std::uint32_t> r, h;
  intern(ref, hyp, r, h);

  // Cells hold (score, edits). Among equal scores the cell with fewer edits
  // wins, which pins down C and S and keeps the result symmetric under
  // swapping ref and hyp; remaining ties follow diagonal > up > left.
  struct Cell {
    std::int64_t score;
    std::int64_t edits;
  };
  const auto better = [](Cell x, Cell y) {
    return x.score > y.score || (x.score == y.score && x.edits < y.edits);
  };
  const std::int64_t gap = params.gap_score;
  std::vector<Cell> prev(m + 1), cur(m + 1);
  std::vector<std::uint8_t> trace((n + 1) * (m + 1), 0);
  const auto at = [m](std::size_t i, std::size_t j) { return i * (m + 1) + j; };

  for (std::size_t j = 0; j <= m; ++j) {
    const auto k = static_cast<std::int64_t>(j);
    prev[j] = {k * gap, k};
    if (j > 0) trace[at(0, j)] = kLeft;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const auto k = static_cast<std::int64_t>(i);
    cur[0] = {k * gap, k};
    trace[at(i, 0)] = kUp;
    for (std::size_t j = 1; j <= m; ++j) {
      const bool same = r[i - 1] == h[j - 1];
      const Cell diag{prev[j - 1].score + (same ? params.match_score : params.mismatch_score),
                      prev[j - 1].edits + (same ? 0 : 1)};
      const Cell up{prev[j].score + gap, prev[j].edits + 1};
      const Cell left{cur[j - 1].score + gap, cur[j - 1].edits + 1};
      Cell best = diag;
      if (better(up, best)) best = up;
      if (better(left, best)) best = left;
      const auto tied = [&](Cell c) { return !better(best, c); };
      std::uint8_t dirs = 0;
      if (tied(diag)) dirs |= kDiag;
      if (tied(up)) dirs |= kUp;
      if (tied(left)) dirs |= kLeft;
      cur[j] = best;
      trace[at(i, j)] = dirs;
    }
    std::swap(prev, cur);
  }

  Alignment a;
  a.score = prev[m].score;
  a.ref_length = n;
  a.hyp_length = m;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    const auto dirs = trace[at(i, j)];
    if (dirs & kDiag) {
      --i;
      --j;
      const bool same = r[i] == h[j];
      a.ops.push_back({same ? OpKind::Match : OpKind::Substitution, i, j});
      ++(same ? a.counts.correct : a.counts.substitutions);
    } else if (dirs & kUp) {
      --i;
      a.ops.push_back({OpKind::Deletion, i, std::nullopt});
      ++a.counts.deletions;
    } else {
      --j;
      a.ops.push_back({OpKind::Insertion, std::nullopt, j});
      ++a.counts.insertions;
    }
  }
  std::reverse(a.ops.begin(), a.ops.end());
  return a;
}

std::int64_t score_ops(const std::vector<AlignmentOp>& ops, std::span<const std::string> ref,
                       std::span<const std::string> hyp, const ScoringParams& params) {
  std::int64_t s = 0;
  for (const auto& op : ops) {
    switch (op.kind) {
      case OpKind::Match:
      case OpKind::Substitution:
        s += ref[*op.ref_index] == hyp[*op.hyp_index] ? params.match_score
                                                      : params.mismatch_score;
        break;
      case OpKind::Insertion:
      case OpKind::Deletion:
        s += params.gap_score;
        break;
    }
  }
  return s;
}

std::string_view align_mode_name(AlignMode m) {
  return m == AlignMode::Merged ? "merged" : "per-speaker";
}

std::optional<AlignMode> parse_align_mode(std::string_view s) {
  if (s == "merged") return AlignMode::Merged;
  if (s == "per-speaker") return AlignMode::PerSpeaker;
  return std::nullopt;
}

std::vector<Token> alignable_tokens(const std::vector<Token>& tokens) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (t.is_word()) out.push_back(t);
  }
  return out;
}

namespace {

AlignedStreams align_streams(std::string speaker, std::vector<Token> ref_all,
                             std::vector<Token> hyp_all, const ScoringParams& params) {
  AlignedStreams s;
  s.speaker = std::move(speaker);
  s.ref_tokens = alignable_tokens(ref_all);
  s.hyp_tokens = alignable_tokens(hyp_all);
  for (const auto& t : s.ref_tokens) {
    s.ref_keys.push_back(comparison_key(t));
    if (t.features.contains(Feature::Uncertain)) ++s.ref_uncertain;
  }
  for (const auto& t : s.hyp_tokens) {
    s.hyp_keys.push_back(comparison_key(t));
    if (t.features.contains(Feature::Uncertain)) ++s.hyp_uncertain;
  }
  s.alignment = needleman_wunsch(s.ref_keys, s.hyp_keys, params);
  return s;
}

}  // namespace

AlignmentResult align_transcripts(const Transcript& ref, const Transcript& hyp, AlignMode mode,
                                  const ScoringParams& params) {
  params.validate();
  const auto window = temporal_window(ref, hyp);
  if (!window) throw DomainError("no temporal overlap between transcripts");
  const auto ref_slice = slice_by_window(ref, window);
  const auto hyp_slice = slice_by_window(hyp, window);

  AlignmentResult res;
  res.mode = mode;
  res.window = *window;
  if (mode == AlignMode::Merged) {
    res.parts.push_back(
        align_streams({}, flatten_tokens(ref_slice), flatten_tokens(hyp_slice), params));
  } else {
    auto ref_by = flatten_tokens_by_speaker(ref_slice);
    auto hyp_by = flatten_tokens_by_speaker(hyp_slice);
    std::set<std::string> speakers;
    for (const auto& [k, v] : ref_by) speakers.insert(k);
    for (const auto& [k, v] : hyp_by) speakers.insert(k);
    for (const auto& sp : speakers) {
      res.parts.push_back(align_streams(sp, std::move(ref_by[sp]), std::move(hyp_by[sp]), params));
    }
  }
  for (auto& p : res.parts) {
    p.alignment.window = window;
    res.total += p.alignment.counts;
  }
  return res;
}

std::string render_alignment(const AlignedStreams& s) {
  // Columns are padded by code point count so accented words line up.
  std::string top, bottom, marks;
  const auto pad = [](std::string& line, std::string_view word, std::size_t width) {
    line += word;
    line.append(width - utf8::length(word), ' ');
    line += ' ';
  };
  for (const auto& op : s.alignment.ops) {
    const std::string_view r =
        op.ref_index ? std::string_view(s.ref_tokens[*op.ref_index].surface) : kGapSymbol;
    const std::string_view h =
        op.hyp_index ? std::string_view(s.hyp_tokens[*op.hyp_index].surface) : kGapSymbol;
    const std::size_t w = std::max(utf8::length(r), utf8::length(h));
    pad(top, r, w);
    pad(bottom, h, w);
    const char tag = op.kind == OpKind::Match          ? ' '
                     : op.kind == OpKind::Substitution ? 'S'
                     : op.kind == OpKind::Insertion    ? 'I'
                                                       : 'D';
    std::string col(1, tag);
    pad(marks, col, w);
  }
  const auto rstrip = [](std::string& l) {
    while (!l.empty() && l.back() == ' ') l.pop_back();
  };
  rstrip(top);
  rstrip(bottom);
  rstrip(marks);
  return "REF: " + top + "\nHYP: " + bottom + "\n     " + marks + "\n";
}

}  // namespace tqa
