// core/src/model.cpp

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

#include "tqa/model.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "tqa/error.hpp"

namespace tqa {

TimeInterval TimeInterval::from_millis(std::int64_t start_ms, std::int64_t end_ms) {
  if (start_ms < 0 || end_ms < 0) throw DomainError("negative time in interval");
  if (start_ms > end_ms) throw DomainError("interval start is after its end");
  return TimeInterval(start_ms, end_ms);
}

TimeInterval TimeInterval::from_seconds(double start, double end) {
  if (!std::isfinite(start) || !std::isfinite(end)) throw DomainError("non-finite time");
  return from_millis(seconds_to_millis(start), seconds_to_millis(end));
}

std::int64_t seconds_to_millis(double seconds) {
  return static_cast<std::int64_t>(std::llround(seconds * 1000.0));
}

bool intersects(const TimeInterval& a, const TimeInterval& b) {
  return a.start_ms() < b.end_ms() && a.end_ms() > b.start_ms();
}

std::int64_t intersection_ms(const TimeInterval& a, const TimeInterval& b) {
  const auto lo = std::max(a.start_ms(), b.start_ms());
  const auto hi = std::min(a.end_ms(), b.end_ms());
  return hi > lo ? hi - lo : 0;
}

SpeakerId::SpeakerId(std::string id) : id_(std::move(id)) {
  if (id_.empty()) throw DomainError("empty speaker id");
  if (id_.find_first_of("\t\n\r") != std::string::npos) {
    throw DomainError("speaker id contains tab or newline: " + id_);
  }
}

std::string_view phase_name(Phase p) { return p == Phase::Manual ? "manual" : "asr"; }

std::optional<Phase> parse_phase(std::string_view s) {
  if (s == "manual" || s == "Manual" || s == "MANUAL") return Phase::Manual;
  if (s == "asr" || s == "ASR" || s == "Asr" || s == "asr-assisted" || s == "ASR-assisted") {
    return Phase::Asr;
  }
  return std::nullopt;
}

std::string_view expertise_name(bool expert) { return expert ? "expert" : "novice"; }

TranscriptionUnit::TranscriptionUnit(SpeakerId speaker, TimeInterval interval,
                                     std::string raw_text)
    : speaker(std::move(speaker)), interval(interval), raw_text(std::move(raw_text)) {
  if (this->raw_text.find_first_of("\t\n\r") != std::string::npos) {
    throw DomainError("TU text contains tab or newline characters");
  }
}

Transcript::Transcript(std::vector<TranscriptionUnit> units, std::string source_label,
                       std::optional<TranscriberMeta> meta)
    : units_(std::move(units)), source_label_(std::move(source_label)), meta_(std::move(meta)) {
  using Key = std::tuple<std::int64_t, const std::string&, std::int64_t, const std::string&>;
  const auto key = [](const TranscriptionUnit& u) {
    return Key(u.interval.start_ms(), u.speaker.str(), u.interval.end_ms(), u.raw_text);
  };
  std::stable_sort(units_.begin(), units_.end(),
                   [&](const TranscriptionUnit& a, const TranscriptionUnit& b) {
                     return key(a) < key(b);
                   });
}

Transcript Transcript::with_meta(std::optional<TranscriberMeta> meta) const {
  Transcript t = *this;
  t.meta_ = std::move(meta);
  return t;
}

Transcript Transcript::with_label(std::string label) const {
  Transcript t = *this;
  t.source_label_ = std::move(label);
  return t;
}

bool Transcript::tokenized() const {
  return std::all_of(units_.begin(), units_.end(),
                     [](const TranscriptionUnit& u) { return u.tokens.has_value(); });
}

TimeInterval Transcript::span() const {
  if (units_.empty()) throw DomainError("empty transcript");
  std::int64_t end = 0;
  for (const auto& u : units_) end = std::max(end, u.interval.end_ms());
  return TimeInterval::from_millis(units_.front().interval.start_ms(), end);
}

Window temporal_window(const Transcript& a, const Transcript& b) {
  const auto sa = a.span();
  const auto sb = b.span();
  const auto lo = std::max(sa.start_ms(), sb.start_ms());
  const auto hi = std::min(sa.end_ms(), sb.end_ms());
  if (lo > hi) return std::nullopt;
  return TimeInterval::from_millis(lo, hi);
}

Transcript slice_by_window(const Transcript& t, const Window& w) {
  std::vector<TranscriptionUnit> kept;
  if (w) {
    for (const auto& u : t.units()) {
      if (intersects(u.interval, *w)) kept.push_back(u);
    }
  }
  return Transcript(std::move(kept), t.source_label(), t.meta());
}

namespace {

const std::vector<Token>& tokens_of(const TranscriptionUnit& u) {
  if (!u.tokens) {
    throw DomainError("transcript is not tokenized (TU at " +
                      std::to_string(u.interval.start()) + " s)");
  }
  return *u.tokens;
}

}  // namespace

std::vector<Token> flatten_tokens(const Transcript& t) {
  std::vector<Token> out;
  for (const auto& u : t.units()) {
    const auto& toks = tokens_of(u);
    out.insert(out.end(), toks.begin(), toks.end());
  }
  return out;
}

std::map<std::string, std::vector<Token>> flatten_tokens_by_speaker(const Transcript& t) {
  std::map<std::string, std::vector<Token>> out;
  for (const auto& u : t.units()) {
    const auto& toks = tokens_of(u);
    auto& seq = out[u.speaker.str()];
    seq.insert(seq.end(), toks.begin(), toks.end());
  }
  return out;
}

}  // namespace tqa
