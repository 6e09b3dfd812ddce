// tqa/model.hpp

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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tqa/token.hpp"

namespace tqa {

/// Closed time interval in seconds, stored as integer milliseconds so that
/// interval arithmetic and threshold comparisons are exact.
class TimeInterval {
 public:
  TimeInterval() = default;

  /// Throws DomainError unless 0 <= start_ms <= end_ms.
  static TimeInterval from_millis(std::int64_t start_ms, std::int64_t end_ms);
  /// Seconds are rounded to the nearest millisecond.
  static TimeInterval from_seconds(double start, double end);

  std::int64_t start_ms() const noexcept { return start_; }
  std::int64_t end_ms() const noexcept { return end_; }
  double start() const noexcept { return static_cast<double>(start_) / 1000.0; }
  double end() const noexcept { return static_cast<double>(end_) / 1000.0; }
  std::int64_t duration_ms() const noexcept { return end_ - start_; }
  double duration() const noexcept { return static_cast<double>(duration_ms()) / 1000.0; }

  friend bool operator==(const TimeInterval&, const TimeInterval&) = default;

 private:
  TimeInterval(std::int64_t s, std::int64_t e) : start_(s), end_(e) {}
  std::int64_t start_ = 0;
  std::int64_t end_ = 0;
};

/// Nonzero intersection: a.start < b.end and a.end > b.start.
bool intersects(const TimeInterval& a, const TimeInterval& b);
/// Length of the intersection in milliseconds, 0 when disjoint.
std::int64_t intersection_ms(const TimeInterval& a, const TimeInterval& b);

std::int64_t seconds_to_millis(double seconds);

/// A shared window; std::nullopt is the empty-window marker.
using Window = std::optional<TimeInterval>;

class SpeakerId {
 public:
  /// Throws DomainError on empty labels or labels containing tab/newline.
  explicit SpeakerId(std::string id);
  const std::string& str() const noexcept { return id_; }
  auto operator<=>(const SpeakerId&) const = default;

 private:
  std::string id_;
};

enum class Phase : std::uint8_t { Manual, Asr };

std::string_view phase_name(Phase p);  // "manual" | "asr"
std::optional<Phase> parse_phase(std::string_view s);

/// Who produced a transcript and under which condition.
struct TranscriberMeta {
  std::string transcriber;
  bool expert = false;
  Phase phase = Phase::Manual;
  std::string data_type;  // e.g. "interview", "free-conversation", "L2-interview"
  friend bool operator==(const TranscriberMeta&, const TranscriberMeta&) = default;
};

std::string_view expertise_name(bool expert);  // "expert" | "novice"

struct TranscriptionUnit {
  SpeakerId speaker;
  TimeInterval interval;
  std::string raw_text;
  // Populated by tokenize_transcript(); absent until then.
  std::optional<std::vector<Token>> tokens;
  std::vector<ValidationIssue> issues;

  /// Throws DomainError if raw_text contains tab or newline characters.
  TranscriptionUnit(SpeakerId speaker, TimeInterval interval, std::string raw_text);
};

/// An immutable, time-sorted list of TUs. Units are ordered by
/// (start, speaker, end, raw_text), which is total and deterministic.
class Transcript {
 public:
  Transcript() = default;
  explicit Transcript(std::vector<TranscriptionUnit> units, std::string source_label = {},
                      std::optional<TranscriberMeta> meta = std::nullopt);

  const std::vector<TranscriptionUnit>& units() const noexcept { return units_; }
  const TranscriptionUnit& operator[](std::size_t i) const { return units_.at(i); }
  std::size_t size() const noexcept { return units_.size(); }
  bool empty() const noexcept { return units_.empty(); }

  const std::string& source_label() const noexcept { return source_label_; }
  const std::optional<TranscriberMeta>& meta() const noexcept { return meta_; }

  Transcript with_meta(std::optional<TranscriberMeta> meta) const;
  Transcript with_label(std::string label) const;

  bool tokenized() const;
  /// [first start, last end]; throws DomainError("empty transcript").
  TimeInterval span() const;

 private:
  std::vector<TranscriptionUnit> units_;
  std::string source_label_;
  std::optional<TranscriberMeta> meta_;
};

/// [max of starts, min of ends] of the two spans, or the empty-window marker
/// when that range is inverted. Throws DomainError("empty transcript").
Window temporal_window(const Transcript& a, const Transcript& b);

/// TUs with nonzero intersection with `w`, order preserved.
Transcript slice_by_window(const Transcript& t, const Window& w);

/// Merged: every TU's tokens in transcript order. Throws DomainError when a
/// TU has not been tokenized.
std::vector<Token> flatten_tokens(const Transcript& t);
/// One sequence per speaker, TUs in start order.
std::map<std::string, std::vector<Token>> flatten_tokens_by_speaker(const Transcript& t);

}  // namespace tqa
