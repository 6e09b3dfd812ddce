// tqa/metrics.hpp

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
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tqa/aligner.hpp"
#include "tqa/model.hpp"

namespace tqa {

// ---- WER ---------------------------------------------------------------------

struct WerReport {
  std::optional<double> wer;  // absent when N == 0
  std::size_t substitutions = 0;
  std::size_t deletions = 0;
  std::size_t insertions = 0;
  std::size_t correct = 0;
  std::size_t reference_words = 0;  // N = S + D + C
  std::vector<std::string> warnings;
};

/// wer = (S + D + I) / N.
WerReport compute_wer(const EditCounts& counts);
inline WerReport compute_wer(const Alignment& a) { return compute_wer(a.counts); }

// ---- per-minute statistics -----------------------------------------------------

inline constexpr std::int64_t kMinuteMs = 60'000;

struct PerMinuteStats {
  std::size_t minute = 0;  // bin [60·minute, 60·(minute+1)) seconds, keyed by TU start
  std::size_t tu_count = 0;
  std::int64_t tu_duration_ms = 0;
  std::size_t linguistic_tokens = 0;  // Linguistic + Unintelligible
  std::size_t total_tokens = 0;       // linguistic + non-verbal
  std::size_t types = 0;              // distinct comparison keys
  std::size_t non_verbal_count = 0;
  std::size_t short_pause_count = 0;
  std::size_t unknown_count = 0;  // Unintelligible tokens
  std::size_t uncertain_count = 0;
  std::size_t error_count = 0;  // validation issues
  std::size_t intonation_count = 0;
  std::size_t prolongation_count = 0;
  std::size_t overlap_token_count = 0;

  double tu_duration_s() const { return static_cast<double>(tu_duration_ms) / 1000.0; }
  friend bool operator==(const PerMinuteStats&, const PerMinuteStats&) = default;
};

/// Requires a tokenized transcript (DomainError otherwise). Bins are
/// zero-filled up to the last populated minute; with `max_minutes` exactly
/// that many bins are returned and later TUs are ignored.
std::vector<PerMinuteStats> per_minute_stats(const Transcript& t,
                                             std::optional<std::size_t> max_minutes = {});

struct SummaryStats {
  std::size_t total_tus = 0;
  std::size_t linguistic_tokens = 0;
  std::size_t types = 0;
  std::optional<double> span_minutes;
  std::optional<double> avg_tokens_per_tu;
  std::optional<double> avg_tu_duration_s;
  std::optional<double> tokens_per_min;
  std::optional<double> types_per_min;
};

/// Rates use the transcribed span (first start to last end) as denominator.
SummaryStats summary_stats(const Transcript& t);

// ---- deltas --------------------------------------------------------------------

enum class Measure : std::uint8_t {
  TuCount,
  TuDuration,
  LinguisticTokens,
  TotalTokens,
  Types,
  NonVerbal,
  ShortPauses,
  Unknown,
  Uncertain,
  Errors,
  Intonation,
  Prolongations,
  OverlapTokens,
};

inline constexpr std::array<Measure, 13> kAllMeasures = {
    Measure::TuCount,       Measure::TuDuration, Measure::LinguisticTokens, Measure::TotalTokens,
    Measure::Types,         Measure::NonVerbal,  Measure::ShortPauses,      Measure::Unknown,
    Measure::Uncertain,     Measure::Errors,     Measure::Intonation,       Measure::Prolongations,
    Measure::OverlapTokens,
};

std::string_view measure_name(Measure m);
std::optional<Measure> parse_measure(std::string_view s);

/// Value of `m` in thousandths of its unit (milliseconds for durations), so
/// differences are exact integers.
std::int64_t measure_milli(const PerMinuteStats& s, Measure m);
double measure_value(const PerMinuteStats& s, Measure m);

/// Rounds a thousandths value to two decimals, half away from zero.
double round_milli_2dp(std::int64_t milli);

/// Half away from zero, symmetric in sign.
double round2(double x);

inline constexpr std::string_view kDeltaConvention = "delta = candidate \xE2\x88\x92 gold";

struct DeltaRow {
  Measure measure = Measure::TuCount;
  std::size_t minute = 0;
  double gold = 0;
  double candidate = 0;
  std::int64_t delta_milli = 0;  // exact candidate - gold

  double delta() const { return static_cast<double>(delta_milli) / 1000.0; }
  double rounded_delta() const { return round_milli_2dp(delta_milli); }
};

struct DeltaTable {
  std::size_t first_n_minutes = 2;
  std::vector<DeltaRow> rows;  // measure-major, then minute
  std::string convention_note{kDeltaConvention};
};

/// Bins 0..first_n_minutes inclusive; missing bins count as zeros.
DeltaTable compute_deltas(const std::vector<PerMinuteStats>& gold,
                          const std::vector<PerMinuteStats>& cand, std::size_t first_n_minutes = 2,
                          const std::vector<Measure>& measures = {kAllMeasures.begin(),
                                                                  kAllMeasures.end()});

// ---- long-format export ----------------------------------------------------------

struct LongformRun {
  Transcript transcript;  // must carry meta
  std::vector<PerMinuteStats> stats;
  std::optional<std::vector<PerMinuteStats>> gold;  // enables delta_value
};

/// CSV with header transcriber,expert,phase,data,minutes,measure,value,delta_value.
/// One row per (run, minute, measure), runs in input order. Throws
/// DomainError naming the transcript when meta is missing.
void export_longform(const std::vector<LongformRun>& runs, const std::vector<Measure>& measures,
                     std::ostream& out);

}  // namespace tqa
