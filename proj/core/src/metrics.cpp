// core/src/metrics.cpp

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

#include "tqa/metrics.hpp"

#include <cmath>
#include <ostream>
#include <set>

#include <fmt/format.h>

#include "tqa/csv.hpp"
#include "tqa/error.hpp"
#include "tqa/jefferson.hpp"

namespace tqa {

WerReport compute_wer(const EditCounts& c) {
  WerReport r;
  r.substitutions = c.substitutions;
  r.deletions = c.deletions;
  r.insertions = c.insertions;
  r.correct = c.correct;
  r.reference_words = c.reference_length();
  if (r.reference_words == 0) {
    r.warnings.emplace_back("reference has no words in the shared window; WER is undefined");
  } else {
    r.wer = static_cast<double>(c.errors()) / static_cast<double>(r.reference_words);
  }
  return r;
}

namespace {

const std::vector<Token>& tokens_of(const TranscriptionUnit& u) {
  if (!u.tokens) throw DomainError("transcript is not tokenized");
  return *u.tokens;
}

// Adds one TU to `s`; `keys` collects comparison keys for the type count.
void accumulate(PerMinuteStats& s, std::set<std::string>& keys, const TranscriptionUnit& u) {
  ++s.tu_count;
  s.tu_duration_ms += u.interval.duration_ms();
  s.error_count += u.issues.size();
  for (const auto& tok : tokens_of(u)) {
    switch (tok.kind) {
      case TokenKind::Linguistic:
        ++s.linguistic_tokens;
        break;
      case TokenKind::Unintelligible:
        ++s.linguistic_tokens;
        ++s.unknown_count;
        break;
      case TokenKind::NonVerbal:
        ++s.non_verbal_count;
        break;
      case TokenKind::ShortPause:
        ++s.short_pause_count;
        break;
    }
    if (tok.is_word()) keys.insert(comparison_key(tok));
    if (tok.features.contains(Feature::Uncertain)) ++s.uncertain_count;
    if (tok.features.has_intonation()) ++s.intonation_count;
    if (tok.features.contains(Feature::Prolongation)) ++s.prolongation_count;
    if (tok.features.contains(Feature::Overlap)) ++s.overlap_token_count;
  }
  s.total_tokens = s.linguistic_tokens + s.non_verbal_count;
}

}  // namespace

std::vector<PerMinuteStats> per_minute_stats(const Transcript& t,
                                             std::optional<std::size_t> max_minutes) {
  std::vector<PerMinuteStats> bins;
  std::vector<std::set<std::string>> keys;
  if (max_minutes) {
    bins.resize(*max_minutes);
    keys.resize(*max_minutes);
  }
  for (const auto& u : t.units()) {
    const auto m = static_cast<std::size_t>(u.interval.start_ms() / kMinuteMs);
    if (max_minutes && m >= *max_minutes) {
      tokens_of(u);  // still reject untokenized input
      continue;
    }
    if (m >= bins.size()) {
      bins.resize(m + 1);
      keys.resize(m + 1);
    }
    accumulate(bins[m], keys[m], u);
  }
  for (std::size_t m = 0; m < bins.size(); ++m) {
    bins[m].minute = m;
    bins[m].types = keys[m].size();
  }
  return bins;
}

SummaryStats summary_stats(const Transcript& t) {
  SummaryStats s;
  if (t.empty()) return s;
  PerMinuteStats all;
  std::set<std::string> keys;
  for (const auto& u : t.units()) accumulate(all, keys, u);
  s.total_tus = all.tu_count;
  s.linguistic_tokens = all.linguistic_tokens;
  s.types = keys.size();
  const auto n = static_cast<double>(s.total_tus);
  s.avg_tokens_per_tu = static_cast<double>(all.linguistic_tokens) / n;
  s.avg_tu_duration_s = all.tu_duration_s() / n;
  const auto span_ms = t.span().duration_ms();
  if (span_ms > 0) {
    const double minutes = static_cast<double>(span_ms) / static_cast<double>(kMinuteMs);
    s.span_minutes = minutes;
    s.tokens_per_min = static_cast<double>(all.linguistic_tokens) / minutes;
    s.types_per_min = static_cast<double>(s.types) / minutes;
  }
  return s;
}

namespace {

struct MeasureInfo {
  Measure m;
  std::string_view name;
};

constexpr MeasureInfo kMeasureNames[] = {
    {Measure::TuCount, "tu_count"},
    {Measure::TuDuration, "tu_duration_s"},
    {Measure::LinguisticTokens, "linguistic_tokens"},
    {Measure::TotalTokens, "total_tokens"},
    {Measure::Types, "types"},
    {Measure::NonVerbal, "non_verbal_count"},
    {Measure::ShortPauses, "short_pause_count"},
    {Measure::Unknown, "unknown_count"},
    {Measure::Uncertain, "uncertain_count"},
    {Measure::Errors, "error_count"},
    {Measure::Intonation, "intonation_count"},
    {Measure::Prolongations, "prolongation_count"},
    {Measure::OverlapTokens, "overlap_token_count"},
};

}  // namespace

std::string_view measure_name(Measure m) {
  for (const auto& i : kMeasureNames) {
    if (i.m == m) return i.name;
  }
  return "?";
}

std::optional<Measure> parse_measure(std::string_view s) {
  for (const auto& i : kMeasureNames) {
    if (i.name == s) return i.m;
  }
  return std::nullopt;
}

std::int64_t measure_milli(const PerMinuteStats& s, Measure m) {
  const auto count = [](std::size_t n) { return static_cast<std::int64_t>(n) * 1000; };
  switch (m) {
    case Measure::TuCount: return count(s.tu_count);
    case Measure::TuDuration: return s.tu_duration_ms;
    case Measure::LinguisticTokens: return count(s.linguistic_tokens);
    case Measure::TotalTokens: return count(s.total_tokens);
    case Measure::Types: return count(s.types);
    case Measure::NonVerbal: return count(s.non_verbal_count);
    case Measure::ShortPauses: return count(s.short_pause_count);
    case Measure::Unknown: return count(s.unknown_count);
    case Measure::Uncertain: return count(s.uncertain_count);
    case Measure::Errors: return count(s.error_count);
    case Measure::Intonation: return count(s.intonation_count);
    case Measure::Prolongations: return count(s.prolongation_count);
    case Measure::OverlapTokens: return count(s.overlap_token_count);
  }
  return 0;
}

double measure_value(const PerMinuteStats& s, Measure m) {
  return static_cast<double>(measure_milli(s, m)) / 1000.0;
}

double round_milli_2dp(std::int64_t milli) {
  // Integer rounding keeps the result symmetric and free of binary noise.
  const std::int64_t mag = milli < 0 ? -milli : milli;
  std::int64_t centi = (mag + 5) / 10;
  if (milli < 0) centi = -centi;
  return static_cast<double>(centi) / 100.0;
}

double round2(double x) {
  const double r = std::round(std::fabs(x) * 100.0) / 100.0;
  return x < 0 ? -r : r;
}

DeltaTable compute_deltas(const std::vector<PerMinuteStats>& gold,
                          const std::vector<PerMinuteStats>& cand, std::size_t first_n_minutes,
                          const std::vector<Measure>& measures) {
  DeltaTable table;
  table.first_n_minutes = first_n_minutes;
  const PerMinuteStats zero;
  const auto bin = [&](const std::vector<PerMinuteStats>& v, std::size_t m) -> const PerMinuteStats& {
    return m < v.size() ? v[m] : zero;
  };
  for (const Measure meas : measures) {
    for (std::size_t m = 0; m <= first_n_minutes; ++m) {
      const auto g = measure_milli(bin(gold, m), meas);
      const auto c = measure_milli(bin(cand, m), meas);
      table.rows.push_back({meas, m, static_cast<double>(g) / 1000.0,
                            static_cast<double>(c) / 1000.0, c - g});
    }
  }
  return table;
}

namespace {

std::string format_milli(std::int64_t milli) {
  if (milli % 1000 == 0) return fmt::format("{}", milli / 1000);
  return fmt::format("{}", static_cast<double>(milli) / 1000.0);
}

std::string format_2dp(double v) { return fmt::format("{:.2f}", v == 0.0 ? 0.0 : v); }

}  // namespace

void export_longform(const std::vector<LongformRun>& runs, const std::vector<Measure>& measures,
                     std::ostream& out) {
  for (const auto& r : runs) {
    if (!r.transcript.meta()) {
      throw DomainError("transcript '" + r.transcript.source_label() +
                        "' has no transcriber metadata");
    }
  }
  csv::write_row(out, {"transcriber", "expert", "phase", "data", "minutes", "measure", "value",
                       "delta_value"});
  const PerMinuteStats zero;
  for (const auto& r : runs) {
    const auto& meta = *r.transcript.meta();
    for (const auto& s : r.stats) {
      for (const Measure m : measures) {
        const auto v = measure_milli(s, m);
        std::string delta;
        if (r.gold) {
          const auto& g = s.minute < r.gold->size() ? (*r.gold)[s.minute] : zero;
          delta = format_2dp(round_milli_2dp(v - measure_milli(g, m)));
        }
        csv::write_row(out, {meta.transcriber, std::string(expertise_name(meta.expert)),
                             std::string(phase_name(meta.phase)), meta.data_type,
                             std::to_string(s.minute), std::string(measure_name(m)),
                             format_milli(v), delta});
      }
    }
  }
}

}  // namespace tqa
