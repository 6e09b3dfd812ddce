// core/src/report.cpp

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

#include "tqa/report.hpp"

namespace tqa::report {

namespace {

template <typename T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json opt2(const std::optional<double>& v) { return v ? Json(round2(*v)) : Json(nullptr); }

double secs(std::int64_t ms) { return static_cast<double>(ms) / 1000.0; }

}  // namespace

Json header(std::string_view command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

Json input(const TranscriptDocument& doc, std::string_view role) {
  Json j;
  j["role"] = role;
  j["label"] = doc.transcript.source_label();
  j["origin"] = origin_name(doc.origin);
  j["paths"] = doc.paths;
  j["tu_count"] = doc.transcript.size();
  return j;
}

Json interval(const TimeInterval& iv) {
  return Json{{"start", iv.start()}, {"end", iv.end()}};
}

Json counts(const EditCounts& c) {
  Json j;
  j["S"] = c.substitutions;
  j["D"] = c.deletions;
  j["I"] = c.insertions;
  j["C"] = c.correct;
  j["N"] = c.reference_length();
  return j;
}

Json wer(const WerReport& w) {
  Json j;
  j["wer"] = opt(w.wer);
  j["wer_percent"] = w.wer ? Json(round2(*w.wer * 100.0)) : Json(nullptr);
  j["S"] = w.substitutions;
  j["D"] = w.deletions;
  j["I"] = w.insertions;
  j["C"] = w.correct;
  j["N"] = w.reference_words;
  j["warnings"] = w.warnings;
  return j;
}

Json alignment(const AlignmentResult& a, bool with_ops) {
  Json j;
  j["mode"] = align_mode_name(a.mode);
  j["window"] = interval(a.window);
  j["total"] = counts(a.total);
  Json parts = Json::array();
  for (const auto& p : a.parts) {
    Json pj;
    pj["speaker"] = p.speaker.empty() ? Json(nullptr) : Json(p.speaker);
    pj["counts"] = counts(p.alignment.counts);
    pj["score"] = p.alignment.score;
    pj["ref_tokens"] = p.ref_tokens.size();
    pj["hyp_tokens"] = p.hyp_tokens.size();
    // Uncertain guesses are aligned as ordinary words; flag how many there were.
    pj["uncertain_tokens"] = Json{{"ref", p.ref_uncertain}, {"hyp", p.hyp_uncertain}};
    pj["uncertain_included"] = p.ref_uncertain + p.hyp_uncertain > 0;
    if (with_ops) {
      Json ops = Json::array();
      for (const auto& op : p.alignment.ops) {
        Json o;
        o["kind"] = op_kind_name(op.kind);
        if (op.ref_index) {
          o["ref_index"] = *op.ref_index;
          o["ref_token"] = p.ref_tokens[*op.ref_index].surface;
        }
        if (op.hyp_index) {
          o["hyp_index"] = *op.hyp_index;
          o["hyp_token"] = p.hyp_tokens[*op.hyp_index].surface;
        }
        ops.push_back(std::move(o));
      }
      pj["ops"] = std::move(ops);
    }
    parts.push_back(std::move(pj));
  }
  j["parts"] = std::move(parts);
  return j;
}

Json per_minute(const std::vector<PerMinuteStats>& bins) {
  Json arr = Json::array();
  for (const auto& s : bins) {
    Json j;
    j["minute"] = s.minute;
    j["tu_count"] = s.tu_count;
    j["tu_duration_s"] = s.tu_duration_s();
    j["linguistic_tokens"] = s.linguistic_tokens;
    j["total_tokens"] = s.total_tokens;
    j["types"] = s.types;
    j["non_verbal_count"] = s.non_verbal_count;
    j["short_pause_count"] = s.short_pause_count;
    j["unknown_count"] = s.unknown_count;
    j["uncertain_count"] = s.uncertain_count;
    j["error_count"] = s.error_count;
    j["intonation_count"] = s.intonation_count;
    j["prolongation_count"] = s.prolongation_count;
    j["overlap_token_count"] = s.overlap_token_count;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json summary(const SummaryStats& s) {
  Json j;
  j["total_tus"] = s.total_tus;
  j["linguistic_tokens"] = s.linguistic_tokens;
  j["types"] = s.types;
  j["span_minutes"] = opt(s.span_minutes);
  j["avg_tokens_per_tu"] = opt2(s.avg_tokens_per_tu);
  j["avg_tu_duration_s"] = opt2(s.avg_tu_duration_s);
  j["tokens_per_min"] = opt2(s.tokens_per_min);
  j["types_per_min"] = opt2(s.types_per_min);
  j["rate_denominator"] = "transcribed span (first TU start to last TU end)";
  return j;
}

Json deltas(const DeltaTable& d) {
  Json j;
  j["convention_note"] = d.convention_note;
  j["minutes"] = d.first_n_minutes;
  Json rows = Json::array();
  for (const auto& r : d.rows) {
    Json rj;
    rj["measure"] = measure_name(r.measure);
    rj["minute"] = r.minute;
    rj["gold"] = r.gold;
    rj["candidate"] = r.candidate;
    rj["delta"] = r.rounded_delta();
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json validation_issue(const ValidationIssue& v) {
  Json j;
  j["tu_index"] = v.tu_index;
  j["kind"] = issue_kind_name(v.kind);
  j["symbol"] = v.symbol;
  j["detail"] = v.detail;
  j["span"] = Json{{"begin", v.span.begin}, {"end", v.span.end}};
  return j;
}

Json overlap_issue(const OverlapIssue& is, const Transcript& t) {
  Json j;
  j["kind"] = overlap_kind_name(is.kind);
  j["severity"] = severity_name(is.severity);
  Json tus = Json::array();
  for (const auto i : is.tus) {
    const auto& u = t[i];
    tus.push_back(Json{{"index", i},
                       {"speaker", u.speaker.str()},
                       {"start", u.interval.start()},
                       {"end", u.interval.end()}});
  }
  j["tus"] = std::move(tus);
  j["temporal_overlap_s"] = secs(is.overlap_ms);
  j["asymmetric"] = is.asymmetric;
  j["note"] = is.note;
  return j;
}

Json group_summary(const std::vector<GroupSeverity>& groups) {
  Json arr = Json::array();
  for (const auto& g : groups) {
    Json j;
    j["group"] = g.group;
    j["counts"] = Json{{"severe", g.counts[2]}, {"mild", g.counts[1]}, {"non_severe", g.counts[0]}};
    if (g.percentages) {
      const auto& p = *g.percentages;
      j["percentages"] =
          Json{{"severe", round2(p[2])}, {"mild", round2(p[1])}, {"non_severe", round2(p[0])}};
    } else {
      j["percentages"] = nullptr;
    }
    j["note"] = g.note;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json mismatch(const MismatchRecord& r) {
  Json j;
  j["id"] = r.id;
  j["op"] = op_kind_name(r.op.kind);
  j["ref_index"] = opt(r.op.ref_index);
  j["hyp_index"] = opt(r.op.hyp_index);
  j["ref_token"] = opt(r.ref_token);
  j["hyp_token"] = opt(r.hyp_token);
  j["category"] = category_name(r.category);
  j["confidence"] = confidence_name(r.confidence);
  return j;
}

Json mismatch_group(const MismatchGroup& g) {
  Json j = mismatch(g.merged);
  j["members"] = g.member_ids;
  return j;
}

Json content_lengths(const ContentLengthStats& s) {
  Json j;
  j["added"] = s.added;
  j["added_avg_chars"] = opt2(s.added_avg_chars);
  j["skipped"] = s.skipped;
  j["skipped_avg_chars"] = opt2(s.skipped_avg_chars);
  j["reference_avg_chars"] = opt2(s.reference_avg_chars);
  return j;
}

Json category_table(const std::map<MismatchCategory, std::size_t>& counts) {
  Json j = Json::object();
  for (const auto& [c, n] : counts) j[std::string(category_name(c))] = n;
  return j;
}

}  // namespace tqa::report
