// tools/cli.cpp

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

#include "cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/chrono.h>
#include <fmt/format.h>

#include "tqa/aligner.hpp"
#include "tqa/csv.hpp"
#include "tqa/error.hpp"
#include "tqa/io.hpp"
#include "tqa/jefferson.hpp"
#include "tqa/metrics.hpp"
#include "tqa/mismatch.hpp"
#include "tqa/normalizer.hpp"
#include "tqa/overlap.hpp"
#include "tqa/report.hpp"

#ifndef TQA_VERSION
#define TQA_VERSION "dev"
#endif

namespace tqa::cli {

namespace {

using report::Json;

struct RunConfig {
  std::string format = "json";
  std::string output;  // empty: stdout
  std::string report_path;
  std::string corrections;
  bool normalize = false;
  ScoringParams scoring;
  double threshold = kDefaultMildThresholdS;
  std::optional<std::size_t> minutes;
  std::string mode = "merged";
  std::string lexicon;
  std::string review_csv;
  std::string overrides;
  std::string manifest;
  bool stamp = false;
  bool asr_raw = false;
};

// ---- shared plumbing ------------------------------------------------------------

struct Input {
  TranscriptDocument doc;
  Transcript tokens;  // normalized (if requested) and tokenized
  std::vector<std::string> log;
};

NormalizationConfig normalization_config(const RunConfig& cfg) {
  NormalizationConfig n;
  if (!cfg.corrections.empty()) {
    n.corrections = merge_rules(n.corrections, load_correction_rules(cfg.corrections));
  }
  CorrectionTable check(n.corrections);  // rejects chained rules up front
  return n;
}

Input prepare(TranscriptDocument doc, const RunConfig& cfg) {
  Input in;
  Transcript t = doc.transcript;
  if (cfg.normalize) {
    auto n = normalize_transcript(t, normalization_config(cfg));
    t = std::move(n.transcript);
    in.log = std::move(n.log);
  }
  in.tokens = tokenize_transcript(t);
  in.doc = std::move(doc);
  return in;
}

Input load(const std::string& path, const RunConfig& cfg, bool asr_raw = false) {
  return prepare(asr_raw ? read_asr_raw(path) : read_transcript(path), cfg);
}

std::string dump(const Json& j) {
  return j.dump(2, ' ', false, Json::error_handler_t::replace) + "\n";
}

Json base_report(std::string_view command, const RunConfig& cfg) {
  Json j = report::header(command);
  if (cfg.stamp) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    j["generated_at"] = fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(now));
  }
  return j;
}

Json inputs(std::initializer_list<std::pair<const Input*, std::string_view>> items) {
  Json arr = Json::array();
  for (const auto& [in, role] : items) arr.push_back(report::input(in->doc, role));
  return arr;
}

Json warnings_of(std::initializer_list<const Input*> items) {
  Json arr = Json::array();
  for (const auto* in : items) {
    for (const auto& w : in->doc.warnings) arr.push_back(w);
    for (const auto& w : in->log) arr.push_back(in->doc.transcript.source_label() + ": " + w);
  }
  return arr;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f << text;
  if (!f) throw IoError("error while writing " + path);
}

std::string fixed2(double v) { return fmt::format("{:.2f}", v == 0.0 ? 0.0 : v); }

std::string opt_fixed2(const std::optional<double>& v) { return v ? fixed2(*v) : "n/a"; }

std::string csv_text(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream s;
  for (const auto& r : rows) csv::write_row(s, r);
  return s.str();
}

AlignMode mode_of(const RunConfig& cfg) {
  return parse_align_mode(cfg.mode).value_or(AlignMode::Merged);
}

struct Pair {
  Input hyp;
  Input ref;
};

Pair load_pair(const std::string& hyp, const std::string& ref, const RunConfig& cfg) {
  if (cfg.asr_raw && mode_of(cfg) == AlignMode::PerSpeaker) {
    throw ConfigError("--asr-raw input has no speaker labels; use --mode merged");
  }
  return {load(hyp, cfg, cfg.asr_raw), load(ref, cfg)};
}

// ---- subcommands -------------------------------------------------------------------

int cmd_normalize(const std::string& path, const RunConfig& cfg, std::ostream& out) {
  auto doc = read_transcript(path);
  auto n = normalize_transcript(doc.transcript, normalization_config(cfg));
  std::ostringstream tsv;
  write_tsv(tsv, n.transcript);
  emit(tsv.str(), cfg.output, out);
  if (!cfg.report_path.empty()) {
    Json j = base_report("normalize", cfg);
    j["inputs"] = Json::array({report::input(doc, "input")});
    j["normalization"] = Json{{"tu_count", n.transcript.size()}, {"log", n.log}};
    j["warnings"] = doc.warnings;
    emit(dump(j), cfg.report_path, out);
  }
  return kExitOk;
}

int cmd_validate(const std::string& path, const RunConfig& cfg, std::ostream& out) {
  const auto in = load(path, cfg);
  const auto issues = validate_transcript(in.tokens);
  const auto& t = in.tokens;
  std::string text;
  if (cfg.format == "json") {
    Json j = base_report("validate", cfg);
    j["inputs"] = inputs({{&in, "input"}});
    Json arr = Json::array();
    for (const auto& v : issues) arr.push_back(report::validation_issue(v));
    j["validation"] = Json{{"tu_count", t.size()}, {"issue_count", issues.size()},
                           {"issues", std::move(arr)}};
    j["warnings"] = warnings_of({&in});
    text = dump(j);
  } else if (cfg.format == "csv") {
    std::vector<std::vector<std::string>> rows{
        {"tu_index", "speaker", "start", "end", "kind", "symbol", "detail"}};
    for (const auto& v : issues) {
      const auto& u = t[v.tu_index];
      rows.push_back({std::to_string(v.tu_index), u.speaker.str(),
                      format_seconds(u.interval.start_ms()), format_seconds(u.interval.end_ms()),
                      std::string(issue_kind_name(v.kind)), v.symbol, v.detail});
    }
    text = csv_text(rows);
  } else {
    for (const auto& v : issues) {
      const auto& u = t[v.tu_index];
      text += fmt::format("{}: TU {} ({} {}-{}): {}: {}\n", t.source_label(), v.tu_index,
                          u.speaker.str(), format_seconds(u.interval.start_ms()),
                          format_seconds(u.interval.end_ms()), issue_kind_name(v.kind), v.detail);
    }
    text += fmt::format("{} issue(s) in {} TU(s)\n", issues.size(), t.size());
  }
  emit(text, cfg.output, out);
  return issues.empty() ? kExitOk : kExitIssues;
}

int cmd_import_srt(const std::vector<std::string>& paths, const RunConfig& cfg,
                   std::ostream& out) {
  const bool dir = paths.size() == 1 && std::filesystem::is_directory(paths[0]);
  const auto doc = dir ? read_srt_dir(paths[0]) : read_srt_set(paths);
  std::ostringstream tsv;
  write_tsv(tsv, doc.transcript);
  emit(tsv.str(), cfg.output, out);
  if (!cfg.report_path.empty()) {
    Json j = base_report("import-srt", cfg);
    j["inputs"] = Json::array({report::input(doc, "input")});
    j["warnings"] = doc.warnings;
    emit(dump(j), cfg.report_path, out);
  }
  return kExitOk;
}

int cmd_align(const std::string& hyp, const std::string& ref, const RunConfig& cfg,
              std::ostream& out) {
  const auto p = load_pair(hyp, ref, cfg);
  const auto res = align_transcripts(p.ref.tokens, p.hyp.tokens, mode_of(cfg), cfg.scoring);
  std::string text;
  if (cfg.format == "json") {
    Json j = base_report("align", cfg);
    j["inputs"] = inputs({{&p.hyp, "hypothesis"}, {&p.ref, "reference"}});
    j["window"] = report::interval(res.window);
    j["alignment"] = report::alignment(res);
    j["warnings"] = warnings_of({&p.hyp, &p.ref});
    text = dump(j);
  } else if (cfg.format == "csv") {
    std::vector<std::vector<std::string>> rows{
        {"speaker", "kind", "ref_index", "hyp_index", "ref_token", "hyp_token"}};
    for (const auto& part : res.parts) {
      for (const auto& op : part.alignment.ops) {
        const auto idx = [](std::optional<std::size_t> i) {
          return i ? std::to_string(*i) : std::string();
        };
        rows.push_back({part.speaker, std::string(op_kind_name(op.kind)), idx(op.ref_index),
                        idx(op.hyp_index),
                        op.ref_index ? part.ref_tokens[*op.ref_index].surface : "",
                        op.hyp_index ? part.hyp_tokens[*op.hyp_index].surface : ""});
      }
    }
    text = csv_text(rows);
  } else {
    for (const auto& part : res.parts) {
      if (!part.speaker.empty()) text += part.speaker + ":\n";
      text += render_alignment(part);
    }
  }
  emit(text, cfg.output, out);
  return kExitOk;
}

int cmd_wer(const std::string& hyp, const std::string& ref, const RunConfig& cfg,
            std::ostream& out) {
  const auto p = load_pair(hyp, ref, cfg);
  const auto res = align_transcripts(p.ref.tokens, p.hyp.tokens, mode_of(cfg), cfg.scoring);
  const auto total = compute_wer(res.total);
  std::string text;
  if (cfg.format == "json") {
    Json j = base_report("wer", cfg);
    j["inputs"] = inputs({{&p.hyp, "hypothesis"}, {&p.ref, "reference"}});
    j["window"] = report::interval(res.window);
    j["wer"] = report::wer(total);
    j["alignment"] = report::alignment(res, /*with_ops=*/false);
    auto w = warnings_of({&p.hyp, &p.ref});
    for (const auto& s : total.warnings) w.push_back(s);
    j["warnings"] = std::move(w);
    text = dump(j);
  } else {
    std::vector<std::pair<std::string, WerReport>> rows{{"total", total}};
    if (res.mode == AlignMode::PerSpeaker) {
      for (const auto& part : res.parts) rows.push_back({part.speaker, compute_wer(part.alignment)});
    }
    if (cfg.format == "csv") {
      std::vector<std::vector<std::string>> table{{"scope", "wer", "S", "D", "I", "C", "N"}};
      for (const auto& [scope, w] : rows) {
        table.push_back({scope, w.wer ? fmt::format("{}", *w.wer) : "",
                         std::to_string(w.substitutions), std::to_string(w.deletions),
                         std::to_string(w.insertions), std::to_string(w.correct),
                         std::to_string(w.reference_words)});
      }
      text = csv_text(table);
    } else {
      for (const auto& [scope, w] : rows) {
        text += fmt::format("{}: WER {} (S={} D={} I={} C={} N={})\n", scope,
                            w.wer ? fixed2(*w.wer * 100.0) + "%" : "undefined", w.substitutions,
                            w.deletions, w.insertions, w.correct, w.reference_words);
      }
    }
  }
  emit(text, cfg.output, out);
  return kExitOk;
}

int cmd_stats(const std::string& path, const RunConfig& cfg, std::ostream& out) {
  const auto in = load(path, cfg);
  const auto bins = per_minute_stats(in.tokens, cfg.minutes);
  const auto sum = summary_stats(in.tokens);
  std::string text;
  if (cfg.format == "json") {
    Json j = base_report("stats", cfg);
    j["inputs"] = inputs({{&in, "input"}});
    j["per_minute"] = report::per_minute(bins);
    j["summary"] = report::summary(sum);
    j["warnings"] = warnings_of({&in});
    text = dump(j);
  } else if (cfg.format == "csv") {
    std::vector<std::string> head{"minute"};
    for (const auto m : kAllMeasures) head.emplace_back(measure_name(m));
    std::vector<std::vector<std::string>> rows{head};
    for (const auto& s : bins) {
      std::vector<std::string> r{std::to_string(s.minute)};
      for (const auto m : kAllMeasures) r.push_back(fmt::format("{}", measure_value(s, m)));
      rows.push_back(std::move(r));
    }
    text = csv_text(rows);
  } else {
    text += fmt::format("{:>6} {:>4} {:>9} {:>7} {:>6} {:>5} {:>4} {:>4} {:>6}\n", "minute",
                        "TUs", "dur(s)", "tokens", "types", "pause", "nv", "xxx", "errors");
    for (const auto& s : bins) {
      text += fmt::format("{:>6} {:>4} {:>9.2f} {:>7} {:>6} {:>5} {:>4} {:>4} {:>6}\n", s.minute,
                          s.tu_count, s.tu_duration_s(), s.linguistic_tokens, s.types,
                          s.short_pause_count, s.non_verbal_count, s.unknown_count,
                          s.error_count);
    }
    text += fmt::format("TUs {}, tokens/TU {}, TU duration {} s, tokens/min {}, types/min {}\n",
                        sum.total_tus, opt_fixed2(sum.avg_tokens_per_tu),
                        opt_fixed2(sum.avg_tu_duration_s), opt_fixed2(sum.tokens_per_min),
                        opt_fixed2(sum.types_per_min));
  }
  emit(text, cfg.output, out);
  return kExitOk;
}

int cmd_deltas(const std::string& hyp, const std::string& ref, const RunConfig& cfg,
               std::ostream& out) {
  const auto p = load_pair(hyp, ref, cfg);
  const auto table = compute_deltas(per_minute_stats(p.ref.tokens),
                                    per_minute_stats(p.hyp.tokens), cfg.minutes.value_or(2));
  std::string text;
  if (cfg.format == "json") {
    Json j = base_report("deltas", cfg);
    j["inputs"] = inputs({{&p.hyp, "candidate"}, {&p.ref, "gold"}});
    j["deltas"] = report::deltas(table);
    j["warnings"] = warnings_of({&p.hyp, &p.ref});
    text = dump(j);
  } else if (cfg.format == "csv") {
    std::vector<std::vector<std::string>> rows{{"measure", "minute", "gold", "candidate", "delta"}};
    for (const auto& r : table.rows) {
      rows.push_back({std::string(measure_name(r.measure)), std::to_string(r.minute),
                      fmt::format("{}", r.gold), fmt::format("{}", r.candidate),
                      fixed2(r.rounded_delta())});
    }
    text = csv_text(rows);
  } else {
    text += table.convention_note + "\n";
    text += fmt::format("{:<20}", "measure");
    for (std::size_t m = 0; m <= table.first_n_minutes; ++m) text += fmt::format(" {:>9}", m);
    text += "\n";
    const std::size_t per = table.first_n_minutes + 1;
    for (std::size_t i = 0; i < table.rows.size(); i += per) {
      text += fmt::format("{:<20}", measure_name(table.rows[i].measure));
      for (std::size_t k = 0; k < per; ++k) {
        text += fmt::format(" {:>9}", fixed2(table.rows[i + k].rounded_delta()));
      }
      text += "\n";
    }
  }
  emit(text, cfg.output, out);
  return kExitOk;
}

std::vector<Input> load_parallel(const std::vector<std::string>& paths, const RunConfig& cfg) {
  // Results are collected in input order, whatever order loads finish in.
  std::vector<std::future<Input>> jobs;
  jobs.reserve(paths.size());
  for (const auto& p : paths) {
    jobs.push_back(std::async(std::launch::async, [&cfg, p] { return load(p, cfg); }));
  }
  std::vector<Input> out;
  out.reserve(jobs.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

int cmd_overlaps(const std::vector<std::string>& paths, const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> all = paths;
  std::vector<std::optional<TranscriberMeta>> metas(paths.size());
  if (!cfg.manifest.empty()) {
    for (const auto& e : read_manifest(cfg.manifest)) {
      all.push_back(e.path);
      metas.emplace_back(e.meta);
    }
  }
  if (all.empty()) throw ConfigError("overlaps needs an input file or --manifest");
  const auto loaded = load_parallel(all, cfg);

  std::vector<std::vector<OverlapIssue>> found;
  std::vector<TranscriptIssues> grouped;
  std::size_t total = 0;
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    found.push_back(detect_annotation_issues(loaded[i].tokens, cfg.threshold));
    total += found.back().size();
    if (metas[i]) grouped.push_back({*metas[i], found.back()});
  }
  const bool groups = !cfg.manifest.empty();

  std::string text;
  if (cfg.format == "json") {
    Json j = base_report("overlaps", cfg);
    Json ins = Json::array();
    for (const auto& in : loaded) ins.push_back(report::input(in.doc, "input"));
    j["inputs"] = std::move(ins);
    j["mild_threshold_s"] = cfg.threshold;
    Json per = Json::array();
    for (std::size_t i = 0; i < loaded.size(); ++i) {
      Json issues = Json::array();
      for (const auto& is : found[i]) issues.push_back(report::overlap_issue(is, loaded[i].tokens));
      per.push_back(Json{{"label", loaded[i].tokens.source_label()},
                         {"issue_count", found[i].size()},
                         {"issues", std::move(issues)}});
    }
    j["overlap_issues"] = std::move(per);
    j["groups"] = groups ? report::group_summary(summarize_by_group(grouped)) : Json(nullptr);
    Json w = Json::array();
    for (const auto& in : loaded) {
      for (const auto& x : warnings_of({&in})) w.push_back(x);
    }
    j["warnings"] = std::move(w);
    text = dump(j);
  } else if (cfg.format == "csv") {
    std::vector<std::vector<std::string>> rows{
        {"transcript", "kind", "severity", "tus", "temporal_overlap_s", "asymmetric", "note"}};
    for (std::size_t i = 0; i < loaded.size(); ++i) {
      for (const auto& is : found[i]) {
        std::string tus;
        for (const auto k : is.tus) tus += (tus.empty() ? "" : " ") + std::to_string(k);
        rows.push_back({loaded[i].tokens.source_label(), std::string(overlap_kind_name(is.kind)),
                        std::string(severity_name(is.severity)), tus,
                        format_seconds(is.overlap_ms), is.asymmetric ? "true" : "false", is.note});
      }
    }
    text = csv_text(rows);
  } else {
    for (std::size_t i = 0; i < loaded.size(); ++i) {
      const auto& t = loaded[i].tokens;
      for (const auto& is : found[i]) {
        std::string where;
        for (const auto k : is.tus) {
          where += fmt::format("{}TU {} ({} {}-{})", where.empty() ? "" : ", ", k,
                               t[k].speaker.str(), format_seconds(t[k].interval.start_ms()),
                               format_seconds(t[k].interval.end_ms()));
        }
        text += fmt::format("{}: {} [{}] {}: {} s; {}\n", t.source_label(),
                            overlap_kind_name(is.kind), severity_name(is.severity), where,
                            format_seconds(is.overlap_ms), is.note);
      }
    }
    if (groups) {
      for (const auto& g : summarize_by_group(grouped)) {
        if (g.percentages) {
          const auto& pc = *g.percentages;
          text += fmt::format("{}: severe {}%, mild {}%, non-severe {}%\n", g.group,
                              fixed2(pc[2]), fixed2(pc[1]), fixed2(pc[0]));
        } else {
          text += fmt::format("{}: {}\n", g.group, g.note);
        }
      }
    }
    text += fmt::format("{} issue(s)\n", total);
  }
  emit(text, cfg.output, out);
  return total == 0 ? kExitOk : kExitIssues;
}

int cmd_classify(const std::string& hyp, const std::string& ref, const RunConfig& cfg,
                 std::ostream& out) {
  const auto p = load_pair(hyp, ref, cfg);
  const auto res = align_transcripts(p.ref.tokens, p.hyp.tokens, mode_of(cfg), cfg.scoring);
  ClassifierConfig ccfg;
  if (!cfg.lexicon.empty()) ccfg.lexicon->merge(VariantLexicon::load(cfg.lexicon));

  std::vector<MismatchRecord> records;
  std::vector<MismatchGroup> groups;
  std::vector<std::string> all_ref;
  for (const auto& part : res.parts) {
    auto recs = extract_mismatches(part.alignment, part.ref_keys, part.hyp_keys);
    for (auto& r : recs) r = classify_mismatch(std::move(r), ccfg);
    auto gs = group_adjacent(part.alignment, recs);
    // Keep ids unique across speakers.
    const std::size_t offset = records.size();
    for (auto& r : recs) r.id += offset;
    for (auto& g : gs) {
      for (auto& id : g.member_ids) id += offset;
      g.merged.id += offset;
      if (g.member_ids.size() > 1) g.merged = classify_mismatch(std::move(g.merged), ccfg);
    }
    records.insert(records.end(), recs.begin(), recs.end());
    groups.insert(groups.end(), gs.begin(), gs.end());
    all_ref.insert(all_ref.end(), part.ref_keys.begin(), part.ref_keys.end());
  }
  if (!cfg.overrides.empty()) {
    std::ifstream f(cfg.overrides, std::ios::binary);
    if (!f) throw IoError("cannot open " + cfg.overrides);
    apply_overrides(records, read_review_overrides(f, cfg.overrides));
  }
  if (!cfg.review_csv.empty()) {
    std::ostringstream s;
    write_review_csv(s, records);
    emit(s.str(), cfg.review_csv, out);
  }

  std::string text;
  if (cfg.format == "json") {
    Json j = base_report("classify", cfg);
    j["inputs"] = inputs({{&p.hyp, "hypothesis"}, {&p.ref, "reference"}});
    j["window"] = report::interval(res.window);
    Json recs = Json::array();
    for (const auto& r : records) recs.push_back(report::mismatch(r));
    Json grps = Json::array();
    for (const auto& g : groups) grps.push_back(report::mismatch_group(g));
    j["mismatches"] = Json{{"records", std::move(recs)},
                           {"groups", std::move(grps)},
                           {"category_counts", report::category_table(category_counts(records))},
                           {"content_lengths",
                            report::content_lengths(content_length_stats(records, all_ref))}};
    j["warnings"] = warnings_of({&p.hyp, &p.ref});
    text = dump(j);
  } else if (cfg.format == "csv") {
    std::ostringstream s;
    write_review_csv(s, records);
    text = s.str();
  } else {
    for (const auto& r : records) {
      text += fmt::format("#{} {}: {} -> {}: {}{}\n", r.id, op_kind_name(r.op.kind),
                          r.ref_token.value_or(std::string(kGapSymbol)),
                          r.hyp_token.value_or(std::string(kGapSymbol)), category_name(r.category),
                          r.confidence == Confidence::Manual ? " (manual)" : "");
    }
    for (const auto& [c, n] : category_counts(records)) {
      text += fmt::format("{}: {}\n", category_name(c), n);
    }
    text += fmt::format("{} mismatches\n", records.size());
  }
  emit(text, cfg.output, out);
  return kExitOk;
}

int cmd_export_longform(const std::string& manifest, const RunConfig& cfg, std::ostream& out) {
  const auto entries = read_manifest(manifest);
  std::vector<std::string> paths;
  std::map<std::string, std::size_t> gold_slot;
  for (const auto& e : entries) paths.push_back(e.path);
  for (const auto& e : entries) {
    if (e.gold && !gold_slot.count(*e.gold)) {
      gold_slot[*e.gold] = paths.size();
      paths.push_back(*e.gold);
    }
  }
  const auto loaded = load_parallel(paths, cfg);
  std::vector<LongformRun> runs;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    LongformRun r;
    r.transcript = loaded[i].tokens.with_meta(entries[i].meta);
    r.stats = per_minute_stats(r.transcript, cfg.minutes);
    if (entries[i].gold) {
      r.gold = per_minute_stats(loaded[gold_slot.at(*entries[i].gold)].tokens, cfg.minutes);
    }
    runs.push_back(std::move(r));
  }
  std::ostringstream s;
  export_longform(runs, {kAllMeasures.begin(), kAllMeasures.end()}, s);
  emit(s.str(), cfg.output, out);
  return kExitOk;
}

}  // namespace

std::vector<ManifestEntry> read_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  const auto base = std::filesystem::path(path).parent_path();
  const auto resolve = [&](const std::string& p) {
    const std::filesystem::path fp(p);
    return fp.is_absolute() ? p : (base / fp).string();
  };
  std::vector<ManifestEntry> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::istringstream ls(line);
    for (std::string c; std::getline(ls, c, '\t');) cols.push_back(c);
    if (entries.empty() && !cols.empty() && cols[0] == "path") continue;
    if (cols.size() != 5 && cols.size() != 6) {
      throw ParseError(path, lineno, fmt::format("expected 5 or 6 columns, found {}", cols.size()));
    }
    ManifestEntry e;
    e.path = resolve(cols[0]);
    e.meta.transcriber = cols[1];
    if (cols[2] == "expert") {
      e.meta.expert = true;
    } else if (cols[2] != "novice") {
      throw ParseError(path, lineno, "expertise must be 'expert' or 'novice'");
    }
    std::string phase = cols[3];
    for (auto& ch : phase) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    const auto ph = parse_phase(phase);
    if (!ph) throw ParseError(path, lineno, "phase must be 'manual' or 'asr'");
    e.meta.phase = *ph;
    e.meta.data_type = cols[4];
    if (cols.size() == 6 && !cols[5].empty()) e.gold = resolve(cols[5]);
    entries.push_back(std::move(e));
  }
  return entries;
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quality analysis for Jefferson-annotated conversational transcripts", "tqa"};
  app.set_version_flag("--version", TQA_VERSION);
  app.failure_message(CLI::FailureMessage::help);
  app.require_subcommand(1);

  RunConfig cfg;
  app.set_config("--config", "", "Configuration file (TOML/INI keys named like the long flags)")
      ->envname("TQA_CONFIG");
  app.add_option("--format", cfg.format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("-o,--output", cfg.output, "Write the result here instead of stdout");
  app.add_flag("--stamp", cfg.stamp, "Add a generation timestamp to JSON reports");
  app.add_flag("--normalize", cfg.normalize, "Normalize inputs before analysis");
  app.add_option("--corrections", cfg.corrections,
                 "Extra spelling corrections (pattern<TAB>replacement per line)");
  app.add_option("--mode", cfg.mode, "Alignment linearization")
      ->check(CLI::IsMember({"merged", "per-speaker"}))
      ->capture_default_str();
  app.add_option("--match", cfg.scoring.match_score, "Alignment match score")->capture_default_str();
  app.add_option("--mismatch", cfg.scoring.mismatch_score, "Alignment mismatch score")
      ->capture_default_str();
  app.add_option("--gap", cfg.scoring.gap_score, "Alignment gap score")->capture_default_str();
  app.add_flag("--asr-raw", cfg.asr_raw, "HYP is raw, undiarized ASR output");
  app.add_option("--threshold", cfg.threshold,
                 "Overlaps up to this many seconds are mild, longer ones severe")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--minutes", cfg.minutes,
                 "stats/export-longform: number of minute bins; deltas: last minute compared "
                 "(default 2)");
  app.add_option("--lexicon", cfg.lexicon, "Extra orthographic variant pairs (TSV)");
  app.add_option("--review-csv", cfg.review_csv, "classify: write the review CSV here");
  app.add_option("--overrides", cfg.overrides, "classify: apply a filled-in review CSV");
  app.add_option("--manifest", cfg.manifest, "overlaps: transcripts with transcriber metadata");
  app.add_option("--report", cfg.report_path, "normalize/import-srt: also write a JSON report");

  std::string in1, in2;
  std::vector<std::string> many;
  const auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto* normalize = sub("normalize", "Clean TU texts and write TSV");
  normalize->add_option("input", in1, "TSV or SRT transcript ('-' for stdin)")->required();
  auto* validate = sub("validate", "Check Jefferson markup; exit 1 if issues are found");
  validate->add_option("input", in1, "Transcript")->required();
  auto* import_srt = sub("import-srt", "Merge per-speaker SRT files into one TSV");
  import_srt->add_option("inputs", many, "Directory of .srt files, or the files")->required();
  auto* align = sub("align", "Align a hypothesis with a reference transcript");
  auto* wer = sub("wer", "Word error rate of HYP against REF");
  auto* deltas = sub("deltas", "Per-minute deltas of HYP (candidate) against REF (gold)");
  auto* classify = sub("classify", "Pre-tag mismatches between HYP and REF");
  for (auto* s : {align, wer, deltas, classify}) {
    s->add_option("hyp", in1, "Hypothesis transcript")->required();
    s->add_option("ref", in2, "Reference transcript")->required();
  }
  auto* stats = sub("stats", "Per-minute and summary statistics");
  stats->add_option("input", in1, "Transcript")->required();
  auto* overlaps = sub("overlaps", "Check overlap notation against TU timing");
  overlaps->add_option("inputs", many, "Transcripts");
  auto* longform = sub("export-longform", "Long-format CSV for external modeling");
  longform->add_option("manifest", in1, "Manifest TSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    cfg.scoring.validate();
    if (*normalize) return cmd_normalize(in1, cfg, out);
    if (*validate) return cmd_validate(in1, cfg, out);
    if (*import_srt) return cmd_import_srt(many, cfg, out);
    if (*align) return cmd_align(in1, in2, cfg, out);
    if (*wer) return cmd_wer(in1, in2, cfg, out);
    if (*stats) return cmd_stats(in1, cfg, out);
    if (*deltas) return cmd_deltas(in1, in2, cfg, out);
    if (*overlaps) return cmd_overlaps(many, cfg, out);
    if (*classify) return cmd_classify(in1, in2, cfg, out);
    if (*longform) return cmd_export_longform(in1, cfg, out);
  } catch (const Error& e) {
    err << "tqa: error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "tqa: internal error: " << e.what() << "\n";
    return kExitError;
  }
  err << app.help();
  return kExitError;
}

}  // namespace tqa::cli
