// tests/acceptance/acceptance.cpp

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

// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <fmt/format.h>

#include "oracles.hpp"
#include "tqa/aligner.hpp"
#include "tqa/io.hpp"
#include "tqa/jefferson.hpp"
#include "tqa/metrics.hpp"
#include "tqa/mismatch.hpp"
#include "tqa/normalizer.hpp"
#include "tqa/overlap.hpp"
#include "tqa/report.hpp"

#ifdef TQA_HAVE_CLI
#include "cli.hpp"
#endif

namespace tqa {
namespace {

namespace fs = std::filesystem;
using testing::fixture;
using testing::make_transcript;
using Clock = std::chrono::steady_clock;

// Collects failed checks of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool passed() const { return failures_.empty(); }
  std::string detail() const {
    std::string s;
    for (std::size_t i = 0; i < failures_.size() && i < 3; ++i) {
      if (i) s += "; ";
      s += failures_[i];
    }
    if (failures_.size() > 3) s += fmt::format("; +{} more", failures_.size() - 3);
    return s;
  }
  std::string note;

 private:
  std::vector<std::string> failures_;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::size_t count_kind(const std::vector<Token>& ts, TokenKind k) {
  return static_cast<std::size_t>(
      std::count_if(ts.begin(), ts.end(), [k](const Token& t) { return t.kind == k; }));
}

const Token* find_surface(const std::vector<Token>& ts, const std::string& s) {
  const auto it = std::find_if(ts.begin(), ts.end(), [&](const Token& t) { return t.surface == s; });
  return it == ts.end() ? nullptr : &*it;
}

bool issue_covers(const OverlapIssue& i, std::size_t a, std::size_t b) {
  return std::count(i.tus.begin(), i.tus.end(), a) && std::count(i.tus.begin(), i.tus.end(), b);
}

// ---- AC1 ---------------------------------------------------------------------------

void ac1(Check& c) {
  std::mt19937 rng(101);
  const auto t0 = Clock::now();
  std::size_t mismatched = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto r = testing::random_sequence(rng, 7, 3);
    const auto h = testing::random_sequence(rng, 7, 3);
    if (needleman_wunsch(r, h).score != testing::brute_force_alignment(r, h).score) ++mismatched;
  }
  const double secs = seconds_since(t0);
  c.expect(mismatched == 0, fmt::format("{} of 1000 scores differ from brute force", mismatched));
  c.expect(secs < 10.0, fmt::format("took {:.2f} s", secs));
  c.note = fmt::format("1000 pairs, {:.3f} s", secs);
}

// ---- AC2 ---------------------------------------------------------------------------

void ac2(Check& c) {
  const std::vector<std::string> s = {"a", "b", "c", "d"};
  const auto same = compute_wer(needleman_wunsch(s, s));
  c.expect(same.wer && *same.wer == 0.0, "identical inputs do not give WER 0");

  const std::vector<std::string> hyp = {"a", "x", "c"};
  const auto w = compute_wer(needleman_wunsch(s, hyp));
  c.expect(w.substitutions == 1 && w.deletions == 1 && w.insertions == 0 &&
               w.reference_words == 4,
           fmt::format("constructed fixture gave S={} D={} I={} N={}", w.substitutions,
                       w.deletions, w.insertions, w.reference_words));
  c.expect(w.wer && *w.wer == 0.5, "constructed fixture WER is not exactly 0.50");

  std::mt19937 rng(102);
  std::size_t broken = 0;
  for (int i = 0; i < 5000; ++i) {
    const auto r = testing::random_sequence(rng, 15, 4);
    const auto h = testing::random_sequence(rng, 15, 4);
    const auto x = compute_wer(needleman_wunsch(r, h));
    if (x.reference_words != x.substitutions + x.deletions + x.correct ||
        x.reference_words != r.size()) {
      ++broken;
    }
  }
  c.expect(broken == 0, fmt::format("N != S + D + C on {} random fixtures", broken));
}

// ---- AC3 ---------------------------------------------------------------------------

void ac3(Check& c) {
  const auto t = tokenize_transcript(read_tsv(fixture("kps021_extract.tsv")).transcript);
  c.expect(t.size() == 7, fmt::format("{} TUs", t.size()));
  const auto all = flatten_tokens(t);
  c.expect(count_kind(all, TokenKind::ShortPause) == 3, "ShortPause count is not 3");
  c.expect(count_kind(all, TokenKind::Unintelligible) == 1, "Unintelligible count is not 1");
  const auto unk = std::find_if(all.begin(), all.end(),
                                [](const Token& k) { return k.kind == TokenKind::Unintelligible; });
  c.expect(unk != all.end() && unk->syllables == 4, "Unintelligible token does not count 4");

  // Hand count: the bracketed spans cover exactly these tokens.
  const std::vector<std::string> expected = {"ha-", "unica", "nell'impasto", "ce", "ne",
                                             "ho",  "messo", "il",           "nella", "padella"};
  std::vector<std::string> got;
  for (const auto& k : all) {
    if (k.features.contains(Feature::Overlap)) got.push_back(k.surface);
  }
  c.expect(got == expected, fmt::format("{} tokens carry Overlap", got.size()));
  c.expect(validate_transcript(t).empty(), "validation issues reported");

  const auto pairs = overlapping_pairs(t);
  c.expect(std::find(pairs.begin(), pairs.end(), TuPair{1, 2, 300}) != pairs.end(),
           "0.30 s SP1/SP2 overlap not found");
  const auto issues = detect_annotation_issues(t);
  c.expect(std::none_of(issues.begin(), issues.end(),
                        [](const OverlapIssue& i) { return issue_covers(i, 1, 2); }),
           "annotated 0.30 s overlap was flagged");
}

// ---- AC4 ---------------------------------------------------------------------------

void ac4(Check& c) {
  const auto pba = tokenize_transcript(read_tsv(fixture("pba001_extract.tsv")).transcript);
  const auto pt = flatten_tokens(pba);
  const auto ride = std::find_if(pt.begin(), pt.end(), [](const Token& k) {
    return k.kind == TokenKind::NonVerbal && k.description == "ride";
  });
  c.expect(ride != pt.end(), "((ride)) is not a NonVerbal token");

  const auto kps = tokenize_transcript(read_tsv(fixture("kps021_extract.tsv")).transcript);
  const auto kt = flatten_tokens(kps);
  const auto* metti = find_surface(kt, "metti");
  c.expect(metti && metti->features.contains(Feature::Prolongation), "metti: lacks Prolongation");
  // The first "fuori" ("no fuori,") is plain; the degree-marked one opens TU 5.
  const auto* fuori = kps.size() > 4 ? find_surface(*kps[4].tokens, "fuori") : nullptr;
  c.expect(fuori && fuori->features.contains(Feature::LowerVolume), "°fuori° lacks LowerVolume");

  const auto sb = tokenize_transcript(read_tsv(fixture("sbib003_extract.tsv")).transcript);
  const auto st = flatten_tokens(sb);
  const auto* tranq = find_surface(st, "tranquillamente");
  c.expect(tranq && tranq->features.contains(Feature::LowerVolume),
           "°tranquilla[mente°] lacks LowerVolume");
  const auto* quello = find_surface(pt, "quello");
  c.expect(quello && quello->features.contains(Feature::LowerVolume),
           ">°quindi forse quello [sì°]< lacks LowerVolume");

  std::size_t quale = sb.size();
  std::size_t bangla = sb.size();
  for (std::size_t i = 0; i < sb.size(); ++i) {
    if (sb[i].raw_text == "[quale li:-]") quale = i;
    if (sb[i].raw_text.rfind("[bangla]", 0) == 0) bangla = i;
  }
  c.expect(quale < sb.size() && bangla < sb.size(), "SBIB003 pair not found");
  const auto a = std::min(quale, bangla);
  const auto b = std::max(quale, bangla);
  const auto pairs = overlapping_pairs(sb);
  c.expect(std::any_of(pairs.begin(), pairs.end(),
                       [&](const TuPair& p) { return p.first == a && p.second == b; }),
           "[bangla]/[quale li:-] do not overlap in time");
  const auto issues = detect_annotation_issues(sb);
  c.expect(std::none_of(issues.begin(), issues.end(),
                        [&](const OverlapIssue& i) { return issue_covers(i, a, b); }),
           "[bangla]/[quale li:-] pair flagged as not annotated");
}

// ---- AC5 ---------------------------------------------------------------------------

void ac5(Check& c) {
  const NormalizationConfig cfg;
  std::mt19937 rng(105);
  std::size_t unstable = 0;
  std::string example;
  for (int i = 0; i < 10000; ++i) {
    const auto x = testing::random_noisy_string(rng);
    const auto once = normalize_text(x, cfg);
    if (normalize_text(once, cfg) != once) {
      if (unstable++ == 0) example = x;
    }
  }
  c.expect(unstable == 0, fmt::format("{} non-idempotent inputs, e.g. '{}'", unstable, example));
  c.expect(normalize_text("pò", cfg) == "po'", "pò is not corrected to po'");
  c.expect(normalize_text("perchè", cfg) == "perché", "perchè is not corrected to perché");
  c.expect(normalize_text("(.) ciao (.)", cfg) == "ciao", "edge pauses not stripped");
  c.expect(normalize_text("(.) sì (.) no (.)", cfg) == "sì (.) no", "inner pause lost");
  const auto tn = normalize_transcript(
      make_transcript({{"SP1", 0, 1, "(.) allora (.) va bene"}, {"SP2", 1, 2, "sì (.)"}}), cfg);
  c.expect(tn.transcript[0].raw_text == "allora (.) va bene" && tn.transcript[1].raw_text == "sì",
           "edge pauses not stripped on constructed TUs");
}

// ---- AC6 ---------------------------------------------------------------------------

void ac6(Check& c) {
  std::mt19937 rng(106);
  std::uniform_int_distribution<std::size_t> n(0, 50);
  std::uniform_int_distribution<int> speakers(2, 5);
  std::size_t differing = 0;
  for (int iter = 0; iter < 500; ++iter) {
    const auto t = testing::random_transcript(rng, n(rng), speakers(rng));
    std::set<std::tuple<std::size_t, std::size_t, std::int64_t>> got;
    for (const auto& p : overlapping_pairs(t)) got.emplace(p.first, p.second, p.overlap_ms);
    if (got != testing::brute_force_overlaps(t)) ++differing;
  }
  c.expect(differing == 0, fmt::format("{} of 500 transcripts differ from the oracle", differing));

  const auto severity_of = [](const std::vector<testing::Row>& rows) {
    const auto is = detect_annotation_issues(tokenize_transcript(make_transcript(rows)));
    return is.size() == 1 && is[0].kind == OverlapKind::MissingAnnotation
               ? std::optional<Severity>(is[0].severity)
               : std::nullopt;
  };
  c.expect(severity_of({{"A", 0, 2, "sì sì"}, {"B", 1.92, 3, "no no"}}) == Severity::Mild,
           "0.08 s unannotated overlap is not Mild");
  c.expect(severity_of({{"A", 0, 2, "sì sì"}, {"B", 1.5, 3, "no no"}}) == Severity::Severe,
           "0.50 s unannotated overlap is not Severe");
  const auto laugh = detect_annotation_issues(
      tokenize_transcript(make_transcript({{"A", 0, 2, "allora sì"}, {"B", 1, 3, "((ride))"}})));
  c.expect(laugh.empty(), "((ride)) overlap was flagged");
}

// ---- AC7 ---------------------------------------------------------------------------

PerMinuteStats random_stats(std::mt19937& rng, std::size_t minute) {
  std::uniform_int_distribution<std::size_t> v(0, 400);
  std::uniform_int_distribution<std::int64_t> ms(0, 60000);
  PerMinuteStats s;
  s.minute = minute;
  s.tu_count = v(rng);
  s.tu_duration_ms = ms(rng);
  s.linguistic_tokens = v(rng);
  s.total_tokens = v(rng);
  s.types = v(rng);
  s.non_verbal_count = v(rng);
  s.short_pause_count = v(rng);
  s.unknown_count = v(rng);
  s.uncertain_count = v(rng);
  s.error_count = v(rng);
  s.intonation_count = v(rng);
  s.prolongation_count = v(rng);
  s.overlap_token_count = v(rng);
  return s;
}

bool two_decimals(double v) { return std::fabs(v * 100.0 - std::round(v * 100.0)) < 1e-7; }

void ac7(Check& c) {
  std::mt19937 rng(107);
  std::size_t asym = 0;
  std::size_t precision = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    std::vector<PerMinuteStats> a, b;
    for (std::size_t m = 0; m < 3; ++m) {
      a.push_back(random_stats(rng, m));
      b.push_back(random_stats(rng, m));
    }
    const auto ab = compute_deltas(a, b);
    const auto ba = compute_deltas(b, a);
    for (std::size_t i = 0; i < ab.rows.size(); ++i) {
      if (ab.rows[i].delta_milli != -ba.rows[i].delta_milli ||
          ab.rows[i].rounded_delta() != -ba.rows[i].rounded_delta()) {
        ++asym;
      }
      if (!two_decimals(ab.rows[i].rounded_delta())) ++precision;
    }
  }
  c.expect(asym == 0, fmt::format("{} rows break antisymmetry", asym));
  c.expect(precision == 0, fmt::format("{} rows have more than 2 decimals", precision));

  // Gold: three 1.5 s TUs of two words in each of minutes 0 to 2.
  // Candidate, per minute:
  //   0: one TU missing
  //   1: one TU 0.255 s shorter
  //   2: one extra TU
  const auto gold = tokenize_transcript(make_transcript({
      {"A", 0, 1.5, "uno due"}, {"A", 10, 11.5, "tre quattro"}, {"A", 20, 21.5, "cinque sei"},
      {"A", 60, 61.5, "uno due"}, {"A", 70, 71.5, "tre quattro"}, {"A", 80, 81.5, "cinque sei"},
      {"A", 120, 121.5, "uno due"}, {"A", 130, 131.5, "tre quattro"},
      {"A", 140, 141.5, "cinque sei"}}));
  const auto cand = tokenize_transcript(make_transcript({
      {"A", 0, 1.5, "uno due"}, {"A", 10, 11.5, "tre quattro"},
      {"A", 60, 61.5, "uno due"}, {"A", 70, 71.245, "tre quattro"}, {"A", 80, 81.5, "cinque sei"},
      {"A", 120, 121.5, "uno due"}, {"A", 130, 131.5, "tre quattro"},
      {"A", 140, 141.5, "cinque sei"}, {"A", 150, 151.5, "sette otto"}}));
  const auto d = compute_deltas(per_minute_stats(gold), per_minute_stats(cand), 2,
                                {Measure::TuCount, Measure::TuDuration, Measure::LinguisticTokens});
  // Hand-computed candidate − gold, minutes 0..2.
  const std::vector<double> expected = {-1, 0, 1, -1.5, -0.26, 1.5, -2, 0, 2};
  std::vector<double> got;
  for (const auto& r : d.rows) got.push_back(r.rounded_delta());
  c.expect(got == expected, "constructed deltas differ from hand computation");
  c.expect(d.rows.size() == 9 && d.rows[4].delta_milli == -255, "exact tu_duration delta lost");
}

// ---- AC8 ---------------------------------------------------------------------------

void ac8(Check& c) {
  for (const char* name : {"kps021_extract.tsv", "pba001_extract.tsv", "sbib003_extract.tsv"}) {
    const auto t1 = read_tsv(fixture(name)).transcript;
    std::ostringstream w1;
    write_tsv(w1, t1);
    std::istringstream r1(w1.str());
    const auto t2 = read_tsv(r1).transcript;
    std::ostringstream w2;
    write_tsv(w2, t2);
    c.expect(w1.str() == w2.str(), fmt::format("{}: TSV read/write is not a fixpoint", name));
    bool same = t1.size() == t2.size();
    for (std::size_t i = 0; same && i < t1.size(); ++i) {
      same = t1[i].speaker == t2[i].speaker && t1[i].interval == t2[i].interval &&
             t1[i].raw_text == t2[i].raw_text;
    }
    c.expect(same, fmt::format("{}: TUs change across a round trip", name));
  }

  std::mt19937_64 rng(108);
  std::uniform_int_distribution<std::int64_t> ms(0, 100LL * 3600 * 1000 - 1);
  std::size_t bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto v = ms(rng);
    const auto s = format_srt_timestamp(v);
    if (parse_srt_timestamp(s) != v || format_srt_timestamp(parse_srt_timestamp(s)) != s) ++bad;
  }
  c.expect(bad == 0, fmt::format("{} SRT timestamps do not round-trip", bad));

  std::size_t cues = 0;
  for (const char* f : {"srt/SP1.srt", "srt/SP2.srt"}) {
    std::ifstream in(fixture(f));
    cues += read_srt(in, f).size();
  }
#ifdef TQA_HAVE_CLI
  const auto out = (fs::temp_directory_path() / "tqa_acceptance_import.tsv").string();
  const std::string a = fixture("srt/SP1.srt");
  const std::string b = fixture("srt/SP2.srt");
  const char* argv[] = {"tqa", "-o", out.c_str(), "import-srt", a.c_str(), b.c_str()};
  std::ostringstream so, se;
  const int code = cli::dispatch(6, argv, so, se);
  c.expect(code == cli::kExitOk, "import-srt failed: " + se.str());
  const auto merged = read_tsv(out).transcript.size();
  fs::remove(out);
  c.note = "via import-srt";
#else
  const auto merged = read_srt_set({fixture("srt/SP1.srt"), fixture("srt/SP2.srt")}).transcript.size();
  c.note = "via read_srt_set";
#endif
  c.expect(merged == cues, fmt::format("merged {} TUs from {} cues", merged, cues));
}

// ---- AC9 ---------------------------------------------------------------------------

void ac9(Check& c) {
  const std::vector<std::tuple<std::string, std::string, MismatchCategory>> cases = {
      {"mh", "mmm", MismatchCategory::OrthographicVariant},
      {"sala-", "salare", MismatchCategory::InterruptionCompletion},
      {"l'avevi", "la avevi", MismatchCategory::Elision},
      {"comunque", "ovunque", MismatchCategory::Approximation},
  };
  for (const auto& [ref, hyp, want] : cases) {
    MismatchRecord r;
    r.id = 1;
    r.op = {OpKind::Substitution, 0, 0};
    r.ref_token = ref;
    r.hyp_token = hyp;
    const auto got = classify_mismatch(r).category;
    c.expect(got == want, fmt::format("{}/{} -> {}", ref, hyp, category_name(got)));
  }
}

// ---- AC10 --------------------------------------------------------------------------

// About ten minutes of two-speaker talk, roughly `words` words in total.
Transcript synthetic_session(std::mt19937& rng, std::size_t words, double noise) {
  static const char* const kLex[] = {"allora", "sì", "no", "però", "cioè", "quindi", "mh",
                                     "casa",   "va",  "bene", "io",  "ho",    "detto", "che",
                                     "la",     "il",  "di",   "un",  "gelato", "piazza"};
  std::uniform_int_distribution<int> lex(0, 19);
  std::uniform_int_distribution<int> per_tu(4, 16);
  std::bernoulli_distribution flip(noise);
  std::bernoulli_distribution markup(0.15);
  std::vector<testing::Row> rows;
  double t = 0;
  std::size_t made = 0;
  int speaker = 1;
  while (made < words) {
    const int n = per_tu(rng);
    std::string text;
    for (int i = 0; i < n; ++i) {
      if (i) text += ' ';
      std::string w = kLex[lex(rng)];
      if (flip(rng)) w = kLex[lex(rng)];
      if (markup(rng)) w = "[" + w + "]";
      text += w;
      if (i == n / 2 && markup(rng)) text += " (.)";
    }
    const double dur = n * 0.3;
    rows.push_back({"SP" + std::to_string(speaker), std::round(t * 100) / 100,
                    std::round((t + dur) * 100) / 100, text});
    t += dur - 0.2;
    speaker = 3 - speaker;
    made += static_cast<std::size_t>(n);
  }
  return make_transcript(rows, "synthetic");
}

void ac10(Check& c) {
  std::mt19937 rng(110);
  const auto gold_raw = synthetic_session(rng, 2000, 0.0);
  std::mt19937 rng2(110);
  const auto cand_raw = synthetic_session(rng2, 2000, 0.1);

  const auto g = tokenize_transcript(gold_raw);
  const auto h = tokenize_transcript(cand_raw);
  const auto t0 = Clock::now();
  const auto aligned = align_transcripts(g, h);
  const double align_s = seconds_since(t0);
  const auto n = aligned.parts[0].ref_keys.size();
  c.expect(n >= 1900, fmt::format("only {} reference tokens", n));
  c.expect(align_s < 1.0, fmt::format("alignment took {:.3f} s", align_s));

  const auto dir = fs::temp_directory_path();
  const auto gold_path = (dir / "tqa_acceptance_gold.tsv").string();
  const auto cand_path = (dir / "tqa_acceptance_cand.tsv").string();
  write_tsv(gold_path, gold_raw);
  write_tsv(cand_path, cand_raw);

  const auto t1 = Clock::now();
  const NormalizationConfig cfg;
  const auto gn = tokenize_transcript(normalize_transcript(read_tsv(gold_path).transcript, cfg).transcript);
  const auto hn = tokenize_transcript(normalize_transcript(read_tsv(cand_path).transcript, cfg).transcript);
  const auto res = align_transcripts(gn, hn);
  const auto w = compute_wer(res.total);
  const auto gs = per_minute_stats(gn);
  const auto hs = per_minute_stats(hn);
  const auto d = compute_deltas(gs, hs);
  const auto ov = detect_annotation_issues(hn);
  auto j = report::header("report");
  j["alignment"] = report::alignment(res);
  j["wer"] = report::wer(w);
  j["per_minute"] = report::per_minute(hs);
  j["summary"] = report::summary(summary_stats(hn));
  j["deltas"] = report::deltas(d);
  auto issues = report::Json::array();
  for (const auto& i : ov) issues.push_back(report::overlap_issue(i, hn));
  j["overlaps"] = std::move(issues);
  const auto text = j.dump(2);
  const double full_s = seconds_since(t1);
  fs::remove(gold_path);
  fs::remove(cand_path);

  c.expect(!text.empty() && w.wer.has_value(), "report incomplete");
  c.expect(full_s < 3.0, fmt::format("full report took {:.3f} s", full_s));
  c.note = fmt::format("{}x{} tokens aligned in {:.3f} s, full report {:.3f} s", n,
                       aligned.parts[0].hyp_keys.size(), align_s, full_s);
}

}  // namespace
}  // namespace tqa

int main() {
  using Criterion = std::pair<const char*, std::function<void(tqa::Check&)>>;
  const std::vector<Criterion> criteria = {
      {"AC1 alignment optimality", tqa::ac1},   {"AC2 WER formula", tqa::ac2},
      {"AC3 golden fixture KPS021", tqa::ac3},  {"AC4 golden fixtures PBA001/SBIB003", tqa::ac4},
      {"AC5 normalization", tqa::ac5},          {"AC6 overlap detection", tqa::ac6},
      {"AC7 delta pipeline", tqa::ac7},         {"AC8 format round-trips", tqa::ac8},
      {"AC9 mismatch heuristics", tqa::ac9},    {"AC10 performance", tqa::ac10},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    tqa::Check c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = c.passed();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS " : "FAIL ") << name;
    if (!ok) {
      std::cout << ": " << c.detail();
    } else if (!c.note.empty()) {
      std::cout << " (" << c.note << ")";
    }
    std::cout << "\n";
  }
  std::cout << fmt::format("{}/{} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
