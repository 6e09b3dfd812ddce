// core/src/mismatch.cpp

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

#include "tqa/mismatch.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "tqa/csv.hpp"
#include "tqa/error.hpp"
#include "tqa/utf8.hpp"

namespace tqa {

namespace {

struct CategoryInfo {
  MismatchCategory c;
  std::string_view name;
};

constexpr CategoryInfo kCategories[] = {
    {MismatchCategory::OrthographicVariant, "orthographic-variant"},
    {MismatchCategory::InterruptionCompletion, "interruption-completion"},
    {MismatchCategory::Elision, "elision"},
    {MismatchCategory::Approximation, "approximation"},
    {MismatchCategory::AddedContent, "added-content"},
    {MismatchCategory::SkippedContent, "skipped-content"},
    {MismatchCategory::Unclassified, "unclassified"},
    {MismatchCategory::ProperName, "proper-name"},
    {MismatchCategory::GrammaticalFeature, "grammatical-feature"},
};

// Code points with typographic apostrophes folded and, optionally, spaces
// dropped.
std::u32string code_points(std::string_view s, bool drop_spaces) {
  std::u32string out;
  for (const auto& cp : utf8::decode(s)) {
    char32_t c = cp.value == U'’' ? U'\'' : cp.value;
    if (drop_spaces && utf8::is_space(c)) continue;
    out.push_back(c);
  }
  return out;
}

bool is_vowel(char32_t c) {
  constexpr std::u32string_view kVowels = U"aeiouàèéìíòóùúAEIOUÀÈÉÌÍÒÓÙÚ";
  return kVowels.find(c) != std::u32string_view::npos;
}

std::string lexicon_key(std::string_view s) {
  std::string out;
  bool space = false;
  for (const auto& cp : utf8::decode(s)) {
    char32_t c = cp.value == U'’' ? U'\'' : cp.value;
    if (utf8::is_space(c)) {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    utf8::append(out, utf8::to_lower(c));
  }
  return out;
}

}  // namespace

std::string_view category_name(MismatchCategory c) {
  for (const auto& i : kCategories) {
    if (i.c == c) return i.name;
  }
  return "?";
}

std::optional<MismatchCategory> parse_category(std::string_view s) {
  for (const auto& i : kCategories) {
    if (i.name == s) return i.c;
  }
  return std::nullopt;
}

std::string_view confidence_name(Confidence c) {
  return c == Confidence::Heuristic ? "heuristic" : "manual";
}

std::vector<MismatchRecord> extract_mismatches(const Alignment& a,
                                               const std::vector<std::string>& ref_tokens,
                                               const std::vector<std::string>& hyp_tokens) {
  std::vector<MismatchRecord> out;
  const auto fetch = [](const std::vector<std::string>& v, std::optional<std::size_t> i,
                        const char* side) -> std::optional<std::string> {
    if (!i) return std::nullopt;
    if (*i >= v.size()) {
      throw std::logic_error(fmt::format("alignment {} index {} out of range ({} tokens)", side,
                                         *i, v.size()));
    }
    return v[*i];
  };
  for (const auto& op : a.ops) {
    if (op.kind == OpKind::Match) continue;
    MismatchRecord r;
    r.id = out.size() + 1;
    r.op = op;
    r.ref_token = fetch(ref_tokens, op.ref_index, "reference");
    r.hyp_token = fetch(hyp_tokens, op.hyp_index, "hypothesis");
    out.push_back(std::move(r));
  }
  return out;
}

// ---- lexicon -------------------------------------------------------------------------

VariantLexicon VariantLexicon::defaults() {
  VariantLexicon lex;
  lex.add("mh", "mmm");
  lex.add("bah", "beh");
  lex.add("a parte", "apparte");
  lex.add("fior di latte", "fiordilatte");
  return lex;
}

void VariantLexicon::add(std::string_view a, std::string_view b) {
  auto ka = lexicon_key(a);
  auto kb = lexicon_key(b);
  if (ka.empty() || kb.empty()) throw ConfigError("variant lexicon entries must be non-empty");
  if (ka == kb) throw ConfigError("variant lexicon entry pairs '" + ka + "' with itself");
  if (kb < ka) std::swap(ka, kb);
  pairs_.emplace(std::move(ka), std::move(kb));
}

bool VariantLexicon::contains(std::string_view a, std::string_view b) const {
  auto ka = lexicon_key(a);
  auto kb = lexicon_key(b);
  if (kb < ka) std::swap(ka, kb);
  return pairs_.count({ka, kb}) > 0;
}

void VariantLexicon::merge(const VariantLexicon& other) {
  pairs_.insert(other.pairs_.begin(), other.pairs_.end());
}

VariantLexicon VariantLexicon::read(std::istream& in, const std::string& source) {
  VariantLexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError(source, lineno, "expected two TAB-separated spellings");
    }
    try {
      lex.add(std::string_view(line).substr(0, tab), std::string_view(line).substr(tab + 1));
    } catch (const ConfigError& e) {
      throw ParseError(source, lineno, e.what());
    }
  }
  return lex;
}

VariantLexicon VariantLexicon::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return read(in, path);
}

// ---- heuristics ------------------------------------------------------------------------

double normalized_edit_distance(std::string_view a, std::string_view b) {
  const auto x = code_points(a, false);
  const auto y = code_points(b, false);
  const std::size_t longest = std::max(x.size(), y.size());
  if (longest == 0) return 0.0;
  std::vector<std::size_t> row(y.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= x.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= y.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (x[i - 1] == y[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return static_cast<double>(row[y.size()]) / static_cast<double>(longest);
}

bool is_interruption_completion(std::string_view a, std::string_view b) {
  const auto one_way = [](std::u32string cut, const std::u32string& full) {
    if (cut.empty() || cut.back() != U'-') return false;
    while (!cut.empty() && cut.back() == U'-') cut.pop_back();
    if (cut.empty() || full.size() <= cut.size()) return false;
    return full.compare(0, cut.size(), cut) == 0;
  };
  const auto x = code_points(a, false);
  const auto y = code_points(b, false);
  return one_way(x, y) || one_way(y, x);
}

bool is_elision(std::string_view a, std::string_view b) {
  const auto x = code_points(a, true);
  const auto y = code_points(b, true);
  if (x == y) return false;

  // X = P + "'" + S and Y = P + vowel + S.
  const auto contraction = [](const std::u32string& cut, const std::u32string& full) {
    const auto p = cut.find(U'\'');
    if (p == std::u32string::npos || p == 0 || cut.find(U'\'', p + 1) != std::u32string::npos) {
      return false;
    }
    if (full.size() != cut.size()) return false;
    return full.compare(0, p, cut, 0, p) == 0 && is_vowel(full[p]) &&
           full.compare(p + 1, std::u32string::npos, cut, p + 1, std::u32string::npos) == 0;
  };
  // Y = X + vowel, as in "son" / "sono".
  const auto truncation = [](const std::u32string& cut, const std::u32string& full) {
    return cut.size() >= 2 && full.size() == cut.size() + 1 && is_vowel(full.back()) &&
           full.compare(0, cut.size(), cut) == 0 && cut.find(U'\'') == std::u32string::npos;
  };
  return contraction(x, y) || contraction(y, x) || truncation(x, y) || truncation(y, x);
}

MismatchRecord classify_mismatch(MismatchRecord rec, const ClassifierConfig& cfg) {
  rec.confidence = Confidence::Heuristic;
  const bool both = rec.ref_token && rec.hyp_token;
  const auto& r = rec.ref_token;
  const auto& h = rec.hyp_token;
  if (both && cfg.lexicon && cfg.lexicon->contains(*r, *h)) {
    rec.category = MismatchCategory::OrthographicVariant;
  } else if (both && is_interruption_completion(*r, *h)) {
    rec.category = MismatchCategory::InterruptionCompletion;
  } else if (both && is_elision(*r, *h)) {
    rec.category = MismatchCategory::Elision;
  } else if (!r && h) {
    rec.category = MismatchCategory::AddedContent;
  } else if (r && !h) {
    rec.category = MismatchCategory::SkippedContent;
  } else if (both && normalized_edit_distance(*r, *h) <= cfg.approximation_threshold) {
    rec.category = MismatchCategory::Approximation;
  } else {
    rec.category = MismatchCategory::Unclassified;
  }
  return rec;
}

std::vector<MismatchGroup> group_adjacent(const Alignment& a,
                                          const std::vector<MismatchRecord>& records) {
  std::vector<MismatchGroup> groups;
  std::size_t next = 0;
  bool in_run = false;
  const auto join = [](std::optional<std::string>& acc, const std::optional<std::string>& t) {
    if (!t) return;
    acc = acc ? *acc + " " + *t : *t;
  };
  for (const auto& op : a.ops) {
    if (op.kind == OpKind::Match) {
      in_run = false;
      continue;
    }
    if (next >= records.size()) throw std::logic_error("fewer records than non-match ops");
    const auto& rec = records[next++];
    if (!in_run) {
      groups.push_back({{rec.id}, rec});
      in_run = true;
      continue;
    }
    auto& g = groups.back();
    g.member_ids.push_back(rec.id);
    join(g.merged.ref_token, rec.ref_token);
    join(g.merged.hyp_token, rec.hyp_token);
    auto& m = g.merged;
    m.op.kind = m.ref_token && m.hyp_token ? OpKind::Substitution
                : m.ref_token             ? OpKind::Deletion
                                          : OpKind::Insertion;
    if (!m.op.ref_index) m.op.ref_index = rec.op.ref_index;
    if (!m.op.hyp_index) m.op.hyp_index = rec.op.hyp_index;
  }
  return groups;
}

ContentLengthStats content_length_stats(const std::vector<MismatchRecord>& records,
                                        const std::vector<std::string>& ref_tokens) {
  ContentLengthStats s;
  std::size_t added_chars = 0;
  std::size_t skipped_chars = 0;
  for (const auto& r : records) {
    if (r.category == MismatchCategory::AddedContent && r.hyp_token) {
      ++s.added;
      added_chars += utf8::length(*r.hyp_token);
    } else if (r.category == MismatchCategory::SkippedContent && r.ref_token) {
      ++s.skipped;
      skipped_chars += utf8::length(*r.ref_token);
    }
  }
  const auto avg = [](std::size_t chars, std::size_t n) -> std::optional<double> {
    if (n == 0) return std::nullopt;
    return static_cast<double>(chars) / static_cast<double>(n);
  };
  s.added_avg_chars = avg(added_chars, s.added);
  s.skipped_avg_chars = avg(skipped_chars, s.skipped);
  std::size_t ref_chars = 0;
  for (const auto& t : ref_tokens) ref_chars += utf8::length(t);
  s.reference_avg_chars = avg(ref_chars, ref_tokens.size());
  return s;
}

std::map<MismatchCategory, std::size_t> category_counts(const std::vector<MismatchRecord>& recs) {
  std::map<MismatchCategory, std::size_t> counts;
  for (const auto& r : recs) ++counts[r.category];
  return counts;
}

// ---- review CSV --------------------------------------------------------------------------

void write_review_csv(std::ostream& out, const std::vector<MismatchRecord>& records) {
  csv::write_row(out, {"id", "op", "ref_token", "hyp_token", "category", "override"});
  for (const auto& r : records) {
    csv::write_row(out, {std::to_string(r.id), std::string(op_kind_name(r.op.kind)),
                         r.ref_token.value_or(""), r.hyp_token.value_or(""),
                         std::string(category_name(r.category)), ""});
  }
}

std::map<std::size_t, MismatchCategory> read_review_overrides(std::istream& in,
                                                              const std::string& source) {
  const auto rows = csv::read_all(in, source);
  std::map<std::size_t, MismatchCategory> out;
  if (rows.empty()) return out;
  const auto& header = rows.front();
  const auto col = [&](std::string_view name) -> std::size_t {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw ParseError(source, 1, fmt::format("missing column '{}'", name));
    return static_cast<std::size_t>(it - header.begin());
  };
  const auto id_col = col("id");
  const auto override_col = col("override");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    // Line numbers are approximate when quoted fields span lines.
    const auto line = i + 1;
    if (row.size() != header.size()) {
      throw ParseError(source, line,
                       fmt::format("expected {} fields, found {}", header.size(), row.size()));
    }
    const auto& ov = row[override_col];
    if (ov.empty()) continue;
    const auto cat = parse_category(ov);
    if (!cat) throw ParseError(source, line, "unknown category '" + ov + "'");
    std::size_t id = 0;
    const auto& s = row[id_col];
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), id);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw ParseError(source, line, "malformed id '" + s + "'");
    }
    out[id] = *cat;
  }
  return out;
}

void apply_overrides(std::vector<MismatchRecord>& records,
                     const std::map<std::size_t, MismatchCategory>& overrides) {
  for (const auto& [id, cat] : overrides) {
    const auto it = std::find_if(records.begin(), records.end(),
                                 [id = id](const MismatchRecord& r) { return r.id == id; });
    if (it == records.end()) throw DomainError(fmt::format("no mismatch record with id {}", id));
    it->category = cat;
    it->confidence = Confidence::Manual;
  }
}

}  // namespace tqa
