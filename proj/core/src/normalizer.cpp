// core/src/normalizer.cpp

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

#include "tqa/normalizer.hpp"

#include <fstream>
#include <istream>

#include <fmt/format.h>

#include "tqa/error.hpp"
#include "tqa/numbers_it.hpp"
#include "tqa/utf8.hpp"

namespace tqa {

CorrectionRule::CorrectionRule(std::string p, std::string r)
    : pattern(std::move(p)), replacement(std::move(r)) {
  if (pattern.empty() || replacement.empty()) {
    throw ConfigError("correction rule with an empty side: '" + pattern + "' -> '" +
                      replacement + "'");
  }
  if (pattern == replacement) throw ConfigError("correction rule maps '" + pattern + "' to itself");
}

std::vector<CorrectionRule> default_corrections() {
  return {
      {"pò", "po'"},
      {"perchè", "perché"},
      {"poichè", "poiché"},
      {"benchè", "benché"},
      {"affinchè", "affinché"},
      {"finchè", "finché"},
  };
}

std::vector<CorrectionRule> read_correction_rules(std::istream& in, const std::string& source) {
  std::vector<CorrectionRule> rules;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError(source, lineno, "expected 'pattern<TAB>replacement'");
    }
    try {
      rules.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    } catch (const ConfigError& e) {
      throw ParseError(source, lineno, e.what());
    }
  }
  return rules;
}

std::vector<CorrectionRule> load_correction_rules(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open correction rules file: " + path);
  return read_correction_rules(in, path);
}

std::vector<CorrectionRule> merge_rules(std::vector<CorrectionRule> base,
                                        const std::vector<CorrectionRule>& overrides) {
  for (const auto& o : overrides) {
    bool replaced = false;
    for (auto& b : base) {
      if (b.pattern == o.pattern) {
        b.replacement = o.replacement;
        replaced = true;
      }
    }
    if (!replaced) base.push_back(o);
  }
  return base;
}

CorrectionTable::CorrectionTable(const std::vector<CorrectionRule>& rules) {
  for (const auto& r : rules) {
    if (!map_.emplace(r.pattern, r.replacement).second) {
      throw ConfigError("duplicate correction pattern: '" + r.pattern + "'");
    }
  }
  for (const auto& r : rules) {
    if (map_.count(r.replacement)) {
      throw ConfigError("correction replacement '" + r.replacement +
                        "' is also a pattern; chained rules are not allowed");
    }
  }
}

std::string CorrectionTable::apply(std::string_view token) const {
  const auto it = map_.find(std::string(token));
  return it == map_.end() ? std::string(token) : it->second;
}

std::string apply_corrections(std::string_view token, const std::vector<CorrectionRule>& rules) {
  return CorrectionTable(rules).apply(token);
}

namespace {

constexpr char32_t kDegree = 0xB0;

bool is_jefferson_symbol(char32_t c) {
  switch (c) {
    case U',': case U'?': case U'.': case U':': case U'(': case U')': case U'=':
    case kDegree: case U'[': case U']': case U'>': case U'<':
      return true;
    default:
      return false;
  }
}

char32_t fold(char32_t c) {
  switch (c) {
    case U'\t': case U'\n': case U'\r': case U'\v': case U'\f': case 0xA0:
      return U' ';
    case 0x2019: case 0x2018: case 0x02BC: case 0x00B4: case U'`':
      return U'\'';
    default:
      return c;
  }
}

std::u32string to_u32(std::string_view s) {
  std::u32string out;
  for (const auto& cp : utf8::decode(s)) out.push_back(cp.value);
  return out;
}

std::string to_utf8(std::u32string_view s) {
  std::string out;
  for (char32_t c : s) utf8::append(out, c);
  return out;
}

bool is_word_char(char32_t c) {
  return utf8::is_letter(c) || utf8::is_digit(c) || c == U'\'' || c == U'-';
}

class Pass {
 public:
  Pass(const NormalizationConfig& cfg, const CorrectionTable& table, NormalizeResult& log)
      : cfg_(cfg), table_(table), log_(log) {}

  std::string run(std::string_view in) {
    auto text = filter(in);
    if (cfg_.number_conversion) text = spell_numbers(text);
    text = tidy_spacing(text);
    if (cfg_.strip_edge_pauses) text = strip_edge_pauses(text);
    text = correct(text);
    return to_utf8(collapse(text));
  }

 private:
  bool allowed(char32_t c) const {
    return utf8::is_letter(c) || utf8::is_digit(c) || c == U'\'' || c == U'-' || c == U' ' ||
           is_jefferson_symbol(c) || cfg_.extra_allowed.find(c) != std::u32string::npos;
  }

  std::u32string filter(std::string_view in) {
    std::u32string out;
    for (const auto& cp : utf8::decode(in)) {
      const char32_t c = fold(cp.value);
      if (allowed(c)) {
        out.push_back(c);
      } else {
        log_.removed.push_back({cp.value, cp.offset});
      }
    }
    return out;
  }

  std::u32string spell_numbers(const std::u32string& s) {
    std::u32string out;
    std::size_t i = 0;
    while (i < s.size()) {
      if (!utf8::is_digit(s[i])) {
        out.push_back(s[i++]);
        continue;
      }
      std::size_t j = i;
      while (j < s.size() && utf8::is_digit(s[j])) ++j;
      const std::u32string run = s.substr(i, j - i);
      const auto digit_at = [&](std::size_t k) { return k < s.size() && utf8::is_digit(s[k]); };
      const auto is_sep = [](char32_t c) { return c == U'.' || c == U',' || c == U':' || c == U'/'; };
      const bool glued_before = i > 0 && (utf8::is_letter(s[i - 1]) ||
                                          (i > 1 && is_sep(s[i - 1]) && digit_at(i - 2)));
      const bool glued_after = j < s.size() && (utf8::is_letter(s[j]) ||
                                                (is_sep(s[j]) && digit_at(j + 1)));
      std::optional<std::string> words;
      if (glued_before || glued_after) {
        log_.warnings.push_back("numeral left unchanged (not a plain integer): " + to_utf8(run));
      } else if (run.size() > 6) {
        log_.warnings.push_back("numeral out of range, left unchanged: " + to_utf8(run));
      } else {
        std::int64_t v = 0;
        for (char32_t d : run) v = v * 10 + (d - U'0');
        words = number_to_words_it(v);
        if (!words) log_.warnings.push_back("numeral out of range, left unchanged: " + to_utf8(run));
      }
      if (words) {
        out += to_u32(*words);
      } else {
        out += run;
      }
      i = j;
    }
    return out;
  }

  // Length of the "(.)" / "(..)" pause or "((...))" group starting at i, 0 if none.
  static std::size_t group_length(const std::u32string& s, std::size_t i) {
    if (s[i] != U'(' || i + 1 >= s.size()) return 0;
    if (s[i + 1] == U'(') {
      const auto close = s.find(U"))", i + 2);
      return close == std::u32string::npos ? 0 : close + 2 - i;
    }
    std::size_t j = i + 1;
    while (j < s.size() && s[j] == U'.') ++j;
    if (j > i + 1 && j < s.size() && s[j] == U')') return j + 1 - i;
    return 0;
  }

  // Glues openers to the following word and closers/intonation to the
  // preceding one; keeps pauses and non-verbal groups space-separated.
  std::u32string tidy_spacing(const std::u32string& s) {
    std::u32string out;
    bool lower = false, faster = false, slower = false;
    std::vector<bool> opener_at;  // parallel to out: char is a span opener
    const auto push = [&](char32_t c, bool opener) {
      out.push_back(c);
      opener_at.push_back(opener);
    };
    const auto pop_space = [&] {
      if (!out.empty() && out.back() == U' ') {
        out.pop_back();
        opener_at.pop_back();
      }
    };
    std::size_t i = 0;
    while (i < s.size()) {
      const char32_t c = s[i];
      if (c == U' ') {
        if (!out.empty() && out.back() != U' ' && !opener_at.back()) push(U' ', false);
        ++i;
        continue;
      }
      if (const auto len = group_length(s, i); len > 0) {
        if (!out.empty() && is_word_char(out.back())) push(U' ', false);
        if (s[i + 1] == U'(') {
          // Non-verbal description: inner spaces collapsed and trimmed.
          std::u32string inner;
          for (std::size_t k = i + 2; k < i + len - 2; ++k) {
            if (s[k] == U' ' && (inner.empty() || inner.back() == U' ')) continue;
            inner.push_back(s[k]);
          }
          while (!inner.empty() && inner.back() == U' ') inner.pop_back();
          push(U'(', false);
          push(U'(', false);
          for (char32_t k : inner) push(k, false);
          push(U')', false);
          push(U')', false);
        } else {
          for (std::size_t k = i; k < i + len; ++k) push(s[k], false);
        }
        i += len;
        if (i < s.size() && is_word_char(s[i])) push(U' ', false);
        continue;
      }
      bool opener = false;
      bool closer = false;
      switch (c) {
        case U'[': case U'(':
          opener = true;
          break;
        case U']': case U')': case U',': case U'?': case U'.':
          closer = true;
          break;
        case kDegree:
          lower = !lower;
          opener = lower;
          closer = !lower;
          break;
        case U'>':
          if (slower) {
            slower = false;
            closer = true;
          } else {
            faster = true;
            opener = true;
          }
          break;
        case U'<':
          if (faster) {
            faster = false;
            closer = true;
          } else {
            slower = true;
            opener = true;
          }
          break;
        default:
          break;
      }
      if (closer) pop_space();
      push(c, opener);
      ++i;
    }
    return out;
  }

  static std::vector<std::u32string> split(const std::u32string& s) {
    std::vector<std::u32string> parts;
    std::u32string cur;
    bool in_group = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!in_group && s[i] == U'(' && i + 1 < s.size() && s[i + 1] == U'(') in_group = true;
      if (in_group && s[i] == U')' && i > 0 && s[i - 1] == U')') in_group = false;
      if (s[i] == U' ' && !in_group) {
        if (!cur.empty()) parts.push_back(std::move(cur));
        cur.clear();
      } else {
        cur.push_back(s[i]);
      }
    }
    if (!cur.empty()) parts.push_back(std::move(cur));
    return parts;
  }

  static std::u32string join(const std::vector<std::u32string>& parts, std::size_t b,
                             std::size_t e) {
    std::u32string out;
    for (std::size_t k = b; k < e; ++k) {
      if (!out.empty()) out.push_back(U' ');
      out += parts[k];
    }
    return out;
  }

  static std::u32string strip_edge_pauses(const std::u32string& s) {
    const auto parts = split(s);
    std::size_t b = 0;
    std::size_t e = parts.size();
    while (b < e && parts[b] == U"(.)") ++b;
    while (e > b && parts[e - 1] == U"(.)") --e;
    return join(parts, b, e);
  }

  std::u32string correct(const std::u32string& s) {
    if (table_.size() == 0) return s;
    auto parts = split(s);
    static const std::u32string kLead = U"[(°<>";
    static const std::u32string kTrail = U"])°<>,?.:";
    for (auto& p : parts) {
      if (p.size() >= 2 && p[0] == U'(' && p[1] == U'(') continue;
      std::size_t b = 0;
      std::size_t e = p.size();
      while (b < e && kLead.find(p[b]) != std::u32string::npos) ++b;
      while (e > b && kTrail.find(p[e - 1]) != std::u32string::npos) --e;
      if (b == e) continue;
      const auto core = to_utf8(std::u32string_view(p).substr(b, e - b));
      const auto fixed = table_.apply(core);
      if (fixed != core) p = p.substr(0, b) + to_u32(fixed) + p.substr(e);
    }
    return join(parts, 0, parts.size());
  }

  static std::u32string collapse(const std::u32string& s) {
    std::u32string out;
    for (char32_t c : s) {
      if (c == U' ' && (out.empty() || out.back() == U' ')) continue;
      out.push_back(c);
    }
    while (!out.empty() && out.back() == U' ') out.pop_back();
    return out;
  }

  const NormalizationConfig& cfg_;
  const CorrectionTable& table_;
  NormalizeResult& log_;
};

constexpr int kMaxPasses = 8;

}  // namespace

NormalizeResult normalize(std::string_view raw, const NormalizationConfig& cfg) {
  const CorrectionTable table(cfg.corrections);
  NormalizeResult res;
  std::string cur(raw);
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    auto next = Pass(cfg, table, res).run(cur);
    if (next == cur) break;
    cur = std::move(next);
  }
  res.text = std::move(cur);
  return res;
}

std::string normalize_text(std::string_view raw, const NormalizationConfig& cfg) {
  return normalize(raw, cfg).text;
}

TranscriptNormalization normalize_transcript(const Transcript& t,
                                             const NormalizationConfig& cfg) {
  TranscriptNormalization out;
  std::vector<TranscriptionUnit> units;
  units.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& u = t[i];
    auto res = normalize(u.raw_text, cfg);
    const auto where = fmt::format("TU {} ({} {:.2f}-{:.2f})", i, u.speaker.str(),
                                   u.interval.start(), u.interval.end());
    for (const auto& r : res.removed) {
      out.log.push_back(fmt::format("{}: removed U+{:04X} '{}' at byte {}", where,
                                    static_cast<std::uint32_t>(r.code_point),
                                    utf8::encode(r.code_point), r.offset));
    }
    for (const auto& w : res.warnings) out.log.push_back(where + ": " + w);
    if (res.text.empty() && !u.raw_text.empty()) {
      out.log.push_back(where + ": text is empty after normalization");
    }
    units.emplace_back(u.speaker, u.interval, std::move(res.text));
  }
  out.transcript = Transcript(std::move(units), t.source_label(), t.meta());
  return out;
}

}  // namespace tqa
