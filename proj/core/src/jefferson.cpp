// core/src/jefferson.cpp

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

#include "tqa/jefferson.hpp"

#include <algorithm>

#include "tqa/utf8.hpp"

namespace tqa {

namespace {

constexpr char32_t kDegree = 0xB0;
constexpr char32_t kRightQuote = 0x2019;

std::string issues_summary(const std::vector<ValidationIssue>& issues) {
  std::string s = "unbalanced Jefferson markup";
  for (const auto& i : issues) {
    s += "; ";
    s += issue_kind_name(i.kind);
    s += ": ";
    s += i.detail;
  }
  return s;
}

struct Span {
  bool open = false;
  std::size_t at = 0;
  bool doubled = false;  // opened with "[["
};

struct Builder {
  Token tok;
  bool active = false;
  bool sealed = false;  // ShortPause / NonVerbal: no more surface characters
  bool opened = false;  // holds a span-opening mark
};

bool is_word_char(char32_t c) {
  return utf8::is_letter(c) || utf8::is_digit(c) || c == U'-' || c == U'\'' || c == kRightQuote;
}

bool is_trailing_markup(char32_t c) {
  return c == U']' || c == U')' || c == kDegree || c == U'>' || c == U'<' || c == U',' ||
         c == U'?' || c == U'.';
}

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text), cps_(utf8::decode(text)) {}

  ScanResult run() {
    while (i_ < cps_.size()) step();
    finish();
    if (pending_.active && !out_.tokens.empty()) attach_to_previous(pending_);
    close_open_spans();
    std::stable_sort(out_.issues.begin(), out_.issues.end(),
                     [](const ValidationIssue& a, const ValidationIssue& b) {
                       return a.span.begin < b.span.begin;
                     });
    return std::move(out_);
  }

 private:
  char32_t at(std::size_t idx) const { return idx < cps_.size() ? cps_[idx].value : 0; }
  std::size_t offset(std::size_t idx) const {
    return idx < cps_.size() ? cps_[idx].offset : text_.size();
  }

  void issue(IssueKind kind, std::string detail, std::size_t begin, std::size_t end,
             std::string symbol = {}) {
    out_.issues.push_back({0, kind, std::move(detail), {begin, end}, std::move(symbol)});
  }

  FeatureSet active_spans() const {
    FeatureSet f;
    if (overlap_.open) f.insert(Feature::Overlap);
    if (lower_.open) f.insert(Feature::LowerVolume);
    if (faster_.open) f.insert(Feature::Faster);
    if (slower_.open) f.insert(Feature::Slower);
    if (uncertain_.open) f.insert(Feature::Uncertain);
    return f;
  }

  void begin_if_needed(std::size_t byte_off) {
    if (cur_.active) return;
    cur_ = Builder{};
    cur_.active = true;
    cur_.tok.span.begin = byte_off;
    if (pending_.active) {
      cur_.tok.span.begin = pending_.tok.span.begin;
      cur_.tok.marks = std::move(pending_.tok.marks);
      cur_.tok.features |= pending_.tok.features;
      pending_ = Builder{};
    }
  }

  void add_mark(std::string symbol, std::size_t begin, std::size_t end, bool opener = false) {
    if (opener && cur_.sealed) finish();
    begin_if_needed(begin);
    cur_.tok.marks.push_back({cur_.tok.surface.size(), std::move(symbol)});
    cur_.tok.span.end = end;
    cur_.opened = cur_.opened || opener;
  }

  void add_surface(char32_t cp, std::size_t begin, std::size_t end) {
    if (cur_.sealed) finish();
    begin_if_needed(begin);
    utf8::append(cur_.tok.surface, cp == kRightQuote ? U'\'' : cp);
    cur_.tok.features |= active_spans();
    cur_.tok.span.end = end;
  }

  void attach_to_previous(Builder& b) {
    Token& prev = out_.tokens.back();
    for (auto& m : b.tok.marks) prev.marks.push_back({prev.surface.size(), std::move(m.symbol)});
    prev.features |= b.tok.features;
    prev.span.end = std::max(prev.span.end, b.tok.span.end);
    b = Builder{};
  }

  void classify(Token& t) {
    const auto cps = utf8::decode(t.surface);
    const bool all_x = std::all_of(cps.begin(), cps.end(), [](const utf8::CodePoint& c) {
      return c.value == U'x' || c.value == U'X';
    });
    if (all_x) {
      t.kind = TokenKind::Unintelligible;
      t.syllables = cps.size();
      t.features.insert(Feature::Unintelligible);
      return;
    }
    t.kind = TokenKind::Linguistic;
    const auto lower = utf8::to_lower(t.surface);
    if (lower.find("xx") != std::string::npos) {
      issue(IssueKind::UnknownSymbol, "run of 'x' inside an alphabetic token: " + t.surface,
            t.span.begin, t.span.end, "x");
    }
    std::size_t letters = 0;
    bool all_upper = true;
    for (const auto& c : cps) {
      if (!utf8::is_letter(c.value)) continue;
      ++letters;
      all_upper = all_upper && utf8::is_upper(c.value);
    }
    if (letters >= 2 && all_upper) t.features.insert(Feature::HigherVolume);
    if (t.surface.size() > 0 && t.surface.back() == '-') t.features.insert(Feature::Interrupted);
  }

  void finish() {
    if (!cur_.active) return;
    if (!cur_.sealed && cur_.tok.surface.empty()) {
      // Markup with no word of its own: openers wait for the next token,
      // closers and intonation close the previous one.
      if (cur_.opened || out_.tokens.empty()) {
        if (pending_.active) {
          for (auto& m : cur_.tok.marks) pending_.tok.marks.push_back(std::move(m));
          pending_.tok.features |= cur_.tok.features;
          pending_.tok.span.end = cur_.tok.span.end;
        } else {
          pending_ = std::move(cur_);
        }
        cur_ = Builder{};
      } else {
        attach_to_previous(cur_);
      }
      return;
    }
    if (!cur_.sealed) classify(cur_.tok);
    out_.tokens.push_back(std::move(cur_.tok));
    cur_ = Builder{};
  }

  void short_pause(std::size_t close_idx) {
    const std::size_t b = offset(i_);
    const std::size_t e = offset(close_idx + 1);
    if (cur_.active && (cur_.sealed || !cur_.tok.surface.empty())) finish();
    begin_if_needed(b);
    const std::size_t dots = close_idx - i_ - 1;
    if (dots != 1) {
      issue(IssueKind::MalformedPause, "short pause written with " + std::to_string(dots) +
                                           " dots", b, e, "(.)");
    }
    cur_.tok.marks.push_back({0, std::string(text_.substr(b, e - b))});
    cur_.tok.kind = TokenKind::ShortPause;
    cur_.tok.features.insert(Feature::ShortPause);
    cur_.tok.features |= active_spans();
    cur_.tok.span.end = e;
    cur_.sealed = true;
    i_ = close_idx + 1;
  }

  void non_verbal() {
    const std::size_t b = offset(i_);
    std::size_t k = i_ + 2;
    while (k + 1 < cps_.size() && !(at(k) == U')' && at(k + 1) == U')')) ++k;
    const bool closed = k + 1 < cps_.size();
    const std::size_t desc_begin = offset(i_ + 2);
    const std::size_t desc_end = closed ? offset(k) : text_.size();
    const std::size_t e = closed ? offset(k + 2) : text_.size();
    std::string desc(text_.substr(desc_begin, desc_end - desc_begin));

    if (!closed) issue(IssueKind::UnbalancedBracket, "unclosed '(('", b, e, "((");
    if (desc.find_first_not_of(' ') == std::string::npos) {
      issue(IssueKind::UnknownSymbol, "empty non-verbal annotation", b, e, "((");
      add_mark(std::string(text_.substr(b, e - b)), b, e);
      i_ = closed ? k + 2 : cps_.size();
      return;
    }
    if (cur_.active && (cur_.sealed || !cur_.tok.surface.empty())) finish();
    begin_if_needed(b);
    Token& t = cur_.tok;
    t.marks.push_back({0, "(("});
    t.surface = desc;
    t.description = desc;
    if (closed) t.marks.push_back({t.surface.size(), "))"});
    t.kind = TokenKind::NonVerbal;
    t.features.insert(Feature::NonVerbal);
    t.features |= active_spans();
    t.span.end = e;
    cur_.sealed = true;
    i_ = closed ? k + 2 : cps_.size();
  }

  void intonation(char32_t c, std::size_t b, std::size_t e) {
    std::size_t j = i_ + 1;
    bool terminal = true;
    while (j < cps_.size() && !utf8::is_space(at(j))) {
      if (!is_trailing_markup(at(j))) {
        terminal = false;
        break;
      }
      ++j;
    }
    const bool has_one = cur_.active && cur_.tok.features.has_intonation();
    if (terminal && !has_one) {
      add_mark(utf8::encode(c), b, e);
      cur_.tok.features.insert(c == U',' ? Feature::WeaklyRising
                               : c == U'?' ? Feature::Rising
                                           : Feature::Falling);
    } else {
      issue(IssueKind::UnknownSymbol, "'" + utf8::encode(c) + "' is not word-final", b, e,
            utf8::encode(c));
      add_mark(utf8::encode(c), b, e);
    }
  }

  void open_span(Span& s, const char* sym, std::size_t b, std::size_t e) {
    if (s.open && !s.doubled) {
      issue(IssueKind::UnbalancedBracket, std::string("'") + sym + "' opened again before closing",
            s.at, b, sym);
    }
    s = Span{true, b, false};
    add_mark(sym, b, e, /*opener=*/true);
  }

  void close_span(Span& s, const char* sym, std::size_t b, std::size_t e) {
    if (s.open) {
      s.open = false;
    } else {
      issue(IssueKind::UnbalancedBracket, std::string("unmatched closing '") + sym + "'", b, e,
            sym);
    }
    add_mark(sym, b, e);
  }

  void step() {
    const char32_t c = at(i_);
    const std::size_t b = offset(i_);
    const std::size_t e = offset(i_ + 1);

    if (utf8::is_space(c)) {
      finish();
      ++i_;
      return;
    }
    switch (c) {
      case U'(': {
        if (at(i_ + 1) == U'(') {
          non_verbal();
          return;
        }
        std::size_t j = i_ + 1;
        while (at(j) == U'.') ++j;
        if (j > i_ + 1 && at(j) == U')') {
          short_pause(j);
          return;
        }
        open_span(uncertain_, "(", b, e);
        break;
      }
      case U')':
        close_span(uncertain_, ")", b, e);
        break;
      case U'[':
        if (at(i_ + 1) == U'[') {
          const std::size_t e2 = offset(i_ + 2);
          issue(IssueKind::RepeatedOpenBracket, "repeated opening bracket '[['", b, e2, "[");
          if (overlap_.open && !overlap_.doubled) {
            issue(IssueKind::UnbalancedBracket, "'[' opened again before closing", overlap_.at,
                  b, "[");
          }
          overlap_ = Span{true, b, true};
          add_mark("[[", b, e2, /*opener=*/true);
          i_ += 2;
          return;
        }
        open_span(overlap_, "[", b, e);
        break;
      case U']':
        close_span(overlap_, "]", b, e);
        break;
      case kDegree:
        if (lower_.open) {
          close_span(lower_, "°", b, e);
        } else {
          open_span(lower_, "°", b, e);
        }
        break;
      case U'>':
        if (slower_.open) {
          close_span(slower_, ">", b, e);
        } else {
          open_span(faster_, ">", b, e);
        }
        break;
      case U'<':
        if (faster_.open) {
          close_span(faster_, "<", b, e);
        } else {
          open_span(slower_, "<", b, e);
        }
        break;
      case U':':
        add_mark(":", b, e);
        cur_.tok.features.insert(Feature::Prolongation);
        break;
      case U',':
      case U'?':
      case U'.':
        intonation(c, b, e);
        break;
      case U'=':
        add_mark("=", b, e);
        cur_.tok.features.insert(Feature::ProsodicLink);
        // The link mark must end the token even if it was sealed.
        if (cur_.tok.surface.empty() && !cur_.sealed && !out_.tokens.empty()) {
          attach_to_previous(cur_);
        } else {
          finish();
        }
        break;
      default:
        if (is_word_char(c)) {
          add_surface(c, b, e);
        } else {
          issue(IssueKind::UnknownSymbol, "symbol outside the transcription conventions: '" +
                                              utf8::encode(c) + "'",
                b, e, utf8::encode(c));
          add_mark(utf8::encode(c), b, e);
        }
        break;
    }
    ++i_;
  }

  void close_open_spans() {
    const auto unclosed = [&](const Span& s, const char* sym) {
      if (s.open && !s.doubled) {
        issue(IssueKind::UnbalancedBracket, std::string("unclosed '") + sym + "'", s.at,
              text_.size(), sym);
      }
    };
    unclosed(overlap_, "[");
    unclosed(lower_, "°");
    unclosed(faster_, ">");
    unclosed(slower_, "<");
    unclosed(uncertain_, "(");
  }

  std::string_view text_;
  std::vector<utf8::CodePoint> cps_;
  std::size_t i_ = 0;
  Span overlap_, lower_, faster_, slower_, uncertain_;
  Builder cur_;
  Builder pending_;
  ScanResult out_;
};

}  // namespace

MarkupError::MarkupError(std::vector<ValidationIssue> issues)
    : Error(issues_summary(issues)), issues_(std::move(issues)) {}

ScanResult scan_tu(std::string_view raw_text) { return Scanner(raw_text).run(); }

std::vector<Token> tokenize_tu(std::string_view raw_text) {
  auto res = scan_tu(raw_text);
  std::vector<ValidationIssue> fatal;
  for (const auto& i : res.issues) {
    if (i.kind == IssueKind::UnbalancedBracket || i.kind == IssueKind::RepeatedOpenBracket) {
      fatal.push_back(i);
    }
  }
  if (!fatal.empty()) throw MarkupError(std::move(fatal));
  return std::move(res.tokens);
}

std::vector<ValidationIssue> validate_markup(std::string_view raw_text, std::size_t tu_index) {
  auto issues = scan_tu(raw_text).issues;
  for (auto& i : issues) i.tu_index = tu_index;
  return issues;
}

std::string comparison_key(const Token& tok) {
  switch (tok.kind) {
    case TokenKind::Linguistic: return utf8::to_lower(tok.surface);
    case TokenKind::Unintelligible: return std::string(kUnintelligibleKey);
    case TokenKind::ShortPause:
    case TokenKind::NonVerbal: break;
  }
  throw DomainError("comparison_key called on a " + std::string(token_kind_name(tok.kind)) +
                    " token");
}

std::string render_tokens(const std::vector<Token>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty() && out.back() != '=') out += ' ';
    out += t.render();
  }
  return out;
}

std::size_t count_overlap_spans(std::string_view raw_text) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < raw_text.size(); ++i) {
    if (raw_text[i] == '[' && (i == 0 || raw_text[i - 1] != '[')) ++n;
  }
  return n;
}

Transcript tokenize_transcript(const Transcript& t) {
  std::vector<TranscriptionUnit> units = t.units();
  for (std::size_t i = 0; i < units.size(); ++i) {
    auto res = scan_tu(units[i].raw_text);
    for (auto& is : res.issues) is.tu_index = i;
    units[i].tokens = std::move(res.tokens);
    units[i].issues = std::move(res.issues);
  }
  return Transcript(std::move(units), t.source_label(), t.meta());
}

std::vector<ValidationIssue> validate_transcript(const Transcript& t) {
  std::vector<ValidationIssue> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto issues = validate_markup(t[i].raw_text, i);
    out.insert(out.end(), issues.begin(), issues.end());
  }
  return out;
}

}  // namespace tqa
