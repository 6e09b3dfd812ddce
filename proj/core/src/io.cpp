// core/src/io.cpp

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

#include "tqa/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>

#include <fmt/format.h>

#include "tqa/error.hpp"

namespace tqa {

std::string_view origin_name(Origin o) {
  switch (o) {
    case Origin::Tsv: return "tsv";
    case Origin::SrtSet: return "srt-set";
    case Origin::AsrRaw: return "asr-raw";
  }
  return "?";
}

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t pos = 0;
  while (true) {
    const auto tab = line.find('\t', pos);
    cols.push_back(line.substr(pos, tab == std::string_view::npos ? std::string_view::npos
                                                                   : tab - pos));
    if (tab == std::string_view::npos) break;
    pos = tab + 1;
  }
  return cols;
}

// Decimal seconds, e.g. "3.14", to milliseconds. Digits beyond the
// millisecond are rounded.
std::optional<std::int64_t> parse_decimal_seconds(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) return std::nullopt;
  double v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v, std::chars_format::fixed);
  if (ec != std::errc{} || ptr != end || v < 0) return std::nullopt;
  return seconds_to_millis(v);
}

void strip_bom(std::string& line) {
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
}

std::string file_stem(const std::string& path) {
  auto slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.find_last_of('.');
  return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

bool ends_with_ci(const std::string& s, std::string_view suffix) {
  if (s.size() < suffix.size()) return false;
  for (std::size_t i = 0; i < suffix.size(); ++i) {
    char a = s[s.size() - suffix.size() + i];
    if (a >= 'A' && a <= 'Z') a = static_cast<char>(a - 'A' + 'a');
    if (a != suffix[i]) return false;
  }
  return true;
}

}  // namespace

TranscriptDocument read_tsv(std::istream& in, const std::string& source) {
  std::vector<TranscriptionUnit> units;
  std::string line;
  std::size_t lineno = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1) strip_bom(line);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" ") == std::string::npos) continue;

    const auto cols = split_tabs(line);
    if (cols.size() != 4) {
      throw ParseError(source, lineno,
                       fmt::format("expected 4 tab-separated columns, found {}", cols.size()));
    }
    const auto start = parse_decimal_seconds(cols[1]);
    const auto end = parse_decimal_seconds(cols[2]);
    if (first_content && !start) {
      first_content = false;
      continue;  // header row
    }
    first_content = false;
    if (!start || !end) throw ParseError(source, lineno, "start/end is not a decimal number");
    if (*start > *end) {
      throw ParseError(source, lineno,
                       fmt::format("start {} is after end {}", cols[1], cols[2]));
    }
    try {
      units.emplace_back(SpeakerId(std::string(cols[0])),
                         TimeInterval::from_millis(*start, *end), std::string(cols[3]));
    } catch (const DomainError& e) {
      throw ParseError(source, lineno, e.what());
    }
  }
  TranscriptDocument doc;
  doc.origin = Origin::Tsv;
  doc.paths = {source};
  if (units.empty()) doc.warnings.push_back(source + ": no transcription units");
  doc.transcript = Transcript(std::move(units), source);
  return doc;
}

TranscriptDocument read_tsv(const std::string& path) {
  if (path == "-") return read_tsv(std::cin, "<stdin>");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return read_tsv(in, path);
}

std::string format_seconds(std::int64_t millis) {
  if (millis % 10 == 0) return fmt::format("{}.{:02}", millis / 1000, (millis % 1000) / 10);
  return fmt::format("{}.{:03}", millis / 1000, millis % 1000);
}

void write_tsv(std::ostream& out, const Transcript& t) {
  out << "speaker\tstart\tend\ttranscription\n";
  for (const auto& u : t.units()) {
    out << u.speaker.str() << '\t' << format_seconds(u.interval.start_ms()) << '\t'
        << format_seconds(u.interval.end_ms()) << '\t' << u.raw_text << '\n';
  }
}

void write_tsv(const std::string& path, const Transcript& t) {
  if (path == "-") {
    write_tsv(std::cout, t);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  write_tsv(out, t);
  if (!out) throw IoError("error while writing " + path);
}

TranscriptDocument read_asr_raw(const std::string& path) {
  auto doc = read_transcript(path);
  doc.origin = Origin::AsrRaw;
  return doc;
}

TranscriptDocument read_transcript(const std::string& path) {
  if (ends_with_ci(path, ".srt")) return read_srt_set({path});
  return read_tsv(path);
}

TranscriptDocument read_srt_set(const std::vector<std::string>& paths) {
  std::vector<TranscriptionUnit> units;
  std::vector<std::string> stems;
  TranscriptDocument doc;
  doc.origin = Origin::SrtSet;
  doc.paths = paths;
  for (const auto& p : paths) {
    const auto stem = file_stem(p);
    for (const auto& s : stems) {
      if (s == stem) throw ParseError(p, 0, "duplicate speaker file stem '" + stem + "'");
    }
    stems.push_back(stem);
    std::ifstream in(p, std::ios::binary);
    if (!in) throw IoError("cannot open " + p);
    const auto cues = read_srt(in, p);
    if (cues.empty()) doc.warnings.push_back(p + ": no cues");
    SpeakerId speaker = [&] {
      try {
        return SpeakerId(stem);
      } catch (const DomainError& e) {
        throw ParseError(p, 0, e.what());
      }
    }();
    for (const auto& c : cues) {
      if (c.text.empty()) {
        doc.warnings.push_back(fmt::format("{}: cue {} has no text, skipped", p, c.index));
        continue;
      }
      units.emplace_back(speaker, c.interval, c.text);
    }
  }
  std::string label;
  for (const auto& s : stems) label += (label.empty() ? "" : "+") + s;
  doc.transcript = Transcript(std::move(units), label);
  return doc;
}

}  // namespace tqa
