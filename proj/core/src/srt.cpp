// core/src/srt.cpp

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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <istream>
#include <ostream>

#include <fmt/format.h>

#include "tqa/error.hpp"
#include "tqa/io.hpp"

namespace tqa {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::int64_t to_int(std::string_view s) {
  std::int64_t v = 0;
  std::from_chars(s.data(), s.data() + s.size(), v);
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::int64_t parse_srt_timestamp(std::string_view ts) {
  // HH:MM:SS,mmm with two or more hour digits
  const auto bad = [&] { return DomainError("malformed SRT timestamp '" + std::string(ts) + "'"); };
  const auto c1 = ts.find(':');
  if (c1 == std::string_view::npos || c1 < 2) throw bad();
  if (ts.size() != c1 + 10 || ts[c1 + 3] != ':' || ts[c1 + 6] != ',') throw bad();
  const auto hh = ts.substr(0, c1);
  const auto mm = ts.substr(c1 + 1, 2);
  const auto ss = ts.substr(c1 + 4, 2);
  const auto ms = ts.substr(c1 + 7, 3);
  if (!all_digits(hh) || !all_digits(mm) || !all_digits(ss) || !all_digits(ms)) throw bad();
  if (hh.size() > 9) throw bad();
  const auto m = to_int(mm);
  const auto s = to_int(ss);
  if (m > 59 || s > 59) throw bad();
  return ((to_int(hh) * 60 + m) * 60 + s) * 1000 + to_int(ms);
}

std::string format_srt_timestamp(std::int64_t millis) {
  if (millis < 0) throw DomainError("negative SRT timestamp");
  const auto ms = millis % 1000;
  const auto total_s = millis / 1000;
  return fmt::format("{:02}:{:02}:{:02},{:03}", total_s / 3600, (total_s / 60) % 60, total_s % 60,
                     ms);
}

std::vector<SrtCue> read_srt(std::istream& in, const std::string& source) {
  std::vector<SrtCue> cues;
  std::string line;
  std::size_t lineno = 0;
  enum class State { Index, Timing, Text } state = State::Index;
  SrtCue cur;
  std::size_t last_index = 0;

  const auto flush = [&] {
    cues.push_back(std::move(cur));
    cur = SrtCue{};
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 && line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto t = trim(line);
    switch (state) {
      case State::Index:
        if (t.empty()) continue;
        if (!all_digits(t) || to_int(t) <= 0) {
          throw ParseError(source, lineno, "expected a positive cue index, got '" + line + "'");
        }
        cur.index = static_cast<std::size_t>(to_int(t));
        if (cur.index <= last_index) {
          throw ParseError(source, lineno,
                           fmt::format("cue index {} does not increase (previous {})", cur.index,
                                       last_index));
        }
        last_index = cur.index;
        state = State::Timing;
        break;
      case State::Timing: {
        const auto arrow = t.find("-->");
        if (arrow == std::string_view::npos) {
          throw ParseError(source, lineno, fmt::format("cue {}: missing '-->'", cur.index));
        }
        try {
          const auto a = parse_srt_timestamp(trim(t.substr(0, arrow)));
          // Tolerate trailing cue settings after the end timestamp.
          auto rest = trim(t.substr(arrow + 3));
          rest = rest.substr(0, rest.find(' '));
          const auto b = parse_srt_timestamp(rest);
          cur.interval = TimeInterval::from_millis(a, b);
        } catch (const DomainError& e) {
          throw ParseError(source, lineno, fmt::format("cue {}: {}", cur.index, e.what()));
        }
        state = State::Text;
        break;
      }
      case State::Text:
        if (t.empty()) {
          flush();
          state = State::Index;
          continue;
        }
        if (!cur.text.empty()) cur.text += ' ';
        for (char c : t) cur.text.push_back(c == '\t' ? ' ' : c);
        break;
    }
  }
  if (state == State::Timing) {
    throw ParseError(source, lineno, fmt::format("cue {}: missing timing line", cur.index));
  }
  if (state == State::Text) flush();
  return cues;
}

void write_srt(std::ostream& out, const std::vector<SrtCue>& cues) {
  bool first = true;
  for (const auto& c : cues) {
    if (!first) out << '\n';
    first = false;
    out << c.index << '\n'
        << format_srt_timestamp(c.interval.start_ms()) << " --> "
        << format_srt_timestamp(c.interval.end_ms()) << '\n'
        << c.text << '\n';
  }
}

TranscriptDocument read_srt_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError("not a directory: " + dir);
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (!entry.is_regular_file()) continue;
    auto ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (ext == ".srt") paths.push_back(entry.path().string());
  }
  if (ec) throw IoError("cannot list " + dir + ": " + ec.message());
  std::sort(paths.begin(), paths.end());
  if (paths.empty()) throw IoError("no .srt files in " + dir);
  return read_srt_set(paths);
}

}  // namespace tqa
