// tqa/io.hpp

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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tqa/model.hpp"

namespace tqa {

enum class Origin : std::uint8_t { Tsv, SrtSet, AsrRaw };

std::string_view origin_name(Origin o);  // "tsv" | "srt-set" | "asr-raw"

struct TranscriptDocument {
  Transcript transcript;
  Origin origin = Origin::Tsv;
  std::vector<std::string> paths;
  std::vector<std::string> warnings;
};

// ---- TSV: speaker, start, end, transcription ------------------------------

/// One TU per row; an optional header row is detected when the start column
/// is not a number. Blank lines are skipped. Throws ParseError naming the
/// line for malformed rows or rows with end < start.
TranscriptDocument read_tsv(std::istream& in, const std::string& source = "<stream>");
TranscriptDocument read_tsv(const std::string& path);

/// Header row plus one row per TU, LF line endings. Times use two decimals,
/// or three when the value is not a whole number of centiseconds.
void write_tsv(std::ostream& out, const Transcript& t);
void write_tsv(const std::string& path, const Transcript& t);

std::string format_seconds(std::int64_t millis);

// ---- SRT -------------------------------------------------------------------

struct SrtCue {
  std::size_t index = 0;
  TimeInterval interval;
  std::string text;  // cue lines joined by a space
};

/// "HH:MM:SS,mmm" -> milliseconds. Throws DomainError on malformed input.
std::int64_t parse_srt_timestamp(std::string_view ts);
std::string format_srt_timestamp(std::int64_t millis);

/// Throws ParseError (with the cue index in the message) on malformed cues
/// or non-increasing indices.
std::vector<SrtCue> read_srt(std::istream& in, const std::string& source = "<stream>");
void write_srt(std::ostream& out, const std::vector<SrtCue>& cues);

/// Merges one SRT file per speaker; the speaker is the filename stem.
/// Throws ParseError on duplicate stems.
TranscriptDocument read_srt_set(const std::vector<std::string>& paths);

/// All *.srt files of `dir`, in filename order.
TranscriptDocument read_srt_dir(const std::string& dir);

/// Raw, undiarized ASR output stored as a single-speaker TSV or SRT file.
TranscriptDocument read_asr_raw(const std::string& path);

/// .srt -> read_srt_set({path}); anything else -> read_tsv(path); "-" reads
/// TSV from stdin.
TranscriptDocument read_transcript(const std::string& path);

}  // namespace tqa
