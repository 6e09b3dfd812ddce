// tqa/report.hpp

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

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tqa/aligner.hpp"
#include "tqa/io.hpp"
#include "tqa/metrics.hpp"
#include "tqa/mismatch.hpp"
#include "tqa/overlap.hpp"

namespace tqa::report {

// JSON views of the analysis types. Key order is fixed, absent optionals
// become null, and no field depends on the clock, so equal inputs give
// byte-identical reports.

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1.0";

/// {"schema_version", "command"}; sections are appended by the caller.
Json header(std::string_view command);

Json input(const TranscriptDocument& doc, std::string_view role);
Json interval(const TimeInterval& iv);
Json counts(const EditCounts& c);
Json wer(const WerReport& w);
Json alignment(const AlignmentResult& a, bool with_ops = true);
Json per_minute(const std::vector<PerMinuteStats>& bins);
Json summary(const SummaryStats& s);
Json deltas(const DeltaTable& d);
Json validation_issue(const ValidationIssue& v);
Json overlap_issue(const OverlapIssue& is, const Transcript& t);
Json group_summary(const std::vector<GroupSeverity>& groups);
Json mismatch(const MismatchRecord& r);
Json mismatch_group(const MismatchGroup& g);
Json content_lengths(const ContentLengthStats& s);
Json category_table(const std::map<MismatchCategory, std::size_t>& counts);

}  // namespace tqa::report
