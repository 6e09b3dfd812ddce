// tqa/csv.hpp

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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace tqa::csv {

// Minimal RFC 4180 support: comma separator, double-quote quoting, LF rows.

std::string escape(std::string_view field);

void write_row(std::ostream& out, const std::vector<std::string>& fields);

/// Parses the whole stream. Quoted fields may contain commas, quotes and
/// newlines. Throws ParseError on an unterminated quote.
std::vector<std::vector<std::string>> read_all(std::istream& in,
                                               const std::string& source = "<csv>");

}  // namespace tqa::csv
