// tools/cli.hpp

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
#include <optional>
#include <string>
#include <vector>

#include "tqa/model.hpp"

namespace tqa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIssues = 1;  // validate/overlaps found problems
inline constexpr int kExitError = 2;   // usage, parse or I/O error

/// Runs one subcommand. Reports go to `out` unless -o names a file;
/// diagnostics and usage text go to `err`.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// One row of an export-longform / overlaps manifest.
struct ManifestEntry {
  std::string path;
  TranscriberMeta meta;
  std::optional<std::string> gold;
};

/// TAB-separated: path, transcriber, expertise (expert|novice), phase
/// (manual|asr), data type, optional gold path. A first row starting with
/// "path" is a header. Relative paths resolve against the manifest's folder.
std::vector<ManifestEntry> read_manifest(const std::string& path);

}  // namespace tqa::cli
