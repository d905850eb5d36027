// Copyright 2026 The bosonrace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BOSONRACE_TOOLS_CLI_H
#define BOSONRACE_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace bosonrace::cli {

/// Runs one command line (without the program name). Human-readable progress
/// and errors go to `out` and `err`; with --error-json a JSON error object is
/// also written to `out`. Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace bosonrace::cli

#endif
