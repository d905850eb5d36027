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

#ifndef BOSONRACE_ERROR_H
#define BOSONRACE_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace bosonrace {

enum class ErrorKind {
    Dimension,
    SizeLimit,
    Domain,
    Config,
    Alignment,
    Membership,
    UndefinedRatio,
    Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is stable and is what the
/// CLI reports in its machine-readable error JSON.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message) : std::runtime_error(message), kind_(kind) {
    }

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace bosonrace

#endif
