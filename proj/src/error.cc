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

#include "bosonrace/error.h"

namespace bosonrace {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Dimension:
            return "dimension";
        case ErrorKind::SizeLimit:
            return "size_limit";
        case ErrorKind::Domain:
            return "domain";
        case ErrorKind::Config:
            return "config";
        case ErrorKind::Alignment:
            return "alignment";
        case ErrorKind::Membership:
            return "membership";
        case ErrorKind::UndefinedRatio:
            return "undefined_ratio";
        case ErrorKind::Io:
            return "io";
    }
    return "unknown";
}

}  // namespace bosonrace
