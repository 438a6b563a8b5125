// Copyright 2026 The qcvine Authors
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

#include "qcvine/errors.hpp"

#include <sstream>

namespace qcvine {

namespace {

std::string describe(SourceLocation location, const std::string &message, const std::vector<std::string> &expected) {
    std::ostringstream out;
    out << location.line << ":" << location.column << ": " << message;
    if (!expected.empty()) {
        out << " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) {
                out << (i + 1 == expected.size() ? " or " : ", ");
            }
            out << expected[i];
        }
        out << ")";
    }
    return out.str();
}

}  // namespace

SourceError::SourceError(SourceLocation location, std::string message, std::vector<std::string> expected)
    : Error(describe(location, message, expected)),
      location_(location),
      message_(std::move(message)),
      expected_(std::move(expected)) {
}

std::string SourceError::format(std::string_view file) const {
    std::ostringstream out;
    out << file << ":" << what();
    return out.str();
}

}  // namespace qcvine
