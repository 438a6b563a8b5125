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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcvine {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct SourceLocation {
    int line = 0;
    int column = 0;
};

/// A syntax or compile error tied to a position in DSL source.
class SourceError : public Error {
   public:
    SourceError(SourceLocation location, std::string message, std::vector<std::string> expected = {});

    SourceLocation location() const { return location_; }
    const std::string &message() const { return message_; }
    const std::vector<std::string> &expected() const { return expected_; }

    /// `file:line:col: message`
    std::string format(std::string_view file) const;

   private:
    SourceLocation location_;
    std::string message_;
    std::vector<std::string> expected_;
};

/// A lookup of a qubit, tree node, gate or model that does not exist.
class NotFoundError : public Error {
   public:
    using Error::Error;
};

/// Malformed input that is not DSL source (JSON payloads, fold specs, themes).
class InvalidInputError : public Error {
   public:
    using Error::Error;
};

}  // namespace qcvine
