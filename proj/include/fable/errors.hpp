// Copyright 2026 The fable-cc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace fable {

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The input matrix cannot be block-encoded as given: wrong shape,
/// non-power-of-two dimension, or entries outside the unit disk.
class EncodingError : public Error {
  public:
    using Error::Error;
};

/// A configured size cap was exceeded (matrix entries, qubit count).
class ResourceError : public Error {
  public:
    using Error::Error;
};

/// Malformed textual input (Matrix Market or QASM).
class ParseError : public Error {
  public:
    enum class Kind {
        BadHeader,
        BadDimension,
        IndexOutOfBounds,
        BadValue,
        Truncated,
    };

    ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

  private:
    Kind kind_;
};

} // namespace fable
