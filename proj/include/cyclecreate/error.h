// Copyright 2026 The cyclecreate Authors
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

#ifndef CYCLECREATE_ERROR_H_
#define CYCLECREATE_ERROR_H_

#include <stdexcept>
#include <string>

namespace cyclecreate {

// Base of every exception thrown by the library. The C API maps each
// subclass onto one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The request is well formed but exceeds an enumeration or size limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed text input. Carries the offending 1-based line when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace cyclecreate

#endif  // CYCLECREATE_ERROR_H_
