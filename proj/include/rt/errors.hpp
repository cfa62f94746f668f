// Copyright 2026 The rainbow-turan Authors
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

#ifndef RT_ERRORS_HPP_
#define RT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rt {

// Base of every error thrown by the library. The CLI maps the concrete
// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A graph that violates the data model (self-loop, multi-edge, color gap).
class GraphError : public Error {
 public:
  using Error::Error;
};

// A vertex sequence that is not a path of the host graph. Distinct from a
// path that merely fails to be rainbow.
class PathError : public Error {
 public:
  using Error::Error;
};

// Caller violated an operation's precondition (k < 2, bad length, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Size guard or search budget refused the request.
class GuardError : public Error {
 public:
  using Error::Error;
};

// A rule produced a witness that failed independent validation.
class SoundnessError : public Error {
 public:
  SoundnessError(std::string rule_id, const std::string& what)
      : Error("witness rejected for rule '" + rule_id + "': " + what),
        rule_id_(std::move(rule_id)) {}

  const std::string& rule_id() const { return rule_id_; }

 private:
  std::string rule_id_;
};

// An instance contradicts a property the library is checking (a rainbow
// path that must not exist, an edge count above a proven bound).
class PropertyViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace rt

#endif  // RT_ERRORS_HPP_
