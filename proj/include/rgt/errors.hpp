// Copyright 2026 The rgt Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rgt {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. line() is 1-based; 0 means "whole input".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InvalidGraphError : public Error {
 public:
  using Error::Error;
};

class InvalidSeedError : public Error {
 public:
  using Error::Error;
};

class NotATreeError : public Error {
 public:
  enum class Reason { TooSmall, Cyclic, Disconnected };
  NotATreeError(Reason reason, const std::string& what) : Error(what), reason_(reason) {}
  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

class DisconnectedGraphError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

/// m < k_max for an operation that saturates vertices to degree m.
class SaturationError : public ParameterError {
 public:
  SaturationError(int vertex, int degree, int m)
      : ParameterError("saturation: vertex " + std::to_string(vertex) + " has degree " +
                       std::to_string(degree) + " > m = " + std::to_string(m)),
        vertex_(vertex),
        degree_(degree) {}
  int vertex() const noexcept { return vertex_; }
  int degree() const noexcept { return degree_; }

 private:
  int vertex_;
  int degree_;
};

/// A stage of a pipeline failed; index() is the 0-based stage.
class PipelineError : public Error {
 public:
  PipelineError(std::size_t index, const std::string& what)
      : Error("pipeline stage " + std::to_string(index) + ": " + what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Two routes that must agree exactly did not.
class FormulaViolation : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// A random walk ran past WalkConfig::max_steps.
class WalkCapError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace rgt
