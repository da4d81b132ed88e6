// Copyright 2026 The SpecGap Authors.
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

#ifndef SPECGAP_ERROR_H_
#define SPECGAP_ERROR_H_

#include <stdexcept>
#include <string>

namespace specgap {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid construction input (bad edge endpoint, infeasible generator, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Vector/matrix shapes disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Solver or scorer configuration rejected before any work is done.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A quantity is mathematically undefined for the given input
// (single-class metrics, gap ratio of an edgeless graph, ...).
class UndefinedError : public Error {
 public:
  using Error::Error;
};

// Failure inside one experiment stage; what() is "<stage>: <cause>".
class StageError : public Error {
 public:
  StageError(const std::string& stage, const std::string& what)
      : Error(stage + ": " + what), stage_(stage) {}

  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// Malformed input file. Carries the file and 1-based line when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& file, long line, const std::string& what)
      : Error(file + (line > 0 ? ":" + std::to_string(line) : std::string()) +
              ": " + what),
        file_(file),
        line_(line) {}

  const std::string& file() const { return file_; }
  long line() const { return line_; }

 private:
  std::string file_;
  long line_;
};

}  // namespace specgap

#endif  // SPECGAP_ERROR_H_
