// Copyright 2026 The sechange Authors
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

#ifndef SECHANGE_ERROR_HPP
#define SECHANGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sechange {

// Malformed program or model-set text. line/column are 1-based; 0 when the
// position is not meaningful (e.g. a whole-file condition).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line = 0, int column = 0)
      : std::runtime_error(std::move(msg)), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Alphabet or tuple-product limits exceeded.
class CapacityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation's precondition on a model set does not hold (e.g. a
// non-well-defined set passed to the canonical construction).
class ModelSetError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Declared alphabet does not cover the operands, unknown atoms, etc.
class AlphabetError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// External solver invocation failed (missing binary, timeout, unparsable
// output, corrupt answer set).
class SolverError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sechange

#endif  // SECHANGE_ERROR_HPP
