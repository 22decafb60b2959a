// Copyright 2026 The Schubert Authors
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

#ifndef SCHUBERT_ERROR_HPP
#define SCHUBERT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace schubert {

enum class ErrorKind {
  // input errors
  NotCartan,
  NotFiniteType,
  IndexOutOfRange,
  NotReduced,
  VariableCountMismatch,
  DegreeMismatch,
  LengthMismatch,
  NotMinimalRep,
  SizeMismatch,
  NotGrassmannianPermutation,
  Parse,
  // computation errors
  GroupTooLarge,
  IntegerOverflow,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// True for errors caused by bad caller input, false for errors raised
/// while computing (bounds, overflow, broken invariants).
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace schubert

#endif  // SCHUBERT_ERROR_HPP
