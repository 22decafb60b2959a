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

#include "schubert/error.hpp"

namespace schubert {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotCartan: return "NotCartan";
    case ErrorKind::NotFiniteType: return "NotFiniteType";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::VariableCountMismatch: return "VariableCountMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotMinimalRep: return "NotMinimalRep";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotGrassmannianPermutation: return "NotGrassmannianPermutation";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::IntegerOverflow: return "IntegerOverflow";
    case ErrorKind::Internal: return "InternalError";
  }
  return "UnknownError";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::GroupTooLarge:
    case ErrorKind::IntegerOverflow:
    case ErrorKind::Internal:
      return false;
    default:
      return true;
  }
}

}  // namespace schubert
