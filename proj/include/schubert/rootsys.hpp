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

// Cartan matrices of finite type and their root systems.
//
// Simple roots are numbered 1..n throughout the public API. Roots are kept
// in simple-root coordinates; the Cartan matrix alone supplies every pairing
// (entry (i, j) is the Cartan number of beta_i against beta_j).

#ifndef SCHUBERT_ROOTSYS_HPP
#define SCHUBERT_ROOTSYS_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

using IntMatrix = std::vector<std::vector<int>>;

class CartanMatrix {
 public:
  /// Validates `m` and throws Error(NotCartan / NotFiniteType) on failure.
  static CartanMatrix validate(const IntMatrix& m);

  /// Built-in tables in Bourbaki numbering: "A4", "B3", "C3", "D4", "E6",
  /// "F4", "G2", ... (G2 uses [[2,-1],[-3,2]]).
  static CartanMatrix named(std::string_view type);

  int rank() const noexcept { return static_cast<int>(entries_.size()); }

  /// 1-based access: beta_i o beta_j.
  int at(int i, int j) const;

  const IntMatrix& entries() const noexcept { return entries_; }

  /// Compact JSON array-of-arrays, e.g. "[[2,-1],[-3,2]]".
  std::string to_json() const;

  /// Cartan matrix of the sub-diagram on `indices` (1-based, in the given
  /// order).
  CartanMatrix restricted(std::span<const int> indices) const;

  CartanMatrix transposed() const;

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  explicit CartanMatrix(IntMatrix entries) : entries_(std::move(entries)) {}

  IntMatrix entries_;
};

/// A root in simple-root coordinates.
struct Root {
  std::vector<int> coords;

  bool is_positive() const;
  bool is_negative() const;
  int height() const;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

Root simple_root(int i, int rank);

/// beta o beta_i, linear in beta.
int cartan_pair(const Root& b, int i, const CartanMatrix& c);

/// s_i(beta) = beta - (beta o beta_i) beta_i.
Root reflect_root(int i, const Root& b, const CartanMatrix& c);

/// Positive roots ordered by height, then lexicographically on coordinates.
std::vector<Root> positive_roots(const CartanMatrix& c);

/// A validated Cartan matrix together with its positive roots and the
/// positive roots of the dual system (coroots, in simple-coroot
/// coordinates). Immutable.
class RootSystem {
 public:
  explicit RootSystem(CartanMatrix c);

  const CartanMatrix& cartan() const noexcept { return cartan_; }
  int rank() const noexcept { return cartan_.rank(); }
  std::span<const Root> positive_roots() const noexcept { return roots_; }
  std::span<const Root> positive_coroots() const noexcept { return coroots_; }

 private:
  CartanMatrix cartan_;
  std::vector<Root> roots_;
  std::vector<Root> coroots_;
};

}  // namespace schubert

#endif  // SCHUBERT_ROOTSYS_HPP
