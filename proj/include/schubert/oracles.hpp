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

// Type-A checks that do not go through the triangular operator:
// Littlewood-Richardson numbers by tableau counting, and the dictionary
// between Grassmannian permutations and partitions in a box.

#ifndef SCHUBERT_ORACLES_HPP
#define SCHUBERT_ORACLES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/rootsys.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; throws Parse unless weakly decreasing and
  /// non-negative.
  explicit Partition(std::vector<int> parts);

  /// "[2,1]"; "[]" is the empty partition.
  static Partition parse(std::string_view text);
  std::string to_string() const;

  const std::vector<int>& parts() const noexcept { return parts_; }
  int rows() const noexcept { return static_cast<int>(parts_.size()); }
  /// Row i (0-based), 0 past the last row.
  int part(int i) const;
  int size() const;
  bool fits_box(int rows, int cols) const;
  bool contains(const Partition& other) const;
  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Number of semistandard skew tableaux of shape nu/lambda and content mu
/// whose reverse reading word is a lattice word. Throws SizeMismatch unless
/// |nu| = |lambda| + |mu|.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu,
                            const Partition& nu);

/// All partitions fitting in a rows x cols box, by size then reverse
/// lexicographic.
std::vector<Partition> partitions_in_box(int rows, int cols);

/// One-line notation w(1), ..., w(n) of an element of the type A_{n-1} Weyl
/// group acting on the standard basis e_1..e_n. Throws NotCartan unless the
/// matrix is A_{n-1} in the standard numbering.
std::vector<int> permutation_of(const WeylElement& e, const CartanMatrix& c);

/// lambda_j = w(k+1-j) - (k+1-j), j = 1..k, for a permutation increasing on
/// 1..k and on k+1..n. Throws NotGrassmannianPermutation otherwise.
Partition grassmannian_dictionary(const WeylElement& e, const CartanMatrix& c,
                                  int k);

/// The parabolic subset {1..n-1} \ {k} whose cosets give G_{n,k}.
ParabolicSubset grassmannian_parabolic(int rank, int k);

}  // namespace schubert

#endif  // SCHUBERT_ORACLES_HPP
