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

// Weyl group elements, words, lengths and minimal coset representatives.
//
// An element is identified by the image of rho = (1,...,1) (fundamental
// weight coordinates) under its action. W acts simply transitively on the
// orbit of a regular point, so that image is a canonical form.
//
// A word (i_1, ..., i_k) stands for s_{i_1} o ... o s_{i_k}; the rightmost
// letter acts first.

#ifndef SCHUBERT_WEYL_HPP
#define SCHUBERT_WEYL_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/rootsys.hpp"

namespace schubert {

using Weight = std::vector<int>;

struct Word {
  std::vector<int> letters;

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }

  /// Parses "2,1,2,1,2"; the empty string gives the empty word. Letters are
  /// checked against `rank` when it is positive.
  static Word parse(std::string_view text, int rank = 0);
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

struct WeylElement {
  Weight rho_image;
  int length = 0;

  bool is_identity() const;

  // Ordering is by length first so that sorted containers list elements
  // degree by degree.
  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.rho_image == b.rho_image;
  }
  friend std::strong_ordering operator<=>(const WeylElement& a,
                                          const WeylElement& b) {
    if (auto c = a.length <=> b.length; c != 0) return c;
    return a.rho_image <=> b.rho_image;
  }
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& e) const noexcept;
  std::size_t operator()(const Weight& w) const noexcept;
};

/// Simple roots generating the parabolic subgroup W'.
struct ParabolicSubset {
  std::vector<int> indices;

  static ParabolicSubset parse(std::string_view text, int rank);
  std::string to_string() const;
  bool contains(int i) const;
  /// Simple roots not in the subset.
  std::vector<int> complement(int rank) const;
};

inline constexpr std::size_t kDefaultMaxGroupOrder = 1'000'000;

Weight rho(int rank);

/// s_i(lambda)_j = lambda_j - lambda_i * C_ij.
Weight apply_simple_reflection(int i, Weight v, const CartanMatrix& c);

WeylElement identity_element(int rank);

WeylElement element_of_word(const Word& w, const RootSystem& rs);

/// s_i o e.
WeylElement left_multiply(int i, const WeylElement& e, const CartanMatrix& c);

/// Number of positive roots beta with e^{-1}(beta) negative, read off the
/// signs of the pairings <e(rho), beta^vee>. Equals l(e).
int length(const WeylElement& e, const RootSystem& rs);

/// Smallest i with l(s_i e) < l(e), or 0 for the identity.
int first_left_descent(const WeylElement& e);

/// Reduced word by peeling left descents, smallest index first.
Word reduced_word(const WeylElement& e, const CartanMatrix& c);

/// Every reduced word of `e`, in lexicographic order.
std::vector<Word> all_reduced_words(const WeylElement& e,
                                    const CartanMatrix& c);

/// e(beta), computed by acting with a reduced word of e.
Root apply_to_root(const WeylElement& e, const Root& beta,
                   const CartanMatrix& c);

/// The whole group, ordered by length and then by reduced word.
std::vector<WeylElement> enumerate_group(
    const RootSystem& rs, std::size_t max_order = kDefaultMaxGroupOrder);

/// True iff e(beta_i) > 0 for every i in p, i.e. e is the shortest element
/// of its coset e W'.
bool is_minimal_coset_rep(const WeylElement& e, const ParabolicSubset& p,
                          const CartanMatrix& c);

std::vector<WeylElement> minimal_coset_reps(
    const RootSystem& rs, const ParabolicSubset& p,
    std::size_t max_order = kDefaultMaxGroupOrder);

}  // namespace schubert

#endif  // SCHUBERT_WEYL_HPP
