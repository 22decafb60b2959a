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

// Structure constants a_{u,v}^w of the Schubert basis.
//
// For a reduced word of w with Cartan matrix A_w,
//
//   a_{u,v}^w = T_{A_w}[ (sum_{sigma_L = u} x_L) (sum_{sigma_K = v} x_K) ],
//
// the sums running over position sets L, K of the word with |L| = l(u) and
// |K| = l(v). Positions are 1-based.

#ifndef SCHUBERT_SCHUBERT_HPP
#define SCHUBERT_SCHUBERT_HPP

#include <optional>
#include <span>
#include <vector>

#include "schubert/relmat.hpp"
#include "schubert/rootsys.hpp"
#include "schubert/triop.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

struct SubwordSolution {
  std::vector<int> positions;
  WeylElement element;
};

/// Position sets L of the reduced word with sigma_L = target and
/// |L| = l(target), in lexicographic order. Throws NotReduced.
std::vector<SubwordSolution> subword_solutions(const Word& word,
                                               const WeylElement& target,
                                               const RootSystem& rs);

/// sum_L x_L over subword_solutions, a polynomial in |word| variables of
/// degree l(target).
HomogPoly subword_sum(const Word& word, const WeylElement& target,
                      const RootSystem& rs);

HomogPoly subword_sum(int num_vars, std::span<const SubwordSolution> solutions,
                      int degree);

struct StructureConstant {
  WeylElement u;
  WeylElement v;
  WeylElement w;
  Integer value;
};

/// Everything that goes into one constant, for verbose reporting.
struct ConstantTrace {
  Word w_word;
  RelativeCartanMatrix a_w;
  std::vector<SubwordSolution> u_solutions;
  std::vector<SubwordSolution> v_solutions;
  HomogPoly product{0, 0};
  Integer value;
};

/// a_{u,v}^w computed over the given reduced word of w. Throws NotReduced,
/// LengthMismatch, and Internal if the result comes out negative.
ConstantTrace trace_structure_constant(const WeylElement& u,
                                       const WeylElement& v,
                                       const Word& w_word,
                                       const RootSystem& rs);

Integer structure_constant_for_word(const WeylElement& u, const WeylElement& v,
                                    const Word& w_word, const RootSystem& rs);

/// a_{u,v}^w over the canonical reduced word of w. When `parabolic` is
/// given, u, v and w must be minimal coset representatives for it
/// (NotMinimalRep otherwise).
Integer structure_constant(const WeylElement& u, const WeylElement& v,
                           const WeylElement& w, const RootSystem& rs,
                           const std::optional<ParabolicSubset>& parabolic = {});

struct ExpansionOptions {
  bool include_zeros = false;
  /// Worker threads for the targets w; 0 picks hardware concurrency.
  unsigned threads = 1;
};

/// P_u P_v = sum_w a_{u,v}^w P_w over the given candidates (typically the
/// minimal coset representatives), restricted to l(w) = l(u) + l(v). Results
/// follow the order of `candidates`.
std::vector<StructureConstant> product_expansion(
    const WeylElement& u, const WeylElement& v, const RootSystem& rs,
    std::span<const WeylElement> candidates, ExpansionOptions options = {});

/// Same, enumerating the minimal coset representatives for `p` first.
/// Throws NotMinimalRep when u or v is outside that set.
std::vector<StructureConstant> product_expansion(
    const WeylElement& u, const WeylElement& v, const RootSystem& rs,
    const ParabolicSubset& p, ExpansionOptions options = {},
    std::size_t max_order = kDefaultMaxGroupOrder);

}  // namespace schubert

#endif  // SCHUBERT_SCHUBERT_HPP
