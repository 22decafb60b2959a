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

#include <functional>
#include <ostream>
#include <random>

#include "schubert/cli.hpp"
#include "schubert/oracles.hpp"
#include "schubert/relmat.hpp"
#include "schubert/schubert.hpp"

namespace schubert::cli {

namespace {

struct Check {
  const char* name;
  std::function<bool()> body;
};

std::vector<std::vector<int>> positions(const std::vector<SubwordSolution>& s) {
  std::vector<std::vector<int>> out;
  for (const auto& sol : s) out.push_back(sol.positions);
  return out;
}

std::vector<Check> checks() {
  return {
      {"G2 relative Cartan matrices of 2,1,2,1,2 and 1,2,1,2,1",
       [] {
         const RootSystem g2(CartanMatrix::named("G2"));
         const IntMatrix a_w{{0, 3, -2, 3, -2},
                             {0, 0, 1, -2, 1},
                             {0, 0, 0, 3, -2},
                             {0, 0, 0, 0, 1},
                             {0, 0, 0, 0, 0}};
         const IntMatrix a_w2{{0, 1, -2, 1, -2},
                              {0, 0, 3, -2, 3},
                              {0, 0, 0, 1, -2},
                              {0, 0, 0, 0, 3},
                              {0, 0, 0, 0, 0}};
         return cartan_matrix_of_word(Word::parse("2,1,2,1,2"), g2).rows() == a_w &&
                cartan_matrix_of_word(Word::parse("1,2,1,2,1"), g2).rows() == a_w2;
       }},
      {"T_A on 2 variables: x1^2 -> 0, x1x2 -> 1, x2^2 -> a",
       [] {
         for (int a = -3; a <= 3; ++a) {
           TriangularMatrix m(2);
           m.set(1, 2, a);
           const int r11[] = {2, 0}, r12[] = {1, 1}, r22[] = {0, 2};
           if (triangular_eval(m, HomogPoly::monomial(r11)) != 0 ||
               triangular_eval(m, HomogPoly::monomial(r12)) != 1 ||
               triangular_eval(m, HomogPoly::monomial(r22)) != a)
             return false;
         }
         return true;
       }},
      {"G2 product P[2,1,2] * P[1,2] = P[2,1,2,1,2]",
       [] {
         const RootSystem g2(CartanMatrix::named("G2"));
         const Word w_word = Word::parse("2,1,2,1,2");
         const auto u = element_of_word(Word::parse("2,1,2"), g2);
         const auto v = element_of_word(Word::parse("1,2"), g2);
         const auto w = element_of_word(w_word, g2);
         const auto w2 = element_of_word(Word::parse("1,2,1,2,1"), g2);
         const std::vector<std::vector<int>> ls{{1, 2, 3}, {1, 2, 5}, {1, 4, 5}, {3, 4, 5}};
         const std::vector<std::vector<int>> ks{{2, 3}, {2, 5}, {4, 5}};
         if (positions(subword_solutions(w_word, u, g2)) != ls) return false;
         if (positions(subword_solutions(w_word, v, g2)) != ks) return false;
         const auto a = cartan_matrix_of_word(w_word, g2);
         const std::vector<std::vector<int>> mons{{1, 1, 0, 1, 2}, {1, 0, 0, 2, 2},
                                                  {0, 1, 2, 1, 1}, {0, 1, 1, 1, 2},
                                                  {0, 0, 1, 2, 2}};
         const int expected[] = {1, -2, 1, -1, -1};
         for (std::size_t i = 0; i < mons.size(); ++i)
           if (triangular_eval(a, HomogPoly::monomial(mons[i])) != expected[i]) return false;
         if (structure_constant(u, v, w, g2) != 1) return false;
         if (structure_constant(u, v, w2, g2) != 0) return false;
         const auto terms = product_expansion(u, v, g2, ParabolicSubset{});
         return terms.size() == 1 && terms[0].w == w && terms[0].value == 1;
       }},
      {"closed form agrees with elimination on random monomials",
       [] {
         std::mt19937 rng(7);
         for (int trial = 0; trial < 60; ++trial) {
           const int k = 1 + static_cast<int>(rng() % 5);
           TriangularMatrix a(k);
           for (int i = 1; i <= k; ++i)
             for (int j = i + 1; j <= k; ++j) a.set(i, j, static_cast<int>(rng() % 7) - 3);
           std::vector<int> r(k, 0);
           for (int d = 0; d < k; ++d) ++r[rng() % k];
           if (triangular_eval(a, HomogPoly::monomial(r)) != triangular_eval_closed(a, r))
             return false;
         }
         return true;
       }},
      {"group orders G2 = 12, A3 = 24, B2 = 8",
       [] {
         return enumerate_group(RootSystem(CartanMatrix::named("G2"))).size() == 12 &&
                enumerate_group(RootSystem(CartanMatrix::named("A3"))).size() == 24 &&
                enumerate_group(RootSystem(CartanMatrix::named("B2"))).size() == 8;
       }},
      {"A3 Grassmannian G(4,2) constants match Littlewood-Richardson",
       [] {
         const RootSystem a3(CartanMatrix::named("A3"));
         const auto p = grassmannian_parabolic(3, 2);
         const auto reps = minimal_coset_reps(a3, p);
         if (reps.size() != 6) return false;
         for (const auto& u : reps)
           for (const auto& v : reps)
             for (const auto& w : reps) {
               if (w.length != u.length + v.length) continue;
               const auto lr = lr_coefficient(grassmannian_dictionary(u, a3.cartan(), 2),
                                              grassmannian_dictionary(v, a3.cartan(), 2),
                                              grassmannian_dictionary(w, a3.cartan(), 2));
               if (structure_constant(u, v, w, a3, p) != lr) return false;
             }
         return true;
       }},
  };
}

}  // namespace

bool selftest(std::ostream& out) {
  bool all = true;
  for (const auto& check : checks()) {
    bool ok = false;
    try {
      ok = check.body();
    } catch (const std::exception& e) {
      out << "  exception: " << e.what() << '\n';
    }
    out << (ok ? "[PASS] " : "[FAIL] ") << check.name << '\n';
    all = all && ok;
  }
  return all;
}

}  // namespace schubert::cli
