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

#include <gtest/gtest.h>

#include <set>

#include "schubert/error.hpp"
#include "schubert/rootsys.hpp"
#include "schubert/weyl.hpp"

namespace schubert {
namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Internal;
}

TEST(ValidateCartan, AcceptsG2AndA1) {
  const auto g2 = CartanMatrix::validate({{2, -1}, {-3, 2}});
  EXPECT_EQ(g2.rank(), 2);
  EXPECT_EQ(g2.at(1, 2), -1);
  EXPECT_EQ(g2.at(2, 1), -3);
  EXPECT_EQ(CartanMatrix::validate({{2}}).rank(), 1);
}

TEST(ValidateCartan, RejectsAffineA1) {
  // symmetrization [[2,-2],[-2,2]] has determinant 4 - 4 = 0
  EXPECT_EQ(kind_of([] { CartanMatrix::validate({{2, -2}, {-2, 2}}); }),
            ErrorKind::NotFiniteType);
}

TEST(ValidateCartan, RejectsMalformed) {
  EXPECT_EQ(kind_of([] { CartanMatrix::validate({{2, -1}, {-1, 3}}); }),
            ErrorKind::NotCartan);
  EXPECT_EQ(kind_of([] { CartanMatrix::validate({{2, 1}, {1, 2}}); }),
            ErrorKind::NotCartan);
  EXPECT_EQ(kind_of([] { CartanMatrix::validate({{2, 0}, {-1, 2}}); }),
            ErrorKind::NotCartan);
  EXPECT_EQ(kind_of([] { CartanMatrix::validate({{2, -1}}); }),
            ErrorKind::NotCartan);
  EXPECT_EQ(kind_of([] { CartanMatrix::validate({}); }), ErrorKind::NotCartan);
  EXPECT_EQ(kind_of([] { CartanMatrix::validate({{2, -4}, {-1, 2}}); }),
            ErrorKind::NotCartan);
}

TEST(ValidateCartan, RejectsInfiniteTypes) {
  EXPECT_EQ(kind_of([] { CartanMatrix::validate({{2, -3}, {-2, 2}}); }),
            ErrorKind::NotFiniteType);
  EXPECT_EQ(kind_of([] {
              CartanMatrix::validate({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
            }),
            ErrorKind::NotFiniteType);
  // not symmetrizable: the ratios around the cycle disagree
  EXPECT_EQ(kind_of([] {
              CartanMatrix::validate({{2, -2, -1}, {-1, 2, -1}, {-1, -1, 2}});
            }),
            ErrorKind::NotFiniteType);
}

TEST(ValidateCartan, AcceptsReducible) {
  const auto a1a1 = CartanMatrix::validate({{2, 0}, {0, 2}});
  EXPECT_EQ(positive_roots(a1a1).size(), 2u);
}

TEST(ValidateCartan, JsonEchoIsExact) {
  EXPECT_EQ(CartanMatrix::named("G2").to_json(), "[[2,-1],[-3,2]]");
  EXPECT_EQ(CartanMatrix::named("B2").to_json(), "[[2,-2],[-1,2]]");
  EXPECT_EQ(CartanMatrix::named("C2").to_json(), "[[2,-1],[-2,2]]");
}

TEST(NamedTypes, BadNames) {
  EXPECT_EQ(kind_of([] { CartanMatrix::named("X3"); }), ErrorKind::NotCartan);
  EXPECT_EQ(kind_of([] { CartanMatrix::named("G3"); }), ErrorKind::NotCartan);
  EXPECT_EQ(kind_of([] { CartanMatrix::named("A"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { CartanMatrix::named("Ax"); }), ErrorKind::Parse);
}

TEST(CartanPair, Examples) {
  const auto g2 = CartanMatrix::named("G2");
  EXPECT_EQ(cartan_pair(simple_root(1, 2), 2, g2), -1);
  EXPECT_EQ(cartan_pair(simple_root(1, 2), 1, g2), 2);
  EXPECT_EQ(cartan_pair(simple_root(2, 2), 2, g2), 2);
  // beta_1 + beta_2 against beta_1: 2 + (-3)
  EXPECT_EQ(cartan_pair(Root{{1, 1}}, 1, g2), -1);
  EXPECT_EQ(kind_of([&] { cartan_pair(simple_root(1, 2), 3, g2); }),
            ErrorKind::IndexOutOfRange);
}

TEST(PositiveRoots, SmallTypes) {
  EXPECT_EQ(positive_roots(CartanMatrix::named("G2")).size(), 6u);
  EXPECT_EQ(positive_roots(CartanMatrix::named("A1")).size(), 1u);
  const auto a2 = positive_roots(CartanMatrix::named("A2"));
  ASSERT_EQ(a2.size(), 3u);
  EXPECT_EQ(a2[0].coords, (std::vector<int>{0, 1}));
  EXPECT_EQ(a2[1].coords, (std::vector<int>{1, 0}));
  EXPECT_EQ(a2[2].coords, (std::vector<int>{1, 1}));
}

TEST(PositiveRoots, G2RootsAreTheKnownSix) {
  const auto roots = positive_roots(CartanMatrix::named("G2"));
  std::set<std::vector<int>> got;
  for (const auto& r : roots) got.insert(r.coords);
  // beta_1 short, beta_2 long
  const std::set<std::vector<int>> expected{{1, 0}, {0, 1}, {1, 1},
                                            {2, 1}, {3, 1}, {3, 2}};
  EXPECT_EQ(got, expected);
}

// m = (dim G - n) / 2 for every built-in type.
TEST(PositiveRoots, CountsMatchDimensions) {
  const std::vector<std::pair<std::string, std::size_t>> table{
      {"A1", 1},  {"A2", 3},  {"A3", 6},   {"A4", 10}, {"A5", 15},
      {"B2", 4},  {"B3", 9},  {"B4", 16},  {"C3", 9},  {"C4", 16},
      {"D4", 12}, {"D5", 20}, {"E6", 36},  {"E7", 63}, {"E8", 120},
      {"F4", 24}, {"G2", 6}};
  for (const auto& [name, count] : table)
    EXPECT_EQ(positive_roots(CartanMatrix::named(name)).size(), count) << name;
}

TEST(PositiveRoots, OrderedByHeightThenLex) {
  const auto roots = positive_roots(CartanMatrix::named("F4"));
  for (std::size_t i = 1; i < roots.size(); ++i) {
    const auto& a = roots[i - 1];
    const auto& b = roots[i];
    EXPECT_TRUE(a.height() < b.height() ||
                (a.height() == b.height() && a.coords < b.coords));
  }
}

// Every root reflects to a root (or to minus a root) under every simple
// reflection.
TEST(PositiveRoots, ClosedUnderSimpleReflections) {
  for (const char* name : {"A3", "B3", "C3", "D4", "F4", "G2", "E6"}) {
    const auto c = CartanMatrix::named(name);
    const auto roots = positive_roots(c);
    std::set<Root> all(roots.begin(), roots.end());
    for (const auto& r : roots) {
      Root neg = r;
      for (auto& x : neg.coords) x = -x;
      all.insert(neg);
    }
    for (const auto& r : all)
      for (int i = 1; i <= c.rank(); ++i)
        EXPECT_TRUE(all.contains(reflect_root(i, r, c))) << name;
    for (const auto& r : roots) EXPECT_TRUE(r.is_positive() && !r.is_negative());
  }
}

// All Cartan matrices of rank <= 3 with entries in {0,-1,-2,-3} that pass
// validation must produce a finite root system whose size matches the
// longest Weyl element.
TEST(PositiveRoots, TerminatesForEveryValidSmallMatrix) {
  const int values[] = {0, -1, -2, -3};
  int accepted = 0;
  for (int n = 1; n <= 3; ++n) {
    const int pairs = n * (n - 1);
    std::vector<int> idx(pairs, 0);
    while (true) {
      IntMatrix m(n, std::vector<int>(n, 2));
      int t = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) m[i][j] = values[idx[t++]];
      try {
        const auto c = CartanMatrix::validate(m);
        ++accepted;
        const RootSystem rs(c);
        const auto group = enumerate_group(rs);
        EXPECT_EQ(static_cast<std::size_t>(group.back().length),
                  rs.positive_roots().size());
      } catch (const Error& e) {
        EXPECT_TRUE(e.kind() == ErrorKind::NotCartan ||
                    e.kind() == ErrorKind::NotFiniteType);
      }
      int p = 0;
      while (p < pairs && ++idx[p] == 4) idx[p++] = 0;
      if (p == pairs) break;
    }
  }
  // rank 1: A1; rank 2: A1xA1, A2, B2, C2, G2 twice; rank 3 a few dozen.
  EXPECT_GT(accepted, 7);
}

// Rank 4: every symmetric zero pattern, each linked pair drawn from the
// products <= 4 (product 4 is never finite type).
TEST(PositiveRoots, TerminatesForRank4Matrices) {
  const std::pair<int, int> links[] = {{-1, -1}, {-1, -2}, {-2, -1},
                                       {-1, -3}, {-3, -1}, {-2, -2}};
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) edges.emplace_back(i, j);
  int accepted = 0;
  for (int pattern = 0; pattern < 64; ++pattern) {
    std::vector<int> used;
    for (int e = 0; e < 6; ++e)
      if (pattern >> e & 1) used.push_back(e);
    std::vector<int> choice(used.size(), 0);
    while (true) {
      IntMatrix m(4, std::vector<int>(4, 0));
      for (int i = 0; i < 4; ++i) m[i][i] = 2;
      for (std::size_t t = 0; t < used.size(); ++t) {
        auto [i, j] = edges[used[t]];
        m[i][j] = links[choice[t]].first;
        m[j][i] = links[choice[t]].second;
      }
      try {
        const RootSystem rs(CartanMatrix::validate(m));
        ++accepted;
        const auto group = enumerate_group(rs);
        EXPECT_EQ(static_cast<std::size_t>(group.back().length),
                  rs.positive_roots().size());
      } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotFiniteType);
      }
      std::size_t p = 0;
      while (p < used.size() && ++choice[p] == 6) choice[p++] = 0;
      if (p == used.size()) break;
    }
  }
  EXPECT_GT(accepted, 100);
}

TEST(RootSystem, CorootsAreRootsOfTranspose) {
  const RootSystem rs(CartanMatrix::named("B3"));
  const auto dual = positive_roots(CartanMatrix::named("C3"));
  ASSERT_EQ(rs.positive_coroots().size(), dual.size());
  for (std::size_t i = 0; i < dual.size(); ++i)
    EXPECT_EQ(rs.positive_coroots()[i], dual[i]);
}

TEST(CartanMatrix, Restricted) {
  const auto a3 = CartanMatrix::named("A3");
  const int idx[] = {1, 3};
  EXPECT_EQ(a3.restricted(idx).to_json(), "[[2,0],[0,2]]");
}

}  // namespace
}  // namespace schubert
