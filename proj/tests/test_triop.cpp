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

#include <functional>
#include <random>

#include "schubert/error.hpp"
#include "schubert/triop.hpp"
#include "test_support.hpp"

namespace schubert {
namespace {

using testing::compositions;
using testing::IntPoly;
using testing::random_exponents;
using testing::random_poly;
using testing::random_triangular;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Internal;
}

HomogPoly mono(std::vector<int> r, long c = 1) { return HomogPoly::monomial(r, c); }

Integer eval(const TriangularMatrix& a, std::vector<int> r) {
  return triangular_eval(a, mono(std::move(r)));
}

// ---------------------------------------------------------------------------
// Oracle 1: the elimination laws applied literally, one monomial at a time,
// with 64-bit coefficients.

std::int64_t laws_oracle(const TriangularMatrix& a, const std::vector<int>& r) {
  const int k = static_cast<int>(r.size());
  if (k == 1) return r[0] == 1 ? 1 : 0;
  if (r.back() == 0) return 0;
  // h * (a_{1,k} x_1 + ... + a_{k-1,k} x_{k-1})^{r_k - 1}
  IntPoly f;
  testing::add_to(f, std::vector<int>(r.begin(), r.end() - 1), 1);
  for (int t = 0; t < r.back() - 1; ++t) {
    IntPoly linear;
    for (int i = 1; i < k; ++i) {
      std::vector<int> e(k - 1, 0);
      e[i - 1] = 1;
      testing::add_to(linear, e, a.at(i, k));
    }
    f = testing::multiply(f, linear);
  }
  const TriangularMatrix sub = a.leading(k - 1);
  std::int64_t total = 0;
  for (const auto& [e, c] : f) total += c * laws_oracle(sub, e);
  return total;
}

// ---------------------------------------------------------------------------
// Oracle 2: the flow-matrix sum, enumerating columns from the right. The
// total of column j is fixed by r_j and row j, which lies in later columns.

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer flow_oracle(const TriangularMatrix& a, const std::vector<int>& r,
                    std::size_t* count = nullptr) {
  const int k = static_cast<int>(r.size());
  IntMatrix c(k, std::vector<int>(k, 0));
  Integer total = 0;
  std::function<void(int)> column = [&](int j) {
    if (j < 0) {
      Integer num = 1, den = 1;
      for (int col = 0; col < k; ++col) {
        int s = 0;
        for (int i = 0; i < col; ++i) {
          s += c[i][col];
          Integer p = 1;
          for (int t = 0; t < c[i][col]; ++t) p *= a.at(i + 1, col + 1);
          num *= p;
          den *= factorial(c[i][col]);
        }
        num *= factorial(s);
      }
      EXPECT_EQ(num % den, 0);
      total += num / den;
      if (count) ++*count;
      return;
    }
    int row = 0;
    for (int l = j + 1; l < k; ++l) row += c[j][l];
    const int col_total = r[j] - 1 + row;
    if (col_total < 0) return;
    if (j == 0) {
      if (col_total == 0) column(-1);
      return;
    }
    for (const auto& split : compositions(j, col_total)) {
      for (int i = 0; i < j; ++i) c[i][j] = split[i];
      column(j - 1);
    }
    for (int i = 0; i < j; ++i) c[i][j] = 0;
  };
  column(k - 1);
  return total;
}

// ---------------------------------------------------------------------------

TEST(TriangularMatrix, Basics) {
  TriangularMatrix a(3);
  a.set(1, 2, 4);
  a.set(2, 3, -1);
  EXPECT_EQ(a.at(1, 2), 4);
  EXPECT_EQ(a.at(1, 3), 0);
  EXPECT_EQ(a.to_json(), "[[0,4,0],[0,0,-1],[0,0,0]]");
  EXPECT_EQ(a.leading(2).rows(), (IntMatrix{{0, 4}, {0, 0}}));
  EXPECT_EQ(kind_of([&] { a.set(2, 2, 1); }), ErrorKind::SizeMismatch);
  EXPECT_EQ(kind_of([&] { a.set(3, 1, 1); }), ErrorKind::SizeMismatch);
}

TEST(HomogPoly, ConstructionAndPrinting) {
  HomogPoly p(3, 3);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.to_string(), "0");
  p.add_term({1, 2, 0}, 1);
  p.add_term({1, 0, 2}, 2);
  EXPECT_EQ(p.to_string(), "x1*x2^2 + 2*x1*x3^2");
  p.add_term({1, 0, 2}, -2);
  EXPECT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p.coefficient({1, 2, 0}), 1);
  EXPECT_EQ(p.coefficient({3, 0, 0}), 0);
  EXPECT_EQ(kind_of([&] { p.add_term({1, 1}, 1); }), ErrorKind::VariableCountMismatch);
  EXPECT_EQ(kind_of([&] { p.add_term({1, 1, 0}, 1); }), ErrorKind::DegreeMismatch);
  EXPECT_EQ(HomogPoly::variable(3, 2).to_string(), "x2");
  EXPECT_EQ(mono({0, 0, 3}, -1).to_string(), "-x3^3");
}

TEST(HomogPoly, Arithmetic) {
  const auto x = HomogPoly::variable(2, 1);
  const auto y = HomogPoly::variable(2, 2);
  EXPECT_EQ(poly_mul(x + y, x - y), mono({2, 0}) - mono({0, 2}));
  EXPECT_EQ(poly_mul(x + y, x + y).coefficient({1, 1}), 2);
  EXPECT_EQ((x * 3).coefficient({1, 0}), 3);
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ(kind_of([&] { auto z = x + mono({1, 1}); }), ErrorKind::DegreeMismatch);
  EXPECT_EQ(kind_of([&] { poly_mul(x, HomogPoly::variable(3, 1)); }),
            ErrorKind::VariableCountMismatch);
}

TEST(HomogPoly, MultiplicationMatchesOracle) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 4);
    const auto p = random_poly(rng, k, 4);
    const auto q = random_poly(rng, k, 4);
    IntPoly op, oq;
    for (const auto& [e, c] : p.terms())
      testing::add_to(op, std::vector<int>(e.begin(), e.end()), c.get_si());
    for (const auto& [e, c] : q.terms())
      testing::add_to(oq, std::vector<int>(e.begin(), e.end()), c.get_si());
    const auto prod = poly_mul(p, q);
    const auto expected = testing::multiply(op, oq);
    EXPECT_EQ(prod.terms().size(), expected.size());
    for (const auto& [e, c] : expected)
      EXPECT_EQ(prod.coefficient(Exponents(e.begin(), e.end())), c);
  }
}

// The G2 product of the subword sums for u = s2 s1 s2 and v = s1 s2 in the
// word 2,1,2,1,2.
TEST(HomogPoly, SubwordSumProduct) {
  HomogPoly u(5, 3), v(5, 2);
  for (auto e : {Exponents{1, 1, 1, 0, 0}, Exponents{1, 1, 0, 0, 1},
                 Exponents{1, 0, 0, 1, 1}, Exponents{0, 0, 1, 1, 1}})
    u.add_term(e, 1);
  for (auto e : {Exponents{0, 1, 1, 0, 0}, Exponents{0, 1, 0, 0, 1},
                 Exponents{0, 0, 0, 1, 1}})
    v.add_term(e, 1);
  const auto p = poly_mul(u, v);
  EXPECT_EQ(p.degree(), 5);
  EXPECT_EQ(p.coefficient({1, 1, 1, 1, 1}), 2);
  EXPECT_EQ(p.coefficient({1, 1, 0, 1, 2}), 2);
  EXPECT_EQ(p.coefficient({1, 2, 2, 0, 0}), 1);
  Integer total = 0;
  for (const auto& [e, c] : p.terms()) total += c;
  EXPECT_EQ(total, 12);
}

TEST(HomogPoly, ExponentOverflow) {
  const int big[] = {200, 0};
  const auto p = HomogPoly::monomial(big);
  EXPECT_EQ(kind_of([&] { poly_mul(p, p); }), ErrorKind::IntegerOverflow);
  const int too_big[] = {256};
  EXPECT_EQ(kind_of([&] { HomogPoly::monomial(too_big); }), ErrorKind::IntegerOverflow);
}

TEST(TriangularEval, TwoVariables) {
  for (int a = -3; a <= 3; ++a) {
    TriangularMatrix m(2);
    m.set(1, 2, a);
    EXPECT_EQ(eval(m, {2, 0}), 0);
    EXPECT_EQ(eval(m, {1, 1}), 1);
    EXPECT_EQ(eval(m, {0, 2}), a);
  }
}

TEST(TriangularEval, ThreeVariablesSymbolic) {
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) {
        TriangularMatrix m(3);
        m.set(1, 2, a);
        m.set(1, 3, b);
        m.set(2, 3, c);
        // x3^3 -> T_{A1}((b x1 + c x2)^2) = 2bc + c^2 a
        EXPECT_EQ(eval(m, {0, 0, 3}), 2 * b * c + c * c * a);
        EXPECT_EQ(eval(m, {0, 1, 2}), b + c * a);
        EXPECT_EQ(eval(m, {1, 0, 2}), c);
        EXPECT_EQ(eval(m, {0, 2, 1}), a);
        EXPECT_EQ(eval(m, {1, 1, 1}), 1);
      }
}

TEST(TriangularEval, ZeroByZero) {
  EXPECT_EQ(triangular_eval(TriangularMatrix(0), HomogPoly::constant(0, 7)), 7);
  EXPECT_EQ(triangular_eval(TriangularMatrix(1), HomogPoly::variable(1, 1)), 1);
}

TEST(TriangularEval, DegreeMismatch) {
  TriangularMatrix m(3);
  EXPECT_EQ(kind_of([&] { triangular_eval(m, mono({1, 1})); }), ErrorKind::DegreeMismatch);
  EXPECT_EQ(kind_of([&] { triangular_eval(m, mono({1, 1, 0})); }),
            ErrorKind::DegreeMismatch);
  const int r[] = {1, 1};
  EXPECT_EQ(kind_of([&] { triangular_eval_closed(m, r); }), ErrorKind::DegreeMismatch);
  EXPECT_EQ(triangular_eval(m, HomogPoly(3, 3)), 0);
}

// Law 1: polynomials free of x_k vanish.
TEST(TriangularEval, LawOneProperty) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 5);
    const auto a = random_triangular(rng, k);
    auto r = random_exponents(rng, k);
    r[k - 2] += r[k - 1];
    r[k - 1] = 0;
    EXPECT_EQ(eval(a, r), 0);
  }
}

// Law 3 on random monomials: T_A(h x_k^r) = T_A'(h L^{r-1}).
TEST(TriangularEval, LawThreeProperty) {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 5);
    const auto a = random_triangular(rng, k);
    auto r = random_exponents(rng, k);
    if (r.back() == 0) continue;
    HomogPoly linear(k - 1, 1);
    for (int i = 1; i < k; ++i) linear += HomogPoly::variable(k - 1, i) * a.at(i, k);
    HomogPoly rhs = HomogPoly::monomial(std::vector<int>(r.begin(), r.end() - 1));
    for (int t = 0; t < r.back() - 1; ++t) rhs = poly_mul(rhs, linear);
    EXPECT_EQ(eval(a, r), triangular_eval(a.leading(k - 1), rhs));
  }
}

TEST(TriangularEval, Linearity) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 6);
    const auto a = random_triangular(rng, k);
    const auto p = random_poly(rng, k, 5);
    const auto q = random_poly(rng, k, 5);
    const Integer s = static_cast<long>(rng() % 11) - 5;
    EXPECT_EQ(triangular_eval(a, p + q * s),
              triangular_eval(a, p) + s * triangular_eval(a, q));
  }
}

TEST(TriangularEval, UnitMonomialAndPrefixVanishing) {
  std::mt19937 rng(24);
  int vanishing = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 7);
    const auto a = random_triangular(rng, k);
    EXPECT_EQ(eval(a, std::vector<int>(k, 1)), 1);
  }
  for (int trial = 0; vanishing < 100; ++trial) {
    ASSERT_LT(trial, 10000);
    const int k = 2 + static_cast<int>(rng() % 6);
    const auto a = random_triangular(rng, k);
    const auto r = random_exponents(rng, k);
    if (!vanishing_filter(r)) continue;
    ++vanishing;
    EXPECT_EQ(eval(a, r), 0);
    EXPECT_EQ(triangular_eval_closed(a, r), 0);
  }
}

TEST(TriangularEval, VanishingFilterExamples) {
  const int a[] = {2, 0, 1}, b[] = {1, 1, 1}, c[] = {0, 3, 0}, d[] = {1, 2, 0},
            e[] = {0, 0, 3};
  EXPECT_TRUE(vanishing_filter(a));
  EXPECT_FALSE(vanishing_filter(b));
  EXPECT_TRUE(vanishing_filter(c));
  EXPECT_TRUE(vanishing_filter(d));
  EXPECT_FALSE(vanishing_filter(e));
}

// Recursive elimination, closed form and both test oracles on every
// exponent vector for k <= 4, and on random ones for k <= 6.
TEST(TriangularEval, CrossOracleExhaustiveSmall) {
  std::mt19937 rng(25);
  int cases = 0;
  for (int k = 1; k <= 4; ++k)
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = random_triangular(rng, k);
      for (const auto& r : compositions(k, k)) {
        const Integer rec = eval(a, r);
        EXPECT_EQ(rec, triangular_eval_closed(a, r));
        EXPECT_EQ(rec, laws_oracle(a, r));
        EXPECT_EQ(rec, flow_oracle(a, r));
        ++cases;
      }
    }
  EXPECT_GE(cases, 200);
}

TEST(TriangularEval, CrossOracleRandom) {
  std::mt19937 rng(26);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 6);
    const auto a = random_triangular(rng, k);
    const auto r = random_exponents(rng, k);
    const Integer rec = eval(a, r);
    EXPECT_EQ(rec, triangular_eval_closed(a, r));
    EXPECT_EQ(rec, laws_oracle(a, r));
    EXPECT_EQ(rec, flow_oracle(a, r));
    EXPECT_EQ(rec, triangular_eval(a, mono(r), {.prune_vanishing = true}));
  }
}

TEST(TriangularEval, PruningDoesNotChangePolynomialResults) {
  std::mt19937 rng(27);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 7);
    const auto a = random_triangular(rng, k);
    const auto p = random_poly(rng, k, 8);
    EXPECT_EQ(triangular_eval(a, p), triangular_eval(a, p, {.prune_vanishing = true}));
  }
}

TEST(TriangularEval, LargeValuesUseBigIntegers) {
  TriangularMatrix a(8);
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) a.set(i, j, 3);
  std::vector<int> r(8, 0);
  r[7] = 8;
  const Integer v = eval(a, r);
  EXPECT_EQ(v, triangular_eval_closed(a, r));
  EXPECT_EQ(v, flow_oracle(a, r));
  EXPECT_GT(v, 0);
}

TEST(FlowMatrices, Invariants) {
  for (int k = 1; k <= 5; ++k)
    for (const auto& r : compositions(k, k)) {
      const auto flows = flow_matrices(r);
      std::size_t count = 0;
      TriangularMatrix ones(k);
      for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) ones.set(i, j, 1);
      flow_oracle(ones, r, &count);
      EXPECT_EQ(flows.size(), count);
      for (const auto& c : flows)
        for (int i = 0; i < k; ++i) {
          int row = 0, col = 0;
          for (int j = 0; j < k; ++j) {
            if (j <= i) {
              EXPECT_EQ(c[i][j], 0);
            }
            EXPECT_GE(c[i][j], 0);
            row += c[i][j];
            col += c[j][i];
          }
          EXPECT_EQ(col, r[i] - 1 + row);
        }
      if (vanishing_filter(r)) {
        EXPECT_TRUE(flows.empty());
      }
    }
  const int diag[] = {1, 1, 1};
  ASSERT_EQ(flow_matrices(diag).size(), 1u);
  EXPECT_EQ(flow_matrices(diag)[0], (IntMatrix(3, std::vector<int>(3, 0))));
}

}  // namespace
}  // namespace schubert
