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

// Homogeneous integer polynomials and the triangular operator T_A.
//
// T_A maps degree-k polynomials in x_1..x_k to the integers. It is fixed by
// three elimination laws on the last variable x_k:
//   (1) a polynomial free of x_k maps to 0 (k >= 2);
//   (2) for k = 1, x_1 maps to 1;
//   (3) T_A(h x_k^r) = T_A'(h (a_{1,k} x_1 + ... + a_{k-1,k} x_{k-1})^(r-1)),
// where A' drops the last row and column of A. triangular_eval applies these
// laws; triangular_eval_closed sums over non-negative flow matrices and
// shares no code with it.

#ifndef SCHUBERT_TRIOP_HPP
#define SCHUBERT_TRIOP_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "schubert/rootsys.hpp"

namespace schubert {

using Integer = mpz_class;
using Exponents = std::vector<std::uint8_t>;

inline constexpr int kMaxExponent = 255;

/// k x k integer matrix with zeros on and below the diagonal.
class TriangularMatrix {
 public:
  TriangularMatrix() = default;
  explicit TriangularMatrix(int k);
  /// Throws Error(SizeMismatch) when `m` is not square or has a nonzero
  /// entry on or below the diagonal.
  static TriangularMatrix from_rows(const IntMatrix& m);

  int size() const noexcept { return static_cast<int>(rows_.size()); }
  /// 1-based, a_{i,j}.
  int at(int i, int j) const { return rows_[i - 1][j - 1]; }
  void set(int i, int j, int value);
  const IntMatrix& rows() const noexcept { return rows_; }
  /// Leading (k-1) x (k-1) block.
  TriangularMatrix leading(int k) const;

  std::string to_json() const;

  friend bool operator==(const TriangularMatrix&,
                         const TriangularMatrix&) = default;

 private:
  IntMatrix rows_;
};

/// Sparse homogeneous polynomial in x_1..x_k with integer coefficients.
class HomogPoly {
 public:
  using Terms = std::map<Exponents, Integer>;

  HomogPoly(int num_vars, int degree);

  static HomogPoly constant(int num_vars, const Integer& c);
  /// x_i, 1-based.
  static HomogPoly variable(int num_vars, int i);
  /// Throws DegreeMismatch / VariableCountMismatch on malformed input.
  static HomogPoly monomial(std::span<const int> exponents,
                            const Integer& coeff = 1);

  int num_vars() const noexcept { return num_vars_; }
  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Coefficient of the given monomial (0 when absent).
  Integer coefficient(const Exponents& e) const;

  /// Adds c * x^e; the exponent vector must match num_vars and degree.
  void add_term(const Exponents& e, const Integer& c);

  HomogPoly& operator+=(const HomogPoly& other);
  HomogPoly& operator-=(const HomogPoly& other);
  HomogPoly& operator*=(const Integer& c);

  friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
  friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { return a -= b; }
  friend HomogPoly operator*(HomogPoly a, const Integer& c) { return a *= c; }
  friend bool operator==(const HomogPoly&, const HomogPoly&) = default;

  /// e.g. "2*x1*x2^2 - x3^3"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void check_compatible(const HomogPoly& other) const;

  int num_vars_;
  int degree_;
  Terms terms_;
};

/// Product of two polynomials in the same variables. Throws
/// VariableCountMismatch, or IntegerOverflow when an exponent would exceed
/// kMaxExponent.
HomogPoly poly_mul(const HomogPoly& p, const HomogPoly& q);

struct TriangularEvalOptions {
  /// Drop intermediate terms that vanish because a prefix of their exponent
  /// vector is too heavy. Does not change the result.
  bool prune_vanishing = false;
};

/// T_A(p) by the elimination laws. Requires p.num_vars() == p.degree() ==
/// a.size(); throws DegreeMismatch otherwise. For k = 0 the value of the
/// constant polynomial is returned.
Integer triangular_eval(const TriangularMatrix& a, const HomogPoly& p,
                        TriangularEvalOptions options = {});

/// T_A(x^r) as a sum over flow matrices C >= 0, strictly upper triangular,
/// with column sum i equal to r_i - 1 + row sum i:
///   sum_C prod_j (sum_i c_ij)! prod_ij a_ij^c_ij / c_ij!
Integer triangular_eval_closed(const TriangularMatrix& a,
                               std::span<const int> r);

/// Every flow matrix for the exponent vector r, columns enumerated left to
/// right with entries in lexicographic order.
std::vector<IntMatrix> flow_matrices(std::span<const int> r);

/// True iff r_1 + ... + r_i > i for some i; T_A then vanishes on x^r.
bool vanishing_filter(std::span<const int> r);

}  // namespace schubert

#endif  // SCHUBERT_TRIOP_HPP
