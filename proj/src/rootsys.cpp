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

#include "schubert/rootsys.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <deque>
#include <optional>
#include <set>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

namespace {

std::string describe(const IntMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out << ',';
    out << '[';
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) out << ',';
      out << m[i][j];
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

// Row scalings d with d_i C_ij = d_j C_ji, one free scale per connected
// component. Empty when no such scaling exists.
std::optional<std::vector<mpq_class>> symmetrizer(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::optional<mpq_class>> d(n);
  for (std::size_t start = 0; start < n; ++start) {
    if (d[start]) continue;
    d[start] = mpq_class(1);
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || m[i][j] == 0) continue;
        mpq_class dj = *d[i] * m[i][j] / m[j][i];
        if (!d[j]) {
          d[j] = dj;
          queue.push_back(j);
        } else if (*d[j] != dj) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<mpq_class> out;
  out.reserve(n);
  for (auto& x : d) out.push_back(*x);
  return out;
}

// Positive definiteness by Gaussian elimination without pivoting: a
// symmetric matrix is positive definite iff every pivot is positive.
bool positive_definite(std::vector<std::vector<mpq_class>> s) {
  const std::size_t n = s.size();
  for (std::size_t p = 0; p < n; ++p) {
    if (sgn(s[p][p]) <= 0) return false;
    for (std::size_t i = p + 1; i < n; ++i) {
      mpq_class f = s[i][p] / s[p][p];
      for (std::size_t j = p; j < n; ++j) s[i][j] -= f * s[p][j];
    }
  }
  return true;
}

IntMatrix identity_cartan(int n) {
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  return m;
}

// Simply-laced chain 1-2-...-n.
IntMatrix chain(int n) {
  IntMatrix m = identity_cartan(n);
  for (int i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = -1;
  return m;
}

IntMatrix builtin(char family, int n) {
  auto bad = [&] {
    return Error(ErrorKind::NotCartan,
                 "unknown type " + std::string(1, family) + std::to_string(n));
  };
  switch (family) {
    case 'A':
      if (n < 1) throw bad();
      return chain(n);
    case 'B': {
      if (n < 2) throw bad();
      IntMatrix m = chain(n);
      m[n - 2][n - 1] = -2;  // beta_n short
      return m;
    }
    case 'C': {
      if (n < 2) throw bad();
      IntMatrix m = chain(n);
      m[n - 1][n - 2] = -2;  // beta_n long
      return m;
    }
    case 'D': {
      if (n < 4) throw bad();
      IntMatrix m = chain(n);
      m[n - 2][n - 1] = m[n - 1][n - 2] = 0;
      m[n - 3][n - 1] = m[n - 1][n - 3] = -1;
      return m;
    }
    case 'E': {
      if (n < 6 || n > 8) throw bad();
      // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
      IntMatrix m = identity_cartan(n);
      auto link = [&](int a, int b) { m[a - 1][b - 1] = m[b - 1][a - 1] = -1; };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < n; ++i) link(i, i + 1);
      return m;
    }
    case 'F': {
      if (n != 4) throw bad();
      IntMatrix m = chain(4);
      m[1][2] = -2;  // beta_1, beta_2 long; beta_3, beta_4 short
      return m;
    }
    case 'G': {
      if (n != 2) throw bad();
      return {{2, -1}, {-3, 2}};
    }
    default:
      throw bad();
  }
}

}  // namespace

CartanMatrix CartanMatrix::validate(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorKind::NotCartan, "empty matrix");
  for (const auto& row : m) {
    if (row.size() != n) {
      throw Error(ErrorKind::NotCartan, "matrix is not square: " + describe(m));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] != 2) {
      throw Error(ErrorKind::NotCartan,
                  "diagonal entry " + std::to_string(i + 1) + " is not 2 in " +
                      describe(m));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m[i][j] > 0 || m[i][j] < -3) {
        throw Error(ErrorKind::NotCartan,
                    "off-diagonal entry (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ") outside {0,-1,-2,-3} in " +
                        describe(m));
      }
      if ((m[i][j] == 0) != (m[j][i] == 0)) {
        throw Error(ErrorKind::NotCartan,
                    "asymmetric zero pattern at (" + std::to_string(i + 1) +
                        "," + std::to_string(j + 1) + ") in " + describe(m));
      }
    }
  }
  auto d = symmetrizer(m);
  if (!d) {
    throw Error(ErrorKind::NotFiniteType,
                "matrix is not symmetrizable: " + describe(m));
  }
  std::vector<std::vector<mpq_class>> s(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s[i][j] = (*d)[i] * m[i][j];
  if (!positive_definite(std::move(s))) {
    throw Error(ErrorKind::NotFiniteType,
                "symmetrization is not positive definite: " + describe(m));
  }
  return CartanMatrix(m);
}

CartanMatrix CartanMatrix::named(std::string_view type) {
  if (type.size() < 2) {
    throw Error(ErrorKind::Parse, "type name must look like A3, got '" +
                                      std::string(type) + "'");
  }
  const char family = type.front();
  int n = 0;
  auto digits = type.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw Error(ErrorKind::Parse,
                "bad rank in type name '" + std::string(type) + "'");
  }
  return validate(builtin(family, n));
}

int CartanMatrix::at(int i, int j) const {
  if (i < 1 || j < 1 || i > rank() || j > rank()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "Cartan index (" + std::to_string(i) + "," + std::to_string(j) +
                    ") outside rank " + std::to_string(rank()));
  }
  return entries_[i - 1][j - 1];
}

std::string CartanMatrix::to_json() const { return describe(entries_); }

CartanMatrix CartanMatrix::restricted(std::span<const int> indices) const {
  IntMatrix sub;
  sub.reserve(indices.size());
  for (int i : indices) {
    std::vector<int> row;
    row.reserve(indices.size());
    for (int j : indices) row.push_back(at(i, j));
    sub.push_back(std::move(row));
  }
  if (sub.empty()) return CartanMatrix(IntMatrix{});
  return CartanMatrix(std::move(sub));
}

CartanMatrix CartanMatrix::transposed() const {
  IntMatrix t = entries_;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) t[i][j] = entries_[j][i];
  return CartanMatrix(std::move(t));
}

bool Root::is_positive() const {
  return std::ranges::all_of(coords, [](int x) { return x >= 0; }) &&
         std::ranges::any_of(coords, [](int x) { return x > 0; });
}

bool Root::is_negative() const {
  return std::ranges::all_of(coords, [](int x) { return x <= 0; }) &&
         std::ranges::any_of(coords, [](int x) { return x < 0; });
}

int Root::height() const {
  int h = 0;
  for (int x : coords) h += x;
  return h;
}

Root simple_root(int i, int rank) {
  if (i < 1 || i > rank) {
    throw Error(ErrorKind::IndexOutOfRange,
                "simple root " + std::to_string(i) + " outside rank " +
                    std::to_string(rank));
  }
  Root r{std::vector<int>(rank, 0)};
  r.coords[i - 1] = 1;
  return r;
}

int cartan_pair(const Root& b, int i, const CartanMatrix& c) {
  if (i < 1 || i > c.rank()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "simple root " + std::to_string(i) + " outside rank " +
                    std::to_string(c.rank()));
  }
  int s = 0;
  for (int k = 0; k < c.rank(); ++k) s += b.coords[k] * c.entries()[k][i - 1];
  return s;
}

Root reflect_root(int i, const Root& b, const CartanMatrix& c) {
  Root r = b;
  r.coords[i - 1] -= cartan_pair(b, i, c);
  return r;
}

std::vector<Root> positive_roots(const CartanMatrix& c) {
  const int n = c.rank();
  std::set<Root> seen;
  std::deque<Root> queue;
  for (int i = 1; i <= n; ++i) {
    Root s = simple_root(i, n);
    seen.insert(s);
    queue.push_back(std::move(s));
  }
  while (!queue.empty()) {
    Root b = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      Root r = reflect_root(i, b, c);
      if (r.is_positive() && seen.insert(r).second) queue.push_back(std::move(r));
    }
  }
  std::vector<Root> out(seen.begin(), seen.end());
  std::ranges::sort(out, [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords < b.coords;
  });
  return out;
}

RootSystem::RootSystem(CartanMatrix c)
    : cartan_(std::move(c)),
      roots_(schubert::positive_roots(cartan_)),
      coroots_(schubert::positive_roots(cartan_.transposed())) {}

}  // namespace schubert
