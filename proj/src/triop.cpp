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

#include "schubert/triop.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

// ---------------------------------------------------------------------------
// TriangularMatrix

TriangularMatrix::TriangularMatrix(int k)
    : rows_(k, std::vector<int>(k, 0)) {}

TriangularMatrix TriangularMatrix::from_rows(const IntMatrix& m) {
  const std::size_t k = m.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (m[i].size() != k) {
      throw Error(ErrorKind::SizeMismatch, "triangular matrix is not square");
    }
    for (std::size_t j = 0; j <= i; ++j) {
      if (m[i][j] != 0) {
        throw Error(ErrorKind::SizeMismatch,
                    "entry (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) +
                        ") on or below the diagonal is nonzero");
      }
    }
  }
  TriangularMatrix t;
  t.rows_ = m;
  return t;
}

void TriangularMatrix::set(int i, int j, int value) {
  if (i >= j) {
    throw Error(ErrorKind::SizeMismatch,
                "cannot set entry on or below the diagonal");
  }
  rows_[i - 1][j - 1] = value;
}

TriangularMatrix TriangularMatrix::leading(int k) const {
  TriangularMatrix t(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t.rows_[i][j] = rows_[i][j];
  return t;
}

std::string TriangularMatrix::to_json() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out << ',';
    out << '[';
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) out << ',';
      out << rows_[i][j];
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

// ---------------------------------------------------------------------------
// HomogPoly

HomogPoly::HomogPoly(int num_vars, int degree)
    : num_vars_(num_vars), degree_(degree) {
  if (num_vars < 0 || degree < 0) {
    throw Error(ErrorKind::DegreeMismatch,
                "negative variable count or degree");
  }
}

HomogPoly HomogPoly::constant(int num_vars, const Integer& c) {
  HomogPoly p(num_vars, 0);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

HomogPoly HomogPoly::variable(int num_vars, int i) {
  if (i < 1 || i > num_vars) {
    throw Error(ErrorKind::IndexOutOfRange,
                "variable x" + std::to_string(i) + " outside 1.." +
                    std::to_string(num_vars));
  }
  HomogPoly p(num_vars, 1);
  Exponents e(num_vars, 0);
  e[i - 1] = 1;
  p.add_term(e, 1);
  return p;
}

HomogPoly HomogPoly::monomial(std::span<const int> exponents,
                              const Integer& coeff) {
  int degree = 0;
  Exponents e;
  e.reserve(exponents.size());
  for (int r : exponents) {
    if (r < 0) throw Error(ErrorKind::DegreeMismatch, "negative exponent");
    if (r > kMaxExponent) {
      throw Error(ErrorKind::IntegerOverflow,
                  "exponent " + std::to_string(r) + " exceeds " +
                      std::to_string(kMaxExponent));
    }
    degree += r;
    e.push_back(static_cast<std::uint8_t>(r));
  }
  HomogPoly p(static_cast<int>(exponents.size()), degree);
  p.add_term(e, coeff);
  return p;
}

Integer HomogPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void HomogPoly::add_term(const Exponents& e, const Integer& c) {
  if (static_cast<int>(e.size()) != num_vars_) {
    throw Error(ErrorKind::VariableCountMismatch,
                "exponent vector has " + std::to_string(e.size()) +
                    " entries, polynomial has " + std::to_string(num_vars_) +
                    " variables");
  }
  int d = 0;
  for (auto x : e) d += x;
  if (d != degree_) {
    throw Error(ErrorKind::DegreeMismatch,
                "term of degree " + std::to_string(d) +
                    " added to a polynomial of degree " +
                    std::to_string(degree_));
  }
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void HomogPoly::check_compatible(const HomogPoly& other) const {
  if (other.num_vars_ != num_vars_) {
    throw Error(ErrorKind::VariableCountMismatch,
                std::to_string(num_vars_) + " vs " +
                    std::to_string(other.num_vars_) + " variables");
  }
  if (other.degree_ != degree_ && !other.is_zero() && !is_zero()) {
    throw Error(ErrorKind::DegreeMismatch,
                "adding polynomials of degree " + std::to_string(degree_) +
                    " and " + std::to_string(other.degree_));
  }
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& other) {
  check_compatible(other);
  if (is_zero()) degree_ = other.degree_;
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

HomogPoly& HomogPoly::operator-=(const HomogPoly& other) {
  check_compatible(other);
  if (is_zero()) degree_ = other.degree_;
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

HomogPoly& HomogPoly::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

std::string HomogPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool any_var = false;
    std::ostringstream vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any_var) vars << '*';
      any_var = true;
      vars << 'x' << (i + 1);
      if (e[i] > 1) vars << '^' << static_cast<int>(e[i]);
    }
    if (!any_var) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << '*';
      out << vars.str();
    }
  }
  return out.str();
}

HomogPoly poly_mul(const HomogPoly& p, const HomogPoly& q) {
  if (p.num_vars() != q.num_vars()) {
    throw Error(ErrorKind::VariableCountMismatch,
                std::to_string(p.num_vars()) + " vs " +
                    std::to_string(q.num_vars()) + " variables");
  }
  HomogPoly out(p.num_vars(), p.degree() + q.degree());
  Exponents e(p.num_vars());
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        const int s = ep[i] + eq[i];
        if (s > kMaxExponent) {
          throw Error(ErrorKind::IntegerOverflow,
                      "exponent of x" + std::to_string(i + 1) + " exceeds " +
                          std::to_string(kMaxExponent));
        }
        e[i] = static_cast<std::uint8_t>(s);
      }
      out.add_term(e, cp * cq);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elimination laws

bool vanishing_filter(std::span<const int> r) {
  int prefix = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    prefix += r[i];
    if (prefix > static_cast<int>(i) + 1) return true;
  }
  return false;
}

namespace {

bool heavy_prefix(const Exponents& e) {
  int prefix = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    prefix += e[i];
    if (prefix > static_cast<int>(i) + 1) return true;
  }
  return false;
}

// One application of laws (1) and (3): eliminates x_m from a degree-m
// polynomial in m variables.
HomogPoly eliminate_last(const TriangularMatrix& a, const HomogPoly& f,
                         bool prune) {
  const int m = f.num_vars();
  // Split f = sum_r h_r x_m^r and drop r = 0.
  std::map<int, HomogPoly> by_power;
  for (const auto& [e, c] : f.terms()) {
    const int r = e.back();
    if (r == 0) continue;
    Exponents h(e.begin(), e.end() - 1);
    auto it = by_power.try_emplace(r, m - 1, m - r).first;
    it->second.add_term(h, c);
  }

  HomogPoly linear(m - 1, 1);
  for (int i = 1; i < m; ++i) {
    if (a.at(i, m) == 0) continue;
    Exponents e(m - 1, 0);
    e[i - 1] = 1;
    linear.add_term(e, a.at(i, m));
  }

  HomogPoly result(m - 1, m - 1);
  HomogPoly power = HomogPoly::constant(m - 1, 1);
  int power_exp = 0;
  for (const auto& [r, h] : by_power) {
    while (power_exp < r - 1) {
      power = poly_mul(power, linear);
      ++power_exp;
    }
    result += poly_mul(h, power);
  }

  if (prune) {
    HomogPoly kept(m - 1, m - 1);
    for (const auto& [e, c] : result.terms())
      if (!heavy_prefix(e)) kept.add_term(e, c);
    return kept;
  }
  return result;
}

}  // namespace

Integer triangular_eval(const TriangularMatrix& a, const HomogPoly& p,
                        TriangularEvalOptions options) {
  const int k = a.size();
  if (p.num_vars() != k || (p.degree() != k && !p.is_zero())) {
    throw Error(ErrorKind::DegreeMismatch,
                "T_A with A of size " + std::to_string(k) +
                    " needs a degree-" + std::to_string(k) +
                    " polynomial in " + std::to_string(k) +
                    " variables, got degree " + std::to_string(p.degree()) +
                    " in " + std::to_string(p.num_vars()));
  }
  if (p.is_zero()) return 0;
  if (k == 0) return p.coefficient(Exponents{});

  HomogPoly f = p;
  for (int m = k; m >= 2; --m) {
    f = eliminate_last(a, f, options.prune_vanishing);
    if (f.is_zero()) return 0;
  }
  return f.coefficient(Exponents{1});
}

// ---------------------------------------------------------------------------
// Closed form

namespace {

// Column-by-column backtracking over flow matrices. `need[i]` is the row sum
// still owed by row i once its column sum is known.
class FlowEnumerator {
 public:
  using Visit = std::function<void(const IntMatrix&)>;

  FlowEnumerator(std::span<const int> r, Visit visit)
      : r_(r.begin(), r.end()),
        k_(static_cast<int>(r.size())),
        c_(k_, std::vector<int>(k_, 0)),
        need_(k_, 0),
        visit_(std::move(visit)) {}

  void run() {
    if (k_ == 0) {
      visit_(c_);
      return;
    }
    column(0);
  }

 private:
  void column(int j) {
    if (j == k_) {
      visit_(c_);
      return;
    }
    fill(j, 0, 0);
  }

  // Chooses c[i][j] for rows i..j-1 of column j; `sum` is the column sum so
  // far.
  void fill(int j, int i, int sum) {
    if (i == j) {
      const int owed = sum - r_[j] + 1;
      if (owed < 0) return;
      if (j == k_ - 1 && owed != 0) return;
      need_[j] = owed;
      column(j + 1);
      return;
    }
    const bool last = j == k_ - 1;
    const int lo = last ? need_[i] : 0;
    for (int x = lo; x <= need_[i]; ++x) {
      c_[i][j] = x;
      need_[i] -= x;
      fill(j, i + 1, sum + x);
      need_[i] += x;
    }
    c_[i][j] = 0;
  }

  std::vector<int> r_;
  int k_;
  IntMatrix c_;
  std::vector<int> need_;
  Visit visit_;
};

void check_exponents(int k, std::span<const int> r) {
  if (static_cast<int>(r.size()) != k) {
    throw Error(ErrorKind::DegreeMismatch,
                "exponent vector of length " + std::to_string(r.size()) +
                    " for a matrix of size " + std::to_string(k));
  }
  int total = 0;
  for (int x : r) {
    if (x < 0) throw Error(ErrorKind::DegreeMismatch, "negative exponent");
    total += x;
  }
  if (total != k) {
    throw Error(ErrorKind::DegreeMismatch,
                "exponents sum to " + std::to_string(total) + ", expected " +
                    std::to_string(k));
  }
}

}  // namespace

std::vector<IntMatrix> flow_matrices(std::span<const int> r) {
  check_exponents(static_cast<int>(r.size()), r);
  std::vector<IntMatrix> out;
  FlowEnumerator(r, [&](const IntMatrix& c) { out.push_back(c); }).run();
  return out;
}

Integer triangular_eval_closed(const TriangularMatrix& a,
                               std::span<const int> r) {
  const int k = a.size();
  check_exponents(k, r);
  Integer total = 0;
  FlowEnumerator(r, [&](const IntMatrix& c) {
    Integer term = 1;
    for (int j = 0; j < k; ++j) {
      int colsum = 0;
      for (int i = 0; i < j; ++i) colsum += c[i][j];
      Integer f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(colsum));
      term *= f;
      for (int i = 0; i < j; ++i) {
        if (c[i][j] == 0) continue;
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(std::abs(a.at(i + 1, j + 1))),
                      static_cast<unsigned long>(c[i][j]));
        if (a.at(i + 1, j + 1) < 0 && c[i][j] % 2 == 1) p = -p;
        Integer cf;
        mpz_fac_ui(cf.get_mpz_t(), static_cast<unsigned long>(c[i][j]));
        term *= p;
        // Each column's factorial quotient is a multinomial, so the running
        // product stays integral after every division within the column.
        term /= cf;
      }
    }
    total += term;
  }).run();
  return total;
}

}  // namespace schubert
