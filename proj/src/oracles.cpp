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

#include "schubert/oracles.hpp"

#include <algorithm>
#include <functional>

#include "schubert/error.hpp"

namespace schubert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw Error(ErrorKind::Parse,
                  "not a partition: parts must be weakly decreasing and "
                  "non-negative");
    }
  }
}

Partition Partition::parse(std::string_view text) {
  std::string_view t = text;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  t = trim(t);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    throw Error(ErrorKind::Parse, "partition '" + std::string(text) +
                                      "' must be a bracketed list like [2,1]");
  }
  t = trim(t.substr(1, t.size() - 2));
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < t.size()) {
    std::size_t comma = t.find(',', pos);
    if (comma == std::string_view::npos) comma = t.size();
    const std::string item(trim(t.substr(pos, comma - pos)));
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw Error(ErrorKind::Parse, "partition '" + std::string(text) +
                                        "': bad entry '" + item + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0 || (i > 0 && parts[i] > parts[i - 1])) {
      throw Error(ErrorKind::Parse, "partition '" + std::string(text) +
                                        "' is not weakly decreasing");
    }
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

int Partition::part(int i) const {
  return i < rows() ? parts_[static_cast<std::size_t>(i)] : 0;
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

bool Partition::fits_box(int r, int c) const {
  return rows() <= r && (parts_.empty() || parts_.front() <= c);
}

bool Partition::contains(const Partition& other) const {
  if (other.rows() > rows()) return false;
  for (int i = 0; i < other.rows(); ++i)
    if (other.part(i) > part(i)) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  const int width = parts_.empty() ? 0 : parts_.front();
  for (int c = 0; c < width; ++c) {
    int n = 0;
    for (int p : parts_)
      if (p > c) ++n;
    out.push_back(n);
  }
  return Partition(std::move(out));
}

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu,
                            const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size()) {
    throw Error(ErrorKind::SizeMismatch,
                "|nu| = " + std::to_string(nu.size()) + " but |lambda| + |mu| = " +
                    std::to_string(lambda.size() + mu.size()));
  }
  if (!nu.contains(lambda)) return 0;

  // Cells of nu/lambda in reverse reading order: rows top to bottom, each
  // row right to left.
  struct Cell {
    int row, col;
  };
  std::vector<Cell> cells;
  for (int r = 0; r < nu.rows(); ++r)
    for (int c = nu.part(r) - 1; c >= lambda.part(r); --c) cells.push_back({r, c});

  const int letters = mu.rows();
  std::vector<std::vector<int>> filling(nu.rows());
  for (int r = 0; r < nu.rows(); ++r) filling[r].assign(nu.part(r), 0);
  std::vector<int> used(letters + 1, 0);

  std::int64_t count = 0;
  std::function<void(std::size_t)> place = [&](std::size_t idx) {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[idx];
    int hi = letters;
    if (c + 1 < nu.part(r)) hi = std::min(hi, filling[r][c + 1]);
    int lo = 1;
    if (r > 0 && c >= lambda.part(r - 1)) lo = filling[r - 1][c] + 1;
    for (int v = lo; v <= hi; ++v) {
      if (used[v] >= mu.part(v - 1)) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;
      ++used[v];
      filling[r][c] = v;
      place(idx + 1);
      filling[r][c] = 0;
      --used[v];
    }
  };
  place(0);
  return count;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> parts;
  std::function<void(int)> extend = [&](int max_part) {
    out.emplace_back(parts);
    if (static_cast<int>(parts.size()) == rows) return;
    for (int p = std::min(max_part, cols); p >= 1; --p) {
      parts.push_back(p);
      extend(p);
      parts.pop_back();
    }
  };
  extend(cols);
  std::ranges::stable_sort(out, [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();
  });
  return out;
}

namespace {

void require_type_a(const CartanMatrix& c) {
  const int n = c.rank();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int expected = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
      if (c.at(i, j) != expected) {
        throw Error(ErrorKind::NotCartan,
                    "permutation form needs type A in standard numbering, got " +
                        c.to_json());
      }
    }
  }
}

}  // namespace

std::vector<int> permutation_of(const WeylElement& e, const CartanMatrix& c) {
  require_type_a(c);
  const int n = c.rank() + 1;
  // Fundamental weight omega_i = e_1 + ... + e_i up to multiples of
  // e_1 + ... + e_n; rho = sum (n - j) e_j.
  std::vector<int> eps(n, 0);
  for (int j = n - 2; j >= 0; --j) eps[j] = eps[j + 1] + e.rho_image[j];
  const int shift = *std::ranges::min_element(eps);
  std::vector<int> w(n, 0);
  for (int p = 0; p < n; ++p) {
    const int value = eps[p] - shift;  // value n - j sits at position w(j)
    const int j = n - value;
    if (j < 1 || j > n || w[j - 1] != 0) {
      throw Error(ErrorKind::Internal, "weight is not a permuted rho");
    }
    w[j - 1] = p + 1;
  }
  return w;
}

Partition grassmannian_dictionary(const WeylElement& e, const CartanMatrix& c,
                                  int k) {
  const auto w = permutation_of(e, c);
  const int n = static_cast<int>(w.size());
  if (k < 1 || k >= n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "k = " + std::to_string(k) + " outside 1.." + std::to_string(n - 1));
  }
  for (int i = 1; i < n; ++i) {
    if (i != k && w[i - 1] > w[i]) {
      throw Error(ErrorKind::NotGrassmannianPermutation,
                  "descent at position " + std::to_string(i) + ", allowed only at " +
                      std::to_string(k));
    }
  }
  std::vector<int> parts;
  for (int j = 1; j <= k; ++j) parts.push_back(w[k - j] - (k + 1 - j));
  return Partition(std::move(parts));
}

ParabolicSubset grassmannian_parabolic(int rank, int k) {
  ParabolicSubset p;
  for (int i = 1; i <= rank; ++i)
    if (i != k) p.indices.push_back(i);
  return p;
}

}  // namespace schubert
