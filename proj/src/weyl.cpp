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

#include "schubert/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "schubert/error.hpp"

namespace schubert {

namespace {

// Comma-separated positive integers; column numbers in errors are 1-based.
std::vector<int> parse_index_list(std::string_view text, int rank,
                                  std::string_view what) {
  std::vector<int> out;
  auto is_space = [](char ch) { return ch == ' ' || ch == '\t'; };
  std::size_t pos = 0;
  while (pos < text.size() && is_space(text[pos])) ++pos;
  if (pos == text.size()) return out;
  while (true) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    const std::size_t start = pos;
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos) {
      throw Error(ErrorKind::Parse,
                  std::string(what) + " '" + std::string(text) +
                      "': expected integer at column " +
                      std::to_string(start + 1));
    }
    pos = static_cast<std::size_t>(ptr - text.data());
    if (value < 1 || (rank > 0 && value > rank)) {
      throw Error(ErrorKind::IndexOutOfRange,
                  std::string(what) + " '" + std::string(text) + "': index " +
                      std::to_string(value) + " at column " +
                      std::to_string(start + 1) + " outside 1.." +
                      std::to_string(rank));
    }
    out.push_back(value);
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw Error(ErrorKind::Parse, std::string(what) + " '" +
                                        std::string(text) +
                                        "': expected ',' at column " +
                                        std::to_string(pos + 1));
    }
    ++pos;
  }
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

void check_letter(int i, int rank) {
  if (i < 1 || i > rank) {
    throw Error(ErrorKind::IndexOutOfRange,
                "letter " + std::to_string(i) + " outside 1.." +
                    std::to_string(rank));
  }
}

}  // namespace

Word Word::parse(std::string_view text, int rank) {
  return Word{parse_index_list(text, rank, "word")};
}

std::string Word::to_string() const { return join(letters); }

bool WeylElement::is_identity() const {
  return std::ranges::all_of(rho_image, [](int x) { return x == 1; });
}

std::size_t WeylElementHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int x : w) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
    h *= 0x100000001b3ull;
  }
  return h;
}

std::size_t WeylElementHash::operator()(const WeylElement& e) const noexcept {
  return (*this)(e.rho_image);
}

ParabolicSubset ParabolicSubset::parse(std::string_view text, int rank) {
  auto xs = parse_index_list(text, rank, "parabolic subset");
  std::ranges::sort(xs);
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return ParabolicSubset{std::move(xs)};
}

std::string ParabolicSubset::to_string() const { return join(indices); }

bool ParabolicSubset::contains(int i) const {
  return std::ranges::find(indices, i) != indices.end();
}

std::vector<int> ParabolicSubset::complement(int rank) const {
  std::vector<int> out;
  for (int i = 1; i <= rank; ++i)
    if (!contains(i)) out.push_back(i);
  return out;
}

Weight rho(int rank) { return Weight(rank, 1); }

Weight apply_simple_reflection(int i, Weight v, const CartanMatrix& c) {
  check_letter(i, c.rank());
  const int li = v[i - 1];
  if (li == 0) return v;
  const auto& row = c.entries()[i - 1];
  for (int j = 0; j < c.rank(); ++j) v[j] -= li * row[j];
  return v;
}

WeylElement identity_element(int rank) { return WeylElement{rho(rank), 0}; }

WeylElement element_of_word(const Word& w, const RootSystem& rs) {
  const auto& c = rs.cartan();
  Weight v = rho(c.rank());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    v = apply_simple_reflection(*it, std::move(v), c);
  WeylElement e{std::move(v), 0};
  e.length = length(e, rs);
  return e;
}

WeylElement left_multiply(int i, const WeylElement& e, const CartanMatrix& c) {
  check_letter(i, c.rank());
  const bool ascent = e.rho_image[i - 1] > 0;
  return WeylElement{apply_simple_reflection(i, e.rho_image, c),
                     e.length + (ascent ? 1 : -1)};
}

int length(const WeylElement& e, const RootSystem& rs) {
  int count = 0;
  for (const Root& coroot : rs.positive_coroots()) {
    long long pairing = 0;
    for (int j = 0; j < rs.rank(); ++j)
      pairing += static_cast<long long>(coroot.coords[j]) * e.rho_image[j];
    if (pairing < 0) ++count;
  }
  return count;
}

int first_left_descent(const WeylElement& e) {
  for (std::size_t i = 0; i < e.rho_image.size(); ++i)
    if (e.rho_image[i] < 0) return static_cast<int>(i) + 1;
  return 0;
}

Word reduced_word(const WeylElement& e, const CartanMatrix& c) {
  Word w;
  Weight v = e.rho_image;
  while (true) {
    auto it = std::ranges::find_if(v, [](int x) { return x < 0; });
    if (it == v.end()) break;
    const int i = static_cast<int>(it - v.begin()) + 1;
    w.letters.push_back(i);
    v = apply_simple_reflection(i, std::move(v), c);
  }
  return w;
}

std::vector<Word> all_reduced_words(const WeylElement& e,
                                    const CartanMatrix& c) {
  std::vector<Word> out;
  std::vector<int> prefix;
  std::function<void(const Weight&)> walk = [&](const Weight& v) {
    bool any = false;
    for (int i = 1; i <= c.rank(); ++i) {
      if (v[i - 1] >= 0) continue;
      any = true;
      prefix.push_back(i);
      walk(apply_simple_reflection(i, v, c));
      prefix.pop_back();
    }
    if (!any) out.push_back(Word{prefix});
  };
  walk(e.rho_image);
  return out;
}

Root apply_to_root(const WeylElement& e, const Root& beta,
                   const CartanMatrix& c) {
  const Word w = reduced_word(e, c);
  Root r = beta;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r = reflect_root(*it, r, c);
  return r;
}

namespace {

void sort_level(std::vector<WeylElement>& level, const CartanMatrix& c) {
  std::vector<std::pair<Word, WeylElement>> keyed;
  keyed.reserve(level.size());
  for (auto& e : level) keyed.emplace_back(reduced_word(e, c), std::move(e));
  std::ranges::sort(keyed, {}, &std::pair<Word, WeylElement>::first);
  level.clear();
  for (auto& [w, e] : keyed) level.push_back(std::move(e));
}

// Breadth-first search by length from the identity, keeping only elements
// accepted by `keep`. Correct whenever every kept element of positive
// length has a left-descent predecessor that is also kept.
template <typename Keep>
std::vector<WeylElement> grow(const RootSystem& rs, std::size_t max_order,
                              Keep keep) {
  const auto& c = rs.cartan();
  std::vector<WeylElement> out;
  std::vector<WeylElement> level{identity_element(c.rank())};
  while (!level.empty()) {
    sort_level(level, c);
    if (out.size() + level.size() > max_order) {
      throw Error(ErrorKind::GroupTooLarge,
                  "more than " + std::to_string(max_order) +
                      " elements for Cartan matrix " + c.to_json());
    }
    std::unordered_set<Weight, WeylElementHash> seen;
    std::vector<WeylElement> next;
    for (const auto& e : level) {
      for (int i = 1; i <= c.rank(); ++i) {
        if (e.rho_image[i - 1] < 0) continue;
        WeylElement f = left_multiply(i, e, c);
        if (seen.contains(f.rho_image) || !keep(f)) continue;
        seen.insert(f.rho_image);
        next.push_back(std::move(f));
      }
    }
    out.insert(out.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
    level = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<WeylElement> enumerate_group(const RootSystem& rs,
                                         std::size_t max_order) {
  return grow(rs, max_order, [](const WeylElement&) { return true; });
}

bool is_minimal_coset_rep(const WeylElement& e, const ParabolicSubset& p,
                          const CartanMatrix& c) {
  for (int i : p.indices) {
    if (!apply_to_root(e, simple_root(i, c.rank()), c).is_positive())
      return false;
  }
  return true;
}

std::vector<WeylElement> minimal_coset_reps(const RootSystem& rs,
                                            const ParabolicSubset& p,
                                            std::size_t max_order) {
  for (int i : p.indices) check_letter(i, rs.rank());
  // If w is a minimal representative and s is a left descent of w, then
  // s w is again minimal, so the search can stay inside the coset set.
  return grow(rs, max_order, [&](const WeylElement& e) {
    return is_minimal_coset_rep(e, p, rs.cartan());
  });
}

}  // namespace schubert
