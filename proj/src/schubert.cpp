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

#include "schubert/schubert.hpp"

#include <unordered_map>

#include "schubert/error.hpp"
#include "schubert/parallel.hpp"

namespace schubert {

namespace {

// Dynamic programme over (position, element still to be produced). Picking
// the letter at a position peels it off the left of the remaining element,
// which is only allowed when it is a left descent there; the solution is
// complete once the remainder is the identity.
class SubwordSolver {
 public:
  SubwordSolver(const Word& word, const CartanMatrix& c)
      : word_(word), c_(c), memo_(word.size() + 1) {}

  std::vector<SubwordSolution> solve(const WeylElement& target) {
    target_ = target;
    std::vector<int> chosen;
    emit(0, target, chosen);
    return std::move(out_);
  }

 private:
  bool viable(std::size_t pos, const WeylElement& rest) {
    if (rest.is_identity()) return true;
    if (word_.size() - pos < static_cast<std::size_t>(rest.length)) return false;
    auto& table = memo_[pos];
    if (auto it = table.find(rest.rho_image); it != table.end())
      return it->second;
    const int s = word_.letters[pos];
    bool ok = viable(pos + 1, rest);
    if (!ok && rest.rho_image[s - 1] < 0)
      ok = viable(pos + 1, left_multiply(s, rest, c_));
    table.emplace(rest.rho_image, ok);
    return ok;
  }

  void emit(std::size_t pos, const WeylElement& rest, std::vector<int>& chosen) {
    if (rest.is_identity()) {
      out_.push_back(SubwordSolution{chosen, target_});
      return;
    }
    if (pos == word_.size()) return;
    const int s = word_.letters[pos];
    if (rest.rho_image[s - 1] < 0) {
      WeylElement next = left_multiply(s, rest, c_);
      if (viable(pos + 1, next)) {
        chosen.push_back(static_cast<int>(pos) + 1);
        emit(pos + 1, next, chosen);
        chosen.pop_back();
      }
    }
    if (viable(pos + 1, rest)) emit(pos + 1, rest, chosen);
  }

  const Word& word_;
  const CartanMatrix& c_;
  WeylElement target_;
  std::vector<std::unordered_map<Weight, bool, WeylElementHash>> memo_;
  std::vector<SubwordSolution> out_;
};

void require_reduced(const Word& word, const RootSystem& rs) {
  if (!is_reduced(word, rs)) {
    throw Error(ErrorKind::NotReduced,
                "word " + word.to_string() + " is not reduced");
  }
}

void require_minimal(const WeylElement& e, const ParabolicSubset& p,
                     const CartanMatrix& c, const char* name) {
  if (!is_minimal_coset_rep(e, p, c)) {
    throw Error(ErrorKind::NotMinimalRep,
                std::string(name) + " = [" + reduced_word(e, c).to_string() +
                    "] is not a minimal coset representative for parabolic {" +
                    p.to_string() + "}");
  }
}

}  // namespace

std::vector<SubwordSolution> subword_solutions(const Word& word,
                                               const WeylElement& target,
                                               const RootSystem& rs) {
  require_reduced(word, rs);
  if (static_cast<std::size_t>(target.length) > word.size()) return {};
  return SubwordSolver(word, rs.cartan()).solve(target);
}

HomogPoly subword_sum(int num_vars, std::span<const SubwordSolution> solutions,
                      int degree) {
  HomogPoly sum(num_vars, degree);
  for (const auto& sol : solutions) {
    Exponents e(num_vars, 0);
    for (int p : sol.positions) e[p - 1] = 1;
    sum.add_term(e, 1);
  }
  return sum;
}

HomogPoly subword_sum(const Word& word, const WeylElement& target,
                      const RootSystem& rs) {
  const auto solutions = subword_solutions(word, target, rs);
  return subword_sum(static_cast<int>(word.size()), solutions, target.length);
}

ConstantTrace trace_structure_constant(const WeylElement& u,
                                       const WeylElement& v,
                                       const Word& w_word,
                                       const RootSystem& rs) {
  const int k = static_cast<int>(w_word.size());
  if (u.length + v.length != k) {
    throw Error(ErrorKind::LengthMismatch,
                "l(u) + l(v) = " + std::to_string(u.length + v.length) +
                    " but l(w) = " + std::to_string(k));
  }
  ConstantTrace t;
  t.w_word = w_word;
  t.a_w = cartan_matrix_of_word(w_word, rs);
  t.u_solutions = subword_solutions(w_word, u, rs);
  t.v_solutions = subword_solutions(w_word, v, rs);
  t.product = poly_mul(subword_sum(k, t.u_solutions, u.length),
                       subword_sum(k, t.v_solutions, v.length));
  t.value = triangular_eval(t.a_w, t.product,
                            TriangularEvalOptions{.prune_vanishing = true});
  if (sgn(t.value) < 0) {
    throw Error(ErrorKind::Internal,
                "negative structure constant " + t.value.get_str() +
                    " for w = [" + w_word.to_string() + "]");
  }
  return t;
}

Integer structure_constant_for_word(const WeylElement& u, const WeylElement& v,
                                    const Word& w_word, const RootSystem& rs) {
  return trace_structure_constant(u, v, w_word, rs).value;
}

Integer structure_constant(const WeylElement& u, const WeylElement& v,
                           const WeylElement& w, const RootSystem& rs,
                           const std::optional<ParabolicSubset>& parabolic) {
  if (u.length + v.length != w.length) {
    throw Error(ErrorKind::LengthMismatch,
                "l(u) + l(v) = " + std::to_string(u.length + v.length) +
                    " but l(w) = " + std::to_string(w.length));
  }
  if (parabolic) {
    require_minimal(u, *parabolic, rs.cartan(), "u");
    require_minimal(v, *parabolic, rs.cartan(), "v");
    require_minimal(w, *parabolic, rs.cartan(), "w");
  }
  return structure_constant_for_word(u, v, reduced_word(w, rs.cartan()), rs);
}

std::vector<StructureConstant> product_expansion(
    const WeylElement& u, const WeylElement& v, const RootSystem& rs,
    std::span<const WeylElement> candidates, ExpansionOptions options) {
  std::vector<const WeylElement*> targets;
  for (const auto& w : candidates)
    if (w.length == u.length + v.length) targets.push_back(&w);

  std::vector<Integer> values(targets.size());
  parallel_for(targets.size(), options.threads, [&](std::size_t i) {
    values[i] = structure_constant_for_word(
        u, v, reduced_word(*targets[i], rs.cartan()), rs);
  });

  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (!options.include_zeros && sgn(values[i]) == 0) continue;
    out.push_back(StructureConstant{u, v, *targets[i], values[i]});
  }
  return out;
}

std::vector<StructureConstant> product_expansion(
    const WeylElement& u, const WeylElement& v, const RootSystem& rs,
    const ParabolicSubset& p, ExpansionOptions options,
    std::size_t max_order) {
  require_minimal(u, p, rs.cartan(), "u");
  require_minimal(v, p, rs.cartan(), "v");
  const auto reps = minimal_coset_reps(rs, p, max_order);
  return product_expansion(u, v, rs, reps, options);
}

}  // namespace schubert
