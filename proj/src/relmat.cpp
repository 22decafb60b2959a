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

#include "schubert/relmat.hpp"

#include "schubert/error.hpp"

namespace schubert {

bool is_reduced(const Word& w, const RootSystem& rs) {
  return static_cast<int>(w.size()) == element_of_word(w, rs).length;
}

RelativeCartanMatrix cartan_matrix_of_word(const Word& w,
                                           const RootSystem& rs) {
  if (!is_reduced(w, rs)) {
    throw Error(ErrorKind::NotReduced,
                "word " + w.to_string() + " is not reduced");
  }
  const auto& c = rs.cartan();
  const int k = static_cast<int>(w.size());
  TriangularMatrix a(k);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      a.set(i, j, -c.at(w.letters[i - 1], w.letters[j - 1]));
  return a;
}

}  // namespace schubert
