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

#ifndef SCHUBERT_RELMAT_HPP
#define SCHUBERT_RELMAT_HPP

#include "schubert/rootsys.hpp"
#include "schubert/triop.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

/// The Cartan matrix A_w of a reduced word: a_ij = -(beta_{w_i} o beta_{w_j})
/// for i < j and 0 otherwise.
using RelativeCartanMatrix = TriangularMatrix;

/// Throws Error(NotReduced) unless |w| = l(w).
RelativeCartanMatrix cartan_matrix_of_word(const Word& w, const RootSystem& rs);

bool is_reduced(const Word& w, const RootSystem& rs);

}  // namespace schubert

#endif  // SCHUBERT_RELMAT_HPP
