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

// Command-line front end: job description, argument and job-file parsing,
// the enumeration cache, and report rendering.

#ifndef SCHUBERT_CLI_HPP
#define SCHUBERT_CLI_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schubert/rootsys.hpp"
#include "schubert/schubert.hpp"
#include "schubert/triop.hpp"
#include "schubert/weyl.hpp"

namespace schubert::cli {

enum class Mode { Constant, Expand, Table, Selftest };

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitComputationError = 2,
  kExitSelftestFailure = 3,
};

struct JobSpec {
  // Exactly one of type / matrix is set, except in selftest mode.
  std::optional<std::string> type;
  std::optional<IntMatrix> matrix;
  std::vector<int> parabolic;  // empty: full flag manifold G/T
  std::optional<std::string> u_word;
  std::optional<std::string> v_word;
  std::optional<std::string> w_word;
  Mode mode = Mode::Constant;
  int table_u_degree = 0;
  int table_v_degree = 0;
  bool json = false;
  bool verbose = false;
  bool include_zeros = false;
  bool show_matrix = false;
  bool echo_cartan = false;
  std::size_t max_group_order = kDefaultMaxGroupOrder;
  std::optional<std::filesystem::path> cache_dir;
  unsigned threads = 0;

  /// Throws Error(Parse) when a mode-required field is missing or fields
  /// conflict.
  void check() const;
};

/// Parses command-line arguments. Returns nullopt after printing help or
/// version text to `out`. Throws Error(Parse) on bad arguments.
std::optional<JobSpec> parse_args(int argc, const char* const* argv,
                                  std::ostream& out);

JobSpec job_from_json(const nlohmann::json& j);
nlohmann::json job_to_json(const JobSpec& job);

/// Parses JSON text, reporting failures as Error(Parse) with line and
/// column.
nlohmann::json parse_json_text(const std::string& text,
                               const std::string& origin);

/// Runs a job, writing the report to `out` and diagnostics to `err`.
/// Returns the process exit code.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

int main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

// --- report pieces --------------------------------------------------------

/// Integer as a JSON number when it fits in 64 bits, else a decimal string.
nlohmann::json integer_to_json(const Integer& x);
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const WeylElement& e, const CartanMatrix& c);
nlohmann::json poly_to_json(const HomogPoly& p);

// --- enumeration cache ----------------------------------------------------

inline constexpr int kCacheFormatVersion = 1;

/// Minimal coset representatives for (cartan, parabolic); with an empty
/// parabolic this is the whole group. Files live in `dir` as
/// <sha256(cartan json | parabolic)>.json:
///   {"format_version": 1, "cartan": [[...]], "parabolic": [...],
///    "elements": [{"rho_image": [...], "length": l}, ...]}
/// Unreadable, mismatched or newer-version files are ignored (with a note
/// on `err`) and the set is recomputed.
class EnumerationCache {
 public:
  explicit EnumerationCache(std::optional<std::filesystem::path> dir)
      : dir_(std::move(dir)) {}

  std::vector<WeylElement> coset_reps(const RootSystem& rs,
                                      const ParabolicSubset& p,
                                      std::size_t max_order,
                                      std::ostream& err) const;

  std::filesystem::path path_for(const CartanMatrix& c,
                                 const ParabolicSubset& p) const;

 private:
  std::optional<std::filesystem::path> dir_;
};

std::string cache_key(const CartanMatrix& c, const ParabolicSubset& p);

/// Golden fixtures and property spot-checks; one line per check on `out`.
/// Returns true iff all pass.
bool selftest(std::ostream& out);

}  // namespace schubert::cli

#endif  // SCHUBERT_CLI_HPP
