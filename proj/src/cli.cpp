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

#include "schubert/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include "schubert/error.hpp"
#include "schubert/parallel.hpp"
#include "schubert/relmat.hpp"

namespace schubert::cli {

namespace fs = std::filesystem;
using nlohmann::json;

// ---------------------------------------------------------------------------
// JobSpec

void JobSpec::check() const {
  if (mode == Mode::Selftest) return;
  if (type.has_value() == matrix.has_value()) {
    throw Error(ErrorKind::Parse, "give exactly one of --type and --matrix");
  }
  switch (mode) {
    case Mode::Constant:
      if (echo_cartan && !u_word && !v_word && !w_word) break;
      if (!u_word || !v_word || !w_word) {
        throw Error(ErrorKind::Parse,
                    "computing one constant needs --u, --v and --w (or use "
                    "--expand / --table)");
      }
      break;
    case Mode::Expand:
      if (!u_word || !v_word) {
        throw Error(ErrorKind::Parse, "--expand needs --u and --v");
      }
      break;
    case Mode::Table:
      if (table_u_degree < 0 || table_v_degree < 0) {
        throw Error(ErrorKind::Parse, "--table degrees must be non-negative");
      }
      break;
    case Mode::Selftest:
      break;
  }
}

namespace {

std::string_view mode_name(Mode m) {
  switch (m) {
    case Mode::Constant: return "constant";
    case Mode::Expand: return "expand";
    case Mode::Table: return "table";
    case Mode::Selftest: return "selftest";
  }
  return "constant";
}

Mode mode_from_name(const std::string& s) {
  if (s == "constant") return Mode::Constant;
  if (s == "expand") return Mode::Expand;
  if (s == "table") return Mode::Table;
  if (s == "selftest") return Mode::Selftest;
  throw Error(ErrorKind::Parse, "unknown mode '" + s + "'");
}

// Byte offset to 1-based line and column.
std::string location(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

IntMatrix matrix_from_json(const json& j, const std::string& origin) {
  if (!j.is_array()) {
    throw Error(ErrorKind::Parse, origin + ": Cartan matrix must be an array of arrays");
  }
  IntMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) {
      throw Error(ErrorKind::Parse, origin + ": Cartan matrix row must be an array");
    }
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) {
        throw Error(ErrorKind::Parse,
                    origin + ": Cartan matrix entry " + x.dump() + " is not an integer");
      }
      r.push_back(x.get<int>());
    }
    m.push_back(std::move(r));
  }
  return m;
}

std::string word_field(const json& j, const char* name) {
  const auto& x = j.at(name);
  if (x.is_string()) return x.get<std::string>();
  if (x.is_array()) {
    std::string s;
    for (const auto& letter : x) {
      if (!letter.is_number_integer()) {
        throw Error(ErrorKind::Parse, std::string("job field '") + name +
                                          "' must hold integers");
      }
      if (!s.empty()) s += ',';
      s += std::to_string(letter.get<int>());
    }
    return s;
  }
  throw Error(ErrorKind::Parse, std::string("job field '") + name +
                                    "' must be a string or an array");
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, origin + ": invalid JSON at " +
                                      location(text, e.byte) + " in '" +
                                      text + "'");
  }
}

JobSpec job_from_json(const json& j) {
  try {
    JobSpec job;
    if (j.contains("group")) {
      const auto& g = j.at("group");
      if (g.is_string()) {
        job.type = g.get<std::string>();
      } else {
        job.matrix = matrix_from_json(g, "job group");
      }
    }
    if (j.contains("parabolic")) job.parabolic = j.at("parabolic").get<std::vector<int>>();
    if (j.contains("u_word")) job.u_word = word_field(j, "u_word");
    if (j.contains("v_word")) job.v_word = word_field(j, "v_word");
    if (j.contains("w_word")) job.w_word = word_field(j, "w_word");
    if (j.contains("mode")) job.mode = mode_from_name(j.at("mode").get<std::string>());
    if (j.contains("table")) {
      const auto d = j.at("table").get<std::vector<int>>();
      if (d.size() != 2) throw Error(ErrorKind::Parse, "job field 'table' needs two degrees");
      job.table_u_degree = d[0];
      job.table_v_degree = d[1];
    }
    job.json = j.value("json", false);
    job.verbose = j.value("verbose", false);
    job.include_zeros = j.value("include_zeros", false);
    job.show_matrix = j.value("show_matrix", false);
    job.echo_cartan = j.value("echo_cartan", false);
    job.max_group_order = j.value("max_group_order", kDefaultMaxGroupOrder);
    if (j.contains("cache_dir")) job.cache_dir = j.at("cache_dir").get<std::string>();
    job.threads = j.value("threads", 0u);
    return job;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("job file: ") + e.what());
  }
}

json job_to_json(const JobSpec& job) {
  json j;
  if (job.type) j["group"] = *job.type;
  if (job.matrix) j["group"] = *job.matrix;
  j["parabolic"] = job.parabolic;
  if (job.u_word) j["u_word"] = *job.u_word;
  if (job.v_word) j["v_word"] = *job.v_word;
  if (job.w_word) j["w_word"] = *job.w_word;
  j["mode"] = std::string(mode_name(job.mode));
  if (job.mode == Mode::Table) j["table"] = {job.table_u_degree, job.table_v_degree};
  j["json"] = job.json;
  j["verbose"] = job.verbose;
  j["include_zeros"] = job.include_zeros;
  j["show_matrix"] = job.show_matrix;
  j["echo_cartan"] = job.echo_cartan;
  j["max_group_order"] = job.max_group_order;
  if (job.cache_dir) j["cache_dir"] = job.cache_dir->string();
  j["threads"] = job.threads;
  return j;
}

std::optional<JobSpec> parse_args(int argc, const char* const* argv,
                                  std::ostream& out) {
  CLI::App app{"Structure constants of Schubert classes in flag manifolds G/H"};
  app.set_version_flag("--version", "schubert 1.0");

  std::string type, matrix, parabolic, u, v, w, job_file, cache_dir;
  std::vector<int> table;
  std::size_t max_order = kDefaultMaxGroupOrder;
  unsigned threads = 0;
  bool expand = false, selftest_flag = false;
  bool json_out = false, verbose = false, zeros = false, show_matrix = false,
       echo = false;

  auto* type_opt = app.add_option("--type", type, "Named group, e.g. G2, A3, B3, E6");
  auto* matrix_opt = app.add_option("--matrix", matrix, "Cartan matrix as JSON array of arrays");
  auto* para_opt = app.add_option("--parabolic", parabolic,
                                  "Simple roots generating W' (comma-separated); empty for G/T");
  auto* u_opt = app.add_option("--u", u, "Word for u, e.g. 2,1,2");
  auto* v_opt = app.add_option("--v", v, "Word for v");
  auto* w_opt = app.add_option("--w", w, "Word for w (single-constant mode)");
  auto* expand_opt = app.add_flag("--expand", expand, "Expand P_u P_v in the Schubert basis");
  auto* table_opt = app.add_option("--table", table, "All products between two degrees")
                        ->expected(2);
  auto* selftest_opt = app.add_flag("--selftest", selftest_flag, "Run built-in fixtures");
  auto* json_opt = app.add_flag("--json", json_out, "Machine-readable output");
  auto* verbose_opt = app.add_flag("--verbose", verbose, "Show reduced word, A_w and subword sets");
  auto* zeros_opt = app.add_flag("--include-zeros", zeros, "Keep zero constants in expansions");
  auto* show_opt = app.add_flag("--show-matrix", show_matrix, "Print A_w");
  auto* echo_opt = app.add_flag("--echo-cartan", echo, "Print the validated Cartan matrix as JSON");
  auto* order_opt = app.add_option("--max-group-order", max_order, "Enumeration bound");
  auto* cache_opt = app.add_option("--cache-dir", cache_dir, "Directory for cached enumerations");
  auto* threads_opt = app.add_option("--threads", threads, "Worker threads (0 = all cores)");
  app.add_option("--job", job_file, "JSON job file; flags given on the command line override it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorKind::Parse, e.what());
  }

  if (type_opt->count() && matrix_opt->count()) {
    throw Error(ErrorKind::Parse, "give exactly one of --type and --matrix");
  }
  JobSpec job;
  if (!job_file.empty()) {
    job = job_from_json(parse_json_text(read_file(job_file), job_file));
  }
  if (type_opt->count()) {
    job.type = type;
    job.matrix.reset();
  }
  if (matrix_opt->count()) {
    job.matrix = matrix_from_json(parse_json_text(matrix, "--matrix"), "--matrix");
    job.type.reset();
  }
  if (para_opt->count()) job.parabolic = ParabolicSubset::parse(parabolic, 0).indices;
  if (u_opt->count()) job.u_word = u;
  if (v_opt->count()) job.v_word = v;
  if (w_opt->count()) job.w_word = w;
  const int modes = (expand_opt->count() ? 1 : 0) + (table_opt->count() ? 1 : 0) +
                    (selftest_opt->count() ? 1 : 0);
  if (modes > 1) {
    throw Error(ErrorKind::Parse, "--expand, --table and --selftest are exclusive");
  }
  if (expand_opt->count()) job.mode = Mode::Expand;
  if (table_opt->count()) {
    job.mode = Mode::Table;
    job.table_u_degree = table[0];
    job.table_v_degree = table[1];
  }
  if (selftest_opt->count()) job.mode = Mode::Selftest;
  if (json_opt->count()) job.json = json_out;
  if (verbose_opt->count()) job.verbose = verbose;
  if (zeros_opt->count()) job.include_zeros = zeros;
  if (show_opt->count()) job.show_matrix = show_matrix;
  if (echo_opt->count()) job.echo_cartan = echo;
  if (order_opt->count()) job.max_group_order = max_order;
  if (cache_opt->count()) job.cache_dir = cache_dir;
  if (threads_opt->count()) job.threads = threads;
  job.check();
  return job;
}

// ---------------------------------------------------------------------------
// Report pieces

json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<long long>(x.get_si());
  return x.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw Error(ErrorKind::Parse, "expected an integer, got " + j.dump());
}

json element_to_json(const WeylElement& e, const CartanMatrix& c) {
  return json{{"word", reduced_word(e, c).to_string()},
              {"length", e.length},
              {"rho_image", e.rho_image}};
}

json poly_to_json(const HomogPoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::vector<int> e(it->first.begin(), it->first.end());
    terms.push_back(json{{"exponents", e}, {"coefficient", integer_to_json(it->second)}});
  }
  return terms;
}

// ---------------------------------------------------------------------------
// Cache

std::string cache_key(const CartanMatrix& c, const ParabolicSubset& p) {
  const std::string material = c.to_json() + "|" + p.to_string();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(material.data(), material.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned i = 0; i < len; ++i)
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return hex.str();
}

fs::path EnumerationCache::path_for(const CartanMatrix& c,
                                    const ParabolicSubset& p) const {
  return dir_.value_or(fs::path{}) / (cache_key(c, p) + ".json");
}

std::vector<WeylElement> EnumerationCache::coset_reps(const RootSystem& rs,
                                                      const ParabolicSubset& p,
                                                      std::size_t max_order,
                                                      std::ostream& err) const {
  if (!dir_) return minimal_coset_reps(rs, p, max_order);
  const fs::path path = path_for(rs.cartan(), p);
  bool may_write = true;

  if (fs::exists(path)) {
    try {
      const json j = json::parse(read_file(path));
      const int version = j.at("format_version").get<int>();
      if (version > kCacheFormatVersion) {
        err << "note: cache file " << path.string() << " has format version "
            << version << " (newer than " << kCacheFormatVersion
            << "); ignoring it\n";
        may_write = false;
        throw std::runtime_error("newer version");
      }
      if (version != kCacheFormatVersion ||
          j.at("cartan").get<IntMatrix>() != rs.cartan().entries() ||
          j.at("parabolic").get<std::vector<int>>() != p.indices) {
        throw std::runtime_error("mismatched cache entry");
      }
      std::vector<WeylElement> out;
      for (const auto& item : j.at("elements")) {
        WeylElement e{item.at("rho_image").get<Weight>(), item.at("length").get<int>()};
        if (static_cast<int>(e.rho_image.size()) != rs.rank() ||
            e.length != length(e, rs) ||
            element_of_word(reduced_word(e, rs.cartan()), rs) != e ||
            !is_minimal_coset_rep(e, p, rs.cartan())) {
          throw std::runtime_error("corrupt element");
        }
        out.push_back(std::move(e));
      }
      if (out.size() > max_order) {
        throw Error(ErrorKind::GroupTooLarge,
                    "cached set has " + std::to_string(out.size()) +
                        " elements, more than " + std::to_string(max_order));
      }
      return out;
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      if (may_write) {
        err << "note: ignoring cache file " << path.string() << " (" << e.what()
            << ")\n";
      }
    }
  }

  auto reps = minimal_coset_reps(rs, p, max_order);
  if (may_write) {
    json j;
    j["format_version"] = kCacheFormatVersion;
    j["cartan"] = rs.cartan().entries();
    j["parabolic"] = p.indices;
    json elements = json::array();
    for (const auto& e : reps)
      elements.push_back(json{{"rho_image", e.rho_image}, {"length", e.length}});
    j["elements"] = std::move(elements);
    std::error_code ec;
    fs::create_directories(*dir_, ec);
    const fs::path tmp = path.string() + ".tmp";
    {
      std::ofstream o(tmp, std::ios::binary);
      o << j.dump() << '\n';
    }
    fs::rename(tmp, path, ec);
    if (ec) err << "note: could not write cache file " << path.string() << '\n';
  }
  return reps;
}

// ---------------------------------------------------------------------------
// run

namespace {

struct Context {
  RootSystem rs;
  ParabolicSubset parabolic;
};

Context make_context(const JobSpec& job) {
  CartanMatrix c = job.type ? CartanMatrix::named(*job.type)
                            : CartanMatrix::validate(*job.matrix);
  ParabolicSubset p{job.parabolic};
  std::ranges::sort(p.indices);
  p.indices.erase(std::unique(p.indices.begin(), p.indices.end()), p.indices.end());
  for (int i : p.indices) {
    if (i < 1 || i > c.rank()) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "parabolic index " + std::to_string(i) + " outside 1.." +
                      std::to_string(c.rank()));
    }
  }
  return Context{RootSystem(std::move(c)), std::move(p)};
}

// Parses a word and rejects non-reduced input.
Word word_arg(const std::string& text, const char* name, const RootSystem& rs) {
  try {
    Word w = Word::parse(text, rs.rank());
    if (!is_reduced(w, rs)) {
      throw Error(ErrorKind::NotReduced, "'" + text + "' is not a reduced word");
    }
    return w;
  } catch (const Error& e) {
    throw Error(e.kind(), std::string("--") + name + " " + e.detail());
  }
}

WeylElement element_arg(const std::string& text, const char* name,
                        const RootSystem& rs) {
  return element_of_word(word_arg(text, name, rs), rs);
}

void require_minimal(const WeylElement& e, const Context& ctx) {
  const auto& c = ctx.rs.cartan();
  if (!is_minimal_coset_rep(e, ctx.parabolic, c)) {
    throw Error(ErrorKind::NotMinimalRep,
                "[" + reduced_word(e, c).to_string() +
                    "] is not a minimal coset representative for parabolic {" +
                    ctx.parabolic.to_string() + "}");
  }
}

std::string bracket(const WeylElement& e, const CartanMatrix& c) {
  return "P[" + reduced_word(e, c).to_string() + "]";
}

json result_record(const StructureConstant& sc, const CartanMatrix& c) {
  return json{{"u_word", reduced_word(sc.u, c).to_string()},
              {"v_word", reduced_word(sc.v, c).to_string()},
              {"w_word", reduced_word(sc.w, c).to_string()},
              {"value", integer_to_json(sc.value)}};
}

json report_header(const JobSpec& job, const Context& ctx) {
  return json{{"format_version", 1},
              {"mode", std::string(mode_name(job.mode))},
              {"cartan", ctx.rs.cartan().entries()},
              {"parabolic", ctx.parabolic.indices}};
}

std::string solutions_text(const std::vector<SubwordSolution>& sols) {
  if (sols.empty()) return "(none)";
  std::string s;
  for (const auto& sol : sols) {
    if (!s.empty()) s += ' ';
    s += '(';
    for (std::size_t i = 0; i < sol.positions.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(sol.positions[i]);
    }
    s += ')';
  }
  return s;
}

json solutions_json(const std::vector<SubwordSolution>& sols) {
  json a = json::array();
  for (const auto& sol : sols) a.push_back(sol.positions);
  return a;
}

void print_matrix_rows(const TriangularMatrix& a, std::ostream& out) {
  std::size_t width = 1;
  for (const auto& row : a.rows())
    for (int x : row) width = std::max(width, std::to_string(x).size());
  for (const auto& row : a.rows()) {
    out << "  ";
    for (std::size_t j = 0; j < row.size(); ++j)
      out << (j ? " " : "") << std::setw(static_cast<int>(width)) << row[j];
    out << '\n';
  }
}

int run_constant(const JobSpec& job, const Context& ctx, std::ostream& out) {
  const auto& c = ctx.rs.cartan();
  const WeylElement u = element_arg(*job.u_word, "u", ctx.rs);
  const WeylElement v = element_arg(*job.v_word, "v", ctx.rs);
  const Word w_word = word_arg(*job.w_word, "w", ctx.rs);
  const WeylElement w = element_of_word(w_word, ctx.rs);
  for (const auto* e : {&u, &v, &w}) require_minimal(*e, ctx);
  if (u.length + v.length != w.length) {
    throw Error(ErrorKind::LengthMismatch,
                "l(u) + l(v) = " + std::to_string(u.length + v.length) +
                    " but l(w) = " + std::to_string(w.length));
  }
  const ConstantTrace t =
      trace_structure_constant(u, v, w_word, ctx.rs);
  const StructureConstant sc{u, v, w, t.value};

  if (job.json) {
    json j = report_header(job, ctx);
    j["results"] = json::array({result_record(sc, c)});
    if (job.verbose || job.show_matrix) j["a_w"] = t.a_w.rows();
    if (job.verbose) {
      j["u_solutions"] = solutions_json(t.u_solutions);
      j["v_solutions"] = solutions_json(t.v_solutions);
      j["product"] = poly_to_json(t.product);
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  if (job.verbose) {
    out << "u = [" << reduced_word(u, c).to_string() << "], l(u) = " << u.length << '\n';
    out << "v = [" << reduced_word(v, c).to_string() << "], l(v) = " << v.length << '\n';
    out << "w = [" << t.w_word.to_string() << "], l(w) = " << w.length << '\n';
  }
  if (job.verbose || job.show_matrix) {
    out << "A_w =\n";
    print_matrix_rows(t.a_w, out);
  }
  if (job.verbose) {
    out << "L with sigma_L = u: " << solutions_text(t.u_solutions) << '\n';
    out << "K with sigma_K = v: " << solutions_text(t.v_solutions) << '\n';
    out << "product: " << t.product.to_string() << '\n';
    out << "a_{u,v}^w = ";
  }
  out << t.value.get_str() << '\n';
  return kExitOk;
}

std::string expansion_text(const WeylElement& u, const WeylElement& v,
                           const std::vector<StructureConstant>& terms,
                           const CartanMatrix& c) {
  std::string s = bracket(u, c) + " * " + bracket(v, c) + " =";
  if (terms.empty()) return s + " 0";
  bool first = true;
  for (const auto& t : terms) {
    s += first ? " " : " + ";
    first = false;
    if (t.value != 1) s += t.value.get_str() + "*";
    s += bracket(t.w, c);
  }
  return s;
}

int run_expand(const JobSpec& job, const Context& ctx, std::ostream& out,
               std::ostream& err) {
  const auto& c = ctx.rs.cartan();
  const WeylElement u = element_arg(*job.u_word, "u", ctx.rs);
  const WeylElement v = element_arg(*job.v_word, "v", ctx.rs);
  for (const auto* e : {&u, &v}) require_minimal(*e, ctx);
  const auto reps = EnumerationCache(job.cache_dir)
                        .coset_reps(ctx.rs, ctx.parabolic, job.max_group_order, err);
  const auto terms = product_expansion(
      u, v, ctx.rs, reps,
      ExpansionOptions{.include_zeros = job.include_zeros, .threads = job.threads});

  if (job.json) {
    json j = report_header(job, ctx);
    j["u"] = element_to_json(u, c);
    j["v"] = element_to_json(v, c);
    json results = json::array();
    for (const auto& t : terms) results.push_back(result_record(t, c));
    j["results"] = std::move(results);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << expansion_text(u, v, terms, c) << '\n';
  return kExitOk;
}

int run_table(const JobSpec& job, const Context& ctx, std::ostream& out,
              std::ostream& err) {
  const auto& c = ctx.rs.cartan();
  const auto reps = EnumerationCache(job.cache_dir)
                        .coset_reps(ctx.rs, ctx.parabolic, job.max_group_order, err);
  struct Triple {
    const WeylElement* u;
    const WeylElement* v;
    const WeylElement* w;
  };
  std::vector<Triple> triples;
  for (const auto& u : reps) {
    if (u.length != job.table_u_degree) continue;
    for (const auto& v : reps) {
      if (v.length != job.table_v_degree) continue;
      for (const auto& w : reps)
        if (w.length == u.length + v.length) triples.push_back({&u, &v, &w});
    }
  }
  std::vector<Integer> values(triples.size());
  parallel_for(triples.size(), job.threads, [&](std::size_t i) {
    values[i] = structure_constant_for_word(*triples[i].u, *triples[i].v,
                                            reduced_word(*triples[i].w, c), ctx.rs);
  });

  std::vector<StructureConstant> rows;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (!job.include_zeros && sgn(values[i]) == 0) continue;
    rows.push_back({*triples[i].u, *triples[i].v, *triples[i].w, values[i]});
  }

  if (job.json) {
    json j = report_header(job, ctx);
    j["degrees"] = {job.table_u_degree, job.table_v_degree};
    json results = json::array();
    for (const auto& r : rows) results.push_back(result_record(r, c));
    j["results"] = std::move(results);
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  std::vector<std::array<std::string, 4>> cells;
  cells.push_back({"u", "v", "w", "value"});
  for (const auto& r : rows) {
    cells.push_back({"[" + reduced_word(r.u, c).to_string() + "]",
                     "[" + reduced_word(r.v, c).to_string() + "]",
                     "[" + reduced_word(r.w, c).to_string() + "]", r.value.get_str()});
  }
  std::array<std::size_t, 4> width{};
  for (const auto& row : cells)
    for (std::size_t k = 0; k < 4; ++k) width[k] = std::max(width[k], row[k].size());
  for (const auto& row : cells) {
    for (std::size_t k = 0; k < 4; ++k) {
      if (k) out << "  ";
      if (k == 3) {
        out << std::setw(static_cast<int>(width[k])) << std::right << row[k];
      } else {
        out << std::setw(static_cast<int>(width[k])) << std::left << row[k];
      }
    }
    out << std::right << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  job.check();
  if (job.mode == Mode::Selftest) {
    return selftest(out) ? kExitOk : kExitSelftestFailure;
  }
  const Context ctx = make_context(job);
  if (job.mode == Mode::Constant && !job.u_word) {
    out << ctx.rs.cartan().to_json() << '\n';
    return kExitOk;
  }
  if (job.echo_cartan && !job.json) out << ctx.rs.cartan().to_json() << '\n';
  switch (job.mode) {
    case Mode::Constant: return run_constant(job, ctx, out);
    case Mode::Expand: return run_expand(job, ctx, out, err);
    case Mode::Table: return run_table(job, ctx, out, err);
    case Mode::Selftest: break;
  }
  return kExitOk;
}

int main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  try {
    auto job = parse_args(argc, argv, out);
    if (!job) return kExitOk;
    return run(*job, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_input_error(e.kind()) ? kExitInputError : kExitComputationError;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitComputationError;
  }
}

}  // namespace schubert::cli
