// Copyright 2026 The cyclecreate Authors
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

// Command line frontend over the C API.
//
// Exit codes: 0 success / property verified, 1 property violated (the first
// witness is printed), 2 usage, format or argument error. Every run writes one
// JSON manifest line to stderr.

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cyclecreate/cyclecreate.h"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;

// Carries a C API failure up to main.
struct ApiFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(cc_status status) {
  if (status != CC_OK) throw ApiFailure(cc_last_error());
}

struct FreeString {
  void operator()(char* s) const { cc_string_free(s); }
};
using OwnedString = std::unique_ptr<char, FreeString>;

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using GraphPtr = std::unique_ptr<cc_graph, Deleter<cc_graph, cc_graph_free>>;
using PathsPtr = std::unique_ptr<cc_paths, Deleter<cc_paths, cc_paths_free>>;
using MatchingsPtr =
    std::unique_ptr<cc_matchings, Deleter<cc_matchings, cc_matchings_free>>;
using MatrixPtr = std::unique_ptr<cc_matrix, Deleter<cc_matrix, cc_matrix_free>>;

std::string sha256(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int size = 0;
  EVP_Digest(data.data(), data.size(), digest, &size, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < size; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0')
        << static_cast<int>(digest[i]);
  }
  return hex.str();
}

std::string rational_text(const cc_rational& r) {
  return r.den == 1 ? std::to_string(r.num)
                    : std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::string decimal_text(const cc_rational& r) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6)
      << static_cast<double>(r.num) / static_cast<double>(r.den);
  return out.str();
}

// State shared by all subcommands of one invocation.
class Run {
 public:
  int threads = 1;
  bool decimal = false;

  std::ostringstream out;
  ordered_json parameters = ordered_json::object();
  ordered_json inputs = ordered_json::object();
  ordered_json outputs = ordered_json::object();

  std::string read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ApiFailure("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string data = buffer.str();
    inputs[path] = sha256(data);
    return data;
  }

  void write_output(const std::string& path, const std::string& data) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << data)) throw ApiFailure("cannot write " + path);
    outputs[path] = sha256(data);
  }

  // Writes an owned C string to `path`.
  void write_output(const std::string& path, OwnedString data) {
    write_output(path, std::string(data.get()));
  }
};

GraphPtr load_graph(Run& run, const std::string& path) {
  const std::string text = run.read_input(path);
  cc_graph* g = nullptr;
  check(cc_graph_parse(text.c_str(), &g));
  return GraphPtr(g);
}

PathsPtr load_paths(Run& run, const std::string& path) {
  const std::string text = run.read_input(path);
  cc_paths* p = nullptr;
  check(cc_paths_parse(text.c_str(), &p));
  return PathsPtr(p);
}

MatchingsPtr load_matchings(Run& run, const std::string& path) {
  const std::string text = run.read_input(path);
  cc_matchings* m = nullptr;
  check(cc_matchings_parse(text.c_str(), &m));
  return MatchingsPtr(m);
}

OwnedString format(const cc_paths* p) {
  char* s = nullptr;
  check(cc_paths_format(p, &s));
  return OwnedString(s);
}

OwnedString format(const cc_matchings* m) {
  char* s = nullptr;
  check(cc_matchings_format(m, &s));
  return OwnedString(s);
}

OwnedString format(const cc_graph* g) {
  char* s = nullptr;
  check(cc_graph_format(g, &s));
  return OwnedString(s);
}

void print_origin(Run& run, const cc_matchings* m) {
  run.out << "origin";
  for (int v = 1; v <= cc_matchings_vertex_count(m); ++v) {
    int original = 0;
    check(cc_matchings_origin(m, v, &original));
    run.out << ' ' << v << ':' << original;
  }
  run.out << '\n';
}

int report_family(Run& run, const cc_family_report& r) {
  run.out << "pairs_checked " << r.pairs_checked << '\n'
          << "violations " << r.violations << '\n';
  if (r.first_i >= 0) {
    // 1-based positions in the input file.
    run.out << "first_violation " << r.first_i + 1 << ' ' << r.first_j + 1
            << '\n';
  }
  run.out << "result " << (r.passed ? "PASS" : "FAIL") << '\n';
  return r.passed ? kExitOk : kExitViolated;
}

void print_exponents(Run& run, const cc_exponents& e) {
  auto cell = [&](const cc_rational& r) {
    return run.decimal ? rational_text(r) + " (" + decimal_text(r) + ")"
                       : rational_text(r);
  };
  run.out << e.k << ' ' << cell(e.degree) << ' ' << cell(e.lower) << ' '
          << cell(e.matching_upper) << ' ' << cell(e.path_upper) << ' '
          << e.source << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  Run run;
  std::string command;
  int exit_code = kExitOk;
  const auto started = std::chrono::steady_clock::now();

  CLI::App app{"Exact tools for even-cycle-creating path and matching families",
               "cyclecreate"};
  app.require_subcommand(1);
  app.add_option("--threads", run.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  app.add_flag("--decimal", run.decimal,
               "Also show rationals as decimals (display only)");
  app.set_version_flag("--version", std::string(cc_version()));

  // The handler to run after parsing. Returns the exit code.
  std::function<int()> action;
  auto bind = [&](CLI::App* sub, std::string name, std::function<int()> fn) {
    sub->callback([&, name = std::move(name), fn = std::move(fn)] {
      command = name;
      action = fn;
    });
  };

  // construct
  auto* construct = app.add_subcommand("construct", "Build families and graphs");
  construct->require_subcommand(1);
  {
    auto* sub = construct->add_subcommand("lower-bound",
                                          "Pairwise C_2k-creating path family");
    static int n = 0, k = 0;
    static std::string out;
    sub->add_option("--n", n, "Ground set size")->required();
    sub->add_option("--k", k, "Half cycle length")->required();
    sub->add_option("--out", out, "Output path file")->required();
    bind(sub, "construct lower-bound", [&] {
      run.parameters = {{"n", n}, {"k", k}, {"out", out}};
      cc_paths* p = nullptr;
      check(cc_construct_lower_bound(n, k, &p));
      PathsPtr family(p);
      run.write_output(out, format(family.get()));
      run.out << "paths " << cc_paths_count(family.get()) << '\n';
      return kExitOk;
    });
  }
  {
    auto* sub = construct->add_subcommand(
        "plane", "Incidence graph of the projective plane PG(2,q)");
    static int q = 0;
    static long long target = 0;
    static std::string out;
    auto* q_opt = sub->add_option("--q", q, "Prime order");
    auto* t_opt = sub->add_option("--target-n", target,
                                  "Largest allowed vertex count");
    q_opt->excludes(t_opt);
    sub->add_option("--out", out, "Output graph file")->required();
    bind(sub, "construct plane", [&, q_opt, t_opt] {
      if (q_opt->count() == 0 && t_opt->count() == 0) {
        throw CLI::RequiredError("--q or --target-n");
      }
      if (t_opt->count() > 0) {
        long long actual = 0;
        check(cc_choose_plane_order(target, &q, &actual));
        run.parameters = {{"target_n", target}, {"out", out}};
      } else {
        run.parameters = {{"q", q}, {"out", out}};
      }
      cc_graph* g = nullptr;
      check(cc_construct_plane(q, &g));
      GraphPtr graph(g);
      run.write_output(out, format(graph.get()));
      run.out << "q " << q << '\n'
              << "vertices " << cc_graph_vertex_count(graph.get()) << '\n'
              << "edges " << cc_graph_edge_count(graph.get()) << '\n';
      return kExitOk;
    });
  }

  // verify
  auto* verify = app.add_subcommand("verify", "Check family properties");
  verify->require_subcommand(1);
  {
    auto* sub = verify->add_subcommand(
        "creating", "Every pair must create a cycle of length 2k");
    static int k = 0;
    static std::string kind, in;
    static bool expect_none = false;
    sub->add_option("--k", k, "Half cycle length")->required();
    sub->add_option("--kind", kind, "Object kind")
        ->required()
        ->check(CLI::IsMember({"paths", "matchings"}));
    sub->add_option("--in", in, "Family file")->required();
    sub->add_flag("--none", expect_none,
                  "Require that no pair is creating instead");
    bind(sub, "verify creating", [&] {
      run.parameters = {{"k", k}, {"kind", kind}, {"in", in},
                        {"none", expect_none}};
      cc_family_report r{};
      if (kind == "paths") {
        auto family = load_paths(run, in);
        check(cc_verify_paths(family.get(), 2 * k, !expect_none, run.threads,
                              &r));
      } else {
        auto family = load_matchings(run, in);
        check(cc_verify_matchings(family.get(), 2 * k, !expect_none,
                                  run.threads, &r));
      }
      return report_family(run, r);
    });
  }
  {
    auto* sub = verify->add_subcommand(
        "c2kfree", "Bipartite, regular and girth greater than 2k");
    static int k = 0;
    static std::string in;
    sub->add_option("--k", k, "Half cycle length")->required();
    sub->add_option("--in", in, "Graph file")->required();
    bind(sub, "verify c2kfree", [&] {
      run.parameters = {{"k", k}, {"in", in}};
      auto g = load_graph(run, in);
      cc_c2kfree_report r{};
      check(cc_validate_c2kfree(g.get(), k, &r));
      run.out << "bipartite " << (r.bipartite ? "yes" : "no") << '\n'
              << "regular " << (r.regular ? "yes" : "no") << '\n';
      if (r.regular) run.out << "degree " << r.degree << '\n';
      run.out << "girth " << (r.girth ? std::to_string(r.girth) : "inf")
              << '\n'
              << "result " << (r.passed ? "PASS" : "FAIL") << '\n';
      return r.passed ? kExitOk : kExitViolated;
    });
  }

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Family reductions");
  reduce->require_subcommand(1);
  {
    auto* sub = reduce->add_subcommand(
        "paths-to-matchings", "Path family to matching family on 2n/k-2");
    static int k = 0;
    static std::string in, out;
    sub->add_option("--k", k, "Half cycle length")->required();
    sub->add_option("--in", in, "Path family file")->required();
    sub->add_option("--out", out, "Output matching file")->required();
    bind(sub, "reduce paths-to-matchings", [&] {
      run.parameters = {{"k", k}, {"in", in}, {"out", out}};
      auto family = load_paths(run, in);
      cc_matchings* m = nullptr;
      cc_reduction_report r{};
      check(cc_reduce_paths_to_matchings(family.get(), k, &m, &r));
      MatchingsPtr result(m);
      run.write_output(out, format(result.get()));
      char* count = nullptr;
      check(cc_triple_count(cc_paths_vertex_count(family.get()), k, &count));
      OwnedString triples(count);
      run.out << "input " << r.input_size << '\n'
              << "triple_count " << triples.get() << '\n'
              << "distinct_triples " << r.distinct_triples << '\n'
              << "class_size " << r.class_size << '\n'
              << "terminal_groups " << r.terminal_groups << '\n'
              << "output " << r.output_size << '\n'
              << "vertices " << r.output_vertices << '\n';
      print_origin(run, result.get());
      return kExitOk;
    });
  }
  {
    auto* sub = reduce->add_subcommand(
        "shrink", "Drop vertex 1 and its most frequent partner");
    static std::string in, out;
    sub->add_option("--in", in, "Matching family file")->required();
    sub->add_option("--out", out, "Output matching file")->required();
    bind(sub, "reduce shrink", [&] {
      run.parameters = {{"in", in}, {"out", out}};
      auto family = load_matchings(run, in);
      cc_matchings* m = nullptr;
      int partner = 0;
      check(cc_reduce_shrink(family.get(), &m, &partner));
      MatchingsPtr result(m);
      run.write_output(out, format(result.get()));
      run.out << "partner " << partner << '\n'
              << "input " << cc_matchings_count(family.get()) << '\n'
              << "output " << cc_matchings_count(result.get()) << '\n'
              << "vertices " << cc_matchings_vertex_count(result.get()) << '\n';
      print_origin(run, result.get());
      return kExitOk;
    });
  }

  // search
  {
    auto* sub = app.add_subcommand(
        "search", "Exact H(n,k), M(n,k) or RP(n) by maximum clique");
    static std::string kind, witness;
    static int n = 0, k = 0;
    static bool alpha = false;
    sub->add_option("kind", kind, "H, M or RP")
        ->required()
        ->check(CLI::IsMember({"H", "M", "RP"}));
    sub->add_option("--n", n, "Ground set size")->required();
    auto* k_opt = sub->add_option("--k", k, "Cycle length (H and M)");
    sub->add_option("--witness", witness, "Write the maximum family here");
    sub->add_flag("--alpha", alpha,
                  "Also compute the independence number");
    bind(sub, "search", [&, k_opt] {
      run.parameters = {{"kind", kind}, {"n", n}};
      if (kind != "RP") {
        if (k_opt->count() == 0) throw CLI::RequiredError("--k");
        run.parameters["k"] = k;
      }
      run.parameters["alpha"] = alpha;
      const cc_search_kind which = kind == "H"   ? CC_SEARCH_H
                                   : kind == "M" ? CC_SEARCH_M
                                                 : CC_SEARCH_RP;
      cc_search_result r{};
      char* text = nullptr;
      check(cc_search(which, n, k, run.threads, 0, alpha, &r, &text));
      OwnedString family(text);
      run.out << kind << '(' << n;
      if (kind != "RP") run.out << ',' << k;
      run.out << ") = " << r.clique_number << '\n'
              << "objects " << r.vertices << '\n'
              << "compatible_pairs " << r.edges << '\n';
      int code = kExitOk;
      if (r.has_independence) {
        const bool holds = r.independence_number * r.clique_number <= r.vertices;
        run.out << "independence " << r.independence_number << '\n'
                << "alpha_omega " << r.independence_number * r.clique_number
                << (holds ? " <= " : " > ") << r.vertices << '\n';
        if (!holds) code = kExitViolated;
      }
      if (!witness.empty()) run.write_output(witness, std::move(family));
      return code;
    });
  }

  // count
  auto* count = app.add_subcommand("count", "Exact counts");
  count->require_subcommand(1);
  {
    auto* sub = count->add_subcommand("matchings",
                                      "Perfect matchings of a bipartite graph");
    static std::string in;
    sub->add_option("--in", in, "Graph file")->required();
    bind(sub, "count matchings", [&] {
      run.parameters = {{"in", in}};
      auto g = load_graph(run, in);
      char* value = nullptr;
      check(cc_count_matchings(g.get(), &value));
      run.out << OwnedString(value).get() << '\n';
      return kExitOk;
    });
  }
  {
    auto* sub = count->add_subcommand("permanent", "Permanent of a matrix");
    static std::string in;
    sub->add_option("--in", in, "Matrix file")->required();
    bind(sub, "count permanent", [&] {
      run.parameters = {{"in", in}};
      const std::string text = run.read_input(in);
      cc_matrix* a = nullptr;
      check(cc_matrix_parse(text.c_str(), &a));
      MatrixPtr matrix(a);
      char* value = nullptr;
      check(cc_permanent(matrix.get(), &value));
      run.out << OwnedString(value).get() << '\n';
      return kExitOk;
    });
  }

  // check
  auto* claims = app.add_subcommand("check", "Empirical checks");
  claims->require_subcommand(1);
  {
    auto* sub = claims->add_subcommand(
        "lemma6", "Matching count against the van der Waerden bound");
    static std::string in;
    sub->add_option("--in", in, "Regular bipartite graph file")->required();
    bind(sub, "check lemma6", [&] {
      run.parameters = {{"in", in}};
      auto g = load_graph(run, in);
      cc_lemma6_report r{};
      char* count_text = nullptr;
      char* bound_text = nullptr;
      check(cc_check_lemma6(g.get(), &r, &count_text, &bound_text));
      OwnedString count_value(count_text), bound_value(bound_text);
      run.out << "degree " << r.degree << '\n'
              << "side " << r.side << '\n'
              << "matchings " << count_value.get() << '\n'
              << "bound " << bound_value.get() << '\n'
              << "doubly_stochastic " << (r.doubly_stochastic ? "yes" : "no")
              << '\n'
              << "result " << (r.passed ? "PASS" : "FAIL") << '\n';
      return r.passed ? kExitOk : kExitViolated;
    });
  }
  {
    auto* sub = claims->add_subcommand(
        "claim4", "No 2k-cycle of a sharing pair uses a fixed edge");
    static int k = 0;
    static std::string in;
    sub->add_option("--k", k, "Half cycle length")->required();
    sub->add_option("--in", in, "Path family file")->required();
    bind(sub, "check claim4", [&] {
      run.parameters = {{"k", k}, {"in", in}};
      auto family = load_paths(run, in);
      cc_claim4_report r{};
      check(cc_check_claim4(family.get(), k, run.threads, &r));
      run.out << "triple_classes " << r.classes << '\n'
              << "sharing_pairs " << r.sharing_pairs << '\n'
              << "violations " << r.violations << '\n';
      if (r.first_i >= 0) {
        run.out << "first_violation " << r.first_i + 1 << ' ' << r.first_j + 1
                << '\n';
      }
      run.out << "result " << (r.violations == 0 ? "PASS" : "FAIL") << '\n';
      return r.violations == 0 ? kExitOk : kExitViolated;
    });
  }
  {
    auto* sub = claims->add_subcommand(
        "claim7", "Reversing permutations versus C4-creating matchings");
    static int m = 0;
    sub->add_option("--m", m, "Permutation size")->required();
    bind(sub, "check claim7", [&] {
      run.parameters = {{"m", m}};
      cc_claim7_report r{};
      check(cc_check_claim7(m, &r));
      run.out << "ordered_pairs " << r.pairs << '\n'
              << "reversing_pairs " << r.reversing_pairs << '\n'
              << "mismatches " << r.mismatches << '\n'
              << "result " << (r.mismatches == 0 ? "PASS" : "FAIL") << '\n';
      return r.mismatches == 0 ? kExitOk : kExitViolated;
    });
  }

  // bounds
  {
    auto* sub = app.add_subcommand("bounds", "Exact exponent table");
    static int k = 0, kmax = 0;
    sub->add_option("--k", k, "Half cycle length")->required();
    sub->add_option("--kmax", kmax, "Last row of the table");
    bind(sub, "bounds", [&] {
      run.parameters = {{"k", k}};
      if (kmax) run.parameters["kmax"] = kmax;
      run.out << "k degree lower matching path source\n";
      for (int row = k; row <= std::max(k, kmax); ++row) {
        cc_exponents e{};
        check(cc_bounds(row, &e));
        print_exponents(run, e);
      }
      return kExitOk;
    });
  }

  try {
    app.parse(argc, argv);
    exit_code = action();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    exit_code = kExitUsage;
  } catch (const ApiFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    exit_code = kExitUsage;
  }

  const std::string primary = run.out.str();
  std::cout << primary << std::flush;
  if (!primary.empty()) run.outputs["stdout"] = sha256(primary);

  const auto elapsed = std::chrono::duration<double, std::milli>(
      std::chrono::steady_clock::now() - started);
  ordered_json manifest = {
      {"command", command},
      {"parameters", run.parameters},
      {"threads", run.threads},
      {"inputs", run.inputs},
      {"outputs", run.outputs},
      {"exit_code", exit_code},
      {"wall_ms", std::round(elapsed.count() * 1000.0) / 1000.0},
      {"version", cc_version()},
  };
  std::cerr << manifest.dump() << '\n';
  return exit_code;
}
