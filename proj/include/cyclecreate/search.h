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


// Compatibility graphs over all Hamiltonian paths, perfect matchings or
// permutations of a small ground set, and an exact maximum-clique solver used
// to compute H(n, L), M(n, L) and RP(m) exactly.

#ifndef CYCLECREATE_SEARCH_H_
#define CYCLECREATE_SEARCH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclecreate/graph.h"
#include "cyclecreate/numeric.h"

namespace cyclecreate {

// Hard enumeration limits.
inline constexpr int kMaxPathVertices = 8;
inline constexpr int kMaxMatchingVertices = 12;
inline constexpr int kMaxPermutationSize = 8;
// Default cap on the number of objects a search may enumerate (8!/2).
inline constexpr std::size_t kDefaultMaxObjects = 20160;

// All n!/2 Hamiltonian paths of K_n in canonical orientation, lexicographic.
// Throws LimitExceeded for n > kMaxPathVertices, InvalidArgument for n < 2.
std::vector<HamPath> enumerate_ham_paths(int n);

// All (n-1)!! perfect matchings of K_n in lexicographic order of their sorted
// pair lists. Throws InvalidArgument for odd or non-positive n and
// LimitExceeded for n > kMaxMatchingVertices.
std::vector<PerfectMatching> enumerate_perfect_matchings(int n);

// All m! permutations of 1..m, lexicographic.
std::vector<Permutation> enumerate_permutations(int m);

// True iff some coordinates i < j carry swapped values:
// p1(i) = p2(j) and p1(j) = p2(i). Throws InvalidArgument on size mismatch.
bool is_reversing(const Permutation& p1, const Permutation& p2);

// Matching on 1..2m with edges (i, p(i) + m).
PerfectMatching perm_to_matching(const Permutation& p);

struct Claim7Report {
  std::uint64_t pairs = 0;
  std::uint64_t reversing_pairs = 0;
  std::uint64_t mismatches = 0;
};

// Over all ordered pairs of permutations of 1..m, compares is_reversing with
// C4-creating of the images under perm_to_matching.
Claim7Report check_claim7(int m);

// binom(n, floor(n/2)), halved for even n. Throws for n < 3.
Integer theorem1_value(int n);

// Symmetric adjacency over object indices stored as bit rows.
class CompatibilityGraph {
 public:
  CompatibilityGraph() = default;
  CompatibilityGraph(std::size_t size, std::string relation);

  std::size_t size() const { return size_; }
  const std::string& relation() const { return relation_; }
  bool adjacent(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  // Ignores i == j.
  void connect(std::size_t i, std::size_t j);
  std::uint64_t edge_count() const;
  std::size_t degree(std::size_t i) const;
  std::size_t words_per_row() const { return words_; }
  std::span<const std::uint64_t> row(std::size_t i) const {
    return {bits_.data() + i * words_, words_};
  }
  CompatibilityGraph complement() const;

 private:
  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::string relation_;
  std::vector<std::uint64_t> bits_;
};

// Adjacency iff the pair is creating for cycles of exactly `length` vertices.
CompatibilityGraph build_compatibility_graph(std::span<const HamPath> objects,
                                             int length, int threads = 1);
CompatibilityGraph build_compatibility_graph(
    std::span<const PerfectMatching> objects, int length, int threads = 1);
// Adjacency iff the pair is reversing.
CompatibilityGraph build_reversing_graph(std::span<const Permutation> objects,
                                         int threads = 1);

struct CliqueResult {
  std::size_t size = 0;
  // Lexicographically least maximum clique, ascending indices.
  std::vector<std::size_t> witness;
};

// Exact maximum clique by branch and bound with greedy-coloring bounds.
// Passing vertex_transitive = true asserts that the automorphism group of g
// is transitive; the search then only looks at cliques through vertex 0.
// The result is the same, the caller is responsible for the assertion.
CliqueResult max_clique(const CompatibilityGraph& g,
                        bool vertex_transitive = false);
// Maximum clique of the complement.
CliqueResult max_independent_set(const CompatibilityGraph& g,
                                 bool vertex_transitive = false);

template <class T>
struct SearchResult {
  std::size_t vertices = 0;
  std::uint64_t edges = 0;
  std::size_t clique_number = 0;
  std::vector<T> clique_witness;
  std::optional<std::size_t> independence_number;
  std::vector<T> independent_witness;
};

struct SearchOptions {
  int threads = 1;
  std::size_t max_objects = kDefaultMaxObjects;
  bool with_independence = false;
};

// H(n, length): largest pairwise creating family of Hamiltonian paths of K_n.
SearchResult<HamPath> exact_H(int n, int length,
                              const SearchOptions& options = {});
// M(n, length) over perfect matchings of K_n.
SearchResult<PerfectMatching> exact_M(int n, int length,
                                      const SearchOptions& options = {});
// RP(m): largest pairwise reversing family of permutations of 1..m.
SearchResult<Permutation> exact_RP(int m, const SearchOptions& options = {});

}  // namespace cyclecreate

#endif  // CYCLECREATE_SEARCH_H_
