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

// Core combinatorial objects: labeled graphs, Hamiltonian paths, perfect
// matchings and permutations, together with exact-length cycle detection and
// the pairwise "creating" check that every family in this library is judged
// by. Vertex labels are 1-based everywhere in the public surface.

#ifndef CYCLECREATE_GRAPH_H_
#define CYCLECREATE_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cyclecreate {

// Undirected edge, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes the endpoint order. Throws InvalidArgument on a loop.
Edge make_edge(int a, int b);

// Simple undirected graph on vertices 1..n.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws InvalidArgument on loops, repeated edges or out-of-range labels.
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  // Sorted ascending.
  std::span<const Edge> edges() const { return edges_; }
  // Sorted ascending.
  std::span<const int> neighbors(int v) const { return adj_[v - 1]; }
  int degree(int v) const { return static_cast<int>(adj_[v - 1].size()); }
  bool has_edge(int a, int b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// A Hamiltonian path of K_n given as its vertex sequence. The stored
// orientation is kept (position-indexed operations depend on it) but equality
// is modulo reversal.
class HamPath {
 public:
  // Throws InvalidArgument unless `order` is a permutation of 1..n.
  explicit HamPath(std::vector<int> order);

  int vertex_count() const { return static_cast<int>(order_.size()); }
  std::span<const int> order() const { return order_; }
  // Vertex at 1-based position `position`.
  int at(int position) const { return order_[position - 1]; }
  bool is_canonical() const;
  // Same path oriented so that the first label is smaller than the last.
  HamPath canonical() const;
  HamPath reversed() const;
  // Sorted ascending.
  std::vector<Edge> edges() const;
  Graph graph() const;

  friend bool operator==(const HamPath& a, const HamPath& b);

 private:
  std::vector<int> order_;
};

class PerfectMatching {
 public:
  // Throws InvalidArgument unless `pairs` covers 1..n exactly once.
  PerfectMatching(int n, std::vector<Edge> pairs);

  int vertex_count() const { return static_cast<int>(partner_.size()); }
  // Sorted by smaller endpoint.
  std::span<const Edge> pairs() const { return pairs_; }
  int partner(int v) const { return partner_[v - 1]; }
  Graph graph() const;

  friend bool operator==(const PerfectMatching& a, const PerfectMatching& b) {
    return a.pairs_ == b.pairs_ && a.partner_.size() == b.partner_.size();
  }
  friend auto operator<=>(const PerfectMatching& a, const PerfectMatching& b) {
    return a.pairs_ <=> b.pairs_;
  }

 private:
  std::vector<Edge> pairs_;
  std::vector<int> partner_;
};

// Bijection of 1..m, images[i-1] = pi(i).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  std::span<const int> images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Throws InvalidArgument when the vertex counts differ.
Graph graph_union(const Graph& a, const Graph& b);

// True iff g has a cycle through exactly `length` distinct vertices.
// Throws InvalidArgument for length < 3.
bool contains_cycle_of_length(const Graph& g, int length);

// Calls `visit` once per cycle of exactly `length` vertices (each undirected
// cycle reported once, starting at its smallest vertex). Enumeration stops
// early when `visit` returns false.
void for_each_cycle_of_length(
    const Graph& g, int length,
    const std::function<bool(std::span<const int>)>& visit);

// Length of a shortest cycle, or nullopt for a forest.
std::optional<int> girth(const Graph& g);

// Proper 2-coloring with colors 0/1 indexed by label-1, the smallest vertex of
// every component colored 0. nullopt if g is not bipartite.
std::optional<std::vector<int>> two_coloring(const Graph& g);

// Decomposition of the union of two perfect matchings on the same ground set:
// common edges plus even alternating cycles.
struct MatchingUnion {
  int shared_edges = 0;
  // Sorted ascending; every entry even and >= 4.
  std::vector<int> cycle_lengths;
};

MatchingUnion matching_union_components(const PerfectMatching& a,
                                        const PerfectMatching& b);

// True iff the union of a and b contains a cycle of exactly `length` vertices.
// Throws InvalidArgument on ground-set mismatch.
bool is_creating(const Graph& a, const Graph& b, int length);
bool is_creating(const HamPath& a, const HamPath& b, int length);
bool is_creating(const PerfectMatching& a, const PerfectMatching& b,
                 int length);

enum class PairExpectation {
  kCreating,     // every pair must be creating
  kNonCreating,  // no pair may be creating
};

struct FamilyReport {
  bool passed = true;
  std::uint64_t pairs_checked = 0;
  std::uint64_t violations = 0;
  // 0-based member indices (i < j) of the lexicographically first pair that
  // breaks the expectation.
  std::optional<std::pair<std::size_t, std::size_t>> first_violation;
};

// Exhaustive pairwise check. The report does not depend on `threads`.
// Throws InvalidArgument on inconsistent ground sets.
FamilyReport verify_pairwise(std::span<const HamPath> family, int length,
                             PairExpectation expect = PairExpectation::kCreating,
                             int threads = 1);
FamilyReport verify_pairwise(std::span<const PerfectMatching> family,
                             int length,
                             PairExpectation expect = PairExpectation::kCreating,
                             int threads = 1);
FamilyReport verify_pairwise(std::span<const Graph> family, int length,
                             PairExpectation expect = PairExpectation::kCreating,
                             int threads = 1);

}  // namespace cyclecreate

#endif  // CYCLECREATE_GRAPH_H_
