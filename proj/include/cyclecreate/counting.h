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


// Exact permanents and perfect-matching counts. No floating point: integer
// matrices are handled in 128-bit or arbitrary precision, rational ones in
// exact rationals.

#ifndef CYCLECREATE_COUNTING_H_
#define CYCLECREATE_COUNTING_H_

#include <span>
#include <vector>

#include "cyclecreate/graph.h"
#include "cyclecreate/numeric.h"

namespace cyclecreate {

inline constexpr int kMaxNaivePermanent = 9;
inline constexpr int kMaxRyserPermanent = 30;

// Square matrix of exact rationals, row-major. For a bipartite graph, rows
// follow the color-0 class and columns the color-1 class, each in increasing
// label order (row_labels / col_labels).
class BiadjacencyMatrix {
 public:
  BiadjacencyMatrix() = default;
  explicit BiadjacencyMatrix(int m);
  BiadjacencyMatrix(int m, std::vector<Rational> entries);

  int size() const { return m_; }
  const Rational& at(int i, int j) const { return entries_[i * m_ + j]; }
  void set(int i, int j, Rational value) { entries_[i * m_ + j] = value; }
  bool is_integral() const;
  BiadjacencyMatrix scaled(const Rational& factor) const;

  std::vector<int> row_labels;
  std::vector<int> col_labels;

 private:
  int m_ = 0;
  std::vector<Rational> entries_;
};

// Ryser inclusion-exclusion over column subsets in Gray-code order.
// Throws LimitExceeded above kMaxRyserPermanent.
Rational permanent_ryser(const BiadjacencyMatrix& a);

// Sum over all m! permutations. Throws LimitExceeded above kMaxNaivePermanent.
Rational permanent_naive(const BiadjacencyMatrix& a);

// Throws InvalidArgument unless g is bipartite with equal color classes.
BiadjacencyMatrix biadjacency(const Graph& g);

// Permanent of the biadjacency matrix.
Integer count_perfect_matchings(const Graph& g);

// Every perfect matching of g, found by backtracking that always matches the
// smallest unmatched vertex first; lexicographic order.
std::vector<PerfectMatching> enumerate_graph_perfect_matchings(const Graph& g);

// m! / m^m.
Rational vdw_bound(int m);

struct Lemma6Report {
  int degree = 0;
  int side = 0;
  Integer count;
  Rational bound;  // degree^side * side! / side^side
  bool doubly_stochastic = false;
  bool passed = false;
};

// Throws InvalidArgument unless g is regular and bipartite with equal classes.
Lemma6Report lemma6_check(const Graph& g);

// All perfect matchings of g, after g passes the bipartite / regular /
// girth > 2k validation. Any two are then non-creating for C_{2k}.
// Throws InvalidArgument when validation fails.
std::vector<PerfectMatching> build_noncreating_family(const Graph& g, int k);

// Embeds each matching into 1..new_n and pairs the new vertices
// (n+1, n+2), (n+3, n+4), ... identically in every member.
std::vector<PerfectMatching> pad_with_fixed_matching(
    std::span<const PerfectMatching> family, int new_n);

}  // namespace cyclecreate

#endif  // CYCLECREATE_COUNTING_H_
