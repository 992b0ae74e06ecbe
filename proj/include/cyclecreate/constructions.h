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


// Explicit constructions: the shared-skeleton lower-bound families of
// Hamiltonian paths, incidence graphs of the projective planes PG(2, q) over
// prime fields, and validation of externally supplied bipartite regular graphs
// with no short even cycles.

#ifndef CYCLECREATE_CONSTRUCTIONS_H_
#define CYCLECREATE_CONSTRUCTIONS_H_

#include <optional>
#include <string>
#include <vector>

#include "cyclecreate/graph.h"

namespace cyclecreate {

// Largest number of fixed paths lower_bound_family will permute (10! paths).
inline constexpr int kMaxFixedPaths = 10;

// All ((n-1)/k)! Hamiltonian paths on 1..n that pin vertex tk+1 to position
// tk+1 (t = 0..m, m = (n-1)/k) and fill the m gaps of k-1 positions with the
// fixed paths (sk+2, ..., (s+1)k) in increasing order, one per gap. Members
// come out in lexicographic order of the gap-to-fixed-path assignment and are
// pairwise C_{2k}-creating.
//
// Throws InvalidArgument unless k >= 2, n = 1 (mod k) and n >= 2k+1, and
// LimitExceeded when m exceeds kMaxFixedPaths.
std::vector<HamPath> lower_bound_family(int n, int k);

bool is_prime(long long q);

// Incidence graph of PG(2, q). Points take labels 1..N and lines N+1..2N,
// N = q^2+q+1, each in the order of their normalized coordinate vectors.
struct PlaneIncidenceGraph {
  int q = 0;
  Graph graph;
  std::vector<int> points;
  std::vector<int> lines;
};

// Throws InvalidArgument unless q is prime.
PlaneIncidenceGraph projective_plane_incidence(int q);

struct PlaneOrder {
  int q = 0;
  long long vertex_count = 0;  // 2(q^2+q+1)
};

// Largest prime q with 2(q^2+q+1) <= n_target. Throws for n_target < 14.
PlaneOrder choose_plane_order(long long n_target);

struct C2kFreeReport {
  bool passed = false;
  bool bipartite = false;
  std::optional<int> regular_degree;
  std::optional<int> girth;  // nullopt: acyclic
  std::string failure;       // empty when passed
};

// Passes iff g is bipartite, regular and has girth > 2k (so no cycle of
// length 2k or shorter).
C2kFreeReport validate_c2kfree_bipartite_regular(const Graph& g, int k);

}  // namespace cyclecreate

#endif  // CYCLECREATE_CONSTRUCTIONS_H_
