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


// Reduction from pairwise C_{2k}-creating Hamiltonian path families to
// pairwise C_{2k}-creating perfect matching families on a smaller ground set.
//
// A path H on n vertices (3k | n) is cut into n/k consecutive blocks of k
// positions. Block b belongs to class b mod 3, and the directed subpaths in
// each class form the associated triple. Paths with equal triples share every
// intra-block edge (the fixed graph F); the remaining n/k - 1 edges of each
// path form a perfect matching on the block endpoints other than the two
// ends of H.

#ifndef CYCLECREATE_REDUCTION_H_
#define CYCLECREATE_REDUCTION_H_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <span>
#include <vector>

#include "cyclecreate/graph.h"
#include "cyclecreate/numeric.h"

namespace cyclecreate {

// One directed block path, vertices in position order.
using BlockPath = std::vector<int>;

// Canonical form: within each class, block paths sorted by their smallest
// vertex. Ordering is the canonical-encoding order used for tie-breaks.
struct AssociatedTriple {
  int n = 0;
  int k = 0;
  std::array<std::vector<BlockPath>, 3> classes;

  friend auto operator<=>(const AssociatedTriple&,
                          const AssociatedTriple&) = default;
  friend bool operator==(const AssociatedTriple&,
                         const AssociatedTriple&) = default;
};

// Throws InvalidArgument unless k >= 2, n is even and 3k divides n.
AssociatedTriple associated_triple(const HamPath& h, int k);

// Union of the three classes: n/k disjoint paths on k vertices each.
Graph fixed_graph(const AssociatedTriple& t);

struct TripleClass {
  std::vector<HamPath> members;  // input order preserved
  AssociatedTriple triple;
  std::size_t distinct_triples = 0;
};

// Largest group of paths sharing one associated triple; ties go to the
// smallest triple. Throws InvalidArgument on an empty family.
TripleClass pigeonhole_largest_class(std::span<const HamPath> family, int k);

// Perfect matchings on labels 1..n, with the original label of every current
// label. origin[v-1] is the label v had before any relabeling.
struct MatchingFamily {
  int n = 0;
  std::vector<PerfectMatching> matchings;
  std::vector<int> origin;
};

// Identity origin map.
MatchingFamily make_matching_family(std::vector<PerfectMatching> matchings);

// The two vertices of h that are left uncovered by h minus F: its first and
// last vertex, sorted.
Edge terminal_pair(const HamPath& h);

// For paths sharing triple t and terminal pair: removes F from each path,
// drops the two terminal vertices and relabels the remaining 2n/k - 2
// vertices order-preservingly onto 1..2n/k-2.
//
// Throws InvalidArgument when members disagree on the triple or on the
// terminal pair, or when a member does not contain F.
MatchingFamily strip_to_matchings(std::span<const HamPath> subfamily, int k);

// Exhaustively checks that no cycle on exactly 2k vertices in h1 u h2 uses
// an edge of the shared fixed graph. Throws InvalidArgument when the triples
// differ.
bool verify_claim_notused(const HamPath& h1, const HamPath& h2, int k);

struct Claim4Report {
  std::size_t classes = 0;
  std::uint64_t sharing_pairs = 0;
  std::uint64_t violations = 0;
  // 0-based family indices of the first offending pair.
  std::optional<std::pair<std::size_t, std::size_t>> first_violation;
};

// Groups `family` by associated triple and runs verify_claim_notused on every
// pair inside every group. The report does not depend on `threads`.
Claim4Report check_claim_notused(std::span<const HamPath> family, int k,
                                 int threads = 1);

struct ShrinkResult {
  MatchingFamily family;
  int partner = 0;  // current label paired with vertex 1 in every survivor
};

// Keeps the matchings that pair vertex 1 with its most frequent partner
// (smallest label on ties), deletes both vertices and relabels
// order-preservingly. Throws InvalidArgument on an empty family or n < 4.
ShrinkResult ground_set_reduce(const MatchingFamily& family);

// Number of possible associated triples:
// multinomial(n; k,...,k) / (n/k)! * (k!)^(n/k) * multinomial(n/k; n/3k x3).
// Throws InvalidArgument unless k >= 2 and 3k | n.
Integer triple_count(int n, int k);

// Full pipeline: triple pigeonhole, then the largest terminal-pair subgroup,
// then stripping.
struct PathsToMatchings {
  std::size_t input_size = 0;
  std::size_t distinct_triples = 0;
  std::size_t class_size = 0;
  std::size_t terminal_groups = 0;
  Edge terminals;
  AssociatedTriple triple;
  std::vector<HamPath> selected;
  MatchingFamily output;
};

PathsToMatchings paths_to_matchings(std::span<const HamPath> family, int k);

}  // namespace cyclecreate

#endif  // CYCLECREATE_REDUCTION_H_
