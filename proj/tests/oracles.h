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


// Brute-force reference implementations used only by tests. None of these
// call into the library's algorithms.

#ifndef CYCLECREATE_TESTS_ORACLES_H_
#define CYCLECREATE_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using AdjMatrix = std::vector<std::vector<bool>>;

// 1-based adjacency matrix from an edge list.
inline AdjMatrix matrix(int n, const std::vector<std::pair<int, int>>& edges) {
  AdjMatrix a(n + 1, std::vector<bool>(n + 1, false));
  for (auto [u, v] : edges) a[u][v] = a[v][u] = true;
  return a;
}

// Is there a cycle through exactly `length` vertices? Tries every vertex
// subset of that size and every cyclic order of it.
inline bool has_cycle(const AdjMatrix& a, int length) {
  const int n = static_cast<int>(a.size()) - 1;
  if (length < 3 || length > n) return false;
  std::vector<int> select(n, 0);
  std::fill(select.end() - length, select.end(), 1);
  do {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i) {
      if (select[i]) subset.push_back(i + 1);
    }
    // subset[0] stays first; permute the rest.
    do {
      bool ok = true;
      for (int i = 0; i < length && ok; ++i) {
        ok = a[subset[i]][subset[(i + 1) % length]];
      }
      if (ok) return true;
    } while (std::next_permutation(subset.begin() + 1, subset.end()));
  } while (std::next_permutation(select.begin(), select.end()));
  return false;
}

// Shortest cycle length by trying lengths in increasing order; 0 if acyclic.
inline int girth(const AdjMatrix& a) {
  const int n = static_cast<int>(a.size()) - 1;
  for (int length = 3; length <= n; ++length) {
    if (has_cycle(a, length)) return length;
  }
  return 0;
}

// Is there a cycle of exactly `length` vertices through edge u-v? Simple
// paths from v back to u of length-1 edges that skip the edge itself.
inline bool cycle_through_edge(const AdjMatrix& a, int u, int v, int length) {
  const int n = static_cast<int>(a.size()) - 1;
  std::vector<bool> used(n + 1, false);
  used[u] = used[v] = true;
  auto walk = [&](auto&& self, int at, int steps) -> bool {
    if (steps == length - 2) return a[at][u];
    for (int w = 1; w <= n; ++w) {
      if (used[w] || !a[at][w]) continue;
      used[w] = true;
      const bool found = self(self, w, steps + 1);
      used[w] = false;
      if (found) return true;
    }
    return false;
  };
  return walk(walk, v, 0);
}

// Maximum clique size by trying every subset (n <= 20).
inline int max_clique(const AdjMatrix& a0) {
  const int n = static_cast<int>(a0.size());
  std::vector<std::uint32_t> nbr(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a0[i][j]) nbr[i] |= 1U << j;
    }
  }
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool clique = true;
    for (int i = 0; i < n && clique; ++i) {
      if ((mask >> i) & 1U) clique = (mask & ~(1U << i) & ~nbr[i]) == 0;
    }
    if (clique) best = size;
  }
  return best;
}

// Pairwise relation "union has a cycle of `length` vertices" over objects
// exposing graph().edges(), decided by has_cycle only.
template <class T>
AdjMatrix creating_relation(const std::vector<T>& objects, int length) {
  const std::size_t n = objects.size();
  AdjMatrix rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::pair<int, int>> pairs;
      const auto gi = objects[i].graph();
      const auto gj = objects[j].graph();
      for (const auto& e : gi.edges()) pairs.emplace_back(e.u, e.v);
      for (const auto& e : gj.edges()) pairs.emplace_back(e.u, e.v);
      rel[i][j] = rel[j][i] =
          has_cycle(matrix(objects[i].vertex_count(), pairs), length);
    }
  }
  return rel;
}

// Do two permutations (as image lists) carry some pair of values in swapped
// order at the same two coordinates?
inline bool reversing(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] == b[j] && a[j] == b[i]) return true;
    }
  }
  return false;
}

inline AdjMatrix complement(const AdjMatrix& a) {
  AdjMatrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] = i != j && !a[i][j];
  }
  return c;
}

// Random simple graph on 1..n with edge probability p.
inline std::vector<std::pair<int, int>> random_edges(int n, double p,
                                                     std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return edges;
}

// Number of distinct associated triples over all n! vertex orders: each
// order is cut into blocks of k, block b going to class b mod 3, and the
// triple is the set of (class, block) pairs.
inline std::size_t distinct_triples(int n, int k) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::set<std::set<std::pair<int, std::vector<int>>>> seen;
  do {
    std::set<std::pair<int, std::vector<int>>> triple;
    for (int b = 0; b < n / k; ++b) {
      triple.emplace(b % 3, std::vector<int>(order.begin() + b * k,
                                             order.begin() + (b + 1) * k));
    }
    seen.insert(std::move(triple));
  } while (std::next_permutation(order.begin(), order.end()));
  return seen.size();
}

}  // namespace oracle

#endif  // CYCLECREATE_TESTS_ORACLES_H_
