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


#include "cyclecreate/graph.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <mutex>
#include <string>

#include "cyclecreate/error.h"
#include "parallel.h"

namespace cyclecreate {
namespace {

void require_permutation(std::span<const int> values, const char* what) {
  const int n = static_cast<int>(values.size());
  std::vector<char> seen(n + 1, 0);
  for (int x : values) {
    if (x < 1 || x > n || seen[x]) {
      throw InvalidArgument(std::string(what) + " is not a permutation of 1.." +
                            std::to_string(n));
    }
    seen[x] = 1;
  }
}

// Adjacency bitmasks for graphs on at most 64 vertices; bit v-1 of row u-1.
using SmallAdjacency = std::vector<std::uint64_t>;

constexpr int kSmallLimit = 64;

void add_small_edge(SmallAdjacency& adj, int a, int b) {
  adj[a - 1] |= std::uint64_t{1} << (b - 1);
  adj[b - 1] |= std::uint64_t{1} << (a - 1);
}

SmallAdjacency small_adjacency(const Graph& g) {
  SmallAdjacency adj(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) add_small_edge(adj, e.u, e.v);
  return adj;
}

// Depth-first search for a cycle on exactly `length` vertices whose smallest
// vertex is `start`. `allowed` excludes everything below start.
bool extend_small(const SmallAdjacency& adj, int start, std::uint64_t allowed,
                  int current, int depth, int length,
                  const std::vector<int>& dist) {
  const std::uint64_t start_bit = std::uint64_t{1} << start;
  if (depth == length) return (adj[current] & start_bit) != 0;
  std::uint64_t next = adj[current] & allowed;
  while (next) {
    const int w = std::countr_zero(next);
    next &= next - 1;
    // w would be vertex depth+1; it must still reach start in the remaining
    // length - depth edges.
    if (dist[w] > length - depth) continue;
    if (extend_small(adj, start, allowed & ~(std::uint64_t{1} << w), w,
                     depth + 1, length, dist)) {
      return true;
    }
  }
  return false;
}

bool has_cycle_small(const SmallAdjacency& adj, int length) {
  const int n = static_cast<int>(adj.size());
  if (length > n) return false;
  std::vector<int> dist(n);
  for (int s = 0; s + length <= n; ++s) {
    const std::uint64_t allowed_all =
        (s == 0 ? ~std::uint64_t{0} : ~((std::uint64_t{1} << s) - 1)) &
        (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    // BFS distances from s inside the allowed vertex set.
    std::fill(dist.begin(), dist.end(), std::numeric_limits<int>::max() / 2);
    dist[s] = 0;
    std::uint64_t frontier = std::uint64_t{1} << s;
    std::uint64_t reached = frontier;
    for (int d = 1; frontier; ++d) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) {
        next |= adj[std::countr_zero(f)];
      }
      next &= allowed_all & ~reached;
      reached |= next;
      for (std::uint64_t b = next; b; b &= b - 1) dist[std::countr_zero(b)] = d;
      frontier = next;
    }
    if (std::popcount(reached) < length) continue;
    if (extend_small(adj, s, allowed_all & ~(std::uint64_t{1} << s), s, 1,
                     length, dist)) {
      return true;
    }
  }
  return false;
}

}  // namespace

Edge make_edge(int a, int b) {
  if (a == b) {
    throw InvalidArgument("loop at vertex " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n) : n_(n), adj_(n < 0 ? 0 : n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
  for (Edge& e : edges) {
    e = make_edge(e.u, e.v);
    if (e.u < 1 || e.v > n) {
      throw InvalidArgument("edge " + std::to_string(e.u) + "-" +
                            std::to_string(e.v) + " outside 1.." +
                            std::to_string(n));
    }
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end());
      dup != edges.end()) {
    throw InvalidArgument("repeated edge " + std::to_string(dup->u) + "-" +
                          std::to_string(dup->v));
  }
  edges_ = std::move(edges);
  for (const Edge& e : edges_) {
    adj_[e.u - 1].push_back(e.v);
    adj_[e.v - 1].push_back(e.u);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

bool Graph::has_edge(int a, int b) const {
  if (a == b || a < 1 || b < 1 || a > n_ || b > n_) return false;
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
}

HamPath::HamPath(std::vector<int> order) : order_(std::move(order)) {
  if (order_.empty()) throw InvalidArgument("empty Hamiltonian path");
  require_permutation(order_, "path vertex sequence");
}

bool HamPath::is_canonical() const { return order_.front() <= order_.back(); }

HamPath HamPath::canonical() const {
  return is_canonical() ? *this : reversed();
}

HamPath HamPath::reversed() const {
  return HamPath(std::vector<int>(order_.rbegin(), order_.rend()));
}

std::vector<Edge> HamPath::edges() const {
  std::vector<Edge> out;
  out.reserve(order_.size());
  for (std::size_t i = 1; i < order_.size(); ++i) {
    out.push_back(make_edge(order_[i - 1], order_[i]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph HamPath::graph() const { return Graph(vertex_count(), edges()); }

bool operator==(const HamPath& a, const HamPath& b) {
  if (a.order_.size() != b.order_.size()) return false;
  return a.order_ == b.order_ ||
         std::equal(a.order_.begin(), a.order_.end(), b.order_.rbegin());
}

PerfectMatching::PerfectMatching(int n, std::vector<Edge> pairs)
    : partner_(n < 0 ? 0 : n, 0) {
  if (n < 0 || n % 2 != 0) {
    throw InvalidArgument("perfect matching needs an even ground set, got " +
                          std::to_string(n));
  }
  if (static_cast<int>(pairs.size()) * 2 != n) {
    throw InvalidArgument("perfect matching on " + std::to_string(n) +
                          " vertices needs " + std::to_string(n / 2) +
                          " pairs");
  }
  for (Edge& e : pairs) {
    e = make_edge(e.u, e.v);
    if (e.u < 1 || e.v > n) {
      throw InvalidArgument("matching pair outside 1.." + std::to_string(n));
    }
    if (partner_[e.u - 1] != 0 || partner_[e.v - 1] != 0) {
      throw InvalidArgument("vertex covered twice by matching");
    }
    partner_[e.u - 1] = e.v;
    partner_[e.v - 1] = e.u;
  }
  std::sort(pairs.begin(), pairs.end());
  pairs_ = std::move(pairs);
}

Graph PerfectMatching::graph() const {
  return Graph(vertex_count(), pairs_);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  require_permutation(images_, "permutation");
}

Graph graph_union(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) {
    throw InvalidArgument("union of graphs on " +
                          std::to_string(a.vertex_count()) + " and " +
                          std::to_string(b.vertex_count()) + " vertices");
  }
  std::vector<Edge> merged;
  merged.reserve(a.edge_count() + b.edge_count());
  std::set_union(a.edges().begin(), a.edges().end(), b.edges().begin(),
                 b.edges().end(), std::back_inserter(merged));
  return Graph(a.vertex_count(), std::move(merged));
}

void for_each_cycle_of_length(
    const Graph& g, int length,
    const std::function<bool(std::span<const int>)>& visit) {
  if (length < 3) {
    throw InvalidArgument("cycle length must be at least 3, got " +
                          std::to_string(length));
  }
  const int n = g.vertex_count();
  if (length > n) return;
  std::vector<int> path;
  std::vector<char> on_path(n + 1, 0);
  std::vector<int> dist(n + 1);
  bool stop = false;

  std::function<void(int)> extend = [&](int start) {
    const int current = path.back();
    const int depth = static_cast<int>(path.size());
    if (depth == length) {
      // Report each undirected cycle once: second vertex below the last.
      if (g.has_edge(current, start) && path[1] < path.back()) {
        if (!visit(path)) stop = true;
      }
      return;
    }
    for (int w : g.neighbors(current)) {
      if (stop) return;
      if (w <= start || on_path[w]) continue;
      if (dist[w] > length - depth) continue;
      path.push_back(w);
      on_path[w] = 1;
      extend(start);
      on_path[w] = 0;
      path.pop_back();
    }
  };

  for (int s = 1; s + length - 1 <= n && !stop; ++s) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<int>::max() / 2);
    dist[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (w > s && dist[w] > dist[u] + 1) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    path.assign(1, s);
    on_path[s] = 1;
    extend(s);
    on_path[s] = 0;
  }
}

bool contains_cycle_of_length(const Graph& g, int length) {
  if (length < 3) {
    throw InvalidArgument("cycle length must be at least 3, got " +
                          std::to_string(length));
  }
  if (g.vertex_count() <= kSmallLimit) {
    return has_cycle_small(small_adjacency(g), length);
  }
  bool found = false;
  for_each_cycle_of_length(g, length, [&](std::span<const int>) {
    found = true;
    return false;
  });
  return found;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n + 1), parent(n + 1);
  for (int root = 1; root <= n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int root = 1; root <= n; ++root) {
    if (color[root - 1] >= 0) continue;
    color[root - 1] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (color[w - 1] < 0) {
          color[w - 1] = 1 - color[u - 1];
          queue.push_back(w);
        } else if (color[w - 1] == color[u - 1]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

MatchingUnion matching_union_components(const PerfectMatching& a,
                                        const PerfectMatching& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count()) {
    throw InvalidArgument("matchings on " + std::to_string(n) + " and " +
                          std::to_string(b.vertex_count()) + " vertices");
  }
  MatchingUnion out;
  std::vector<char> seen(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    if (seen[v]) continue;
    if (a.partner(v) == b.partner(v)) {
      seen[v] = seen[a.partner(v)] = 1;
      ++out.shared_edges;
      continue;
    }
    // Alternate a-edge, b-edge until the walk closes.
    int length = 0;
    int u = v;
    do {
      const int w = a.partner(u);
      seen[u] = seen[w] = 1;
      length += 2;
      u = b.partner(w);
    } while (u != v);
    out.cycle_lengths.push_back(length);
  }
  std::sort(out.cycle_lengths.begin(), out.cycle_lengths.end());
  return out;
}

bool is_creating(const Graph& a, const Graph& b, int length) {
  return contains_cycle_of_length(graph_union(a, b), length);
}

bool is_creating(const HamPath& a, const HamPath& b, int length) {
  const int n = a.vertex_count();
  if (n != b.vertex_count()) {
    throw InvalidArgument("paths on " + std::to_string(n) + " and " +
                          std::to_string(b.vertex_count()) + " vertices");
  }
  if (length < 3) {
    throw InvalidArgument("cycle length must be at least 3, got " +
                          std::to_string(length));
  }
  if (n <= kSmallLimit) {
    SmallAdjacency adj(n, 0);
    for (const HamPath* p : {&a, &b}) {
      for (int i = 1; i < n; ++i) add_small_edge(adj, p->at(i), p->at(i + 1));
    }
    return has_cycle_small(adj, length);
  }
  return is_creating(a.graph(), b.graph(), length);
}

bool is_creating(const PerfectMatching& a, const PerfectMatching& b,
                 int length) {
  if (length < 3) {
    throw InvalidArgument("cycle length must be at least 3, got " +
                          std::to_string(length));
  }
  const MatchingUnion u = matching_union_components(a, b);
  return std::binary_search(u.cycle_lengths.begin(), u.cycle_lengths.end(),
                            length);
}

namespace {

template <class T>
int ground_size(const T& x) {
  return x.vertex_count();
}

template <class T>
FamilyReport verify_pairwise_impl(std::span<const T> family, int length,
                                  PairExpectation expect, int threads) {
  FamilyReport report;
  if (family.empty()) return report;
  const int n = ground_size(family.front());
  for (const T& member : family) {
    if (ground_size(member) != n) {
      throw InvalidArgument("family members live on different ground sets");
    }
  }
  if (length < 3) {
    throw InvalidArgument("cycle length must be at least 3, got " +
                          std::to_string(length));
  }
  const std::size_t size = family.size();
  const bool want = expect == PairExpectation::kCreating;

  // One row i per task; each row keeps its own first violation so the merge
  // is independent of scheduling.
  std::vector<std::uint64_t> row_violations(size, 0);
  std::vector<std::size_t> row_first(size, size);
  internal::parallel_for(size, threads, [&](std::size_t, std::size_t i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      if (is_creating(family[i], family[j], length) != want) {
        if (row_violations[i]++ == 0) row_first[i] = j;
      }
    }
  });

  report.pairs_checked = static_cast<std::uint64_t>(size) * (size - 1) / 2;
  for (std::size_t i = 0; i < size; ++i) {
    report.violations += row_violations[i];
    if (!report.first_violation && row_first[i] < size) {
      report.first_violation = std::make_pair(i, row_first[i]);
    }
  }
  report.passed = report.violations == 0;
  return report;
}

}  // namespace

FamilyReport verify_pairwise(std::span<const HamPath> family, int length,
                             PairExpectation expect, int threads) {
  return verify_pairwise_impl(family, length, expect, threads);
}

FamilyReport verify_pairwise(std::span<const PerfectMatching> family,
                             int length, PairExpectation expect, int threads) {
  return verify_pairwise_impl(family, length, expect, threads);
}

FamilyReport verify_pairwise(std::span<const Graph> family, int length,
                             PairExpectation expect, int threads) {
  return verify_pairwise_impl(family, length, expect, threads);
}

}  // namespace cyclecreate
