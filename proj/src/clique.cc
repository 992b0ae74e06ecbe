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


// Bitset branch and bound for maximum clique. Candidate sets are word-packed
// rows; the bound is the number of colors in a sequential greedy coloring of
// the candidates.

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "cyclecreate/search.h"

namespace cyclecreate {
namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w; });
}

std::size_t count(const Bits& b) {
  std::size_t c = 0;
  for (std::uint64_t w : b) c += std::popcount(w);
  return c;
}

void reset(Bits& b, std::size_t v) { b[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

// Adjacency in some vertex order, plus the map back to original indices.
class Solver {
 public:
  Solver(const CompatibilityGraph& g, std::vector<std::size_t> order)
      : n_(g.size()), words_((g.size() + 63) / 64), original_(std::move(order)) {
    adj_.assign(n_, Bits(words_, 0));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (i != j && g.adjacent(original_[i], original_[j])) {
          adj_[i][j / 64] |= std::uint64_t{1} << (j % 64);
        }
      }
    }
  }

  Bits all() const {
    Bits b(words_, 0);
    for (std::size_t v = 0; v < n_; ++v) b[v / 64] |= std::uint64_t{1} << (v % 64);
    return b;
  }

  // Greedy sequential coloring of `p`. Fills `order` with the vertices whose
  // color is at least `min_color` together with their colors, colors
  // nondecreasing. Returns the number of colors used.
  std::size_t color(const Bits& p, std::size_t min_color,
                    std::vector<std::size_t>& order,
                    std::vector<std::size_t>& colors) const {
    order.clear();
    colors.clear();
    Bits uncolored = p;
    std::size_t k = 0;
    Bits q(words_);
    while (any(uncolored)) {
      ++k;
      q = uncolored;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w]) {
          const std::size_t v = w * 64 + std::countr_zero(q[w]);
          reset(q, v);
          reset(uncolored, v);
          for (std::size_t x = w; x < words_; ++x) q[x] &= ~adj_[v][x];
          if (k >= min_color) {
            order.push_back(v);
            colors.push_back(k);
          }
        }
      }
    }
    return k;
  }

  void maximize(Bits p, std::vector<std::size_t>& current) {
    std::vector<std::size_t> order, colors;
    const std::size_t need =
        best_.size() + 1 > current.size() ? best_.size() + 1 - current.size() : 1;
    color(p, need, order, colors);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + colors[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current.push_back(v);
      Bits next(words_);
      for (std::size_t w = 0; w < words_; ++w) next[w] = p[w] & adj_[v][w];
      if (!any(next)) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        maximize(std::move(next), current);
      }
      current.pop_back();
      reset(p, v);
    }
  }

  // First clique of size `target` in lexicographic order of ascending index
  // sets (indices in this solver's order).
  bool first_of_size(Bits p, std::size_t target,
                     std::vector<std::size_t>& current) const {
    if (current.size() == target) return true;
    std::vector<std::size_t> order, colors;
    if (current.size() + count(p) < target) return false;
    if (current.size() + color(p, 0, order, colors) < target) return false;
    for (std::size_t w = 0; w < words_; ++w) {
      while (p[w]) {
        if (current.size() + count(p) < target) return false;
        const std::size_t v = w * 64 + std::countr_zero(p[w]);
        reset(p, v);
        current.push_back(v);
        Bits next(words_);
        for (std::size_t x = 0; x < words_; ++x) next[x] = p[x] & adj_[v][x];
        if (first_of_size(std::move(next), target, current)) return true;
        current.pop_back();
      }
    }
    return false;
  }

  Bits neighbors(std::size_t v) const { return adj_[v]; }

  // Size of an independent set built by repeatedly taking a vertex with the
  // fewest remaining neighbors.
  std::size_t greedy_independent() const {
    Bits remaining = all();
    std::size_t size = 0;
    while (any(remaining)) {
      std::size_t best = n_, best_degree = n_ + 1;
      for (std::size_t v = 0; v < n_; ++v) {
        if (!((remaining[v / 64] >> (v % 64)) & 1U)) continue;
        std::size_t d = 0;
        for (std::size_t w = 0; w < words_; ++w) {
          d += std::popcount(remaining[w] & adj_[v][w]);
        }
        if (d < best_degree) {
          best = v;
          best_degree = d;
        }
      }
      ++size;
      reset(remaining, best);
      for (std::size_t w = 0; w < words_; ++w) remaining[w] &= ~adj_[best][w];
    }
    return size;
  }
  std::size_t position(std::size_t original) const {
    return static_cast<std::size_t>(
        std::find(original_.begin(), original_.end(), original) -
        original_.begin());
  }

  std::size_t size() const { return n_; }
  const std::vector<std::size_t>& best() const { return best_; }
  std::size_t original(std::size_t v) const { return original_[v]; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::size_t> original_;
  std::vector<Bits> adj_;
  std::vector<std::size_t> best_;
};

}  // namespace

CliqueResult max_clique(const CompatibilityGraph& g, bool vertex_transitive) {
  CliqueResult result;
  const std::size_t n = g.size();
  if (n == 0) return result;

  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  Solver ordered(g, identity);
  std::vector<std::size_t> current;

  if (vertex_transitive) {
    // alpha * omega <= n for vertex-transitive graphs, so an independent set
    // caps omega. A clique through vertex 0 reaching the cap is optimal, and
    // the first one found in index order is the lexicographically least.
    const std::size_t cap = n / ordered.greedy_independent();
    current.push_back(0);
    if (ordered.first_of_size(ordered.neighbors(0), cap, current)) {
      result.size = cap;
      result.witness = current;
    }
    current.clear();
  }

  if (result.witness.empty()) {
    // Optimum: vertices by decreasing degree.
    std::vector<std::size_t> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](std::size_t a, std::size_t b) {
                       return g.degree(a) > g.degree(b);
                     });
    Solver fast(g, by_degree);
    if (vertex_transitive) {
      // Some maximum clique contains vertex 0.
      const std::size_t root = fast.position(0);
      current.push_back(root);
      Bits p = fast.neighbors(root);
      if (any(p)) fast.maximize(std::move(p), current);
    } else {
      fast.maximize(fast.all(), current);
    }
    result.size = std::max<std::size_t>(fast.best().size(), 1);

    // Witness: lexicographically least clique of that size in index order,
    // starting at vertex 0 whenever some maximum clique does.
    current.clear();
    Bits start = ordered.all();
    if (vertex_transitive) {
      current.push_back(0);
      start = ordered.neighbors(0);
    }
    if (!ordered.first_of_size(std::move(start), result.size, current)) {
      throw std::logic_error("clique solver lost its optimum");
    }
  }
  if (result.witness.empty()) result.witness = current;
  for (std::size_t i = 0; i < result.witness.size(); ++i) {
    for (std::size_t j = i + 1; j < result.witness.size(); ++j) {
      if (!g.adjacent(result.witness[i], result.witness[j])) {
        throw std::logic_error("clique witness is not a clique");
      }
    }
  }
  return result;
}

CliqueResult max_independent_set(const CompatibilityGraph& g,
                                 bool vertex_transitive) {
  return max_clique(g.complement(), vertex_transitive);
}

}  // namespace cyclecreate
