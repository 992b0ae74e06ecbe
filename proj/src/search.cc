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


#include "cyclecreate/search.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "cyclecreate/error.h"
#include "parallel.h"

namespace cyclecreate {

std::vector<HamPath> enumerate_ham_paths(int n) {
  if (n < 2) throw InvalidArgument("paths need at least 2 vertices");
  if (n > kMaxPathVertices) {
    throw LimitExceeded("path enumeration supports n <= " +
                        std::to_string(kMaxPathVertices));
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::vector<HamPath> out;
  do {
    if (order.front() < order.back()) out.emplace_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

namespace {

void extend_matching(int n, std::vector<int>& partner, std::vector<Edge>& pairs,
                     std::vector<PerfectMatching>& out) {
  const auto free_it = std::find(partner.begin() + 1, partner.end(), 0);
  if (free_it == partner.end()) {
    out.emplace_back(n, pairs);
    return;
  }
  const int u = static_cast<int>(free_it - partner.begin());
  for (int v = u + 1; v <= n; ++v) {
    if (partner[v] != 0) continue;
    partner[u] = v;
    partner[v] = u;
    pairs.push_back({u, v});
    extend_matching(n, partner, pairs, out);
    pairs.pop_back();
    partner[u] = partner[v] = 0;
  }
}

void require_object_budget(std::size_t count, std::size_t limit) {
  if (count > limit) {
    throw LimitExceeded(std::to_string(count) +
                        " objects exceed the enumeration limit of " +
                        std::to_string(limit));
  }
}

template <class T, class Related>
CompatibilityGraph build_graph(std::span<const T> objects, std::string tag,
                               int threads, Related related) {
  const std::size_t n = objects.size();
  std::vector<std::vector<std::size_t>> upper(n);
  internal::parallel_for(n, threads, [&](std::size_t, std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (related(objects[i], objects[j])) upper[i].push_back(j);
    }
  });
  CompatibilityGraph g(n, std::move(tag));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : upper[i]) g.connect(i, j);
  }
  return g;
}

template <class T>
std::vector<T> pick(const std::vector<T>& objects,
                    const std::vector<std::size_t>& indices) {
  std::vector<T> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(objects[i]);
  return out;
}

// Solves and re-checks both witnesses against the relation itself.
template <class T, class Related>
SearchResult<T> solve(const std::vector<T>& objects,
                      const CompatibilityGraph& g, const SearchOptions& options,
                      Related related) {
  SearchResult<T> result;
  result.vertices = g.size();
  result.edges = g.edge_count();
  // S_n acts transitively on each object kind and preserves the relation.
  const CliqueResult clique = max_clique(g, true);
  result.clique_number = clique.size;
  result.clique_witness = pick(objects, clique.witness);
  if (options.with_independence) {
    const CliqueResult independent = max_independent_set(g, true);
    result.independence_number = independent.size;
    result.independent_witness = pick(objects, independent.witness);
  }
  auto check = [&](const std::vector<T>& members, bool want) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (related(members[i], members[j]) != want) {
          throw std::logic_error("search witness fails the relation");
        }
      }
    }
  };
  check(result.clique_witness, true);
  check(result.independent_witness, false);
  return result;
}

}  // namespace

std::vector<PerfectMatching> enumerate_perfect_matchings(int n) {
  if (n < 2 || n % 2 != 0) {
    throw InvalidArgument("perfect matchings need a positive even n, got " +
                          std::to_string(n));
  }
  if (n > kMaxMatchingVertices) {
    throw LimitExceeded("matching enumeration supports n <= " +
                        std::to_string(kMaxMatchingVertices));
  }
  std::vector<int> partner(n + 1, 0);
  std::vector<Edge> pairs;
  std::vector<PerfectMatching> out;
  extend_matching(n, partner, pairs, out);
  return out;
}

std::vector<Permutation> enumerate_permutations(int m) {
  if (m < 1) throw InvalidArgument("permutations need m >= 1");
  if (m > kMaxPermutationSize) {
    throw LimitExceeded("permutation enumeration supports m <= " +
                        std::to_string(kMaxPermutationSize));
  }
  std::vector<int> images(m);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

bool is_reversing(const Permutation& p1, const Permutation& p2) {
  const int m = p1.size();
  if (m != p2.size()) {
    throw InvalidArgument("permutations of different sizes");
  }
  std::vector<int> where2(m + 1);
  for (int i = 1; i <= m; ++i) where2[p2(i)] = i;
  for (int i = 1; i <= m; ++i) {
    const int j = where2[p1(i)];
    if (j != i && p1(j) == p2(i)) return true;
  }
  return false;
}

PerfectMatching perm_to_matching(const Permutation& p) {
  const int m = p.size();
  std::vector<Edge> pairs;
  for (int i = 1; i <= m; ++i) pairs.push_back({i, p(i) + m});
  return PerfectMatching(2 * m, std::move(pairs));
}

Claim7Report check_claim7(int m) {
  const std::vector<Permutation> perms = enumerate_permutations(m);
  std::vector<PerfectMatching> images;
  for (const Permutation& p : perms) images.push_back(perm_to_matching(p));
  Claim7Report report;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t j = 0; j < perms.size(); ++j) {
      const bool reversing = is_reversing(perms[i], perms[j]);
      ++report.pairs;
      report.reversing_pairs += reversing;
      report.mismatches += reversing != is_creating(images[i], images[j], 4);
    }
  }
  return report;
}

Integer theorem1_value(int n) {
  if (n < 3) throw InvalidArgument("n must be at least 3");
  Integer b = binomial(n, n / 2);
  return n % 2 == 0 ? Integer(b / 2) : b;
}

CompatibilityGraph::CompatibilityGraph(std::size_t size, std::string relation)
    : size_(size),
      words_((size + 63) / 64),
      relation_(std::move(relation)),
      bits_(size * ((size + 63) / 64), 0) {}

void CompatibilityGraph::connect(std::size_t i, std::size_t j) {
  if (i == j) return;
  bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  bits_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
}

std::size_t CompatibilityGraph::degree(std::size_t i) const {
  std::size_t d = 0;
  for (std::uint64_t w : row(i)) d += std::popcount(w);
  return d;
}

std::uint64_t CompatibilityGraph::edge_count() const {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < size_; ++i) total += degree(i);
  return total / 2;
}

CompatibilityGraph CompatibilityGraph::complement() const {
  CompatibilityGraph out(size_, "not " + relation_);
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = i + 1; j < size_; ++j) {
      if (!adjacent(i, j)) out.connect(i, j);
    }
  }
  return out;
}

CompatibilityGraph build_compatibility_graph(std::span<const HamPath> objects,
                                             int length, int threads) {
  return build_graph(objects, "C" + std::to_string(length) + "-creating",
                     threads, [length](const HamPath& a, const HamPath& b) {
                       return is_creating(a, b, length);
                     });
}

CompatibilityGraph build_compatibility_graph(
    std::span<const PerfectMatching> objects, int length, int threads) {
  return build_graph(objects, "C" + std::to_string(length) + "-creating",
                     threads,
                     [length](const PerfectMatching& a,
                              const PerfectMatching& b) {
                       return is_creating(a, b, length);
                     });
}

CompatibilityGraph build_reversing_graph(std::span<const Permutation> objects,
                                         int threads) {
  return build_graph(objects, "reversing", threads,
                     [](const Permutation& a, const Permutation& b) {
                       return is_reversing(a, b);
                     });
}

SearchResult<HamPath> exact_H(int n, int length,
                              const SearchOptions& options) {
  if (length < 3) throw InvalidArgument("cycle length must be at least 3");
  if (n >= 2 && n <= kMaxPathVertices) {
    require_object_budget(static_cast<std::size_t>(
                              factorial(n) / 2),
                          options.max_objects);
  }
  const std::vector<HamPath> paths = enumerate_ham_paths(n);
  const CompatibilityGraph g =
      build_compatibility_graph(paths, length, options.threads);
  return solve(paths, g, options, [length](const HamPath& a, const HamPath& b) {
    return is_creating(a, b, length);
  });
}

SearchResult<PerfectMatching> exact_M(int n, int length,
                                      const SearchOptions& options) {
  if (length < 3) throw InvalidArgument("cycle length must be at least 3");
  if (n >= 2 && n % 2 == 0 && n <= kMaxMatchingVertices) {
    Integer count = 1;
    for (int i = n - 1; i > 1; i -= 2) count *= i;
    require_object_budget(static_cast<std::size_t>(count),
                          options.max_objects);
  }
  const std::vector<PerfectMatching> matchings = enumerate_perfect_matchings(n);
  const CompatibilityGraph g =
      build_compatibility_graph(matchings, length, options.threads);
  return solve(matchings, g, options,
               [length](const PerfectMatching& a, const PerfectMatching& b) {
                 return is_creating(a, b, length);
               });
}

SearchResult<Permutation> exact_RP(int m, const SearchOptions& options) {
  if (m >= 1 && m <= kMaxPermutationSize) {
    require_object_budget(static_cast<std::size_t>(factorial(m)),
                          options.max_objects);
  }
  const std::vector<Permutation> perms = enumerate_permutations(m);
  const CompatibilityGraph g = build_reversing_graph(perms, options.threads);
  return solve(perms, g, options,
               [](const Permutation& a, const Permutation& b) {
                 return is_reversing(a, b);
               });
}

}  // namespace cyclecreate
