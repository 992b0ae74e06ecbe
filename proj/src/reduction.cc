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


#include "cyclecreate/reduction.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "cyclecreate/error.h"
#include "parallel.h"

namespace cyclecreate {
namespace {

void require_block_shape(int n, int k) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  if (n % (3 * k) != 0) {
    throw InvalidArgument("3k = " + std::to_string(3 * k) +
                          " must divide n = " + std::to_string(n));
  }
}

void require_path_shape(int n, int k) {
  require_block_shape(n, k);
  if (n % 2 != 0) {
    throw InvalidArgument("n must be even, got " + std::to_string(n));
  }
}

std::vector<int> order_preserving_labels(const std::vector<int>& kept,
                                         int n) {
  std::vector<int> relabel(n + 1, 0);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    relabel[kept[i]] = static_cast<int>(i) + 1;
  }
  return relabel;
}

}  // namespace

AssociatedTriple associated_triple(const HamPath& h, int k) {
  const int n = h.vertex_count();
  require_path_shape(n, k);
  AssociatedTriple t;
  t.n = n;
  t.k = k;
  for (int b = 0; b < n / k; ++b) {
    BlockPath block(h.order().begin() + b * k, h.order().begin() + b * k + k);
    t.classes[b % 3].push_back(std::move(block));
  }
  for (auto& cls : t.classes) {
    std::sort(cls.begin(), cls.end(), [](const BlockPath& a,
                                         const BlockPath& b) {
      return *std::min_element(a.begin(), a.end()) <
             *std::min_element(b.begin(), b.end());
    });
  }
  return t;
}

Graph fixed_graph(const AssociatedTriple& t) {
  std::vector<Edge> edges;
  for (const auto& cls : t.classes) {
    for (const BlockPath& path : cls) {
      for (std::size_t i = 1; i < path.size(); ++i) {
        edges.push_back(make_edge(path[i - 1], path[i]));
      }
    }
  }
  return Graph(t.n, std::move(edges));
}

TripleClass pigeonhole_largest_class(std::span<const HamPath> family, int k) {
  if (family.empty()) throw InvalidArgument("empty path family");
  std::map<AssociatedTriple, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < family.size(); ++i) {
    groups[associated_triple(family[i], k)].push_back(i);
  }
  // std::map iterates in ascending triple order, so the first maximum wins.
  auto best = groups.begin();
  for (auto it = groups.begin(); it != groups.end(); ++it) {
    if (it->second.size() > best->second.size()) best = it;
  }
  TripleClass out;
  out.triple = best->first;
  out.distinct_triples = groups.size();
  for (std::size_t i : best->second) out.members.push_back(family[i]);
  return out;
}

MatchingFamily make_matching_family(std::vector<PerfectMatching> matchings) {
  MatchingFamily out;
  if (!matchings.empty()) out.n = matchings.front().vertex_count();
  for (const auto& m : matchings) {
    if (m.vertex_count() != out.n) {
      throw InvalidArgument("matchings live on different ground sets");
    }
  }
  out.matchings = std::move(matchings);
  out.origin.resize(out.n);
  std::iota(out.origin.begin(), out.origin.end(), 1);
  return out;
}

Edge terminal_pair(const HamPath& h) {
  return make_edge(h.at(1), h.at(h.vertex_count()));
}

MatchingFamily strip_to_matchings(std::span<const HamPath> subfamily, int k) {
  if (subfamily.empty()) throw InvalidArgument("empty path family");
  const AssociatedTriple triple = associated_triple(subfamily.front(), k);
  const Edge terminals = terminal_pair(subfamily.front());
  const Graph fixed = fixed_graph(triple);
  const int n = triple.n;
  const int blocks = n / k;

  // Block endpoints minus the two path ends.
  std::vector<int> kept;
  for (const auto& cls : triple.classes) {
    for (const BlockPath& path : cls) {
      for (int v : {path.front(), path.back()}) {
        if (v != terminals.u && v != terminals.v) kept.push_back(v);
      }
    }
  }
  std::sort(kept.begin(), kept.end());
  const std::vector<int> relabel = order_preserving_labels(kept, n);

  std::vector<PerfectMatching> matchings;
  for (const HamPath& h : subfamily) {
    if (associated_triple(h, k) != triple) {
      throw InvalidArgument("paths do not share one associated triple");
    }
    if (terminal_pair(h) != terminals) {
      throw InvalidArgument("paths do not share their end vertices");
    }
    const std::vector<Edge> edges = h.edges();
    if (!std::includes(edges.begin(), edges.end(), fixed.edges().begin(),
                       fixed.edges().end())) {
      throw InvalidArgument("path does not contain the fixed graph");
    }
    std::vector<Edge> pairs;
    for (int b = 1; b < blocks; ++b) {
      pairs.push_back(
          make_edge(relabel[h.at(b * k)], relabel[h.at(b * k + 1)]));
    }
    matchings.emplace_back(static_cast<int>(kept.size()), std::move(pairs));
  }
  MatchingFamily out;
  out.n = static_cast<int>(kept.size());
  out.matchings = std::move(matchings);
  out.origin = std::move(kept);
  return out;
}

bool verify_claim_notused(const HamPath& h1, const HamPath& h2, int k) {
  const AssociatedTriple t = associated_triple(h1, k);
  if (associated_triple(h2, k) != t) {
    throw InvalidArgument("paths do not share one associated triple");
  }
  const Graph fixed = fixed_graph(t);
  const Graph both = graph_union(h1.graph(), h2.graph());
  bool clean = true;
  for_each_cycle_of_length(both, 2 * k, [&](std::span<const int> cycle) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (fixed.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) {
        clean = false;
        return false;
      }
    }
    return true;
  });
  return clean;
}

Claim4Report check_claim_notused(std::span<const HamPath> family, int k,
                                 int threads) {
  std::map<AssociatedTriple, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < family.size(); ++i) {
    groups[associated_triple(family[i], k)].push_back(i);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [triple, members] : groups) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        pairs.emplace_back(members[a], members[b]);
      }
    }
  }
  std::vector<char> bad(pairs.size(), 0);
  internal::parallel_for(pairs.size(), threads,
                         [&](std::size_t, std::size_t i) {
                           bad[i] = !verify_claim_notused(
                               family[pairs[i].first], family[pairs[i].second],
                               k);
                         });
  Claim4Report report;
  report.classes = groups.size();
  report.sharing_pairs = pairs.size();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!bad[i]) continue;
    ++report.violations;
    if (!report.first_violation || pairs[i] < *report.first_violation) {
      report.first_violation = pairs[i];
    }
  }
  return report;
}

ShrinkResult ground_set_reduce(const MatchingFamily& family) {
  if (family.matchings.empty()) {
    throw InvalidArgument("empty matching family");
  }
  const int n = family.n;
  if (n < 4) throw InvalidArgument("ground set too small to shrink");
  std::vector<std::size_t> count(n + 1, 0);
  for (const auto& m : family.matchings) ++count[m.partner(1)];
  const int partner = static_cast<int>(
      std::max_element(count.begin(), count.end()) - count.begin());

  std::vector<int> kept;
  for (int v = 2; v <= n; ++v) {
    if (v != partner) kept.push_back(v);
  }
  const std::vector<int> relabel = order_preserving_labels(kept, n);

  ShrinkResult out;
  out.partner = partner;
  out.family.n = n - 2;
  for (int v : kept) out.family.origin.push_back(family.origin[v - 1]);
  for (const auto& m : family.matchings) {
    if (m.partner(1) != partner) continue;
    std::vector<Edge> pairs;
    for (const Edge& e : m.pairs()) {
      if (e.u == 1) continue;
      pairs.push_back(make_edge(relabel[e.u], relabel[e.v]));
    }
    out.family.matchings.emplace_back(n - 2, std::move(pairs));
  }
  return out;
}

Integer triple_count(int n, int k) {
  require_block_shape(n, k);
  const int blocks = n / k;
  const int per_class = blocks / 3;
  // Unordered partition into blocks, orientation of each block as a directed
  // path, then assignment of blocks to the three classes.
  Integer block_partitions = factorial(n);
  for (int b = 0; b < blocks; ++b) block_partitions /= factorial(k);
  block_partitions /= factorial(blocks);
  Integer orientations = boost::multiprecision::pow(factorial(k), blocks);
  Integer class_split = factorial(blocks);
  for (int c = 0; c < 3; ++c) class_split /= factorial(per_class);
  return block_partitions * orientations * class_split;
}

PathsToMatchings paths_to_matchings(std::span<const HamPath> family, int k) {
  TripleClass cls = pigeonhole_largest_class(family, k);
  std::map<Edge, std::vector<HamPath>> by_terminals;
  for (const HamPath& h : cls.members) {
    by_terminals[terminal_pair(h)].push_back(h);
  }
  auto best = by_terminals.begin();
  for (auto it = by_terminals.begin(); it != by_terminals.end(); ++it) {
    if (it->second.size() > best->second.size()) best = it;
  }

  PathsToMatchings out;
  out.input_size = family.size();
  out.distinct_triples = cls.distinct_triples;
  out.class_size = cls.members.size();
  out.terminal_groups = by_terminals.size();
  out.terminals = best->first;
  out.triple = std::move(cls.triple);
  out.selected = std::move(best->second);
  out.output = strip_to_matchings(out.selected, k);
  return out;
}

}  // namespace cyclecreate
