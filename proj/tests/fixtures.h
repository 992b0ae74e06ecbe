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


// Families of Hamiltonian paths shared by the reduction tests and the
// acceptance runner.

#ifndef CYCLECREATE_TESTS_FIXTURES_H_
#define CYCLECREATE_TESTS_FIXTURES_H_

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "cyclecreate/constructions.h"
#include "cyclecreate/graph.h"

namespace fixtures {

// Random path sharing its associated triple with `h`: the blocks of each
// position class are shuffled among that class's positions.
inline cyclecreate::HamPath shuffle_within_classes(
    const cyclecreate::HamPath& h, int k, std::mt19937& rng) {
  const int n = h.vertex_count();
  const int blocks = n / k;
  std::vector<int> slot(blocks);
  for (int c = 0; c < 3; ++c) {
    std::vector<int> mine;
    for (int b = c; b < blocks; b += 3) mine.push_back(b);
    std::vector<int> shuffled = mine;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (std::size_t i = 0; i < mine.size(); ++i) slot[mine[i]] = shuffled[i];
  }
  std::vector<int> order;
  for (int b = 0; b < blocks; ++b) {
    for (int j = 0; j < k; ++j) order.push_back(h.at(slot[b] * k + j + 1));
  }
  return cyclecreate::HamPath(order);
}

inline cyclecreate::HamPath random_path(int n, std::mt19937& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  return cyclecreate::HamPath(order);
}

// The pinned-vertex family on n-1 vertices with vertex n appended to every
// path. Appending keeps every pairwise union's cycles.
inline std::vector<cyclecreate::HamPath> extended_lower_bound(int n, int k) {
  std::vector<cyclecreate::HamPath> out;
  for (const auto& p : cyclecreate::lower_bound_family(n - 1, k)) {
    std::vector<int> order(p.order().begin(), p.order().end());
    order.push_back(n);
    out.emplace_back(order);
  }
  return out;
}

// Greedy pairwise creating family whose members come in groups sharing an
// associated triple: for each random seed path, every within-class
// rearrangement is offered and kept when it creates with all kept members.
inline std::vector<cyclecreate::HamPath> greedy_shared_triple_family(
    int n, int k, std::size_t target, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<cyclecreate::HamPath> chosen;
  for (int round = 0; round < 400 && chosen.size() < target; ++round) {
    const cyclecreate::HamPath base = random_path(n, rng);
    for (int t = 0; t < 64 && chosen.size() < target; ++t) {
      cyclecreate::HamPath h = t == 0 ? base : shuffle_within_classes(base, k, rng);
      const bool fits =
          std::all_of(chosen.begin(), chosen.end(), [&](const auto& other) {
            return other != h && cyclecreate::is_creating(other, h, 2 * k);
          });
      if (fits) chosen.push_back(h);
    }
  }
  return chosen;
}

}  // namespace fixtures

#endif  // CYCLECREATE_TESTS_FIXTURES_H_
