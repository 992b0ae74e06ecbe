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


#include "cyclecreate/constructions.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "cyclecreate/error.h"

namespace cyclecreate {

std::vector<HamPath> lower_bound_family(int n, int k) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  if ((n - 1) % k != 0) {
    throw InvalidArgument("n must satisfy n = 1 (mod " + std::to_string(k) +
                          "), got n = " + std::to_string(n));
  }
  if (n < 2 * k + 1) {
    throw InvalidArgument("n must be at least 2k+1 = " +
                          std::to_string(2 * k + 1));
  }
  const int slots = (n - 1) / k;
  if (slots > kMaxFixedPaths) {
    throw LimitExceeded(std::to_string(slots) + " fixed paths exceed the " +
                        std::to_string(kMaxFixedPaths) + " supported");
  }

  std::vector<int> assignment(slots);
  std::iota(assignment.begin(), assignment.end(), 0);
  std::vector<HamPath> family;
  std::vector<int> order(n);
  do {
    int pos = 0;
    for (int t = 0; t < slots; ++t) {
      order[pos++] = t * k + 1;
      const int s = assignment[t];
      for (int v = s * k + 2; v <= (s + 1) * k; ++v) order[pos++] = v;
    }
    order[pos] = n;
    family.emplace_back(order);
  } while (std::next_permutation(assignment.begin(), assignment.end()));
  return family;
}

bool is_prime(long long q) {
  if (q < 2) return false;
  for (long long d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

namespace {

using Vec3 = std::array<int, 3>;

// Representatives of the 1-dimensional subspaces of GF(q)^3: first nonzero
// coordinate equal to 1, listed lexicographically.
std::vector<Vec3> normalized_vectors(int q) {
  std::vector<Vec3> out;
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      for (int c = 0; c < q; ++c) {
        const Vec3 v{a, b, c};
        const auto lead = std::find_if(v.begin(), v.end(),
                                       [](int x) { return x != 0; });
        if (lead != v.end() && *lead == 1) out.push_back(v);
      }
    }
  }
  return out;
}

}  // namespace

PlaneIncidenceGraph projective_plane_incidence(int q) {
  if (!is_prime(q)) {
    throw InvalidArgument("plane order must be prime, got " +
                          std::to_string(q));
  }
  // Lines are the kernels of the same normalized dual vectors.
  const std::vector<Vec3> reps = normalized_vectors(q);
  const int count = static_cast<int>(reps.size());
  std::vector<Edge> edges;
  for (int p = 0; p < count; ++p) {
    for (int l = 0; l < count; ++l) {
      const int dot = reps[p][0] * reps[l][0] + reps[p][1] * reps[l][1] +
                      reps[p][2] * reps[l][2];
      if (dot % q == 0) edges.push_back({p + 1, count + l + 1});
    }
  }
  PlaneIncidenceGraph out;
  out.q = q;
  out.graph = Graph(2 * count, std::move(edges));
  out.points.resize(count);
  out.lines.resize(count);
  std::iota(out.points.begin(), out.points.end(), 1);
  std::iota(out.lines.begin(), out.lines.end(), count + 1);
  return out;
}

PlaneOrder choose_plane_order(long long n_target) {
  if (n_target < 14) {
    throw InvalidArgument("no plane incidence graph fits in " +
                          std::to_string(n_target) + " vertices (minimum 14)");
  }
  auto size_of = [](long long q) { return 2 * (q * q + q + 1); };
  long long q = 2;
  while (size_of(q + 1) <= n_target) ++q;
  while (!is_prime(q)) --q;
  return {static_cast<int>(q), size_of(q)};
}

C2kFreeReport validate_c2kfree_bipartite_regular(const Graph& g, int k) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  C2kFreeReport report;
  report.bipartite = two_coloring(g).has_value();
  if (g.vertex_count() > 0) {
    const int d = g.degree(1);
    bool regular = true;
    for (int v = 2; v <= g.vertex_count(); ++v) regular &= g.degree(v) == d;
    if (regular) report.regular_degree = d;
  }
  report.girth = girth(g);

  if (!report.bipartite) {
    report.failure = "not bipartite";
  } else if (!report.regular_degree) {
    report.failure = "not regular";
  } else if (report.girth && *report.girth <= 2 * k) {
    report.failure = "girth " + std::to_string(*report.girth) +
                     " does not exceed " + std::to_string(2 * k);
  }
  report.passed = report.failure.empty();
  return report;
}

}  // namespace cyclecreate
