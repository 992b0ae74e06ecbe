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


#include <algorithm>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "cyclecreate/constructions.h"
#include "cyclecreate/error.h"
#include "cyclecreate/graph.h"
#include "oracles.h"

namespace cyclecreate {
namespace {

oracle::AdjMatrix union_matrix(const HamPath& a, const HamPath& b) {
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : a.edges()) pairs.emplace_back(e.u, e.v);
  for (const Edge& e : b.edges()) pairs.emplace_back(e.u, e.v);
  return oracle::matrix(a.vertex_count(), pairs);
}

TEST(LowerBound, SmallestFamily) {
  auto fam = lower_bound_family(5, 2);
  ASSERT_EQ(fam.size(), 2u);
  std::set<std::vector<int>> orders;
  for (const auto& p : fam) {
    orders.insert(std::vector<int>(p.order().begin(), p.order().end()));
  }
  EXPECT_TRUE(orders.count({1, 2, 3, 4, 5}));
  EXPECT_TRUE(orders.count({1, 4, 3, 2, 5}));
}

TEST(LowerBound, StructureAndPairwiseCreating) {
  const std::pair<int, int> cases[] = {{5, 2}, {7, 2}, {7, 3}, {9, 2},
                                       {9, 4}, {10, 3}};
  for (auto [n, k] : cases) {
    auto fam = lower_bound_family(n, k);
    const int m = (n - 1) / k;
    long long expected = 1;
    for (int i = 2; i <= m; ++i) expected *= i;
    ASSERT_EQ(static_cast<long long>(fam.size()), expected) << n << "," << k;
    std::set<std::vector<int>> distinct;
    for (const auto& p : fam) {
      ASSERT_EQ(p.vertex_count(), n);
      distinct.insert(std::vector<int>(p.order().begin(), p.order().end()));
      for (int t = 0; t <= m; ++t) EXPECT_EQ(p.at(t * k + 1), t * k + 1);
      // Between pinned vertices sits one whole increasing fixed path.
      for (int t = 0; t < m; ++t) {
        const int first = p.at(t * k + 2);
        EXPECT_EQ((first - 2) % k, 0);
        for (int j = 1; j < k - 1; ++j) {
          EXPECT_EQ(p.at(t * k + 2 + j), first + j);
        }
      }
    }
    EXPECT_EQ(distinct.size(), fam.size());
    if (n <= 9) {
      for (std::size_t i = 0; i < fam.size(); ++i) {
        for (std::size_t j = i + 1; j < fam.size(); ++j) {
          EXPECT_TRUE(oracle::has_cycle(union_matrix(fam[i], fam[j]), 2 * k))
              << n << "," << k << " pair " << i << "," << j;
        }
      }
    }
    EXPECT_TRUE(verify_pairwise(std::span<const HamPath>(fam), 2 * k).passed);
  }
}

TEST(LowerBound, RejectsBadParameters) {
  EXPECT_THROW(lower_bound_family(5, 1), InvalidArgument);
  EXPECT_THROW(lower_bound_family(6, 2), InvalidArgument);
  EXPECT_THROW(lower_bound_family(3, 2), InvalidArgument);
  EXPECT_THROW(lower_bound_family(2 * 11 + 1, 2), LimitExceeded);
}

TEST(Primes, SmallValues) {
  std::vector<int> got;
  for (int q = -2; q < 30; ++q) {
    if (is_prime(q)) got.push_back(q);
  }
  EXPECT_EQ(got, (std::vector<int>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
}

TEST(Plane, RegularBipartiteGirthSix) {
  for (int q : {2, 3, 5, 7}) {
    PlaneIncidenceGraph plane = projective_plane_incidence(q);
    const int points = q * q + q + 1;
    ASSERT_EQ(plane.graph.vertex_count(), 2 * points);
    EXPECT_EQ(plane.points.size(), static_cast<std::size_t>(points));
    EXPECT_EQ(plane.lines.front(), points + 1);
    for (int v = 1; v <= 2 * points; ++v) EXPECT_EQ(plane.graph.degree(v), q + 1);
    for (const Edge& e : plane.graph.edges()) {
      EXPECT_LE(e.u, points);
      EXPECT_GT(e.v, points);
    }
    EXPECT_TRUE(two_coloring(plane.graph));
    EXPECT_EQ(girth(plane.graph), 6) << q;
    EXPECT_TRUE(validate_c2kfree_bipartite_regular(plane.graph, 2).passed);
  }
}

TEST(Plane, PointPairsShareExactlyOneLine) {
  for (int q : {2, 3, 5}) {
    PlaneIncidenceGraph plane = projective_plane_incidence(q);
    for (int a : plane.points) {
      for (int b : plane.points) {
        if (b <= a) continue;
        int common = 0;
        for (int l : plane.lines) {
          common += plane.graph.has_edge(a, l) && plane.graph.has_edge(b, l);
        }
        EXPECT_EQ(common, 1) << q << ": " << a << "," << b;
      }
    }
  }
}

TEST(Plane, FanoGirthMatchesBruteForce) {
  PlaneIncidenceGraph plane = projective_plane_incidence(2);
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : plane.graph.edges()) pairs.emplace_back(e.u, e.v);
  EXPECT_EQ(oracle::girth(oracle::matrix(14, pairs)), 6);
}

TEST(Plane, NonPrimeOrdersRejected) {
  EXPECT_THROW(projective_plane_incidence(4), InvalidArgument);
  EXPECT_THROW(projective_plane_incidence(1), InvalidArgument);
}

TEST(Plane, ChooseOrder) {
  auto check = [](long long target, int q, long long n) {
    PlaneOrder o = choose_plane_order(target);
    EXPECT_EQ(o.q, q) << target;
    EXPECT_EQ(o.vertex_count, n) << target;
  };
  check(14, 2, 14);
  check(25, 2, 14);
  check(26, 3, 26);
  check(100, 5, 62);
  check(120, 7, 114);
  EXPECT_THROW(choose_plane_order(13), InvalidArgument);
}

TEST(C2kFree, Failures) {
  Graph c4(4, {make_edge(1, 2), make_edge(2, 3), make_edge(3, 4),
               make_edge(4, 1)});
  C2kFreeReport r = validate_c2kfree_bipartite_regular(c4, 2);
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(r.bipartite);
  EXPECT_EQ(r.regular_degree, 2);
  EXPECT_EQ(r.girth, 4);
  EXPECT_FALSE(r.failure.empty());

  Graph tri(3, {make_edge(1, 2), make_edge(2, 3), make_edge(1, 3)});
  EXPECT_FALSE(validate_c2kfree_bipartite_regular(tri, 2).bipartite);

  Graph path(3, {make_edge(1, 2), make_edge(2, 3)});
  r = validate_c2kfree_bipartite_regular(path, 2);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.regular_degree);

  // C_8 is 2-regular bipartite with girth 8: fine for 2k = 6, not for 2k = 8.
  std::vector<Edge> ring;
  for (int v = 1; v <= 8; ++v) ring.push_back(make_edge(v, v % 8 + 1));
  Graph c8(8, ring);
  EXPECT_TRUE(validate_c2kfree_bipartite_regular(c8, 3).passed);
  EXPECT_FALSE(validate_c2kfree_bipartite_regular(c8, 4).passed);

  // A perfect matching is acyclic and passes for every k.
  Graph m(4, {make_edge(1, 2), make_edge(3, 4)});
  r = validate_c2kfree_bipartite_regular(m, 5);
  EXPECT_TRUE(r.passed);
  EXPECT_FALSE(r.girth);
  EXPECT_THROW(validate_c2kfree_bipartite_regular(m, 1), InvalidArgument);
}

}  // namespace
}  // namespace cyclecreate
