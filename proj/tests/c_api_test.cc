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


// Exercises the shared library through its C header only.

#include <cstdlib>
#include <string>

#include <gtest/gtest.h>

#include "cyclecreate/cyclecreate.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  cc_string_free(s);
  return out;
}

TEST(CApi, VersionAndErrors) {
  EXPECT_STRNE(cc_version(), "");
  cc_graph* g = nullptr;
  EXPECT_EQ(cc_graph_parse("graph 3 1\n1 1\n", &g), CC_ERR_PARSE);
  EXPECT_EQ(g, nullptr);
  EXPECT_NE(std::string(cc_last_error()).find("line 2"), std::string::npos);
  EXPECT_EQ(cc_graph_parse(nullptr, &g), CC_ERR_INVALID_ARGUMENT);
  cc_paths* p = nullptr;
  EXPECT_EQ(cc_construct_lower_bound(6, 2, &p), CC_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(cc_construct_lower_bound(23, 2, &p), CC_ERR_LIMIT);
}

TEST(CApi, LowerBoundVerify) {
  cc_paths* p = nullptr;
  ASSERT_EQ(cc_construct_lower_bound(9, 2, &p), CC_OK);
  EXPECT_EQ(cc_paths_count(p), 24u);
  EXPECT_EQ(cc_paths_vertex_count(p), 9);
  cc_family_report r{};
  ASSERT_EQ(cc_verify_paths(p, 4, 1, 2, &r), CC_OK);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.pairs_checked, 276u);
  EXPECT_EQ(r.first_i, -1);
  ASSERT_EQ(cc_verify_paths(p, 4, 0, 1, &r), CC_OK);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.violations, 276u);
  EXPECT_EQ(r.first_i, 0);
  EXPECT_EQ(r.first_j, 1);

  char* text = nullptr;
  ASSERT_EQ(cc_paths_format(p, &text), CC_OK);
  std::string s = take(text);
  cc_paths* q = nullptr;
  ASSERT_EQ(cc_paths_parse(s.c_str(), &q), CC_OK);
  EXPECT_EQ(cc_paths_count(q), 24u);
  cc_paths_free(q);
  cc_paths_free(p);
}

TEST(CApi, PlaneAndCounting) {
  cc_graph* g = nullptr;
  ASSERT_EQ(cc_construct_plane(2, &g), CC_OK);
  EXPECT_EQ(cc_graph_vertex_count(g), 14);
  EXPECT_EQ(cc_graph_edge_count(g), 21u);
  cc_c2kfree_report c{};
  ASSERT_EQ(cc_validate_c2kfree(g, 2, &c), CC_OK);
  EXPECT_TRUE(c.passed);
  EXPECT_EQ(c.girth, 6);
  EXPECT_EQ(c.degree, 3);
  char* count = nullptr;
  ASSERT_EQ(cc_count_matchings(g, &count), CC_OK);
  EXPECT_EQ(take(count), "24");
  cc_lemma6_report l{};
  char *lc = nullptr, *lb = nullptr;
  ASSERT_EQ(cc_check_lemma6(g, &l, &lc, &lb), CC_OK);
  EXPECT_TRUE(l.passed);
  EXPECT_EQ(take(lc), "24");
  EXPECT_EQ(take(lb), "1574640/117649");

  cc_matchings* m = nullptr;
  ASSERT_EQ(cc_noncreating_family(g, 2, &m), CC_OK);
  EXPECT_EQ(cc_matchings_count(m), 24u);
  cc_family_report r{};
  ASSERT_EQ(cc_verify_matchings(m, 4, 0, 1, &r), CC_OK);
  EXPECT_TRUE(r.passed);
  cc_matchings_free(m);
  cc_graph_free(g);

  int q = 0;
  long long n = 0;
  ASSERT_EQ(cc_choose_plane_order(100, &q, &n), CC_OK);
  EXPECT_EQ(q, 5);
  EXPECT_EQ(n, 62);
  EXPECT_EQ(cc_construct_plane(4, &g), CC_ERR_INVALID_ARGUMENT);
}

TEST(CApi, Permanent) {
  cc_matrix* a = nullptr;
  ASSERT_EQ(cc_matrix_parse("matrix 3\n1 1 1\n1 1 1\n1 1 1\n", &a), CC_OK);
  EXPECT_EQ(cc_matrix_size(a), 3);
  char* v = nullptr;
  ASSERT_EQ(cc_permanent(a, &v), CC_OK);
  EXPECT_EQ(take(v), "6");
  cc_matrix_free(a);
}

TEST(CApi, ReductionAndShrink) {
  char* v = nullptr;
  ASSERT_EQ(cc_triple_count(12, 2, &v), CC_OK);
  EXPECT_EQ(take(v), "59875200");
  EXPECT_EQ(cc_triple_count(10, 2, &v), CC_ERR_INVALID_ARGUMENT);

  cc_paths* p = nullptr;
  ASSERT_EQ(cc_paths_parse("paths 6 1\n1 2 3 4 5 6\n", &p), CC_OK);
  cc_matchings* m = nullptr;
  cc_reduction_report r{};
  ASSERT_EQ(cc_reduce_paths_to_matchings(p, 2, &m, &r), CC_OK);
  EXPECT_EQ(r.output_vertices, 4);
  EXPECT_EQ(r.output_size, 1u);
  int orig = 0;
  ASSERT_EQ(cc_matchings_origin(m, 1, &orig), CC_OK);
  EXPECT_EQ(orig, 2);
  EXPECT_EQ(cc_matchings_origin(m, 9, &orig), CC_ERR_INVALID_ARGUMENT);
  cc_matchings* s = nullptr;
  int partner = 0;
  ASSERT_EQ(cc_reduce_shrink(m, &s, &partner), CC_OK);
  EXPECT_EQ(partner, 2);
  EXPECT_EQ(cc_matchings_vertex_count(s), 2);
  ASSERT_EQ(cc_matchings_origin(s, 1, &orig), CC_OK);
  EXPECT_EQ(orig, 4);
  cc_matchings_free(s);
  cc_matchings_free(m);

  cc_claim4_report c{};
  ASSERT_EQ(cc_check_claim4(p, 2, 1, &c), CC_OK);
  EXPECT_EQ(c.classes, 1u);
  EXPECT_EQ(c.violations, 0u);
  cc_paths_free(p);
}

TEST(CApi, SearchAndChecks) {
  cc_search_result r{};
  char* w = nullptr;
  ASSERT_EQ(cc_search(CC_SEARCH_H, 5, 3, 1, 0, 0, &r, &w), CC_OK);
  EXPECT_EQ(r.clique_number, 10u);
  EXPECT_EQ(r.vertices, 60u);
  EXPECT_EQ(take(w).rfind("paths 5 10\n", 0), 0u);
  ASSERT_EQ(cc_search(CC_SEARCH_M, 6, 4, 1, 0, 1, &r, nullptr), CC_OK);
  EXPECT_TRUE(r.has_independence);
  EXPECT_EQ(r.clique_number * r.independence_number <= r.vertices, true);
  ASSERT_EQ(cc_search(CC_SEARCH_RP, 3, 0, 1, 0, 0, &r, &w), CC_OK);
  EXPECT_EQ(take(w).rfind("permutations 3 ", 0), 0u);
  EXPECT_EQ(cc_search(CC_SEARCH_H, 5, 3, 1, 5, 0, &r, nullptr), CC_ERR_LIMIT);
  EXPECT_EQ(cc_search(static_cast<cc_search_kind>(9), 5, 3, 1, 0, 0, &r, nullptr),
            CC_ERR_INVALID_ARGUMENT);

  cc_claim7_report c{};
  ASSERT_EQ(cc_check_claim7(4, &c), CC_OK);
  EXPECT_EQ(c.pairs, 576u);
  EXPECT_EQ(c.mismatches, 0u);
}

TEST(CApi, EnumerationCapFromEnvironment) {
  ASSERT_EQ(setenv("CYCLECREATE_MAX_ENUM", "50", 1), 0);
  EXPECT_EQ(cc_default_max_enum(), 50u);
  cc_search_result r{};
  EXPECT_EQ(cc_search(CC_SEARCH_H, 5, 3, 1, 0, 0, &r, nullptr), CC_ERR_LIMIT);
  ASSERT_EQ(setenv("CYCLECREATE_MAX_ENUM", "junk", 1), 0);
  EXPECT_EQ(cc_default_max_enum(), 20160u);
  unsetenv("CYCLECREATE_MAX_ENUM");
  EXPECT_EQ(cc_default_max_enum(), 20160u);
}

TEST(CApi, Bounds) {
  cc_exponents e{};
  ASSERT_EQ(cc_bounds(2, &e), CC_OK);
  EXPECT_EQ(e.path_upper.num, 3);
  EXPECT_EQ(e.path_upper.den, 4);
  EXPECT_EQ(e.matching_upper.num, 1);
  EXPECT_EQ(e.matching_upper.den, 4);
  EXPECT_STREQ(e.source, "projective-plane");
  ASSERT_EQ(cc_bounds(7, &e), CC_OK);
  EXPECT_EQ(e.path_upper.num, 62);
  EXPECT_EQ(e.path_upper.den, 63);
  EXPECT_EQ(cc_bounds(1, &e), CC_ERR_INVALID_ARGUMENT);
}

}  // namespace
