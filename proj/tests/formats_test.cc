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


#include <string>

#include <gtest/gtest.h>

#include "cyclecreate/constructions.h"
#include "cyclecreate/error.h"
#include "cyclecreate/formats.h"
#include "cyclecreate/search.h"

namespace cyclecreate {
namespace {

TEST(Formats, GraphRoundTrip) {
  Graph g = projective_plane_incidence(3).graph;
  const std::string text = format_graph(g);
  EXPECT_EQ(text.rfind("graph 26 52\n", 0), 0u);
  EXPECT_EQ(parse_graph(text), g);
  EXPECT_EQ(parse_graph("\ngraph 3 1\n\n1 3\n\n").edge_count(), 1u);
}

TEST(Formats, GraphErrorsCarryLineNumbers) {
  try {
    parse_graph("graph 3 2\n1 2\n3 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(parse_graph("graph 3 2\n1 2\n"), ParseError);
  EXPECT_THROW(parse_graph("graph 3 1\n1 2\n2 3\n"), ParseError);
  EXPECT_THROW(parse_graph("graf 3 0\n"), ParseError);
  EXPECT_THROW(parse_graph("graph 3 1\n1 x\n"), ParseError);
  EXPECT_THROW(parse_graph("graph 3 1\n1 7\n"), ParseError);
  EXPECT_THROW(parse_graph(""), ParseError);
}

TEST(Formats, PathsKeepWrittenOrientation) {
  PathFamily f = parse_paths("paths 4 2\n4 3 2 1\n1 3 2 4\n");
  ASSERT_EQ(f.paths.size(), 2u);
  EXPECT_EQ(f.paths[0].at(1), 4);
  const std::string text = format_paths(4, f.paths);
  EXPECT_EQ(text, "paths 4 2\n1 2 3 4\n1 3 2 4\n");
  PathFamily again = parse_paths(text);
  EXPECT_EQ(again.paths, f.paths);
  EXPECT_THROW(parse_paths("paths 4 1\n1 2 3\n"), ParseError);
  EXPECT_THROW(parse_paths("paths 4 1\n1 2 3 3\n"), ParseError);
}

TEST(Formats, MatchingsRoundTrip) {
  auto all = enumerate_perfect_matchings(6);
  const std::string text = format_matchings(6, all);
  MatchingFamily f = parse_matchings(text);
  EXPECT_EQ(f.matchings, all);
  EXPECT_EQ(f.origin.size(), 6u);
  EXPECT_EQ(parse_matchings("matchings 4 1\n2-1 4-3\n").matchings[0].partner(1), 2);
  EXPECT_THROW(parse_matchings("matchings 4 1\n1-2 3:4\n"), ParseError);
  EXPECT_THROW(parse_matchings("matchings 4 1\n1-2 2-3\n"), ParseError);
  EXPECT_THROW(parse_matchings("matchings 4 1\n1-2\n"), ParseError);
}

TEST(Formats, MatrixAndPermutations) {
  BiadjacencyMatrix a = parse_matrix("matrix 2\n1 0\n3 1\n");
  EXPECT_EQ(a.at(1, 0), Rational(3));
  EXPECT_EQ(format_matrix(a), "matrix 2\n1 0\n3 1\n");
  EXPECT_THROW(parse_matrix("matrix 2\n1 0\n"), ParseError);
  EXPECT_THROW(parse_matrix("matrix 0\n"), ParseError);
  EXPECT_THROW(format_matrix(a.scaled(Rational(1, 2))), InvalidArgument);

  auto perms = enumerate_permutations(3);
  EXPECT_EQ(parse_permutations(format_permutations(3, perms)), perms);
  EXPECT_THROW(parse_permutations("permutations 3 1\n1 1 2\n"), ParseError);
}

TEST(Formats, Rationals) {
  EXPECT_EQ(format_rational(Rational(3, 4)), "3/4");
  EXPECT_EQ(format_rational(Rational(-6, 3)), "-2");
  EXPECT_EQ(format_decimal(Rational(1, 3), 4), "0.3333");
  EXPECT_EQ(format_decimal(Rational(-5, 2), 2), "-2.50");
  EXPECT_EQ(format_decimal(Rational(7), 0), "7");
}

}  // namespace
}  // namespace cyclecreate
