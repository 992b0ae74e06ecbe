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


// Line-oriented ASCII formats with 1-based labels.
//
//   graph N M          then M lines "u v", u < v, sorted
//   paths N COUNT      then COUNT lines of N labels, canonical orientation
//   matchings N COUNT  then COUNT lines of "a-b" pairs sorted by a
//   matrix M           then M rows of M integers
//   permutations M COUNT  then COUNT lines of M images
//
// Blank lines are ignored by the parsers. Writers are deterministic.

#ifndef CYCLECREATE_FORMATS_H_
#define CYCLECREATE_FORMATS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclecreate/counting.h"
#include "cyclecreate/graph.h"
#include "cyclecreate/numeric.h"
#include "cyclecreate/reduction.h"

namespace cyclecreate {

struct PathFamily {
  int n = 0;
  std::vector<HamPath> paths;
};

std::string format_graph(const Graph& g);
Graph parse_graph(std::string_view text);

std::string format_paths(int n, std::span<const HamPath> paths);
// Keeps each path in the orientation it is written in.
PathFamily parse_paths(std::string_view text);

std::string format_matchings(int n, std::span<const PerfectMatching> matchings);
// The origin map of the result is the identity.
MatchingFamily parse_matchings(std::string_view text);

// Throws InvalidArgument for non-integral matrices.
std::string format_matrix(const BiadjacencyMatrix& a);
BiadjacencyMatrix parse_matrix(std::string_view text);

std::string format_permutations(int m, std::span<const Permutation> perms);
std::vector<Permutation> parse_permutations(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& x);
// Display-only decimal expansion, truncated toward zero.
std::string format_decimal(const Rational& x, int digits = 6);

}  // namespace cyclecreate

#endif  // CYCLECREATE_FORMATS_H_
