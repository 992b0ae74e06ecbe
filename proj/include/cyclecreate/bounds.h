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


// Exact exponents of n in the bounds n^{e n - o(n)} on H(n, 2k) and
// M(n, 2k), driven by the degree exponent of the densest known bipartite
// regular C_{2k}-free graphs.

#ifndef CYCLECREATE_BOUNDS_H_
#define CYCLECREATE_BOUNDS_H_

#include <string>

#include "cyclecreate/numeric.h"

namespace cyclecreate {

enum class DegreeSource {
  kProjectivePlane,     // 2k = 4
  kGeneralizedPolygon,  // 2k = 6 and 2k = 10
  kAlgebraicEven,       // other even k
  kAlgebraicOdd,        // other odd k
};

std::string to_string(DegreeSource source);

struct ExponentReport {
  int k = 0;
  Rational degree_exponent;  // c(k)
  Rational matching_upper;   // 1/2 - c/2
  Rational path_upper;       // 1 - c/k
  Rational path_lower;       // 1/k
  DegreeSource source = DegreeSource::kProjectivePlane;
};

// 1/k for k in {2, 3, 5}, otherwise 2/(3k-2) for even k and 2/(3k-3) for odd
// k. All functions here throw InvalidArgument for k < 2.
Rational degree_exponent(int k);
DegreeSource degree_source(int k);
Rational path_upper_exponent(int k);
Rational matching_upper_exponent(int k);
Rational lower_bound_exponent(int k);
ExponentReport exponent_report(int k);

}  // namespace cyclecreate

#endif  // CYCLECREATE_BOUNDS_H_
