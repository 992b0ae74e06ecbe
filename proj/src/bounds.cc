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


#include "cyclecreate/bounds.h"

#include "cyclecreate/error.h"

namespace cyclecreate {
namespace {

void require_k(int k) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
}

}  // namespace

std::string to_string(DegreeSource source) {
  switch (source) {
    case DegreeSource::kProjectivePlane:
      return "projective-plane";
    case DegreeSource::kGeneralizedPolygon:
      return "generalized-polygon";
    case DegreeSource::kAlgebraicEven:
      return "algebraic-even";
    case DegreeSource::kAlgebraicOdd:
      return "algebraic-odd";
  }
  return "unknown";
}

DegreeSource degree_source(int k) {
  require_k(k);
  if (k == 2) return DegreeSource::kProjectivePlane;
  if (k == 3 || k == 5) return DegreeSource::kGeneralizedPolygon;
  return k % 2 == 0 ? DegreeSource::kAlgebraicEven
                    : DegreeSource::kAlgebraicOdd;
}

Rational degree_exponent(int k) {
  switch (degree_source(k)) {
    case DegreeSource::kProjectivePlane:
    case DegreeSource::kGeneralizedPolygon:
      return Rational(1, k);
    case DegreeSource::kAlgebraicEven:
      return Rational(2, 3 * k - 2);
    case DegreeSource::kAlgebraicOdd:
      return Rational(2, 3 * k - 3);
  }
  return 0;
}

Rational path_upper_exponent(int k) {
  return Rational(1) - degree_exponent(k) / k;
}

Rational matching_upper_exponent(int k) {
  return Rational(1, 2) - degree_exponent(k) / 2;
}

Rational lower_bound_exponent(int k) {
  require_k(k);
  return Rational(1, k);
}

ExponentReport exponent_report(int k) {
  ExponentReport r;
  r.k = k;
  r.source = degree_source(k);
  r.degree_exponent = degree_exponent(k);
  r.matching_upper = matching_upper_exponent(k);
  r.path_upper = path_upper_exponent(k);
  r.path_lower = lower_bound_exponent(k);
  return r;
}

}  // namespace cyclecreate
