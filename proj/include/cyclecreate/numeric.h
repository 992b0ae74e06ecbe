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


#ifndef CYCLECREATE_NUMERIC_H_
#define CYCLECREATE_NUMERIC_H_

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclecreate {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// n! exactly; n >= 0.
Integer factorial(int n);
// C(n, r) exactly; zero outside 0 <= r <= n.
Integer binomial(int n, int r);

}  // namespace cyclecreate

#endif  // CYCLECREATE_NUMERIC_H_
