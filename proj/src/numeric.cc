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


#include "cyclecreate/numeric.h"

#include <algorithm>

#include "cyclecreate/error.h"

namespace cyclecreate {

Integer factorial(int n) {
  if (n < 0) throw InvalidArgument("factorial of a negative number");
  Integer out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

Integer binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  Integer out = 1;
  for (int i = 1; i <= r; ++i) {
    out *= n - r + i;
    out /= i;
  }
  return out;
}

}  // namespace cyclecreate
