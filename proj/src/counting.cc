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


#include "cyclecreate/counting.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "cyclecreate/constructions.h"
#include "cyclecreate/error.h"

namespace cyclecreate {
namespace {

using Int128 = __int128;

Rational to_rational(Int128 x) {
  const bool negative = x < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(x)
                                   : static_cast<unsigned __int128>(x);
  Integer out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return Rational(negative ? Integer(-out) : out);
}

Rational to_rational(const Integer& x) { return Rational(x); }
Rational to_rational(const Rational& x) { return x; }

// Entries converted to the working type T.
template <class T>
std::vector<T> entries_as(const BiadjacencyMatrix& a) {
  const int m = a.size();
  std::vector<T> out(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if constexpr (std::is_same_v<T, Rational>) {
        out[i * m + j] = a.at(i, j);
      } else if constexpr (std::is_same_v<T, Integer>) {
        out[i * m + j] = numerator(a.at(i, j));
      } else {
        out[i * m + j] =
            static_cast<T>(numerator(a.at(i, j)).convert_to<long long>());
      }
    }
  }
  return out;
}

template <class T>
Rational ryser(const BiadjacencyMatrix& a) {
  const int m = a.size();
  const std::vector<T> e = entries_as<T>(a);
  std::vector<T> row_sum(m, T(0));
  T total(0);
  std::uint64_t gray = 0;
  const std::uint64_t subsets = std::uint64_t{1} << m;
  for (std::uint64_t step = 1; step < subsets; ++step) {
    const int col = std::countr_zero(step);
    gray ^= std::uint64_t{1} << col;
    const bool added = (gray >> col) & 1U;
    for (int i = 0; i < m; ++i) {
      if (added) {
        row_sum[i] += e[i * m + col];
      } else {
        row_sum[i] -= e[i * m + col];
      }
    }
    T product(1);
    for (int i = 0; i < m && product != 0; ++i) product *= row_sum[i];
    if (std::popcount(gray) % 2 == 0) {
      total += product;
    } else {
      total -= product;
    }
  }
  if (m % 2 != 0) total = -total;
  return to_rational(total);
}

template <class T>
void naive_rows(const std::vector<T>& e, int m, int row,
                std::vector<char>& used, const T& product, T& total) {
  if (row == m) {
    total += product;
    return;
  }
  for (int j = 0; j < m; ++j) {
    if (used[j] || e[row * m + j] == 0) continue;
    used[j] = 1;
    naive_rows(e, m, row + 1, used, T(product * e[row * m + j]), total);
    used[j] = 0;
  }
}

template <class T>
Rational naive(const BiadjacencyMatrix& a) {
  const int m = a.size();
  const std::vector<T> e = entries_as<T>(a);
  std::vector<char> used(m, 0);
  T total(0);
  naive_rows(e, m, 0, used, T(1), total);
  return to_rational(total);
}

// True when every Ryser intermediate fits in a signed 128-bit integer:
// 2^m * (max absolute row sum)^m < 2^126.
bool fits_int128(const BiadjacencyMatrix& a) {
  const int m = a.size();
  Integer widest = 0;
  for (int i = 0; i < m; ++i) {
    Integer s = 0;
    for (int j = 0; j < m; ++j) s += abs(numerator(a.at(i, j)));
    widest = std::max(widest, s);
  }
  Integer bound = boost::multiprecision::pow(widest, m);
  bound <<= m;
  return bound < (Integer(1) << 126);
}

void require_square(const BiadjacencyMatrix& a) {
  if (a.size() < 1) throw InvalidArgument("matrix must be at least 1x1");
}

}  // namespace

BiadjacencyMatrix::BiadjacencyMatrix(int m)
    : m_(m), entries_(m < 0 ? 0 : static_cast<std::size_t>(m) * m) {
  if (m < 0) throw InvalidArgument("negative matrix size");
}

BiadjacencyMatrix::BiadjacencyMatrix(int m, std::vector<Rational> entries)
    : BiadjacencyMatrix(m) {
  if (entries.size() != entries_.size()) {
    throw InvalidArgument("matrix of size " + std::to_string(m) + " needs " +
                          std::to_string(entries_.size()) + " entries");
  }
  entries_ = std::move(entries);
}

bool BiadjacencyMatrix::is_integral() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) {
    return denominator(x) == 1;
  });
}

BiadjacencyMatrix BiadjacencyMatrix::scaled(const Rational& factor) const {
  BiadjacencyMatrix out = *this;
  for (Rational& x : out.entries_) x *= factor;
  return out;
}

Rational permanent_ryser(const BiadjacencyMatrix& a) {
  require_square(a);
  if (a.size() > kMaxRyserPermanent) {
    throw LimitExceeded("Ryser permanent supports m <= " +
                        std::to_string(kMaxRyserPermanent));
  }
  if (!a.is_integral()) return ryser<Rational>(a);
  if (fits_int128(a)) return ryser<Int128>(a);
  return ryser<Integer>(a);
}

Rational permanent_naive(const BiadjacencyMatrix& a) {
  require_square(a);
  if (a.size() > kMaxNaivePermanent) {
    throw LimitExceeded("naive permanent supports m <= " +
                        std::to_string(kMaxNaivePermanent));
  }
  if (!a.is_integral()) return naive<Rational>(a);
  return naive<Integer>(a);
}

BiadjacencyMatrix biadjacency(const Graph& g) {
  const auto coloring = two_coloring(g);
  if (!coloring) throw InvalidArgument("graph is not bipartite");
  BiadjacencyMatrix out;
  std::vector<int> rows, cols;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    ((*coloring)[v - 1] == 0 ? rows : cols).push_back(v);
  }
  if (rows.size() != cols.size()) {
    throw InvalidArgument("color classes have sizes " +
                          std::to_string(rows.size()) + " and " +
                          std::to_string(cols.size()));
  }
  const int m = static_cast<int>(rows.size());
  out = BiadjacencyMatrix(m);
  std::vector<int> col_index(g.vertex_count() + 1, -1);
  for (int j = 0; j < m; ++j) col_index[cols[j]] = j;
  for (int i = 0; i < m; ++i) {
    for (int w : g.neighbors(rows[i])) out.set(i, col_index[w], 1);
  }
  out.row_labels = std::move(rows);
  out.col_labels = std::move(cols);
  return out;
}

Integer count_perfect_matchings(const Graph& g) {
  const BiadjacencyMatrix a = biadjacency(g);
  if (a.size() == 0) return 1;
  return numerator(permanent_ryser(a));
}

namespace {

void extend_graph_matching(const Graph& g, std::vector<int>& partner,
                           std::vector<Edge>& pairs,
                           std::vector<PerfectMatching>& out) {
  const int n = g.vertex_count();
  int u = 1;
  while (u <= n && partner[u] != 0) ++u;
  if (u > n) {
    out.emplace_back(n, pairs);
    return;
  }
  for (int v : g.neighbors(u)) {
    if (partner[v] != 0) continue;
    partner[u] = v;
    partner[v] = u;
    pairs.push_back(make_edge(u, v));
    extend_graph_matching(g, partner, pairs, out);
    pairs.pop_back();
    partner[u] = partner[v] = 0;
  }
}

}  // namespace

std::vector<PerfectMatching> enumerate_graph_perfect_matchings(const Graph& g) {
  std::vector<PerfectMatching> out;
  if (g.vertex_count() % 2 != 0) return out;
  std::vector<int> partner(g.vertex_count() + 1, 0);
  std::vector<Edge> pairs;
  extend_graph_matching(g, partner, pairs, out);
  return out;
}

Rational vdw_bound(int m) {
  if (m < 1) throw InvalidArgument("m must be at least 1");
  return Rational(factorial(m), boost::multiprecision::pow(Integer(m), m));
}

Lemma6Report lemma6_check(const Graph& g) {
  const BiadjacencyMatrix a = biadjacency(g);
  const int m = a.size();
  if (m == 0) throw InvalidArgument("empty graph");
  const int r = g.degree(1);
  for (int v = 2; v <= g.vertex_count(); ++v) {
    if (g.degree(v) != r) throw InvalidArgument("graph is not regular");
  }
  if (r == 0) throw InvalidArgument("graph has no edges");

  Lemma6Report report;
  report.degree = r;
  report.side = m;
  report.count = numerator(permanent_ryser(a));
  report.bound = Rational(boost::multiprecision::pow(Integer(r), m)) *
                 vdw_bound(m);

  const BiadjacencyMatrix scaled = a.scaled(Rational(1, r));
  bool stochastic = true;
  for (int i = 0; i < m && stochastic; ++i) {
    Rational row = 0, col = 0;
    for (int j = 0; j < m; ++j) {
      row += scaled.at(i, j);
      col += scaled.at(j, i);
    }
    stochastic = row == 1 && col == 1;
  }
  report.doubly_stochastic = stochastic;
  report.passed = stochastic && Rational(report.count) >= report.bound;
  return report;
}

std::vector<PerfectMatching> build_noncreating_family(const Graph& g, int k) {
  const C2kFreeReport check = validate_c2kfree_bipartite_regular(g, k);
  if (!check.passed) {
    throw InvalidArgument("graph rejected: " + check.failure);
  }
  return enumerate_graph_perfect_matchings(g);
}

std::vector<PerfectMatching> pad_with_fixed_matching(
    std::span<const PerfectMatching> family, int new_n) {
  std::vector<PerfectMatching> out;
  for (const PerfectMatching& m : family) {
    const int n = m.vertex_count();
    if (new_n < n || (new_n - n) % 2 != 0) {
      throw InvalidArgument("padding must add an even number of vertices");
    }
    std::vector<Edge> pairs(m.pairs().begin(), m.pairs().end());
    for (int v = n + 1; v < new_n; v += 2) pairs.push_back({v, v + 1});
    out.emplace_back(new_n, std::move(pairs));
  }
  return out;
}

}  // namespace cyclecreate
