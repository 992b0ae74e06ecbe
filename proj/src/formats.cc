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


#include "cyclecreate/formats.h"

#include <charconv>
#include <sstream>

#include "cyclecreate/error.h"

namespace cyclecreate {
namespace {

// Splits into non-blank lines, remembering 1-based line numbers.
class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      std::string_view line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line.find_first_not_of(" \t") != std::string_view::npos) {
        lines_.push_back({number, line});
      }
      start = end + 1;
    }
  }

  bool done() const { return next_ == lines_.size(); }
  int line_number() const {
    return next_ < lines_.size() ? lines_[next_].first
                                 : (lines_.empty() ? 0 : lines_.back().first);
  }
  std::vector<std::string_view> next_tokens(const char* what) {
    if (done()) throw ParseError(std::string("missing ") + what, line_number());
    std::vector<std::string_view> tokens;
    std::string_view line = lines_[next_++].second;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    return tokens;
  }
  int last_line() const { return next_ == 0 ? 0 : lines_[next_ - 1].first; }
  void expect_end() const {
    if (!done()) throw ParseError("unexpected trailing data", line_number());
  }

 private:
  std::vector<std::pair<int, std::string_view>> lines_;
  std::size_t next_ = 0;
};

long long to_integer(std::string_view token, int line) {
  long long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("expected an integer, got '" + std::string(token) + "'",
                     line);
  }
  return value;
}

int to_count(std::string_view token, int line) {
  const long long v = to_integer(token, line);
  if (v < 0 || v > (1LL << 30)) {
    throw ParseError("count out of range: " + std::string(token), line);
  }
  return static_cast<int>(v);
}

// Parses the "<tag> a [b]" header.
std::vector<int> header(LineReader& in, std::string_view tag,
                        std::size_t fields) {
  const auto tokens = in.next_tokens("header");
  const int line = in.last_line();
  if (tokens.size() != fields + 1 || tokens[0] != tag) {
    throw ParseError("expected header '" + std::string(tag) + "' with " +
                         std::to_string(fields) + " field(s)",
                     line);
  }
  std::vector<int> out;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    out.push_back(to_count(tokens[i], line));
  }
  return out;
}

// Rewrites InvalidArgument from object constructors as a ParseError at the
// current line.
template <class F>
auto at_line(int line, F&& make) {
  try {
    return make();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), line);
  }
}

}  // namespace

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text) {
  LineReader in(text);
  const auto h = header(in, "graph", 2);
  std::vector<Edge> edges;
  for (int i = 0; i < h[1]; ++i) {
    const auto t = in.next_tokens("edge line");
    const int line = in.last_line();
    if (t.size() != 2) throw ParseError("expected 'u v'", line);
    const long long u = to_integer(t[0], line), v = to_integer(t[1], line);
    if (u >= v) throw ParseError("edge must be written with u < v", line);
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  in.expect_end();
  return at_line(in.last_line(), [&] { return Graph(h[0], std::move(edges)); });
}

std::string format_paths(int n, std::span<const HamPath> paths) {
  std::ostringstream out;
  out << "paths " << n << ' ' << paths.size() << '\n';
  for (const HamPath& p : paths) {
    if (p.vertex_count() != n) {
      throw InvalidArgument("path on the wrong number of vertices");
    }
    const HamPath c = p.canonical();
    for (int i = 1; i <= n; ++i) out << (i > 1 ? " " : "") << c.at(i);
    out << '\n';
  }
  return out.str();
}

PathFamily parse_paths(std::string_view text) {
  LineReader in(text);
  const auto h = header(in, "paths", 2);
  PathFamily out;
  out.n = h[0];
  for (int i = 0; i < h[1]; ++i) {
    const auto t = in.next_tokens("path line");
    const int line = in.last_line();
    if (static_cast<int>(t.size()) != out.n) {
      throw ParseError("expected " + std::to_string(out.n) + " labels", line);
    }
    std::vector<int> order;
    for (auto tok : t) order.push_back(static_cast<int>(to_integer(tok, line)));
    out.paths.push_back(at_line(line, [&] { return HamPath(order); }));
  }
  in.expect_end();
  return out;
}

std::string format_matchings(int n,
                             std::span<const PerfectMatching> matchings) {
  std::ostringstream out;
  out << "matchings " << n << ' ' << matchings.size() << '\n';
  for (const PerfectMatching& m : matchings) {
    if (m.vertex_count() != n) {
      throw InvalidArgument("matching on the wrong number of vertices");
    }
    bool first = true;
    for (const Edge& e : m.pairs()) {
      out << (first ? "" : " ") << e.u << '-' << e.v;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

MatchingFamily parse_matchings(std::string_view text) {
  LineReader in(text);
  const auto h = header(in, "matchings", 2);
  const int n = h[0];
  std::vector<PerfectMatching> matchings;
  for (int i = 0; i < h[1]; ++i) {
    const auto t = in.next_tokens("matching line");
    const int line = in.last_line();
    std::vector<Edge> pairs;
    for (auto tok : t) {
      const auto dash = tok.find('-');
      if (dash == std::string_view::npos) {
        throw ParseError("expected 'a-b', got '" + std::string(tok) + "'",
                         line);
      }
      pairs.push_back(
          {static_cast<int>(to_integer(tok.substr(0, dash), line)),
           static_cast<int>(to_integer(tok.substr(dash + 1), line))});
    }
    matchings.push_back(
        at_line(line, [&] { return PerfectMatching(n, std::move(pairs)); }));
  }
  in.expect_end();
  MatchingFamily out = make_matching_family(std::move(matchings));
  out.n = n;
  out.origin.resize(n);
  for (int v = 1; v <= n; ++v) out.origin[v - 1] = v;
  return out;
}

std::string format_matrix(const BiadjacencyMatrix& a) {
  if (!a.is_integral()) {
    throw InvalidArgument("matrix format holds integers only");
  }
  std::ostringstream out;
  out << "matrix " << a.size() << '\n';
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      out << (j > 0 ? " " : "") << numerator(a.at(i, j));
    }
    out << '\n';
  }
  return out.str();
}

BiadjacencyMatrix parse_matrix(std::string_view text) {
  LineReader in(text);
  const int m = header(in, "matrix", 1)[0];
  if (m < 1) throw ParseError("matrix must be at least 1x1", in.last_line());
  std::vector<Rational> entries;
  for (int i = 0; i < m; ++i) {
    const auto t = in.next_tokens("matrix row");
    const int line = in.last_line();
    if (static_cast<int>(t.size()) != m) {
      throw ParseError("expected " + std::to_string(m) + " entries", line);
    }
    for (auto tok : t) entries.emplace_back(to_integer(tok, line));
  }
  in.expect_end();
  return BiadjacencyMatrix(m, std::move(entries));
}

std::string format_permutations(int m, std::span<const Permutation> perms) {
  std::ostringstream out;
  out << "permutations " << m << ' ' << perms.size() << '\n';
  for (const Permutation& p : perms) {
    for (int i = 1; i <= p.size(); ++i) out << (i > 1 ? " " : "") << p(i);
    out << '\n';
  }
  return out.str();
}

std::vector<Permutation> parse_permutations(std::string_view text) {
  LineReader in(text);
  const auto h = header(in, "permutations", 2);
  std::vector<Permutation> out;
  for (int i = 0; i < h[1]; ++i) {
    const auto t = in.next_tokens("permutation line");
    const int line = in.last_line();
    if (static_cast<int>(t.size()) != h[0]) {
      throw ParseError("expected " + std::to_string(h[0]) + " images", line);
    }
    std::vector<int> images;
    for (auto tok : t) images.push_back(static_cast<int>(to_integer(tok, line)));
    out.push_back(at_line(line, [&] { return Permutation(images); }));
  }
  in.expect_end();
  return out;
}

std::string format_rational(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

std::string format_decimal(const Rational& x, int digits) {
  Integer num = numerator(x);
  const Integer den = denominator(x);
  std::string out;
  if (num < 0) {
    out = "-";
    num = -num;
  }
  out += Integer(num / den).str();
  if (digits > 0) {
    out += '.';
    Integer rest = num % den;
    for (int i = 0; i < digits; ++i) {
      rest *= 10;
      out += static_cast<char>('0' + static_cast<int>(rest / den));
      rest %= den;
    }
  }
  return out;
}

}  // namespace cyclecreate
