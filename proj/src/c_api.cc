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


#include "cyclecreate/cyclecreate.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "cyclecreate/bounds.h"
#include "cyclecreate/constructions.h"
#include "cyclecreate/counting.h"
#include "cyclecreate/error.h"
#include "cyclecreate/formats.h"
#include "cyclecreate/graph.h"
#include "cyclecreate/reduction.h"
#include "cyclecreate/search.h"
#include "cyclecreate/version.h"

struct cc_graph {
  cyclecreate::Graph value;
};
struct cc_paths {
  cyclecreate::PathFamily value;
};
struct cc_matchings {
  cyclecreate::MatchingFamily value;
};
struct cc_matrix {
  cyclecreate::BiadjacencyMatrix value;
};

namespace {

thread_local std::string last_error;

cc_status fail(cc_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
cc_status guarded(F&& body) {
  try {
    body();
    return CC_OK;
  } catch (const cyclecreate::ParseError& e) {
    return fail(CC_ERR_PARSE, e.what());
  } catch (const cyclecreate::InvalidArgument& e) {
    return fail(CC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const cyclecreate::LimitExceeded& e) {
    return fail(CC_ERR_LIMIT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CC_ERR_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(CC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CC_ERR_INTERNAL, "unknown error");
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw cyclecreate::InvalidArgument(what);
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void fill(const cyclecreate::FamilyReport& r, cc_family_report* out) {
  out->passed = r.passed ? 1 : 0;
  out->pairs_checked = r.pairs_checked;
  out->violations = r.violations;
  out->first_i = r.first_violation ? static_cast<int64_t>(r.first_violation->first) : -1;
  out->first_j = r.first_violation ? static_cast<int64_t>(r.first_violation->second) : -1;
}

cc_rational to_c(const cyclecreate::Rational& x) {
  return {numerator(x).convert_to<int64_t>(),
          denominator(x).convert_to<int64_t>()};
}

template <class T>
void fill_search(const cyclecreate::SearchResult<T>& r, cc_search_result* out) {
  out->vertices = r.vertices;
  out->edges = r.edges;
  out->clique_number = r.clique_number;
  out->has_independence = r.independence_number.has_value() ? 1 : 0;
  out->independence_number = r.independence_number.value_or(0);
}

}  // namespace

extern "C" {

const char* cc_version(void) { return CYCLECREATE_VERSION; }

const char* cc_last_error(void) { return last_error.c_str(); }

void cc_string_free(char* s) { std::free(s); }

size_t cc_default_max_enum(void) {
  if (const char* env = std::getenv("CYCLECREATE_MAX_ENUM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<size_t>(v);
  }
  return cyclecreate::kDefaultMaxObjects;
}

cc_status cc_graph_parse(const char* text, cc_graph** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new cc_graph{cyclecreate::parse_graph(text)};
  });
}

cc_status cc_graph_format(const cc_graph* g, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = duplicate(cyclecreate::format_graph(g->value));
  });
}

int cc_graph_vertex_count(const cc_graph* g) {
  return g ? g->value.vertex_count() : 0;
}

size_t cc_graph_edge_count(const cc_graph* g) {
  return g ? g->value.edge_count() : 0;
}

void cc_graph_free(cc_graph* g) { delete g; }

cc_status cc_paths_parse(const char* text, cc_paths** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new cc_paths{cyclecreate::parse_paths(text)};
  });
}

cc_status cc_paths_format(const cc_paths* p, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = duplicate(cyclecreate::format_paths(p->value.n, p->value.paths));
  });
}

int cc_paths_vertex_count(const cc_paths* p) { return p ? p->value.n : 0; }

size_t cc_paths_count(const cc_paths* p) {
  return p ? p->value.paths.size() : 0;
}

void cc_paths_free(cc_paths* p) { delete p; }

cc_status cc_matchings_parse(const char* text, cc_matchings** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new cc_matchings{cyclecreate::parse_matchings(text)};
  });
}

cc_status cc_matchings_format(const cc_matchings* m, char** out) {
  return guarded([&] {
    require(m && out, "null argument");
    *out = duplicate(
        cyclecreate::format_matchings(m->value.n, m->value.matchings));
  });
}

int cc_matchings_vertex_count(const cc_matchings* m) {
  return m ? m->value.n : 0;
}

size_t cc_matchings_count(const cc_matchings* m) {
  return m ? m->value.matchings.size() : 0;
}

cc_status cc_matchings_origin(const cc_matchings* m, int label,
                              int* original) {
  return guarded([&] {
    require(m && original, "null argument");
    require(label >= 1 && label <= m->value.n, "label out of range");
    *original = m->value.origin[label - 1];
  });
}

void cc_matchings_free(cc_matchings* m) { delete m; }

cc_status cc_matrix_parse(const char* text, cc_matrix** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new cc_matrix{cyclecreate::parse_matrix(text)};
  });
}

int cc_matrix_size(const cc_matrix* a) { return a ? a->value.size() : 0; }

void cc_matrix_free(cc_matrix* a) { delete a; }

cc_status cc_construct_lower_bound(int n, int k, cc_paths** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = new cc_paths{{n, cyclecreate::lower_bound_family(n, k)}};
  });
}

cc_status cc_construct_plane(int q, cc_graph** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = new cc_graph{cyclecreate::projective_plane_incidence(q).graph};
  });
}

cc_status cc_choose_plane_order(long long n_target, int* q,
                                long long* n_actual) {
  return guarded([&] {
    require(q && n_actual, "null argument");
    const auto order = cyclecreate::choose_plane_order(n_target);
    *q = order.q;
    *n_actual = order.vertex_count;
  });
}

cc_status cc_verify_paths(const cc_paths* family, int cycle_length,
                          int expect_creating, int threads,
                          cc_family_report* report) {
  return guarded([&] {
    require(family && report, "null argument");
    fill(cyclecreate::verify_pairwise(
             std::span<const cyclecreate::HamPath>(family->value.paths),
             cycle_length,
             expect_creating ? cyclecreate::PairExpectation::kCreating
                             : cyclecreate::PairExpectation::kNonCreating,
             threads),
         report);
  });
}

cc_status cc_verify_matchings(const cc_matchings* family, int cycle_length,
                              int expect_creating, int threads,
                              cc_family_report* report) {
  return guarded([&] {
    require(family && report, "null argument");
    fill(cyclecreate::verify_pairwise(
             std::span<const cyclecreate::PerfectMatching>(
                 family->value.matchings),
             cycle_length,
             expect_creating ? cyclecreate::PairExpectation::kCreating
                             : cyclecreate::PairExpectation::kNonCreating,
             threads),
         report);
  });
}

cc_status cc_validate_c2kfree(const cc_graph* g, int k,
                              cc_c2kfree_report* report) {
  return guarded([&] {
    require(g && report, "null argument");
    const auto r = cyclecreate::validate_c2kfree_bipartite_regular(g->value, k);
    report->passed = r.passed;
    report->bipartite = r.bipartite;
    report->regular = r.regular_degree.has_value();
    report->degree = r.regular_degree.value_or(0);
    report->girth = r.girth.value_or(0);
  });
}

cc_status cc_reduce_paths_to_matchings(const cc_paths* family, int k,
                                       cc_matchings** out,
                                       cc_reduction_report* report) {
  return guarded([&] {
    require(family && out, "null argument");
    auto r = cyclecreate::paths_to_matchings(family->value.paths, k);
    if (report) {
      report->input_size = r.input_size;
      report->distinct_triples = r.distinct_triples;
      report->class_size = r.class_size;
      report->terminal_groups = r.terminal_groups;
      report->output_size = r.output.matchings.size();
      report->output_vertices = r.output.n;
    }
    *out = new cc_matchings{std::move(r.output)};
  });
}

cc_status cc_reduce_shrink(const cc_matchings* family, cc_matchings** out,
                           int* partner) {
  return guarded([&] {
    require(family && out, "null argument");
    auto r = cyclecreate::ground_set_reduce(family->value);
    if (partner) *partner = r.partner;
    *out = new cc_matchings{std::move(r.family)};
  });
}

cc_status cc_triple_count(int n, int k, char** value) {
  return guarded([&] {
    require(value, "null argument");
    *value = duplicate(cyclecreate::triple_count(n, k).str());
  });
}

cc_status cc_search(cc_search_kind kind, int n, int cycle_length, int threads,
                    size_t max_objects, int with_independence,
                    cc_search_result* result, char** witness) {
  return guarded([&] {
    require(result, "null argument");
    cyclecreate::SearchOptions options;
    options.threads = threads;
    options.max_objects = max_objects ? max_objects : cc_default_max_enum();
    options.with_independence = with_independence != 0;
    std::string text;
    switch (kind) {
      case CC_SEARCH_H: {
        const auto r = cyclecreate::exact_H(n, cycle_length, options);
        fill_search(r, result);
        text = cyclecreate::format_paths(n, r.clique_witness);
        break;
      }
      case CC_SEARCH_M: {
        const auto r = cyclecreate::exact_M(n, cycle_length, options);
        fill_search(r, result);
        text = cyclecreate::format_matchings(n, r.clique_witness);
        break;
      }
      case CC_SEARCH_RP: {
        const auto r = cyclecreate::exact_RP(n, options);
        fill_search(r, result);
        text = cyclecreate::format_permutations(n, r.clique_witness);
        break;
      }
      default:
        throw cyclecreate::InvalidArgument("unknown search kind");
    }
    if (witness) *witness = duplicate(text);
  });
}

cc_status cc_count_matchings(const cc_graph* g, char** value) {
  return guarded([&] {
    require(g && value, "null argument");
    *value = duplicate(cyclecreate::count_perfect_matchings(g->value).str());
  });
}

cc_status cc_permanent(const cc_matrix* a, char** value) {
  return guarded([&] {
    require(a && value, "null argument");
    *value = duplicate(
        cyclecreate::format_rational(cyclecreate::permanent_ryser(a->value)));
  });
}

cc_status cc_check_lemma6(const cc_graph* g, cc_lemma6_report* report,
                          char** count, char** bound) {
  return guarded([&] {
    require(g && report, "null argument");
    const auto r = cyclecreate::lemma6_check(g->value);
    report->passed = r.passed;
    report->doubly_stochastic = r.doubly_stochastic;
    report->degree = r.degree;
    report->side = r.side;
    std::string count_text = r.count.str();
    std::string bound_text = cyclecreate::format_rational(r.bound);
    if (count) *count = duplicate(count_text);
    if (bound) *bound = duplicate(bound_text);
  });
}

cc_status cc_noncreating_family(const cc_graph* g, int k, cc_matchings** out) {
  return guarded([&] {
    require(g && out, "null argument");
    auto family = cyclecreate::make_matching_family(
        cyclecreate::build_noncreating_family(g->value, k));
    family.n = g->value.vertex_count();
    family.origin.resize(family.n);
    for (int v = 1; v <= family.n; ++v) family.origin[v - 1] = v;
    *out = new cc_matchings{std::move(family)};
  });
}

cc_status cc_check_claim4(const cc_paths* family, int k, int threads,
                          cc_claim4_report* report) {
  return guarded([&] {
    require(family && report, "null argument");
    const auto r =
        cyclecreate::check_claim_notused(family->value.paths, k, threads);
    report->classes = r.classes;
    report->sharing_pairs = r.sharing_pairs;
    report->violations = r.violations;
    report->first_i = r.first_violation ? static_cast<int64_t>(r.first_violation->first) : -1;
    report->first_j = r.first_violation ? static_cast<int64_t>(r.first_violation->second) : -1;
  });
}

cc_status cc_check_claim7(int m, cc_claim7_report* report) {
  return guarded([&] {
    require(report, "null argument");
    const auto r = cyclecreate::check_claim7(m);
    report->pairs = r.pairs;
    report->reversing_pairs = r.reversing_pairs;
    report->mismatches = r.mismatches;
  });
}

cc_status cc_bounds(int k, cc_exponents* out) {
  return guarded([&] {
    require(out, "null argument");
    const auto r = cyclecreate::exponent_report(k);
    static const std::string kSources[] = {
        to_string(cyclecreate::DegreeSource::kProjectivePlane),
        to_string(cyclecreate::DegreeSource::kGeneralizedPolygon),
        to_string(cyclecreate::DegreeSource::kAlgebraicEven),
        to_string(cyclecreate::DegreeSource::kAlgebraicOdd)};
    out->k = k;
    out->degree = to_c(r.degree_exponent);
    out->lower = to_c(r.path_lower);
    out->matching_upper = to_c(r.matching_upper);
    out->path_upper = to_c(r.path_upper);
    out->source = kSources[static_cast<int>(r.source)].c_str();
  });
}

}  // extern "C"
