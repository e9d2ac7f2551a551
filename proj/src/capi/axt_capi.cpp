// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "axt/axt.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "core/apps.hpp"
#include "core/bench.hpp"
#include "core/corpus.hpp"
#include "core/error.hpp"
#include "core/reports_json.hpp"
#include "core/spec_json.hpp"
#include "core/text_formats.hpp"
#include "core/verify.hpp"

using nlohmann::json;

struct axt_sampler {
  axt::Sampler s;
};
struct axt_assignment {
  axt::ValueAssignment v;
};
struct axt_accumulator {
  axt::StreamAccumulator acc;
};
struct axt_vector_sampler {
  axt::VectorSampler vs;
};
struct axt_corpus {
  std::vector<axt::CorpusEntry> entries;
};
struct axt_matrix {
  axt::Matrix m;
};
struct axt_graph {
  axt::Graph g;
};

namespace {

thread_local std::string last_error;

axt_status status_of(axt::ErrorKind kind) {
  switch (kind) {
    case axt::ErrorKind::InvalidArgument: return AXT_INVALID_ARGUMENT;
    case axt::ErrorKind::ShapeMismatch: return AXT_SHAPE_MISMATCH;
    case axt::ErrorKind::OutOfRange: return AXT_OUT_OF_RANGE;
    case axt::ErrorKind::TooLarge: return AXT_TOO_LARGE;
    case axt::ErrorKind::Parse: return AXT_PARSE;
  }
  return AXT_INTERNAL;
}

axt_status set_error(axt_status status, const std::string& msg) {
  last_error = msg;
  return status;
}

struct NullArgument {
  const char* name;
};

template <typename T>
T* need(T* p, const char* name) {
  if (!p) throw NullArgument{name};
  return p;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
axt_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return AXT_OK;
  } catch (const NullArgument& e) {
    return set_error(AXT_NULL_POINTER, std::string("null pointer: ") + e.name);
  } catch (const axt::Error& e) {
    return set_error(status_of(e.kind()), e.what());
  } catch (const json::exception& e) {
    return set_error(AXT_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(AXT_TOO_LARGE, "out of memory");
  } catch (const std::exception& e) {
    return set_error(AXT_INTERNAL, e.what());
  } catch (...) {
    return set_error(AXT_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const json& j) { *out = dup_string(j.dump()); }

json parse_json(const char* text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    axt::fail(axt::ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
}

axt::SizeParams size_of(const char* size_json) {
  return size_json ? axt::size_params_from_json(parse_json(size_json)) : axt::SizeParams{};
}

axt::TailScheme tail_scheme(const std::string& name) {
  const auto s = axt::parse_scheme(name);
  if (s == axt::Scheme::Affine2Indep) return axt::TailScheme::Affine2Indep;
  if (s == axt::Scheme::ModPrime) return axt::TailScheme::ModPrime;
  axt::fail(axt::ErrorKind::InvalidArgument, "tail bounds exist for affine2indep and modprime only");
}

}  // namespace

extern "C" {

const char* axt_version(void) { return "1.0.0"; }

const char* axt_status_string(axt_status status) {
  switch (status) {
    case AXT_OK: return "ok";
    case AXT_INVALID_ARGUMENT: return "invalid argument";
    case AXT_SHAPE_MISMATCH: return "shape mismatch";
    case AXT_OUT_OF_RANGE: return "out of range";
    case AXT_TOO_LARGE: return "too large";
    case AXT_PARSE: return "parse error";
    case AXT_NULL_POINTER: return "null pointer";
    case AXT_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* axt_last_error(void) { return last_error.c_str(); }

void axt_string_free(char* s) { std::free(s); }

axt_status axt_sampler_from_json(const char* spec_json, axt_sampler** out) {
  return guarded([&] {
    need(out, "out");
    *out = new axt_sampler{axt::Sampler(axt::spec_from_json(parse_json(need(spec_json, "spec_json"))))};
  });
}

axt_status axt_sampler_random(const char* scheme, const char* size_json, uint64_t seed,
                              axt_sampler** out) {
  return guarded([&] {
    need(out, "out");
    const auto spec = axt::random_spec(axt::parse_scheme(need(scheme, "scheme")), size_of(size_json), seed);
    *out = new axt_sampler{axt::Sampler(spec)};
  });
}

axt_status axt_sampler_sample(const axt_sampler* s, uint64_t key, int* out) {
  return guarded([&] { *need(out, "out") = need(s, "sampler")->s.sample(key) ? 1 : 0; });
}

axt_status axt_sampler_spec_json(const axt_sampler* s, char** out) {
  return guarded([&] { emit(need(out, "out"), axt::spec_to_json(need(s, "sampler")->s.spec())); });
}

axt_status axt_sampler_universe(const axt_sampler* s, char** out) {
  return guarded([&] { *need(out, "out") = dup_string(need(s, "sampler")->s.universe().name()); });
}

void axt_sampler_free(axt_sampler* s) { delete s; }

axt_status axt_assignment_new(const char* universe, const char* monoid, axt_assignment** out) {
  return guarded([&] {
    need(out, "out");
    *out = new axt_assignment{axt::ValueAssignment(axt::Universe::parse(need(universe, "universe")),
                                                   axt::MonoidTag::parse(need(monoid, "monoid")))};
  });
}

axt_status axt_assignment_parse(const char* text, const char* universe, const char* monoid,
                                axt_assignment** out) {
  return guarded([&] {
    need(out, "out");
    *out = new axt_assignment{axt::parse_assignment(need(text, "text"),
                                                    axt::Universe::parse(need(universe, "universe")),
                                                    axt::MonoidTag::parse(need(monoid, "monoid")))};
  });
}

axt_status axt_assignment_from_json(const char* text, axt_assignment** out) {
  return guarded([&] {
    need(out, "out");
    *out = new axt_assignment{axt::assignment_from_json(parse_json(need(text, "json")))};
  });
}

axt_status axt_assignment_set(axt_assignment* a, uint64_t key, const char* value) {
  return guarded([&] {
    need(a, "assignment");
    a->v.set(key, axt::MonoidValue::parse(a->v.tag(), need(value, "value")));
  });
}

axt_status axt_assignment_add(axt_assignment* a, uint64_t key, const char* value) {
  return guarded([&] {
    need(a, "assignment");
    a->v.add(key, axt::MonoidValue::parse(a->v.tag(), need(value, "value")));
  });
}

axt_status axt_assignment_size(const axt_assignment* a, size_t* out) {
  return guarded([&] { *need(out, "out") = need(a, "assignment")->v.size(); });
}

axt_status axt_assignment_to_json(const axt_assignment* a, char** out) {
  return guarded([&] { emit(need(out, "out"), axt::assignment_to_json(need(a, "assignment")->v)); });
}

void axt_assignment_free(axt_assignment* a) { delete a; }

axt_status axt_sampled_sum(const axt_sampler* s, const axt_assignment* a, char** value) {
  return guarded([&] {
    *need(value, "value") =
        dup_string(axt::sampled_sum(need(s, "sampler")->s, need(a, "assignment")->v).to_string());
  });
}

axt_status axt_good_measure(const axt_sampler* s, const axt_assignment* a, char** out) {
  return guarded([&] {
    need(out, "out");
    const auto hash = need(s, "sampler")->s.threshold_hash();
    if (!hash) axt::fail(axt::ErrorKind::InvalidArgument, "good measure needs a threshold scheme");
    emit(out, axt::to_json(axt::good_measure(*hash, need(a, "assignment")->v)));
  });
}

axt_status axt_accumulator_new(const axt_sampler* const* samplers, size_t count,
                               const char* monoid, axt_accumulator** out) {
  return guarded([&] {
    need(out, "out");
    need(samplers, "samplers");
    std::vector<axt::Sampler> copies;
    for (size_t i = 0; i < count; ++i) copies.push_back(need(samplers[i], "samplers[i]")->s);
    *out = new axt_accumulator{
        axt::StreamAccumulator(std::move(copies), axt::MonoidTag::parse(need(monoid, "monoid")))};
  });
}

axt_status axt_accumulator_update(axt_accumulator* acc, uint64_t key, const char* value) {
  return guarded([&] {
    need(acc, "accumulator");
    acc->acc.update(key, axt::MonoidValue::parse(acc->acc.tag(), need(value, "value")));
  });
}

axt_status axt_accumulator_digest(const axt_accumulator* acc, char** out) {
  return guarded([&] {
    need(out, "out");
    json j = json::array();
    for (const auto& v : need(acc, "accumulator")->acc.digest()) j.push_back(v.to_string());
    emit(out, j);
  });
}

void axt_accumulator_free(axt_accumulator* acc) { delete acc; }

axt_status axt_vector_sampler_random(size_t d, const char* scheme, const char* size_json,
                                     uint64_t seed, axt_vector_sampler** out) {
  return guarded([&] {
    need(out, "out");
    axt::Rng rng(seed);
    *out = new axt_vector_sampler{
        axt::VectorSampler::random(d, axt::parse_scheme(need(scheme, "scheme")), size_of(size_json), rng)};
  });
}

axt_status axt_vector_sampler_sums(const axt_vector_sampler* vs, const axt_assignment* a,
                                   char** out) {
  return guarded([&] {
    need(out, "out");
    const auto sums = axt::vector_sums(need(vs, "vector_sampler")->vs, need(a, "assignment")->v);
    json values = json::array();
    for (const auto& v : sums.sums) values.push_back(v.to_string());
    emit(out, {{"sums", values}, {"all_zero", sums.all_zero}});
  });
}

axt_status axt_vector_sampler_bit(const axt_vector_sampler* vs, uint64_t key, int* out) {
  return guarded([&] {
    need(vs, "vector_sampler");
    if (!vs->vs.universe().contains(key))
      axt::fail(axt::ErrorKind::OutOfRange, "key " + std::to_string(key) + " outside universe");
    *need(out, "out") = axt::small_bias_bit(vs->vs, key) ? 1 : 0;
  });
}

void axt_vector_sampler_free(axt_vector_sampler* vs) { delete vs; }

axt_status axt_corpus_builtin(const char* universe, axt_corpus** out) {
  return guarded([&] {
    need(out, "out");
    *out = new axt_corpus{axt::builtin_corpus(axt::Universe::parse(need(universe, "universe")))};
  });
}

size_t axt_corpus_size(const axt_corpus* c) { return c ? c->entries.size() : 0; }

unsigned axt_corpus_version(void) { return axt::kCorpusVersion; }

axt_status axt_corpus_name(const axt_corpus* c, size_t i, const char** out) {
  return guarded([&] {
    need(out, "out");
    if (i >= need(c, "corpus")->entries.size()) axt::fail(axt::ErrorKind::OutOfRange, "corpus index out of range");
    *out = c->entries[i].name.c_str();
  });
}

axt_status axt_corpus_get(const axt_corpus* c, size_t i, axt_assignment** out) {
  return guarded([&] {
    need(out, "out");
    if (i >= need(c, "corpus")->entries.size()) axt::fail(axt::ErrorKind::OutOfRange, "corpus index out of range");
    *out = new axt_assignment{c->entries[i].values};
  });
}

void axt_corpus_free(axt_corpus* c) { delete c; }

axt_status axt_verify_exhaustive(const char* scheme, uint64_t size, const axt_assignment* a,
                                 unsigned workers, char** out) {
  return guarded([&] {
    need(out, "out");
    const auto s = axt::parse_scheme(need(scheme, "scheme"));
    const auto& v = need(a, "assignment")->v;
    const auto report = axt::exhaustive_prob(s, size, v, workers);
    const auto bound = axt::theorem_bound(s, size, v.size());
    json j = axt::to_json(report);
    j["bound"] = axt::rational_to_string(bound);
    j["meets_bound"] = report.exact && *report.exact >= bound;
    emit(out, j);
  });
}

axt_status axt_verify_mc(const char* scheme, const char* size_json, const axt_assignment* a,
                         uint64_t trials, uint64_t seed, char** out) {
  return guarded([&] {
    need(out, "out");
    emit(out, axt::to_json(axt::mc_prob(axt::parse_scheme(need(scheme, "scheme")), size_of(size_json),
                                        need(a, "assignment")->v, trials, seed)));
  });
}

axt_status axt_lemma_good_sum(unsigned w, uint64_t z, uint64_t k, char** out) {
  return guarded([&] { emit(need(out, "out"), axt::to_json(axt::check_good_sum_lemma(w, z, k))); });
}

axt_status axt_lemma_good_sum_sweep(unsigned w_min, unsigned w_max, unsigned workers, char** out) {
  return guarded(
      [&] { emit(need(out, "out"), axt::to_json(axt::sweep_good_sum_lemma(w_min, w_max, workers))); });
}

axt_status axt_lemma_tail(const char* scheme, uint64_t p, const uint64_t* keys, size_t count,
                          uint64_t x, uint64_t delta, char** out) {
  return guarded([&] {
    need(out, "out");
    if (count) need(keys, "keys");
    const std::vector<std::uint64_t> set(keys, keys + count);
    emit(out, axt::to_json(axt::check_tail_bounds(tail_scheme(need(scheme, "scheme")), p, set, x, delta)));
  });
}

axt_status axt_lemma_tail_sweep(const char* scheme, uint64_t p, size_t max_set,
                                uint64_t max_delta, char** out) {
  return guarded([&] {
    need(out, "out");
    emit(out, axt::to_json(axt::sweep_tail_bounds(tail_scheme(need(scheme, "scheme")), p, max_set, max_delta)));
  });
}

axt_status axt_ams_check(const char* mode, const uint64_t* keys, const int64_t* values,
                         size_t count, const char* field, uint64_t trials, uint64_t seed,
                         char** out) {
  return guarded([&] {
    need(out, "out");
    if (count) {
      need(keys, "keys");
      need(values, "values");
    }
    const std::string m = need(mode, "mode");
    axt::MomentReport::Mode md;
    if (m == "exact") md = axt::MomentReport::Mode::ExactGF2e;
    else if (m == "mc") md = axt::MomentReport::Mode::MonteCarlo;
    else axt::fail(axt::ErrorKind::InvalidArgument, "ams mode must be 'exact' or 'mc'");
    axt::AmsParams params;
    if (field) params.field = axt::PolyField::parse(field);
    params.trials = trials;
    params.seed = seed;
    emit(out, axt::to_json(axt::ams_moment_check(md, {keys, keys + count}, {values, values + count}, params)));
  });
}

axt_status axt_counterexamples(const char* options_json, char** out) {
  return guarded([&] {
    need(out, "out");
    axt::CounterexampleOptions opts;
    if (options_json) {
      const json j = parse_json(options_json);
      if (!j.is_object()) axt::fail(axt::ErrorKind::Parse, "counterexample options must be an object");
      opts.parity_max_u = j.value("parity_max_u", opts.parity_max_u);
      opts.mulshift_x = j.value("mulshift_x", opts.mulshift_x);
      opts.mulshift_y = j.value("mulshift_y", opts.mulshift_y);
      opts.random_tables = j.value("random_tables", opts.random_tables);
      opts.seed = j.value("seed", opts.seed);
      opts.prop2_n = j.value("prop2_n", opts.prop2_n);
    }
    emit(out, axt::to_json(axt::counterexample_suite(opts)));
  });
}

axt_status axt_smallbias(const uint64_t* keys, size_t count, size_t d, const char* scheme,
                         const char* size_json, uint64_t trials, uint64_t seed, char** out) {
  return guarded([&] {
    need(out, "out");
    if (count) need(keys, "keys");
    emit(out, axt::to_json(axt::small_bias_mc({keys, keys + count}, d, axt::parse_scheme(need(scheme, "scheme")),
                                              size_of(size_json), trials, seed)));
  });
}

axt_status axt_matrix_new(size_t n, const uint64_t* entries, axt_matrix** out) {
  return guarded([&] {
    need(out, "out");
    if (!entries) {
      *out = new axt_matrix{axt::Matrix(n)};
      return;
    }
    *out = new axt_matrix{axt::Matrix(n, std::vector<std::uint64_t>(entries, entries + n * n))};
  });
}

axt_status axt_matrix_parse(const char* text, axt_matrix** out) {
  return guarded([&] {
    need(out, "out");
    *out = new axt_matrix{axt::parse_matrix(need(text, "text"))};
  });
}

axt_status axt_matrix_multiply(const axt_matrix* a, const axt_matrix* b, axt_matrix** out) {
  return guarded([&] {
    need(out, "out");
    *out = new axt_matrix{need(a, "a")->m * need(b, "b")->m};
  });
}

size_t axt_matrix_dim(const axt_matrix* m) { return m ? m->m.n() : 0; }

axt_status axt_matrix_get(const axt_matrix* m, size_t i, size_t j, uint64_t* out) {
  return guarded([&] {
    need(out, "out");
    if (i >= need(m, "matrix")->m.n() || j >= m->m.n()) axt::fail(axt::ErrorKind::OutOfRange, "matrix index out of range");
    *out = m->m.at(i, j);
  });
}

axt_status axt_matrix_set(axt_matrix* m, size_t i, size_t j, uint64_t value) {
  return guarded([&] {
    if (i >= need(m, "matrix")->m.n() || j >= m->m.n()) axt::fail(axt::ErrorKind::OutOfRange, "matrix index out of range");
    m->m.at(i, j) = value;
  });
}

axt_status axt_matrix_to_text(const axt_matrix* m, char** out) {
  return guarded([&] { *need(out, "out") = dup_string(axt::format_matrix(need(m, "matrix")->m)); });
}

void axt_matrix_free(axt_matrix* m) { delete m; }

axt_status axt_freivald(const axt_matrix* a, const axt_matrix* b, const axt_matrix* c,
                        size_t rounds, uint64_t seed, char** out) {
  return guarded([&] {
    need(out, "out");
    emit(out, axt::to_json(axt::freivald_verify(need(a, "a")->m, need(b, "b")->m, need(c, "c")->m, rounds, seed)));
  });
}

axt_status axt_stream_test(const char* stream_text, const axt_assignment* claimed, size_t d,
                           uint64_t seed, char** out) {
  return guarded([&] {
    need(out, "out");
    const auto& v = need(claimed, "claimed")->v;
    const auto stream = axt::parse_stream(need(stream_text, "stream_text"), v.tag());
    emit(out, axt::to_json(axt::stream_equal_test(stream, v, d, seed)));
  });
}

axt_status axt_graph_parse(const char* text, axt_graph** out) {
  return guarded([&] {
    need(out, "out");
    *out = new axt_graph{axt::parse_graph(need(text, "text"))};
  });
}

void axt_graph_free(axt_graph* g) { delete g; }

axt_status axt_tree_test(const axt_graph* g, size_t d, uint64_t seed, char** out) {
  return guarded([&] { emit(need(out, "out"), axt::to_json(axt::tree_edge_test(need(g, "graph")->g, d, seed))); });
}

axt_status axt_bench(uint64_t iterations, uint64_t seed, char** out, char** table) {
  return guarded([&] {
    need(out, "out");
    const auto report = axt::run_bench(iterations, seed);
    std::string text = table ? axt::format_bench_table(report) : std::string();
    emit(out, axt::to_json(report));
    if (table) *table = dup_string(text);
  });
}

}  // extern "C"
