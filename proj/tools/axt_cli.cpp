// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

// Command-line front end over the axt C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "axt/axt.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(axt_status status) {
  if (status != AXT_OK)
    throw InputError(std::string(axt_status_string(status)) + ": " + axt_last_error());
}

// Takes ownership of a library string and parses it.
json take_json(char* s) {
  json j = json::parse(s);
  axt_string_free(s);
  return j;
}

std::string take_string(char* s) {
  std::string out(s);
  axt_string_free(s);
  return out;
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using AssignmentPtr = std::unique_ptr<axt_assignment, Deleter<axt_assignment, axt_assignment_free>>;
using CorpusPtr = std::unique_ptr<axt_corpus, Deleter<axt_corpus, axt_corpus_free>>;
using MatrixPtr = std::unique_ptr<axt_matrix, Deleter<axt_matrix, axt_matrix_free>>;
using GraphPtr = std::unique_ptr<axt_graph, Deleter<axt_graph, axt_graph_free>>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("AXT_SEED")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && *env != '\0') return v;
    throw InputError("AXT_SEED must be a decimal integer");
  }
  return 1;
}

struct Common {
  bool json_out = false;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

void print_json(const json& j) { std::cout << j.dump() << "\n"; }

// Size parameters shared by the commands that draw samplers.
struct SizeFlags {
  std::optional<unsigned> w;
  std::optional<std::uint64_t> p;
  std::optional<std::string> field;
  std::optional<unsigned> k;
  std::optional<unsigned> chars, char_bits, out_bits;
  std::optional<std::uint64_t> u, n;

  void add(CLI::App* cmd) {
    cmd->add_option("--w", w, "word size for oddmul2w / mulshift");
    cmd->add_option("--p", p, "prime for modprime / affine2indep");
    cmd->add_option("--field", field, "polynomial field, gf2e:<e> or mersenne:<q>");
    cmd->add_option("--k", k, "independence of the polynomial scheme");
    cmd->add_option("--chars", chars, "tabulation characters");
    cmd->add_option("--char-bits", char_bits, "tabulation character width");
    cmd->add_option("--out-bits", out_bits, "tabulation output width");
    cmd->add_option("--u", u, "universe size for materialized schemes");
    cmd->add_option("--n", n, "half size for the prop2 construction");
  }

  json to_json() const {
    json j = json::object();
    if (w) j["w"] = *w;
    if (p) j["p"] = *p;
    if (field) j["field"] = *field;
    if (k) j["k"] = *k;
    if (chars) j["chars"] = *chars;
    if (char_bits) j["char_bits"] = *char_bits;
    if (out_bits) j["out_bits"] = *out_bits;
    if (u) j["u"] = *u;
    if (n) j["n"] = *n;
    return j;
  }
};

// Universe string for a threshold scheme and its size flag.
std::string universe_for(const std::string& scheme, const SizeFlags& size) {
  if (scheme == "oddmul2w" || scheme == "mulshift") {
    if (!size.w) throw InputError(scheme + " needs --w");
    return "pow2:" + std::to_string(*size.w);
  }
  if (scheme == "modprime" || scheme == "affine2indep" || scheme == "affine") {
    if (!size.p) throw InputError(scheme + " needs --p");
    return "prime:" + std::to_string(*size.p);
  }
  if (scheme == "poly") {
    const std::string f = size.field.value_or("gf2e:4");
    if (f.rfind("gf2e:", 0) == 0) return "pow2:" + f.substr(5);
    if (f == "mersenne:89") return "pow2:64";
    if (f.rfind("mersenne:", 0) == 0) {
      const unsigned q = static_cast<unsigned>(std::stoul(f.substr(9)));
      return "prime:" + std::to_string((std::uint64_t{1} << q) - 1);
    }
    throw InputError("bad --field " + f);
  }
  if (scheme == "tabulation") {
    return "pow2:" + std::to_string(size.chars.value_or(2) * size.char_bits.value_or(8));
  }
  if (scheme == "prop2") return "finite:" + std::to_string(4 * size.n.value_or(1));
  if (scheme != "parity" && scheme != "fullyrandom") throw InputError("unknown scheme '" + scheme + "'");
  if (!size.u) throw InputError(scheme + " needs --u");
  return "finite:" + std::to_string(*size.u);
}

struct NamedAssignment {
  std::string name;
  AssignmentPtr values;
};

// Either the built-in corpus or one stream file.
struct InputFlags {
  std::string corpus;
  std::string values_file;
  std::string monoid = "f2";
  std::size_t max_n = 0;

  void add(CLI::App* cmd) {
    cmd->add_option("--corpus", corpus, "built-in corpus identifier (builtin)");
    cmd->add_option("--values", values_file, "stream file of '<key> <value>' lines");
    cmd->add_option("--monoid", monoid, "monoid for --values: f2, int64, vec:<len>");
    cmd->add_option("--max-n", max_n, "skip corpus entries with more keys");
  }

  std::vector<NamedAssignment> load(const std::string& universe) const {
    std::vector<NamedAssignment> out;
    if (!corpus.empty() == !values_file.empty())
      throw InputError("pass exactly one of --corpus or --values");
    if (!corpus.empty()) {
      if (corpus != "builtin") throw InputError("unknown corpus '" + corpus + "'");
      axt_corpus* raw = nullptr;
      check(axt_corpus_builtin(universe.c_str(), &raw));
      CorpusPtr c(raw);
      for (std::size_t i = 0; i < axt_corpus_size(c.get()); ++i) {
        const char* name = nullptr;
        axt_assignment* a = nullptr;
        check(axt_corpus_name(c.get(), i, &name));
        check(axt_corpus_get(c.get(), i, &a));
        AssignmentPtr owned(a);
        std::size_t n = 0;
        check(axt_assignment_size(a, &n));
        if (max_n && n > max_n) continue;
        out.push_back({name, std::move(owned)});
      }
    } else {
      axt_assignment* a = nullptr;
      const std::string text = read_file(values_file);
      check(axt_assignment_parse(text.c_str(), universe.c_str(), monoid.c_str(), &a));
      out.push_back({values_file, AssignmentPtr(a)});
    }
    return out;
  }
};

std::vector<std::uint64_t> parse_keys(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("bad key '" + tok + "'");
    }
  }
  return out;
}

const char* verdict(bool ok) { return ok ? "holds" : "VIOLATED"; }

int run_verify_exhaustive(const Common& c, const std::string& scheme, const SizeFlags& size,
                          const InputFlags& input) {
  const std::string universe = universe_for(scheme, size);
  const std::uint64_t param = size.w ? *size.w : size.p.value_or(0);
  bool all = true;
  for (const auto& entry : input.load(universe)) {
    char* out = nullptr;
    check(axt_verify_exhaustive(scheme.c_str(), param, entry.values.get(), c.workers, &out));
    json j = take_json(out);
    j["name"] = entry.name;
    const bool ok = j["meets_bound"].get<bool>();
    all = all && ok;
    if (c.json_out) {
      print_json(j);
    } else {
      std::printf("%-14s n=%-3zu Pr=%-22s (%.6f) bound=%-10s %s\n", entry.name.c_str(),
                  j["n"].get<std::size_t>(), j["exact"].get<std::string>().c_str(),
                  j["probability"].get<double>(), j["bound"].get<std::string>().c_str(),
                  verdict(ok));
    }
  }
  return all ? kExitOk : kExitViolation;
}

int run_verify_mc(const Common& c, const std::string& scheme, const SizeFlags& size,
                  const InputFlags& input, std::uint64_t trials) {
  const std::string universe = universe_for(scheme, size);
  const std::string size_json = size.to_json().dump();
  for (const auto& entry : input.load(universe)) {
    char* out = nullptr;
    check(axt_verify_mc(scheme.c_str(), size_json.c_str(), entry.values.get(), trials, c.seed, &out));
    json j = take_json(out);
    j["name"] = entry.name;
    if (c.json_out) {
      print_json(j);
    } else {
      std::printf("%-14s n=%-3zu Pr~%.6f 99%% CI [%.6f, %.6f] (%llu/%llu)\n", entry.name.c_str(),
                  j["n"].get<std::size_t>(), j["probability"].get<double>(),
                  j["ci_low"].get<double>(), j["ci_high"].get<double>(),
                  static_cast<unsigned long long>(j["hits"].get<std::uint64_t>()),
                  static_cast<unsigned long long>(j["trials"].get<std::uint64_t>()));
    }
  }
  return kExitOk;
}

int print_lemma_point(const Common& c, const json& j) {
  const bool ok = j["holds"].get<bool>();
  if (c.json_out) {
    print_json(j);
  } else {
    std::string params;
    for (const auto& [k, v] : j["params"].items()) params += " " + k + "=" + v.get<std::string>();
    std::printf("%s%s lhs=%s bound=%s %s\n", j["lemma"].get<std::string>().c_str(), params.c_str(),
                j["lhs"].get<std::string>().c_str(), j["bound"].get<std::string>().c_str(),
                verdict(ok));
  }
  return ok ? kExitOk : kExitViolation;
}

int print_sweep(const Common& c, const json& j) {
  const bool ok = j["violations"].get<std::uint64_t>() == 0;
  if (c.json_out) {
    print_json(j);
  } else {
    std::printf("%s checked=%llu violations=%llu tight=%llu %s\n",
                j["lemma"].get<std::string>().c_str(),
                static_cast<unsigned long long>(j["checked"].get<std::uint64_t>()),
                static_cast<unsigned long long>(j["violations"].get<std::uint64_t>()),
                static_cast<unsigned long long>(j["tight"].get<std::uint64_t>()), verdict(ok));
  }
  return ok ? kExitOk : kExitViolation;
}

struct LemmaFlags {
  std::string name;
  bool sweep = false;
  unsigned w = 3, w_min = 3, w_max = 10;
  std::uint64_t z = 1, k = 1;
  std::uint64_t p = 17;
  std::string set;
  std::uint64_t x = 0, delta = 1;
  std::size_t max_set = 3;
  std::uint64_t max_delta = 8;
};

int run_lemma(const Common& c, const LemmaFlags& f) {
  char* out = nullptr;
  if (f.name == "good-sum") {
    if (f.sweep) {
      check(axt_lemma_good_sum_sweep(f.w_min, f.w_max, c.workers, &out));
      return print_sweep(c, take_json(out));
    }
    check(axt_lemma_good_sum(f.w, f.z, f.k, &out));
    return print_lemma_point(c, take_json(out));
  }
  std::string scheme;
  if (f.name == "tail-affine") scheme = "affine2indep";
  else if (f.name == "tail-modprime") scheme = "modprime";
  else throw InputError("unknown lemma '" + f.name + "' (good-sum, tail-affine, tail-modprime)");
  if (f.sweep) {
    check(axt_lemma_tail_sweep(scheme.c_str(), f.p, f.max_set, f.max_delta, &out));
    return print_sweep(c, take_json(out));
  }
  const auto keys = parse_keys(f.set);
  check(axt_lemma_tail(scheme.c_str(), f.p, keys.data(), keys.size(), f.x, f.delta, &out));
  return print_lemma_point(c, take_json(out));
}

int run_counterexamples(const Common& c, std::uint64_t parity_max_u, std::uint64_t tables,
                        const std::vector<std::uint64_t>& prop2_n) {
  json opts{{"parity_max_u", parity_max_u}, {"random_tables", tables}, {"seed", c.seed}};
  if (!prop2_n.empty()) opts["prop2_n"] = prop2_n;
  char* out = nullptr;
  check(axt_counterexamples(opts.dump().c_str(), &out));
  const json j = take_json(out);
  const bool ok = j["all_hold"].get<bool>();
  if (c.json_out) {
    print_json(j);
    return ok ? kExitOk : kExitViolation;
  }
  for (const auto& p : j["parity"])
    std::printf("parity      u=%-3llu Pr[nonzero]=%s (u-1)-uniform=%s\n",
                static_cast<unsigned long long>(p["u"].get<std::uint64_t>()),
                p["pr_nonzero"].get<std::string>().c_str(),
                p["uniform_on_u_minus_1"].get<bool>() ? "yes" : "no");
  const auto& m = j["mulshift"];
  std::printf("mulshift    w=%u keys=%s Pr[nonzero]=%s over %llu multipliers\n",
              m["w"].get<unsigned>(), m["keys"].dump().c_str(),
              m["pr_nonzero"].get<std::string>().c_str(),
              static_cast<unsigned long long>(m["multipliers"].get<std::uint64_t>()));
  const auto& t = j["tabulation"];
  std::printf("tabulation  nonzero fills %llu/%llu, nonzero random tables %llu/%llu\n",
              static_cast<unsigned long long>(t["exhaustive_nonzero"].get<std::uint64_t>()),
              static_cast<unsigned long long>(t["exhaustive_fills"].get<std::uint64_t>()),
              static_cast<unsigned long long>(t["random_nonzero"].get<std::uint64_t>()),
              static_cast<unsigned long long>(t["random_tables"].get<std::uint64_t>()));
  for (const auto& p : j["prop2"])
    std::printf("prop2       n=%llu marginals=%s pairs=[%s,%s] Pr[nonzero]=%s classes=%s "
                "4e-6e^2=%s bound=%s %s\n",
                static_cast<unsigned long long>(p["n"].get<std::uint64_t>()),
                p["marginal_min"].get<std::string>().c_str(),
                p["pairwise_min"].get<std::string>().c_str(),
                p["pairwise_max"].get<std::string>().c_str(),
                p["pr_nonzero"].get<std::string>().c_str(),
                p["pr_nonzero_classes"].get<std::string>().c_str(),
                p["closed_form"].get<std::string>().c_str(), p["bound"].get<std::string>().c_str(),
                verdict(p["holds"].get<bool>()));
  std::printf("all %s\n", verdict(ok));
  return ok ? kExitOk : kExitViolation;
}

int run_ams(const Common& c, const std::string& mode, const std::string& values_file,
            const std::string& field, std::uint64_t trials) {
  // Values come as an int64 stream file; repeated keys accumulate.
  axt_assignment* raw = nullptr;
  const std::string text = read_file(values_file);
  check(axt_assignment_parse(text.c_str(), "pow2:64", "int64", &raw));
  AssignmentPtr a(raw);
  char* dumped = nullptr;
  check(axt_assignment_to_json(a.get(), &dumped));
  const json aj = take_json(dumped);
  std::vector<std::uint64_t> keys;
  std::vector<std::int64_t> values;
  for (const auto& e : aj["entries"]) {
    keys.push_back(e[0].get<std::uint64_t>());
    values.push_back(static_cast<std::int64_t>(std::stoull(e[1].get<std::string>())));
  }
  char* out = nullptr;
  check(axt_ams_check(mode.c_str(), keys.data(), values.data(), keys.size(), field.c_str(), trials,
                      c.seed, &out));
  const json j = take_json(out);
  const bool ok = j["fourth_moment_bound"].get<bool>() && j["exceeds_one_third"].get<bool>();
  if (c.json_out) {
    print_json(j);
  } else if (mode == "exact") {
    std::printf("E[X^2]=%s E[X^4]=%s Pr[X!=0]=%s E[X^4]<3E[X^2]^2:%s Pr>1/3:%s\n",
                j["e_x2_exact"].get<std::string>().c_str(),
                j["e_x4_exact"].get<std::string>().c_str(),
                j["pr_nonzero_exact"].get<std::string>().c_str(),
                verdict(j["fourth_moment_bound"].get<bool>()),
                verdict(j["exceeds_one_third"].get<bool>()));
  } else {
    std::printf("E[X^2]~%.6f E[X^4]~%.6f ratio~%.4f Pr[X!=0]~%.6f (%llu trials)\n",
                j["e_x2"].get<double>(), j["e_x4"].get<double>(), j["ratio"].get<double>(),
                j["pr_nonzero"].get<double>(),
                static_cast<unsigned long long>(j["trials"].get<std::uint64_t>()));
  }
  return ok ? kExitOk : kExitViolation;
}

MatrixPtr load_matrix(const std::string& path) {
  axt_matrix* m = nullptr;
  const std::string text = read_file(path);
  check(axt_matrix_parse(text.c_str(), &m));
  return MatrixPtr(m);
}

int run_freivald(const Common& c, const std::string& a, const std::string& b,
                 const std::string& cpath, std::size_t rounds) {
  const auto ma = load_matrix(a), mb = load_matrix(b), mc = load_matrix(cpath);
  char* out = nullptr;
  check(axt_freivald(ma.get(), mb.get(), mc.get(), rounds, c.seed, &out));
  const json j = take_json(out);
  if (c.json_out) {
    print_json(j);
  } else if (j["accept"].get<bool>()) {
    std::printf("accept: AB = C passed %zu rounds (w=%u)\n", j["rounds"].get<std::size_t>(),
                j["w"].get<unsigned>());
  } else {
    std::printf("reject: AB != C, detected in round %zu (w=%u)\n",
                j["rejecting_round"].get<std::size_t>(), j["w"].get<unsigned>());
  }
  return kExitOk;
}

int run_stream_test(const Common& c, const std::string& stream, const std::string& claimed,
                    const std::string& universe, const std::string& monoid, std::size_t d) {
  axt_assignment* raw = nullptr;
  const std::string claimed_text = read_file(claimed);
  check(axt_assignment_parse(claimed_text.c_str(), universe.c_str(), monoid.c_str(), &raw));
  AssignmentPtr v(raw);
  const std::string stream_text = read_file(stream);
  char* out = nullptr;
  check(axt_stream_test(stream_text.c_str(), v.get(), d, c.seed, &out));
  const json j = take_json(out);
  if (c.json_out) {
    print_json(j);
  } else {
    std::printf("%s after %llu updates (d=%zu)\n",
                j["equal_sofar"].get<bool>() ? "equal so far" : "not equal",
                static_cast<unsigned long long>(j["updates"].get<std::uint64_t>()),
                j["d"].get<std::size_t>());
  }
  return kExitOk;
}

int run_tree_test(const Common& c, const std::string& graph, std::size_t d) {
  axt_graph* raw = nullptr;
  const std::string text = read_file(graph);
  check(axt_graph_parse(text.c_str(), &raw));
  GraphPtr g(raw);
  char* out = nullptr;
  check(axt_tree_test(g.get(), d, c.seed, &out));
  const json j = take_json(out);
  if (c.json_out) {
    print_json(j);
  } else {
    std::printf("%s (d=%zu, w=%u)\n",
                j["edge_leaving_detected"].get<bool>() ? "edge leaving T detected"
                                                       : "no edge leaving T detected",
                j["d"].get<std::size_t>(), j["w"].get<unsigned>());
  }
  return kExitOk;
}

int run_smallbias(const Common& c, const std::string& set, std::size_t d,
                  const std::string& scheme, const SizeFlags& size, std::uint64_t trials) {
  const auto keys = parse_keys(set);
  const std::string size_json = size.to_json().dump();
  char* out = nullptr;
  check(axt_smallbias(keys.data(), keys.size(), d, scheme.c_str(), size_json.c_str(), trials,
                      c.seed, &out));
  const json j = take_json(out);
  const bool ok = j["ci_high"].get<double>() >= j["lower"].get<double>() &&
                  j["ci_low"].get<double>() <= j["upper"].get<double>();
  if (c.json_out) {
    print_json(j);
  } else {
    std::printf("Pr[odd]~%.6f 99%% CI [%.6f, %.6f] expected [%.6f, %.6f] (d=%zu, %llu trials) %s\n",
                j["estimate"].get<double>(), j["ci_low"].get<double>(), j["ci_high"].get<double>(),
                j["lower"].get<double>(), j["upper"].get<double>(), j["d"].get<std::size_t>(),
                static_cast<unsigned long long>(j["trials"].get<std::uint64_t>()), verdict(ok));
  }
  return ok ? kExitOk : kExitViolation;
}

int run_bench(const Common& c, std::uint64_t iterations) {
  char* out = nullptr;
  char* table = nullptr;
  check(axt_bench(iterations, c.seed, &out, &table));
  const json j = take_json(out);
  const std::string text = take_string(table);
  if (c.json_out) print_json(j);
  else std::fputs(text.c_str(), stdout);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Threshold sampling distinguishers: verification and applications"};
  app.require_subcommand(1, 1);

  Common common;
  std::optional<std::uint64_t> seed;
  auto add_common = [&](CLI::App* cmd, bool seeded, bool parallel) {
    cmd->add_flag("--json", common.json_out, "emit JSON lines");
    if (seeded) cmd->add_option("--seed", seed, "random seed (default: AXT_SEED or 1)");
    if (parallel) cmd->add_option("--workers", common.workers, "worker threads")->check(CLI::PositiveNumber);
  };

  std::string scheme = "oddmul2w";
  SizeFlags size;
  InputFlags input;

  auto* ve = app.add_subcommand("verify-exhaustive", "exact distinguishing probability");
  ve->add_option("--scheme", scheme, "oddmul2w, modprime or affine2indep");
  size.add(ve);
  input.add(ve);
  add_common(ve, false, true);

  std::uint64_t trials = 100000;
  auto* vm = app.add_subcommand("verify-mc", "Monte Carlo distinguishing probability");
  vm->add_option("--scheme", scheme, "sampler scheme");
  vm->add_option("--trials", trials, "number of sampler draws");
  size.add(vm);
  input.add(vm);
  add_common(vm, true, false);

  LemmaFlags lemma;
  auto* lm = app.add_subcommand("lemma", "exact lemma checks");
  lm->add_option("--name", lemma.name, "good-sum, tail-affine or tail-modprime")->required();
  lm->add_flag("--sweep", lemma.sweep, "check the whole parameter range");
  lm->add_option("--w", lemma.w, "word size (good-sum)");
  lm->add_option("--z", lemma.z, "key difference (good-sum)");
  lm->add_option("--k", lemma.k, "interval count (good-sum)");
  lm->add_option("--w-min", lemma.w_min, "sweep lower word size");
  lm->add_option("--w-max", lemma.w_max, "sweep upper word size");
  lm->add_option("--p", lemma.p, "prime (tail)");
  lm->add_option("--set", lemma.set, "comma-separated key set (tail)");
  lm->add_option("--x", lemma.x, "key of the set (tail)");
  lm->add_option("--delta", lemma.delta, "interval length (tail)");
  lm->add_option("--max-set", lemma.max_set, "sweep set size limit (tail)");
  lm->add_option("--max-delta", lemma.max_delta, "sweep delta limit (tail)");
  add_common(lm, false, true);

  std::uint64_t parity_max_u = 16, tables = 10000;
  std::vector<std::uint64_t> prop2_n;
  auto* ce = app.add_subcommand("counterexamples", "negative results and the prop2 construction");
  ce->add_option("--parity-max-u", parity_max_u, "largest parity universe");
  ce->add_option("--random-tables", tables, "random tabulation tables");
  ce->add_option("--prop2-n", prop2_n, "prop2 sizes");
  add_common(ce, true, false);

  std::string ams_mode = "exact", ams_values, ams_field = "gf2e:4";
  auto* am = app.add_subcommand("ams", "fourth-moment check for integer values");
  am->add_option("--mode", ams_mode, "exact or mc");
  am->add_option("--values", ams_values, "int64 stream file")->required();
  am->add_option("--field", ams_field, "polynomial field");
  am->add_option("--trials", trials, "Monte Carlo trials");
  add_common(am, true, false);

  std::string fa, fb, fc;
  std::size_t rounds = 64;
  auto* fr = app.add_subcommand("freivald", "verify AB = C over Z/2^64");
  fr->add_option("--a", fa, "matrix file")->required();
  fr->add_option("--b", fb, "matrix file")->required();
  fr->add_option("--c", fc, "matrix file")->required();
  fr->add_option("--rounds", rounds, "independent rounds");
  add_common(fr, true, false);

  std::string stream_file, claimed_file, universe = "pow2:64", monoid = "f2";
  std::size_t d = 16;
  auto* st = app.add_subcommand("stream-test", "compare a stream with a claimed assignment");
  st->add_option("--stream", stream_file, "stream file")->required();
  st->add_option("--claimed", claimed_file, "claimed assignment, stream format")->required();
  st->add_option("--universe", universe, "key universe");
  st->add_option("--monoid", monoid, "value monoid");
  st->add_option("--d", d, "number of samplers");
  add_common(st, true, false);

  std::string graph_file;
  auto* tt = app.add_subcommand("tree-test", "detect an edge leaving a vertex set");
  tt->add_option("--graph", graph_file, "graph file")->required();
  tt->add_option("--d", d, "number of samplers");
  add_common(tt, true, false);

  std::string bias_set = "0,1,2";
  auto* sb = app.add_subcommand("smallbias", "parity bias of the vector sampler");
  sb->add_option("--set", bias_set, "comma-separated key set");
  sb->add_option("--d", d, "number of samplers");
  sb->add_option("--scheme", scheme, "sampler scheme");
  sb->add_option("--trials", trials, "Monte Carlo draws");
  size.add(sb);
  add_common(sb, true, false);

  std::uint64_t iterations = 10'000'000;
  auto* bn = app.add_subcommand("bench", "time the sampling routines");
  bn->add_option("--iterations", iterations, "iterations per subject");
  add_common(bn, true, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    common.seed = seed ? *seed : default_seed();
    if (ve->parsed()) return run_verify_exhaustive(common, scheme, size, input);
    if (vm->parsed()) return run_verify_mc(common, scheme, size, input, trials);
    if (lm->parsed()) return run_lemma(common, lemma);
    if (ce->parsed()) return run_counterexamples(common, parity_max_u, tables, prop2_n);
    if (am->parsed()) return run_ams(common, ams_mode, ams_values, ams_field, trials);
    if (fr->parsed()) return run_freivald(common, fa, fb, fc, rounds);
    if (st->parsed()) return run_stream_test(common, stream_file, claimed_file, universe, monoid, d);
    if (tt->parsed()) return run_tree_test(common, graph_file, d);
    if (sb->parsed()) return run_smallbias(common, bias_set, d, scheme, size, trials);
    if (bn->parsed()) return run_bench(common, iterations);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
