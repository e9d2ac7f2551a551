// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "core/reports_json.hpp"

#include "core/error.hpp"

namespace axt {

using nlohmann::json;

namespace {

json rat(const Rational& r) { return rational_to_string(r); }

template <typename T>
json opt_rat(const std::optional<T>& r) {
  return r ? rat(*r) : json(nullptr);
}

json values_json(const std::vector<MonoidValue>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(v.to_string());
  return out;
}

const char* direction_name(LemmaCheckResult::Direction d) {
  return d == LemmaCheckResult::Direction::Upper ? "upper" : "lower";
}

}  // namespace

json to_json(const DistinguishReport& r) {
  json j;
  j["method"] = r.method == DistinguishReport::Method::Exhaustive ? "exhaustive" : "montecarlo";
  j["scheme"] = scheme_name(r.scheme);
  j["universe"] = r.universe.name();
  j["n"] = r.n;
  j["probability"] = r.probability;
  j["ci_low"] = r.ci_low;
  j["ci_high"] = r.ci_high;
  if (r.method == DistinguishReport::Method::Exhaustive) {
    j["exact"] = opt_rat(r.exact);
    j["good_total"] = u128_to_string(r.good_total);
    j["denominator"] = u128_to_string(r.denominator);
  } else {
    j["trials"] = r.trials;
    j["hits"] = r.hits;
  }
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

json to_json(const LemmaCheckResult& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  return {{"lemma", r.lemma},     {"params", params},
          {"lhs", rat(r.lhs)},    {"bound", rat(r.bound)},
          {"direction", direction_name(r.direction)}, {"holds", r.holds}};
}

json to_json(const SweepResult& r) {
  json j{{"lemma", r.lemma},
         {"checked", r.checked},
         {"violations", r.violations},
         {"tight", r.tight}};
  j["first_violation"] = r.first_violation ? to_json(*r.first_violation) : json(nullptr);
  return j;
}

json to_json(const MomentReport& r) {
  json j;
  j["mode"] = r.mode == MomentReport::Mode::ExactGF2e ? "exact" : "montecarlo";
  j["field"] = r.field;
  j["e_x2"] = r.e_x2;
  j["e_x4"] = r.e_x4;
  j["ratio"] = r.ratio;
  j["pr_nonzero"] = r.pr_nonzero;
  if (r.mode == MomentReport::Mode::ExactGF2e) {
    j["e_x2_exact"] = opt_rat(r.e_x2_exact);
    j["e_x4_exact"] = opt_rat(r.e_x4_exact);
    j["pr_nonzero_exact"] = opt_rat(r.pr_nonzero_exact);
  } else {
    j["trials"] = r.trials;
  }
  j["fourth_moment_bound"] = r.fourth_moment_bound;
  j["exceeds_one_third"] = r.exceeds_one_third;
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

json to_json(const SmallBiasReport& r) {
  return {{"d", r.d},           {"eps", r.eps},           {"lower", r.lower},
          {"upper", r.upper},   {"trials", r.trials},     {"odd", r.odd},
          {"estimate", r.estimate}, {"ci_low", r.ci_low}, {"ci_high", r.ci_high},
          {"seed", r.seed}};
}

json to_json(const CounterexampleReport& r) {
  json parity = json::array();
  for (const auto& c : r.parity)
    parity.push_back({{"u", c.u},
                      {"outcomes", c.outcomes},
                      {"pr_nonzero", rat(c.pr_nonzero)},
                      {"uniform_on_u_minus_1", c.uniform_on_u_minus_1}});
  json prop2 = json::array();
  for (const auto& c : r.prop2)
    prop2.push_back({{"n", c.n},
                     {"u", c.u},
                     {"eps", rat(c.eps)},
                     {"marginal_min", rat(c.marginal_min)},
                     {"marginal_max", rat(c.marginal_max)},
                     {"pairwise_min", rat(c.pairwise_min)},
                     {"pairwise_max", rat(c.pairwise_max)},
                     {"pr_nonzero", rat(c.pr_nonzero)},
                     {"pr_nonzero_classes", rat(c.pr_nonzero_classes)},
                     {"closed_form", rat(c.closed_form)},
                     {"bound", rat(c.bound)},
                     {"holds", c.holds}});
  const auto& m = r.mulshift;
  const auto& t = r.tabulation;
  return {{"parity", parity},
          {"mulshift",
           {{"w", m.w},
            {"keys", m.keys},
            {"multipliers", m.multipliers},
            {"nonzero", m.nonzero},
            {"pr_nonzero", rat(m.pr_nonzero)}}},
          {"tabulation",
           {{"exhaustive_fills", t.exhaustive_fills},
            {"exhaustive_nonzero", t.exhaustive_nonzero},
            {"random_tables", t.random_tables},
            {"random_nonzero", t.random_nonzero}}},
          {"prop2", prop2},
          {"all_hold", r.all_hold}};
}

json to_json(const FreivaldResult& r) {
  json j{{"accept", r.accept}, {"rounds", r.rounds}, {"w", r.w}};
  j["rejecting_round"] = r.rejecting_round ? json(*r.rejecting_round) : json(nullptr);
  return j;
}

json to_json(const StreamTestResult& r) {
  return {{"equal_sofar", r.equal_sofar},
          {"d", r.d},
          {"updates", r.updates},
          {"stream_digest", values_json(r.stream_digest)},
          {"claimed_digest", values_json(r.claimed_digest)}};
}

json to_json(const TreeTestResult& r) {
  return {{"edge_leaving_detected", r.edge_leaving_detected}, {"d", r.d}, {"w", r.w}};
}

json to_json(const BenchReport& r) {
  json subjects = json::array();
  for (const auto& s : r.subjects)
    subjects.push_back({{"name", s.name},
                        {"iterations", s.iterations},
                        {"total_ns", s.total_ns},
                        {"ns_per_op", s.ns_per_op},
                        {"sink", s.sink}});
  return {{"subjects", subjects},
          {"seed", r.seed},
          {"stride", r.stride},
          {"cpu", r.cpu},
          {"note", r.note},
          {"sampler_spot_check", r.sampler_spot_check},
          {"poly_spot_check", r.poly_spot_check}};
}

json to_json(const GoodMeasure& g) {
  return {{"m", u128_to_string(g.m)}, {"good_count", u128_to_string(g.good_count)},
          {"fraction", rat(ratio(g.good_count, g.m))}};
}

json assignment_to_json(const ValueAssignment& v) {
  json entries = json::array();
  for (const auto& [k, val] : v.entries()) entries.push_back({k, val.to_string()});
  return {{"universe", v.universe().name()}, {"monoid", v.tag().name()}, {"entries", entries}};
}

ValueAssignment assignment_from_json(const json& j) {
  try {
    const Universe u = Universe::parse(j.at("universe").get<std::string>());
    const MonoidTag tag = MonoidTag::parse(j.at("monoid").get<std::string>());
    ValueAssignment v(u, tag);
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 2) fail(ErrorKind::Parse, "assignment entry must be [key, value]");
      v.add(e[0].get<std::uint64_t>(), MonoidValue::parse(tag, e[1].get<std::string>()));
    }
    return v;
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("assignment json: ") + e.what());
  }
}

}  // namespace axt
