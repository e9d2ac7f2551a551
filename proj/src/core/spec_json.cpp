// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "core/spec_json.hpp"

#include "core/error.hpp"

namespace axt {

using nlohmann::json;

namespace {

std::string bits_to_string(const std::vector<std::uint8_t>& bits) {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) s[i] = bits[i] ? '1' : '0';
  return s;
}

std::vector<std::uint8_t> bits_from_string(const std::string& s) {
  std::vector<std::uint8_t> bits(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') fail(ErrorKind::Parse, "bit strings hold only 0 and 1");
    bits[i] = s[i] == '1';
  }
  return bits;
}

const char* outcome_name(Prop2Spec::Outcome o) {
  switch (o) {
    case Prop2Spec::Outcome::None: return "none";
    case Prop2Spec::Outcome::All: return "all";
    case Prop2Spec::Outcome::Balanced: return "balanced";
  }
  return "";
}

Prop2Spec::Outcome outcome_from(const std::string& s) {
  if (s == "none") return Prop2Spec::Outcome::None;
  if (s == "all") return Prop2Spec::Outcome::All;
  if (s == "balanced") return Prop2Spec::Outcome::Balanced;
  fail(ErrorKind::Parse, "bad prop2 outcome '" + s + "'");
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorKind::Parse, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("bad field '") + key + "': " + e.what());
  }
}

u128 big_field(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  return u128_from_string(field<std::string>(j, key));
}

void put_rule(json& j, const OutputRule& rule) {
  if (rule.kind == OutputRule::Kind::LowBit) {
    j["output"] = "low_bit";
  } else {
    j["output"] = "threshold";
    j["threshold"] = u128_to_string(rule.threshold);
  }
}

OutputRule rule_from(const json& j) {
  OutputRule rule;
  const auto out = j.value("output", std::string("low_bit"));
  if (out == "low_bit") return rule;
  if (out != "threshold") fail(ErrorKind::Parse, "bad output rule '" + out + "'");
  rule.kind = OutputRule::Kind::Threshold;
  rule.threshold = big_field(j, "threshold");
  return rule;
}

}  // namespace

json spec_to_json(const SamplerSpec& spec) {
  json j;
  j["scheme"] = scheme_name(spec.scheme());
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, OddMul2wSpec>) {
          j["w"] = s.w;
          j["a"] = s.a;
          j["t"] = s.t;
        } else if constexpr (std::is_same_v<T, ModPrimeSpec>) {
          j["p"] = s.p;
          j["a"] = s.a;
          j["t"] = s.t;
        } else if constexpr (std::is_same_v<T, Affine2IndepSpec>) {
          j["p"] = s.p;
          j["a"] = s.a;
          j["b"] = s.b;
          j["t"] = s.t;
        } else if constexpr (std::is_same_v<T, PolyKIndepSpec>) {
          j["field"] = s.field.name();
          json coeffs = json::array();
          for (u128 c : s.coefficients) coeffs.push_back(u128_to_string(c));
          j["coefficients"] = std::move(coeffs);
          put_rule(j, s.rule);
        } else if constexpr (std::is_same_v<T, TabulationSpec>) {
          j["chars"] = s.chars;
          j["char_bits"] = s.char_bits;
          j["out_bits"] = s.out_bits;
          j["tables"] = s.tables;
        } else if constexpr (std::is_same_v<T, MulShiftSpec>) {
          j["w"] = s.w;
          j["a"] = s.a;
        } else if constexpr (std::is_same_v<T, Prop2Spec>) {
          j["n"] = s.n;
          j["positive"] = outcome_name(s.positive);
          j["negative"] = outcome_name(s.negative);
          j["bits"] = bits_to_string(s.bits);
        } else {
          j["u"] = s.bits.size();
          j["bits"] = bits_to_string(s.bits);
        }
      },
      spec.params);
  if (spec.seed) j["seed"] = *spec.seed;
  return j;
}

SamplerSpec spec_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::Parse, "sampler spec must be a JSON object");
  SamplerSpec spec;
  const Scheme scheme = parse_scheme(field<std::string>(j, "scheme"));
  try {
    switch (scheme) {
      case Scheme::OddMul2w:
        spec.params = OddMul2wSpec{field<unsigned>(j, "w"), field<std::uint64_t>(j, "a"),
                                   field<std::uint64_t>(j, "t")};
        break;
      case Scheme::ModPrime:
        spec.params = ModPrimeSpec{field<std::uint64_t>(j, "p"), field<std::uint64_t>(j, "a"),
                                   field<std::uint64_t>(j, "t")};
        break;
      case Scheme::Affine2Indep:
        spec.params = Affine2IndepSpec{field<std::uint64_t>(j, "p"), field<std::uint64_t>(j, "a"),
                                       field<std::uint64_t>(j, "b"), field<std::uint64_t>(j, "t")};
        break;
      case Scheme::PolyKIndep: {
        PolyKIndepSpec poly;
        poly.field = PolyField::parse(field<std::string>(j, "field"));
        for (const auto& c : j.at("coefficients"))
          poly.coefficients.push_back(c.is_number_unsigned() ? u128{c.get<std::uint64_t>()}
                                                             : u128_from_string(c.get<std::string>()));
        poly.rule = rule_from(j);
        spec.params = std::move(poly);
        break;
      }
      case Scheme::Tabulation:
        spec.params = TabulationSpec{field<unsigned>(j, "chars"), field<unsigned>(j, "char_bits"),
                                     field<unsigned>(j, "out_bits"),
                                     field<std::vector<std::vector<std::uint64_t>>>(j, "tables")};
        break;
      case Scheme::MulShift:
        spec.params = MulShiftSpec{field<unsigned>(j, "w"), field<std::uint64_t>(j, "a")};
        break;
      case Scheme::ParityConstrained:
        spec.params = ParityConstrainedSpec{bits_from_string(field<std::string>(j, "bits"))};
        break;
      case Scheme::Prop2Counterexample:
        spec.params = Prop2Spec{field<std::uint64_t>(j, "n"),
                                outcome_from(field<std::string>(j, "positive")),
                                outcome_from(field<std::string>(j, "negative")),
                                bits_from_string(field<std::string>(j, "bits"))};
        break;
      case Scheme::FullyRandom:
        spec.params = FullyRandomSpec{bits_from_string(field<std::string>(j, "bits"))};
        break;
    }
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("bad sampler spec: ") + e.what());
  }
  if (j.contains("u") && j.at("u").get<std::uint64_t>() != (std::visit(
        [](const auto& s) -> std::uint64_t {
          if constexpr (requires { s.bits; }) return s.bits.size();
          else return 0;
        }, spec.params)))
    fail(ErrorKind::Parse, "field 'u' disagrees with the bit string length");
  if (j.contains("seed")) spec.seed = field<std::uint64_t>(j, "seed");
  return spec;
}

SizeParams size_params_from_json(const json& j) {
  SizeParams size;
  if (!j.is_object()) fail(ErrorKind::Parse, "size parameters must be a JSON object");
  try {
    size.w = j.value("w", size.w);
    size.p = j.value("p", size.p);
    if (j.contains("field")) size.field = PolyField::parse(j.at("field").get<std::string>());
    size.k = j.value("k", size.k);
    size.rule = rule_from(j);
    size.chars = j.value("chars", size.chars);
    size.char_bits = j.value("char_bits", size.char_bits);
    size.out_bits = j.value("out_bits", size.out_bits);
    size.u = j.value("u", size.u);
    size.n = j.value("n", size.n);
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("bad size parameters: ") + e.what());
  }
  return size;
}

json size_params_to_json(Scheme scheme, const SizeParams& size) {
  json j;
  j["scheme"] = scheme_name(scheme);
  switch (scheme) {
    case Scheme::OddMul2w:
    case Scheme::MulShift: j["w"] = size.w; break;
    case Scheme::ModPrime:
    case Scheme::Affine2Indep: j["p"] = size.p; break;
    case Scheme::PolyKIndep:
      j["field"] = size.field.name();
      j["k"] = size.k;
      put_rule(j, size.rule);
      break;
    case Scheme::Tabulation:
      j["chars"] = size.chars;
      j["char_bits"] = size.char_bits;
      j["out_bits"] = size.out_bits;
      break;
    case Scheme::ParityConstrained:
    case Scheme::FullyRandom: j["u"] = size.u; break;
    case Scheme::Prop2Counterexample: j["n"] = size.n; break;
  }
  return j;
}

}  // namespace axt
