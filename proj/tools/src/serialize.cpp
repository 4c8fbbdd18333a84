#include "nsdelta_cli/serialize.hpp"

#include <string>

namespace nsdelta {

void to_json(json& j, const DeltaSet& d) { j = d.values; }

void from_json(const json& j, DeltaSet& d) { d = make_delta_set(j.get<std::vector<Int>>()); }

void to_json(json& j, const LengthSet& l) {
  j = json{{"p", std::string(to_string(l.p))}, {"values", l.values}};
}

void from_json(const json& j, LengthSet& l) {
  l.p = parse_norm(j.at("p").get<std::string>());
  l.values = j.at("values").get<std::vector<Int>>();
}

void to_json(json& j, const Factorization& z) { j = z.exponents; }

void from_json(const json& j, Factorization& z) { z.exponents = j.get<std::vector<Int>>(); }

void to_json(json& j, const Trade& t) {
  j = json{{"element", t.element}, {"left", t.left}, {"right", t.right}};
}

void from_json(const json& j, Trade& t) {
  t.element = j.at("element").get<Int>();
  t.left = j.at("left").get<Factorization>();
  t.right = j.at("right").get<Factorization>();
}

void to_json(json& j, const MinimalPresentation& p) {
  j = json{{"betti", p.betti}, {"trades", p.trades}};
}

void from_json(const json& j, MinimalPresentation& p) {
  p.betti = j.at("betti").get<std::vector<Int>>();
  p.trades = j.at("trades").get<std::vector<Trade>>();
}

void to_json(json& j, const PeriodicityCertificate& c) {
  j = json{{"start", c.start},
           {"period", c.period},
           {"window_periods", c.window_periods},
           {"mode", std::string(to_string(c.mode))},
           {"theorem_start", c.theorem_start},
           {"horizon", c.horizon},
           {"theorem_check_failed", c.theorem_check_failed}};
}

void from_json(const json& j, PeriodicityCertificate& c) {
  c.start = j.at("start").get<Int>();
  c.period = j.at("period").get<Int>();
  c.window_periods = j.at("window_periods").get<Int>();
  c.mode = parse_mode(j.at("mode").get<std::string>());
  c.theorem_start = j.at("theorem_start").get<Int>();
  c.horizon = j.at("horizon").get<Int>();
  c.theorem_check_failed = j.at("theorem_check_failed").get<bool>();
}

void to_json(json& j, const AperyTable& t) {
  j = json{{"modulus", t.modulus()},
           {"entries", std::vector<Int>(t.entries().begin(), t.entries().end())}};
}

Norm parse_norm(std::string_view text) {
  if (text == "0") return Norm::zero;
  if (text == "1") return Norm::one;
  if (text == "inf" || text == "infinity") return Norm::infinity;
  throw Error(ErrorCode::invalid_argument, "unknown norm '" + std::string(text) + "'");
}

CertificateMode parse_mode(std::string_view text) {
  if (text == to_string(CertificateMode::theorem_backed)) return CertificateMode::theorem_backed;
  if (text == to_string(CertificateMode::empirical)) return CertificateMode::empirical;
  throw Error(ErrorCode::invalid_argument, "unknown certificate mode '" + std::string(text) + "'");
}

std::vector<Int> generator_list(const NumericalSemigroup& s) {
  return {s.generators().begin(), s.generators().end()};
}

}  // namespace nsdelta
