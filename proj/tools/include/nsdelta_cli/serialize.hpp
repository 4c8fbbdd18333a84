#pragma once

#include <json.hpp>

#include "nsdelta/factorizations.hpp"
#include "nsdelta/infinity_structure.hpp"
#include "nsdelta/presentations.hpp"
#include "nsdelta/semigroup.hpp"

namespace nsdelta {

using json = nlohmann::json;

// Schema version of every JSON document the tool emits.
inline constexpr int kSchemaVersion = 1;

void to_json(json& j, const DeltaSet& d);
void from_json(const json& j, DeltaSet& d);

void to_json(json& j, const LengthSet& l);
void from_json(const json& j, LengthSet& l);

void to_json(json& j, const Factorization& z);
void from_json(const json& j, Factorization& z);

void to_json(json& j, const Trade& t);
void from_json(const json& j, Trade& t);

void to_json(json& j, const MinimalPresentation& p);
void from_json(const json& j, MinimalPresentation& p);

void to_json(json& j, const PeriodicityCertificate& c);
void from_json(const json& j, PeriodicityCertificate& c);

void to_json(json& j, const AperyTable& t);

Norm parse_norm(std::string_view text);
CertificateMode parse_mode(std::string_view text);

std::vector<Int> generator_list(const NumericalSemigroup& s);

}  // namespace nsdelta
