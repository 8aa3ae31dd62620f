#pragma once

#include <json.hpp>

#include "rsing/alexlink.hpp"
#include "rsing/divide.hpp"
#include "rsing/sing_model.hpp"

namespace rsing {

/// {"real_branches":[{"char_exponents":[...]}], "conj_pairs":[...], "intersections":{"i,j":k}}.
/// Entries implied by symmetry or by complex conjugation may be omitted; contradicting
/// entries are rejected.
SingularityType singularity_from_json(const nlohmann::json& j);
nlohmann::json singularity_to_json(const SingularityType& s);

Divide divide_from_json(const nlohmann::json& j);
nlohmann::json divide_to_json(const Divide& d);

ConjPairType conj_pair_from_json(const nlohmann::json& j);
nlohmann::json conj_pair_to_json(const ConjPairType& t);

/// Maps are written as objects keyed by the decimal index.
nlohmann::json factor_form_to_json(const FactorForm& f);
FactorForm factor_form_from_json(const nlohmann::json& j);
nlohmann::json cyclo_to_json(const CycloVector& v);
CycloVector cyclo_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// %.12g, the fixed float format of every emitted artifact.
std::string format_real(double v);

}  // namespace rsing
