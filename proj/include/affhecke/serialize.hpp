#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "affhecke/extquiver.hpp"
#include "affhecke/graphbimod.hpp"
#include "affhecke/hecke.hpp"

namespace affhecke {

using Json = nlohmann::json;

/// {"finite_word": [generator indices 1..r], "translation": [root coordinates]}.
Json to_json(const AffineWeylGroup& g, const AffineElement& x);
AffineElement element_from_json(const AffineWeylGroup& g, const Json& j);

Json to_json(const HyperplaneForm& f);
HyperplaneForm hyperplane_from_json(const Json& j);
Json to_json(const ExtDatum& e);
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);
Json to_json(const HeckeElement& h);
HeckeElement hecke_from_json(AffineWeylGroupPtr g, const Json& j);
Json to_json(const RootSystem& rs);
Json to_json(const Weight& w);
Json to_json(GeneratorSet J);

Json to_json(const AffineWeylGroup& g, const HeckeQuiver& q);
Json to_json(const QuantumQuiver& q);
Json to_json(const CompareReport& r);

/// One CSV row per edge: src,dst,walls (walls separated by ';').
std::string to_csv(const AffineWeylGroup& g, const HeckeQuiver& q);
std::string to_csv(const QuantumQuiver& q);

/// Integers separated by commas and/or whitespace, optionally in parentheses.
std::vector<Int> parse_int_list(std::string_view s);
Weight parse_weight(const RootSystem& rs, std::string_view s);
/// Word over I^a: generator indices 0..r separated by whitespace or commas.
std::vector<int> parse_word(const AffineWeylGroup& g, std::string_view s);
/// Product of factors e, s<i> (0 <= i <= r) and t(c_1,...,c_r), joined by '*' or spaces.
AffineElement parse_element(const AffineWeylGroup& g, std::string_view s);
/// Either the factor grammar above or a JSON object as produced by to_json.
AffineElement parse_element_any(const AffineWeylGroup& g, std::string_view s);
GeneratorSet parse_generator_set(const AffineWeylGroup& g, std::string_view s);

}  // namespace affhecke
