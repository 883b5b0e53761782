#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "redux/polynomial.hpp"

namespace redux {

using nlohmann::json;

json field_to_json(const Field& field);
Field field_from_json(const json& j);

json rational_to_json(const Rational& v);
Rational rational_from_json(const json& j, const Field& field);
json rationals_to_json(std::span<const Rational> values);
std::vector<Rational> rationals_from_json(const json& j, const Field& field);

/// Terms list: [{"coeff": "-3/2", "exps": [e1, ..., ek]}, ...], exponents aligned with the layout.
json terms_to_json(const Polynomial& p);
Polynomial terms_from_json(const json& j, const Field& field, const LayoutPtr& layout);

LayoutPtr layout_from_json(const json& vars);

/// {"field": ..., "vars": [...], "terms": [...]}
json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

/// {"field": ..., "vars": [...], "polys": [terms, ...]}
json system_to_json(const PolySystem& s);
PolySystem system_from_json(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace redux
