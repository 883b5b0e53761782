#include "redux/poly_json.hpp"

#include <fstream>
#include <sstream>

#include "redux/errors.hpp"

namespace redux {

json field_to_json(const Field& field) {
  if (field.is_prime_field()) {
    if (field.modulus().fits_slong_p()) return {{"kind", "prime"}, {"p", field.modulus().get_si()}};
    return {{"kind", "prime"}, {"p", field.modulus().get_str()}};
  }
  return {{"kind", "rationals"}};
}

Field field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw InputError("field: expected object with \"kind\"");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "rationals") return Field::rationals();
  if (kind == "prime") {
    const auto& p = j.at("p");
    if (p.is_number_integer()) return Field::prime(Integer(std::to_string(p.get<long long>())));
    if (p.is_string()) return Field::prime(Integer(p.get<std::string>()));
    throw InputError("field: \"p\" must be an integer");
  }
  throw InputError("field: unknown kind '" + kind + "'");
}

json rational_to_json(const Rational& v) { return v.get_str(); }

Rational rational_from_json(const json& j, const Field& field) {
  if (j.is_string()) return field.parse(j.get<std::string>());
  if (j.is_number_integer()) return field.parse(std::to_string(j.get<long long>()));
  throw InputError("coefficient must be a decimal string");
}

json rationals_to_json(std::span<const Rational> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(rational_to_json(v));
  return out;
}

std::vector<Rational> rationals_from_json(const json& j, const Field& field) {
  if (!j.is_array()) throw InputError("expected an array of coefficient strings");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(rational_from_json(v, field));
  return out;
}

json terms_to_json(const Polynomial& p) {
  json out = json::array();
  const std::size_t n = p.vars().size();
  for (const auto& t : p.terms()) {
    out.push_back({{"coeff", rational_to_json(t.coeff)}, {"exps", t.mono.dense(n)}});
  }
  return out;
}

Polynomial terms_from_json(const json& j, const Field& field, const LayoutPtr& layout) {
  if (!j.is_array()) throw InputError("terms: expected an array");
  std::vector<Term> terms;
  terms.reserve(j.size());
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exps")) {
      throw InputError("term: expected {\"coeff\", \"exps\"}");
    }
    auto exps = t.at("exps").get<std::vector<long long>>();
    if (exps.size() != layout->size()) {
      throw InputError("term: exponent vector has " + std::to_string(exps.size()) + " entries, layout has " +
                       std::to_string(layout->size()));
    }
    std::vector<std::uint32_t> e;
    e.reserve(exps.size());
    for (auto x : exps) {
      if (x < 0) throw InputError("term: negative exponent");
      e.push_back(static_cast<std::uint32_t>(x));
    }
    terms.push_back({Monomial::from_dense(e), rational_from_json(t.at("coeff"), field)});
  }
  return Polynomial::from_terms(field, layout, std::move(terms));
}

LayoutPtr layout_from_json(const json& vars) {
  if (!vars.is_array()) throw InputError("\"vars\" must be an array of names");
  return make_layout(vars.get<std::vector<std::string>>());
}

json polynomial_to_json(const Polynomial& p) {
  return {{"field", field_to_json(p.field())}, {"vars", p.vars().names()}, {"terms", terms_to_json(p)}};
}

Polynomial polynomial_from_json(const json& j) {
  try {
    Field field = field_from_json(j.at("field"));
    LayoutPtr layout = layout_from_json(j.at("vars"));
    return terms_from_json(j.at("terms"), field, layout);
  } catch (const json::exception& e) {
    throw InputError(std::string("polynomial JSON: ") + e.what());
  }
}

json system_to_json(const PolySystem& s) {
  json polys = json::array();
  for (const auto& p : s.polys) polys.push_back(terms_to_json(p));
  return {{"field", field_to_json(s.field)}, {"vars", s.layout->names()}, {"polys", polys}};
}

PolySystem system_from_json(const json& j) {
  try {
    Field field = field_from_json(j.at("field"));
    LayoutPtr layout = layout_from_json(j.at("vars"));
    std::vector<Polynomial> polys;
    for (const auto& terms : j.at("polys")) polys.push_back(terms_from_json(terms, field, layout));
    return PolySystem(field, layout, std::move(polys));
  } catch (const json::exception& e) {
    throw InputError(std::string("system JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace redux
