#pragma once

// JSON encodings: a Rational is the string "p/q", a Cyclotomic is an array of
// ten such strings.

#include "json.hpp"

#include "klein11/exact/cyclotomic.hpp"

namespace klein11 {

using json = nlohmann::ordered_json;

inline json to_json_value(const Rational& q) { return to_string(q); }

inline json to_json_value(const Cyclotomic& c) {
  json arr = json::array();
  for (int i = 0; i < Cyclotomic::kDegree; ++i) arr.push_back(to_string(c.coefficient(i)));
  return arr;
}

inline Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("rational must be a JSON string");
  return parse_rational(j.get<std::string>());
}

inline Cyclotomic cyclotomic_from_json(const json& j) {
  if (!j.is_array() || j.size() != Cyclotomic::kDegree)
    throw ParseError("cyclotomic must be a JSON array of 10 strings");
  std::array<Rational, Cyclotomic::kDegree> c;
  for (int i = 0; i < Cyclotomic::kDegree; ++i) c[i] = rational_from_json(j[i]);
  return Cyclotomic::from_coefficients(c);
}

}  // namespace klein11
