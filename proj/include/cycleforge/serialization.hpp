#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "factorization.hpp"
#include "partition.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "root_analysis.hpp"

namespace cycleforge {

using Json = nlohmann::json;

// Coefficient strings in ascending degree; exact, so "1/3" stays "1/3".
inline Json poly_to_json(const Polynomial& p) {
  Json arr = Json::array();
  for (const Rational& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

inline Polynomial poly_from_json(const Json& arr, Indet var = Indet::q) {
  if (!arr.is_array()) throw std::invalid_argument("polynomial JSON must be an array of coefficient strings");
  std::vector<Rational> coeffs;
  coeffs.reserve(arr.size());
  for (const Json& item : arr) {
    if (item.is_string()) coeffs.push_back(parse_rational(item.get<std::string>()));
    else if (item.is_number_integer()) coeffs.push_back(Rational(item.get<long long>()));
    else throw std::invalid_argument("polynomial coefficients must be strings like \"3\" or \"-1/2\"");
  }
  return Polynomial(std::move(coeffs), var);
}

inline Json partition_to_json(const Partition& lambda) {
  Json arr = Json::array();
  for (int part : lambda.parts()) arr.push_back(part);
  return arr;
}

// {"n", "lambda", "method", "poly"}: the stable shape for polynomial results.
inline Json poly_result_json(int n, const Partition& lambda, const std::string& method, const Polynomial& p) {
  return Json{{"n", n}, {"lambda", partition_to_json(lambda)}, {"method", method}, {"poly", poly_to_json(p)}};
}

// {"n", "k", "method", "value"}: the stable shape for probabilities.
inline Json probability_json(const ProbabilityResult& r) {
  return Json{{"n", r.n}, {"k", r.k}, {"method", route_name(r.route)}, {"value", r.value.str()}};
}

inline Json report_to_json(const RootLocationReport& r) {
  return Json{{"poly", poly_to_json(r.poly)},
              {"alpha", r.alpha.str()},
              {"verdict", r.verdict},
              {"witness", r.witness}};
}

// "1,0,2" -> coefficients ascending; entries may be rationals like -1/2.
inline std::vector<Rational> parse_coeff_list(const std::string& text) {
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (piece.empty()) throw std::invalid_argument("empty coefficient in list: '" + text + "'");
    coeffs.push_back(parse_rational(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
  return coeffs;
}

}  // namespace cycleforge
