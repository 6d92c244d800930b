#pragma once

#include <json.hpp>

#include "fpd/errors.hpp"
#include "fpd/poly.hpp"

namespace fpd {

// Wire format: {"coeffs": ["c0", "c1", ...]} with decimal-string
// coefficients in ascending powers of q.
inline nlohmann::json poly_to_json(const Poly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const BigInt& c : p.coeffs()) coeffs.push_back(c.get_str());
  return nlohmann::json{{"coeffs", coeffs}};
}

inline Poly poly_from_json(const nlohmann::json& j) {
  if (!j.contains("coeffs") || !j["coeffs"].is_array())
    throw ParseError("polynomial JSON requires a 'coeffs' array");
  std::vector<BigInt> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw ParseError("polynomial coefficients must be strings");
    coeffs.emplace_back(c.get<std::string>());
  }
  return Poly::from_coeffs(std::move(coeffs));
}

}  // namespace fpd
