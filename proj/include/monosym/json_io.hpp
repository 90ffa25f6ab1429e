#pragma once

#include <json.hpp>

#include "monosym/poly.hpp"
#include "monosym/symfunc.hpp"
#include "monosym/tn.hpp"

namespace monosym {

// {"n": <int>, "terms": [{"coef": "<num>/<den>", "exps": [...]}, ...]},
// terms in graded-lex order, coefficients reduced, "/1" omitted.
inline nlohmann::json poly_to_json(const Poly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"coef", rat_to_string(c)}, {"exps", e}});
  return {{"n", p.n_vars()}, {"terms", std::move(terms)}};
}

inline Poly poly_from_json(const nlohmann::json& j) {
  Poly p(j.at("n").get<int>());
  for (const auto& t : j.at("terms"))
    p.add_term(t.at("exps").get<Exponents>(), rat_from_string(t.at("coef").get<std::string>()));
  return p;
}

// Same layout with a basis marker so slot polynomials are never confused
// with x-polynomials.
inline nlohmann::json powersum_to_json(const symfunc::PowerSumExpr& e) {
  nlohmann::json j = poly_to_json(e.expr);
  j["basis"] = "powersum";
  j["n"] = e.n_vars;
  return j;
}

inline symfunc::PowerSumExpr powersum_from_json(const nlohmann::json& j) {
  if (j.value("basis", "") != std::string("powersum"))
    throw std::invalid_argument("missing powersum basis marker");
  const int n = j.at("n").get<int>();
  Poly expr(n);
  for (const auto& t : j.at("terms"))
    expr.add_term(t.at("exps").get<Exponents>(), rat_from_string(t.at("coef").get<std::string>()));
  return {n, std::move(expr)};
}

inline nlohmann::json proper_product_to_json(const ProperProduct& pp) {
  return {{"low", pp.low_exps}, {"elders", pp.elders}};
}

inline nlohmann::json decomposition_to_json(const Decomposition& d) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& pp : d.basis) basis.push_back(proper_product_to_json(pp));
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : d.coeffs) coeffs.push_back(rat_to_string(c));
  return {{"n", d.n}, {"d", d.d}, {"basis", std::move(basis)}, {"coeffs", std::move(coeffs)}};
}

inline Decomposition decomposition_from_json(const nlohmann::json& j) {
  Decomposition d;
  d.n = j.at("n").get<int>();
  d.d = j.at("d").get<int>();
  for (const auto& b : j.at("basis"))
    d.basis.push_back({d.n, b.at("low").get<std::vector<int>>(), b.at("elders").get<std::vector<int>>()});
  for (const auto& c : j.at("coeffs")) d.coeffs.push_back(rat_from_string(c.get<std::string>()));
  return d;
}

}  // namespace monosym
