#include "bellhopf/json_io.hpp"

#include "bellhopf/boson_text.hpp"
#include "bellhopf/errors.hpp"
#include "bellhopf/hopf_text.hpp"

namespace bellhopf {

using nlohmann::json;

namespace {

json letters_json(const Monomial& m) { return json(std::vector<Monomial::Letter>(m.letters().begin(), m.letters().end())); }

Monomial monomial_from(const json& j) {
  if (!j.is_array()) throw DomainError("monomial must be an array of letter indices");
  return Monomial(j.get<std::vector<Monomial::Letter>>());
}

Rational rational_from(const json& j) {
  if (!j.is_string()) throw DomainError("rational values must be \"p/q\" strings");
  return parse_rational(j.get<std::string>());
}

const json& field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) throw DomainError(std::string("missing field '") + name + "'");
  return doc.at(name);
}

}  // namespace

json to_json(const EGFSeries& series) {
  json coeffs = json::array();
  for (const auto& c : series.coefficients()) coeffs.push_back(to_string(c));
  return {{"order", series.order()}, {"coefficients", std::move(coeffs)}};
}

EGFSeries egf_from_json(const json& doc) {
  const json& order = field(doc, "order");
  const json& coeffs = field(doc, "coefficients");
  if (!order.is_number_unsigned() || !coeffs.is_array()) throw DomainError("malformed EGF series document");
  if (coeffs.size() != order.get<std::size_t>() + 1) throw DomainError("EGF series needs order + 1 coefficients");
  std::vector<Rational> values;
  for (const auto& c : coeffs) values.push_back(rational_from(c));
  return EGFSeries(std::move(values));
}

json to_json(const HopfElement& element) {
  json terms = json::array();
  for (const auto& [m, c] : element) {
    terms.push_back({{"monomial", letters_json(m)}, {"coefficient", to_string(c)}});
  }
  return {{"terms", std::move(terms)}, {"text", to_string(element)}};
}

HopfElement hopf_from_json(const json& doc) {
  const json& terms = field(doc, "terms");
  if (!terms.is_array()) throw DomainError("'terms' must be an array");
  HopfElement out;
  for (const auto& t : terms) out.add_term(monomial_from(field(t, "monomial")), rational_from(field(t, "coefficient")));
  return out;
}

json to_json(const TensorElement& element) {
  json terms = json::array();
  for (const auto& [key, c] : element) {
    terms.push_back({{"left", letters_json(key.first)},
                     {"right", letters_json(key.second)},
                     {"coefficient", to_string(c)}});
  }
  return {{"terms", std::move(terms)}, {"text", to_string(element)}};
}

TensorElement tensor_from_json(const json& doc) {
  const json& terms = field(doc, "terms");
  if (!terms.is_array()) throw DomainError("'terms' must be an array");
  TensorElement out;
  for (const auto& t : terms) {
    out.add_term({monomial_from(field(t, "left")), monomial_from(field(t, "right"))},
                 rational_from(field(t, "coefficient")));
  }
  return out;
}

json to_json(const NormalOrderedForm& form) {
  json terms = json::array();
  for (auto it = form.terms().rbegin(); it != form.terms().rend(); ++it) {
    terms.push_back({{"create", it->first.create},
                     {"annihilate", it->first.annihilate},
                     {"coefficient", to_string(it->second)}});
  }
  return {{"terms", std::move(terms)}, {"text", to_string(form)}};
}

json to_json(const DiagramCensus& census) {
  json rows = json::array();
  for (const auto& [m, count] : census.counts) {
    rows.push_back({{"monomial", to_string(m)}, {"letters", letters_json(m)}, {"count", count.get_str()}});
  }
  return {{"n", census.n}, {"total", census.total().get_str()}, {"census", std::move(rows)}};
}

}  // namespace bellhopf
