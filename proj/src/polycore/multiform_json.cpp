#include "tvx/multiform_json.hpp"

namespace tvx {

nlohmann::json to_json(const MultiForm& form) {
  nlohmann::json orders = nlohmann::json::object();
  for (Pair p : kAllPairs)
    if (auto o = form.order(p)) orders[std::string(1, pair_name(p))] = *o;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mono, c] : form.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (Pair p : kAllPairs)
      if (form.order(p).value_or(0) > 0)
        exps[std::string(1, pair_name(p))] = {mono.get(p, 0), mono.get(p, 1)};
    terms.push_back({{"exps", exps}, {"coeff", to_string(c)}});
  }
  return {{"orders", orders}, {"terms", terms}};
}

MultiForm multiform_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("orders") || !j.contains("terms"))
    throw Error("malformed form JSON: expected \"orders\" and \"terms\"");
  Orders orders{};
  for (const auto& [name, value] : j.at("orders").items()) {
    if (!value.is_number_integer() || value.get<int>() < 0) throw Error("malformed form JSON: bad order");
    orders[index_of(parse_pair(name))] = value.get<int>();
  }
  MultiForm::Terms terms;
  for (const auto& term : j.at("terms")) {
    Monomial mono;
    if (term.contains("exps")) {
      for (const auto& [name, e] : term.at("exps").items()) {
        if (!e.is_array() || e.size() != 2) throw Error("malformed form JSON: bad exponent pair");
        Pair p = parse_pair(name);
        mono.set(p, 0, e[0].get<int>());
        mono.set(p, 1, e[1].get<int>());
      }
    }
    const auto& c = term.at("coeff");
    Rational coeff = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>());
    if (!terms.emplace(mono, coeff).second) throw Error("malformed form JSON: duplicate term");
  }
  return MultiForm::from_terms(std::move(terms), orders);
}

}  // namespace tvx
