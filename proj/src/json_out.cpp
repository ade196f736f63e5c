#include "higgsnum/json_out.hpp"

namespace higgsnum {

using nlohmann::json;

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Integer& z) { return to_string(z); }

json to_json(const NSVector& v) { return v.coords; }

json to_json(const QNSVector& v) {
  json out = json::array();
  for (const auto& x : v.coords) out.push_back(to_string(x));
  return out;
}

json to_json(const ChowClass& c) {
  return {{"deg0", to_json(c.deg0)}, {"deg1", to_json(c.deg1)}, {"deg2", to_json(c.deg2)}};
}

json to_json(const YClass& y) { return {{"alpha", to_json(y.alpha())}, {"beta", to_json(y.beta())}}; }

json to_json(const FiberWitness& w) { return {{"delta", to_json(w.delta)}, {"n_points", w.n_points}}; }

json to_json(const RegimeReport& r) {
  json out{{"regime", std::string(to_string(r.regime))},
           {"c2_gbun", to_json(r.c2_gbun)},
           {"c2_gbun_integral", is_integer(r.c2_gbun)}};
  if (r.witness) {
    out["delta"] = to_json(r.witness->delta);
    out["n_points"] = r.witness->n_points;
  } else {
    out["delta"] = nullptr;
    out["n_points"] = nullptr;
  }
  return out;
}

json to_json(const NestedComponent& c) {
  json betas = json::array();
  for (const auto& b : c.betas) betas.push_back(to_json(b));
  return {{"betas", betas}, {"lengths", c.lengths}};
}

json to_json(const OlympicScan& s) {
  return {{"r", s.r},
          {"max", to_json(s.max)},
          {"bound", to_json(olympic_bound(s.r))},
          {"argmax", s.argmax},
          {"compositions", s.compositions},
          {"bound_holds", s.bound_holds},
          {"unique_at_ones", s.unique_at_ones}};
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational string or integer");
}

QNSVector qns_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  QNSVector out;
  for (const auto& x : j) out.coords.push_back(rational_from_json(x));
  return out;
}

ChowClass chow_from_json(const json& j) {
  if (!j.is_object()) throw InputError("expected a Chow class object");
  return {rational_from_json(j.at("deg0")), qns_from_json(j.at("deg1")), rational_from_json(j.at("deg2"))};
}

}  // namespace higgsnum
