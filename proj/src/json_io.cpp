#include "braid/json_io.hpp"

#include "braid/errors.hpp"

namespace braid {

Json poly_to_json(const LaurentPoly& p, const std::string& variable) {
  Json j = Json::object();
  j["variable"] = variable;
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
  return j;
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("polynomial JSON must be an object");
  LaurentPoly::Terms terms;
  for (const auto& [key, value] : j.items()) {
    if (key == "variable") continue;
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(key, &used);
    } catch (const std::exception&) {
      throw ParseError("bad exponent key '" + key + "'");
    }
    if (used != key.size()) throw ParseError("bad exponent key '" + key + "'");
    if (!value.is_number_integer()) throw ParseError("coefficient for '" + key + "' is not an integer");
    terms.emplace(e, value.get<std::int64_t>());
  }
  return LaurentPoly(std::move(terms));
}

Json matrix_to_json(const LaurentMatrix& m, const std::string& variable) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(poly_to_json(m(i, j), variable));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_to_json(const IntMatrix2& m) {
  return Json::array({Json::array({m[0][0], m[0][1]}), Json::array({m[1][0], m[1][1]})});
}

Json matrix_to_json(const std::vector<std::vector<std::int64_t>>& m) {
  Json rows = Json::array();
  for (const auto& r : m) rows.push_back(r);
  return rows;
}

std::string point_name(int point, int n) {
  return point < n ? "L" + std::to_string(point + 1) : "R" + std::to_string(point - n + 1);
}

Json tl_to_json(const TLElement& x) {
  Json terms = Json::array();
  const int n = x.strands();
  for (const auto& [m, c] : x.terms()) {
    Json pairs = Json::array();
    for (const auto& [p, q] : m.arcs()) pairs.push_back({point_name(p, n), point_name(q, n)});
    terms.push_back({{"matching", std::move(pairs)}, {"coeff", poly_to_json(c, "A")}});
  }
  return terms;
}

Json coordinates_to_json(const ArtinCoordinates& c) {
  Json coords = Json::array();
  for (const auto& w : c.coords) coords.push_back(to_string(w));
  return {{"n", c.strands}, {"coordinates", std::move(coords)}};
}

Json report_to_json(const PolynomialReport& r) {
  return {{"bracket", poly_to_json(r.bracket, "a")},
          {"writhe", r.writhe},
          {"f", poly_to_json(r.f, "a")},
          {"jones_q", poly_to_json(r.jones_q, "q")},
          {"jones", jones_display(r.jones_q)},
          {"components", r.components},
          {"variables", {{"a", "Kauffman bracket variable"}, {"q", "t^(1/4), a = q^-1"}}}};
}

Json fuzz_to_json(const FuzzReport& r) {
  Json j = {{"trials", r.trials}, {"violations", r.violations}};
  j["first_counterexample"] = r.first_counterexample ? Json(*r.first_counterexample) : Json(nullptr);
  return j;
}

}  // namespace braid
