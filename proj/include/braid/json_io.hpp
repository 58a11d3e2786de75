#pragma once

#include <string>

#include "braid/combing.hpp"
#include "braid/fuzz_report.hpp"
#include "braid/invariants.hpp"
#include "braid/laurent.hpp"
#include "braid/ordering.hpp"
#include "braid/representations.hpp"
#include "braid/temperley_lieb.hpp"
#include "json.hpp"

namespace braid {

using Json = nlohmann::ordered_json;

/// {"variable": "t", "<exponent>": coeff, ...}
Json poly_to_json(const LaurentPoly& p, const std::string& variable);
/// Inverse of poly_to_json; the variable name is ignored.
LaurentPoly poly_from_json(const Json& j);

/// Row-major nested arrays of polynomial objects.
Json matrix_to_json(const LaurentMatrix& m, const std::string& variable = "t");
Json matrix_to_json(const IntMatrix2& m);
Json matrix_to_json(const std::vector<std::vector<std::int64_t>>& m);

/// Boundary points are named "L1".."Ln", "R1".."Rn".
std::string point_name(int point, int n);
/// [{"matching": [["L1","L2"], ...], "coeff": poly}, ...]
Json tl_to_json(const TLElement& x);

/// {"n": n, "coordinates": ["<free word>", ...]} with beta_1 first.
Json coordinates_to_json(const ArtinCoordinates& c);

Json report_to_json(const PolynomialReport& r);
Json fuzz_to_json(const FuzzReport& r);

}  // namespace braid
