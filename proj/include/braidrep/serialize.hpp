#pragma once

// JSON and LaTeX forms of polynomials and matrices. Integers are decimal
// strings and rationals are "P/Q" strings, so nothing passes through a
// floating-point type.

#include <string>

#include <json.hpp>

#include "braidrep/linalg.hpp"

namespace braidrep {

using Json = nlohmann::json;

// [{"coeff": "-3", "exp": [1, -2]}, ...]
Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j, int nvars);

// {"rows": r, "cols": c, "entries": [[...], ...]}
Json to_json(const Matrix<Rational>& m);
Json to_json(const Matrix<Integer>& m);
Json to_json(const Matrix<LaurentPoly>& m);
Matrix<Rational> rational_matrix_from_json(const Json& j);
Matrix<LaurentPoly> poly_matrix_from_json(const Json& j, int nvars);

// \left[\begin{array}{ccc} ... \end{array}\right]
std::string to_latex(const Matrix<Rational>& m);
std::string to_latex(const Matrix<LaurentPoly>& m, std::span<const std::string> names);

} // namespace braidrep
