#pragma once

#include <nlohmann/json.hpp>

#include "satip/exact/matrix.hpp"
#include "satip/exact/rational_function.hpp"
#include "satip/polytope/hpolytope.hpp"
#include "satip/quasipoly/positive_form.hpp"
#include "satip/quasipoly/quasi_polynomial.hpp"

// JSON encodings shared by the CLI and the tests. Rationals are strings
// "p" or "p/q"; malformed documents raise satip::Error(InvalidArgument).
namespace satip::io {

using nlohmann::json;

json rational_to_json(const exact::Rational& q);
exact::Rational rational_from_json(const json& j);

json polynomial_to_json(const exact::RationalPolynomial& p);
exact::RationalPolynomial polynomial_from_json(const json& j);

// {"dim": n, "rows": [{"a": [...], "rel": "le"|"lt"|"eq", "b": "p/q"}]}
json polytope_to_json(const polytope::HPolytope& p);
polytope::HPolytope polytope_from_json(const json& j);

// {"period": l, "constituents": [["c0", "c1", ...], ...]}
json quasipolynomial_to_json(const quasipoly::QuasiPolynomial& f);
quasipoly::QuasiPolynomial quasipolynomial_from_json(const json& j);

// {"h": [...], "den": [[a, mult], ...]}
json positive_form_to_json(const quasipoly::PositiveForm& f);
quasipoly::PositiveForm positive_form_from_json(const json& j);

// {"num": [...], "den": [...]} with ascending coefficients.
json rational_function_to_json(const exact::RationalFunction& f);

json int_matrix_to_json(const exact::IntMatrix& m);
exact::IntMatrix int_matrix_from_json(const json& j);

}  // namespace satip::io
