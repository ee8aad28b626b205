#include "satip/io/json.hpp"

#include "satip/error.hpp"

namespace satip::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::InvalidArgument, "malformed JSON: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t count_from_json(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

}  // namespace

json rational_to_json(const exact::Rational& q) { return exact::to_string(q); }

exact::Rational rational_from_json(const json& j) {
  if (j.is_string()) return exact::parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return exact::Rational(j.get<long>());
  bad("expected a rational string \"p/q\"");
}

json polynomial_to_json(const exact::RationalPolynomial& p) {
  json out = json::array();
  for (const exact::Rational& c : p.coefficients()) out.push_back(rational_to_json(c));
  return out;
}

exact::RationalPolynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) bad("polynomial must be an array of coefficients");
  std::vector<exact::Rational> c;
  for (const json& x : j) c.push_back(rational_from_json(x));
  return exact::RationalPolynomial(std::move(c));
}

json polytope_to_json(const polytope::HPolytope& p) {
  json rows = json::array();
  for (const polytope::Constraint& c : p.rows()) {
    json a = json::array();
    for (const exact::Rational& x : c.coeffs) a.push_back(rational_to_json(x));
    rows.push_back({{"a", a}, {"rel", std::string(polytope::relation_name(c.relation))}, {"b", rational_to_json(c.rhs)}});
  }
  return {{"dim", p.dim()}, {"rows", rows}};
}

polytope::HPolytope polytope_from_json(const json& j) {
  polytope::HPolytope p(count_from_json(field(j, "dim"), "dim"));
  const json& rows = field(j, "rows");
  if (!rows.is_array()) bad("rows must be an array");
  for (const json& r : rows) {
    const json& a = field(r, "a");
    if (!a.is_array()) bad("row coefficients must be an array");
    exact::RationalVector coeffs;
    for (const json& x : a) coeffs.push_back(rational_from_json(x));
    const json& rel = field(r, "rel");
    if (!rel.is_string()) bad("rel must be a string");
    const std::string name = rel.get<std::string>();
    polytope::Relation relation;
    if (name == "le") {
      relation = polytope::Relation::LE;
    } else if (name == "lt") {
      relation = polytope::Relation::LT;
    } else if (name == "eq") {
      relation = polytope::Relation::EQ;
    } else {
      bad("unknown relation \"" + name + "\"");
    }
    p.add(std::move(coeffs), relation, rational_from_json(field(r, "b")));
  }
  return p;
}

json quasipolynomial_to_json(const quasipoly::QuasiPolynomial& f) {
  json cs = json::array();
  for (const exact::RationalPolynomial& p : f.constituents()) cs.push_back(polynomial_to_json(p));
  return {{"period", f.period()}, {"constituents", cs}};
}

quasipoly::QuasiPolynomial quasipolynomial_from_json(const json& j) {
  const std::size_t period = count_from_json(field(j, "period"), "period");
  const json& cs = field(j, "constituents");
  if (!cs.is_array()) bad("constituents must be an array");
  std::vector<exact::RationalPolynomial> polys;
  for (const json& c : cs) polys.push_back(polynomial_from_json(c));
  return quasipoly::QuasiPolynomial(period, std::move(polys));
}

json positive_form_to_json(const quasipoly::PositiveForm& f) {
  json h = json::array();
  for (const exact::Integer& x : f.h) h.push_back(exact::to_string(x));
  json den = json::array();
  for (const quasipoly::DenominatorFactor& d : f.denominator) den.push_back({d.a, d.mult});
  return {{"h", h}, {"den", den}};
}

quasipoly::PositiveForm positive_form_from_json(const json& j) {
  quasipoly::PositiveForm f;
  const json& h = field(j, "h");
  if (!h.is_array()) bad("h must be an array");
  for (const json& x : h) {
    const exact::Rational q = rational_from_json(x);
    if (!exact::is_integer(q)) bad("h entries must be integers");
    f.h.push_back(q.get_num());
  }
  const json& den = field(j, "den");
  if (!den.is_array()) bad("den must be an array");
  for (const json& d : den) {
    if (!d.is_array() || d.size() != 2) bad("den entries must be [a, mult]");
    f.denominator.push_back({count_from_json(d[0], "a"), count_from_json(d[1], "mult")});
  }
  return f;
}

json rational_function_to_json(const exact::RationalFunction& f) {
  return {{"num", polynomial_to_json(f.numerator())}, {"den", polynomial_to_json(f.denominator())}};
}

json int_matrix_to_json(const exact::IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(exact::to_string(m(r, c)));
    out.push_back(row);
  }
  return out;
}

exact::IntMatrix int_matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a nonempty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  std::vector<exact::Integer> entries;
  for (const json& row : j) {
    if (!row.is_array() || row.size() != cols) bad("matrix rows must be arrays of equal length");
    for (const json& x : row) {
      const exact::Rational q = rational_from_json(x);
      if (!exact::is_integer(q)) bad("matrix entries must be integers");
      entries.push_back(q.get_num());
    }
  }
  return exact::IntMatrix(j.size(), cols, std::move(entries));
}

}  // namespace satip::io
