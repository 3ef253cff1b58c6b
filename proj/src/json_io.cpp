#include "monocodes/json_io.hpp"

#include "monocodes/error.hpp"

namespace monocodes {

namespace {

Code code_from_json(const FieldSpec& field, const Json& j) {
  if (j.is_number_integer()) {
    const auto v = j.get<long long>();
    if (field.m() == 1) return field.code_of_int(v);
    if (v < 0 || v >= static_cast<long long>(field.p())) throw PreconditionError("integer element outside the prime field");
    return static_cast<Code>(v);
  }
  if (j.is_string()) return field.parse(j.get<std::string>());
  throw PreconditionError("field element must be an integer or a string, got " + j.dump());
}

}  // namespace

Json to_json(const FieldSpec& field) {
  Json j{{"p", field.p()}, {"m", field.m()}};
  if (field.m() > 1) j["modulus"] = field.modulus();
  return j;
}

FieldSpec field_from_json(const Json& j) {
  FieldSpec field(j.at("p").get<std::uint32_t>(), j.value("m", 1u));
  if (j.contains("modulus") && j.at("modulus").get<std::vector<std::uint32_t>>() != field.modulus()) {
    throw PreconditionError("field modulus " + j.at("modulus").dump() + " is not the canonical one");
  }
  return field;
}

Json to_json(const FieldElement& e) {
  if (e.field().m() == 1) return Json(e.code());
  return Json(e.to_string());
}

FieldElement element_from_json(const FieldSpec& field, const Json& j) { return FieldElement(field, code_from_json(field, j)); }

Json to_json(const VectorFq& v) {
  Json j = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) j.push_back(to_json(v[i]));
  return j;
}

VectorFq vector_from_json(const FieldSpec& field, const Json& j) {
  std::vector<Code> codes;
  for (const auto& e : j) codes.push_back(code_from_json(field, e));
  return VectorFq(field, std::move(codes));
}

Json to_json(const Polynomial& f) {
  Json j = Json::array();
  for (std::size_t i = 0; i < f.codes().size(); ++i) j.push_back(to_json(f.coeff(i)));
  return j;
}

Polynomial polynomial_from_json(const FieldSpec& field, const Json& j) {
  std::vector<Code> codes;
  for (const auto& e : j) codes.push_back(code_from_json(field, e));
  return Polynomial(field, std::move(codes));
}

Json to_json(const MatrixFq& a) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) entries.push_back(to_json(a.row(i)));
  return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"field", to_json(a.field())}, {"entries", entries}};
}

MatrixFq matrix_from_json(const Json& j) {
  const FieldSpec field = field_from_json(j.at("field"));
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const Json& entries = j.at("entries");
  if (entries.size() != rows) throw PreconditionError("matrix JSON: entries has wrong row count");
  std::vector<VectorFq> r;
  for (const auto& row : entries) r.push_back(vector_from_json(field, row));
  return MatrixFq::from_rows(field, cols, r);
}

Json to_json(const Subspace& v) {
  Json j = Json::array();
  for (const auto& b : v.vectors()) j.push_back(to_json(b));
  return j;
}

Json to_json(const Factorization& f) {
  Json factors = Json::array();
  for (const auto& fp : f.factors) {
    factors.push_back({{"coeffs", to_json(fp.factor)}, {"text", fp.factor.to_string()}, {"multiplicity", fp.multiplicity}});
  }
  return Json{{"unit", to_json(f.unit)}, {"factors", factors}};
}

Json to_json(const CharPoly& cp) {
  return Json{{"unit", to_json(cp.unit)},
              {"monic", to_json(cp.monic)},
              {"coeffs", to_json(cp.expanded())},
              {"text", cp.monic.to_string()}};
}

Json to_json(const LinearCode& code) {
  const MonomialMatrix& m = code.matrix();
  Json j{{"field", to_json(m.field())},
         {"n", code.n()},
         {"a", to_json(m.coefficients())},
         {"sigma", m.sigma().to_string()},
         {"selection", code.selection()},
         {"g", to_json(code.g())},
         {"k", code.k()},
         {"basis", to_json(code.space())}};
  if (code.cached_distance()) j["d"] = *code.cached_distance();
  return j;
}

LinearCode code_from_json(const Json& j) {
  const FieldSpec field = field_from_json(j.at("field"));
  const auto n = j.at("n").get<std::size_t>();
  const VectorFq a = vector_from_json(field, j.at("a"));
  if (a.size() != n) throw PreconditionError("code JSON: 'a' has " + std::to_string(a.size()) + " entries, n = " + std::to_string(n));
  const Permutation sigma = Permutation::parse(j.at("sigma").get<std::string>(), n);
  MonomialMatrix m = MonomialMatrix::general(a, sigma);
  std::vector<VectorFq> rows;
  for (const auto& r : j.at("basis")) rows.push_back(vector_from_json(field, r));
  Subspace space = Subspace::span(field, n, rows);
  if (space.dim() != j.at("k").get<std::size_t>()) throw PreconditionError("code JSON: basis rank differs from k");
  const Polynomial g = polynomial_from_json(field, j.at("g"));
  if (g.is_zero()) throw PreconditionError("code JSON: zero defining polynomial");
  LinearCode code(std::move(m), std::move(space), j.at("selection").get<std::vector<std::size_t>>(), g.leading(), g.monic());
  if (j.contains("d") && j.at("d").get<std::size_t>() != code.distance()) {
    throw PreconditionError("code JSON: recorded distance disagrees with the code");
  }
  return code;
}

Json to_json(const CharacteristicReport& report) {
  Json j{{"invariant", report.invariant},
         {"hyperinvariant", report.hyperinvariant},
         {"characteristic", to_string(report.status)},
         {"search", report.search},
         {"candidates_examined", report.candidates_examined},
         {"subspace", to_json(report.subspace)}};
  if (report.witness) j["witness"] = to_json(*report.witness);
  return j;
}

}  // namespace monocodes
