#pragma once

// JSON encodings shared by the CLI and its round-trip tests.
//
// Field elements are JSON integers for prime fields and "c0+c1*x+..." strings
// otherwise. Polynomials are ascending coefficient arrays. Vectors are rows;
// matrices act on column vectors.

#include <json.hpp>

#include "monocodes/codes.hpp"
#include "monocodes/gf.hpp"
#include "monocodes/linalg.hpp"
#include "monocodes/monomial.hpp"
#include "monocodes/poly.hpp"
#include "monocodes/structure.hpp"

namespace monocodes {

using Json = nlohmann::json;

Json to_json(const FieldSpec& field);
FieldSpec field_from_json(const Json& j);

Json to_json(const FieldElement& e);
FieldElement element_from_json(const FieldSpec& field, const Json& j);

Json to_json(const VectorFq& v);
VectorFq vector_from_json(const FieldSpec& field, const Json& j);

Json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const FieldSpec& field, const Json& j);

/// {"rows", "cols", "field", "entries": [[...], ...]}.
Json to_json(const MatrixFq& a);
MatrixFq matrix_from_json(const Json& j);

/// RREF basis rows.
Json to_json(const Subspace& v);

Json to_json(const Factorization& f);
Json to_json(const CharPoly& cp);

/// {field, n, a, sigma, selection, g, k, basis, d?}.
Json to_json(const LinearCode& code);
LinearCode code_from_json(const Json& j);

/// {invariant, hyperinvariant, characteristic, witness?, search, candidates_examined}.
Json to_json(const CharacteristicReport& report);

}  // namespace monocodes
