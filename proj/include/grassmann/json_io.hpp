#pragma once

// JSON and CSV forms of scalars, multivectors, endomorphisms and series.
//
//   scalar       integers/rationals: number or "p/q"; Booleans: true/false;
//                maxplus: number or "-inf"
//   multivector  {"n": int, "domain": str, "terms": [{"word": [int], "pos": s, "neg": s}]}
//   endomorphism {"n": int, "domain": str, "matrix": [[s]]}, entry [i][j] is
//                the b_i-coefficient of f(b_j)

#include <string>
#include <string_view>

#include <json.hpp>

#include "grassmann/quasi_inverse.hpp"

namespace grassmann {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& s);
// `where` names the field in error messages.
Scalar scalar_from_json(const Json& j, DomainKind kind, const std::string& where = "scalar");

Json pair_to_json(const PairScalar& p);

Json multivector_to_json(const MultiVector& x);
MultiVector multivector_from_json(const Json& j);

Json endomorphism_to_json(const Endomorphism& f);
// Accepts the object form or a bare row-major array of rows. For the bare
// form the domain must be supplied; n <= 0 infers the rank from the rows.
Endomorphism endomorphism_from_json(const Json& j, DomainKind kind, int n = 0);

Json zpolynomial_to_json(const ZPolynomial& p);
Json eigen_data_to_json(const EigenData& data);

// Inline JSON ("[[0,1],[1,0]]"), or a path to a JSON or CSV file (one matrix
// row per line, comma separated). n <= 0 infers the rank. "-inf" is only
// accepted for maxplus.
Endomorphism parse_matrix(std::string_view path_or_inline, ScalarDomain domain, int n = 0);

}  // namespace grassmann
