#pragma once

#include <string>

#include "json.hpp"

#include "skewext/boundary.hpp"
#include "skewext/extensions.hpp"
#include "skewext/halfline.hpp"

// JSON forms shared by the CLI and the Python bindings. Complex numbers are
// [re, im] pairs of doubles; exact rationals are "p/q" strings. Malformed
// input raises Error(InvalidInput).
namespace skewext::io {

using nlohmann::json;

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);

json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j);

// Row-major list of rows.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// Columns of the orthonormal basis as a list of vectors.
json subspace_to_json(const Subspace& s);

// {"n": n, "graph_generators": [v, ...]} with v in C^{2n}.
json relation_to_json(const Relation& r);
Relation relation_from_json(const json& j);

json system_to_json(const BoundarySystem& s);
json triplet_to_json(const BoundaryTriplet& t);
json report_to_json(const VerificationReport& r);

// {"kind": "unitary_A"|"unitary_B"|"contraction", "matrix": [[[re,im], ...], ...]}
json param_to_json(const ExtensionParam& p);
ExtensionParam param_from_json(const json& j);

json rational_complex_to_json(const halfline::RationalComplex& z);
// [{"k": int, "lambda": "p/q", "re": "p/q", "im": "p/q"}, ...]
json expoly_to_json(const halfline::ExpPoly& f);
halfline::ExpPoly expoly_from_json(const json& j);

json read_json_file(const std::string& path);

}  // namespace skewext::io
