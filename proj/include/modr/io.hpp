#pragma once

#include "modr/cochain.hpp"
#include "modr/liealg.hpp"

#include <json.hpp>

#include <string>

/// JSON formats.
///
///   algebra: {"dim": n, "basis": [names], "brackets": [{"i": i, "j": j, "value": [q...]}]}
///   map:     {"matrix": [[q...] ...]}           (row-major; column j is the image of e_j)
///   cochain: {"degree": k, "entries": [{"tuple": [i_1 < ... < i_k], "value": [q...]}]}
///   vector:  [q...]
///
/// Rationals are integers or strings "p/q". Omitted brackets and tuples are zero.
namespace modr::io {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational &q);
Rational rational_from_json(const Json &j, const std::string &where);

Json vector_to_json(const Vector &v);
Vector vector_from_json(const Json &j, std::size_t dim, const std::string &where);

Json algebra_to_json(const LieAlgebra &algebra);
LieAlgebra algebra_from_json(const Json &j, JacobiCheck check = JacobiCheck::Eager);

Json endo_to_json(const Endo &f);
Endo endo_from_json(const Json &j, const LieAlgebra &algebra);

Json cochain_to_json(const Cochain &c);
Cochain cochain_from_json(const Json &j, const LieAlgebra &algebra);

/// Reads and parses a JSON file; InputError carries the path and parse position.
Json read_json_file(const std::string &path);

} // namespace modr::io
