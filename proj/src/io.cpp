#include "modr/io.hpp"

#include "modr/combinatorics.hpp"
#include "modr/errors.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace modr::io {

namespace {

const Json &member(const Json &j, const char *key, const std::string &where) {
  if (!j.is_object())
    throw InputError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

std::size_t index_from_json(const Json &j, const std::string &where) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw InputError(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

const Json &array_at(const Json &j, const std::string &where) {
  if (!j.is_array())
    throw InputError(where + ": expected an array");
  return j;
}

} // namespace

Json rational_to_json(const Rational &q) {
  const Integer num = numerator(q);
  if (denominator(q) == 1 && num >= std::numeric_limits<long long>::min() &&
      num <= std::numeric_limits<long long>::max())
    return Json(num.convert_to<long long>());
  return Json(to_string(q));
}

Rational rational_from_json(const Json &j, const std::string &where) {
  if (j.is_number_integer())
    return j.is_number_unsigned() ? Rational(j.get<unsigned long long>())
                                  : Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError &e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + ": expected an integer or a \"p/q\" string");
}

Json vector_to_json(const Vector &v) {
  Json out = Json::array();
  for (const auto &c : v.coeffs())
    out.push_back(rational_to_json(c));
  return out;
}

Vector vector_from_json(const Json &j, std::size_t dim, const std::string &where) {
  array_at(j, where);
  if (j.size() != dim)
    throw InputError(where + ": expected " + std::to_string(dim) + " entries, got " +
                     std::to_string(j.size()));
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i)
    v[i] = rational_from_json(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

Json algebra_to_json(const LieAlgebra &algebra) {
  Json out;
  out["dim"] = algebra.dim();
  out["basis"] = algebra.basis_names();
  Json br = Json::array();
  for (const auto &b : algebra.brackets())
    br.push_back(Json{{"i", b.i}, {"j", b.j}, {"value", vector_to_json(b.value)}});
  out["brackets"] = std::move(br);
  return out;
}

LieAlgebra algebra_from_json(const Json &j, JacobiCheck check) {
  const std::size_t dim = index_from_json(member(j, "dim", "algebra"), "algebra.dim");
  std::vector<std::string> names;
  if (auto it = j.find("basis"); it != j.end()) {
    array_at(*it, "algebra.basis");
    if (it->size() != dim)
      throw InputError("algebra.basis: expected " + std::to_string(dim) + " names, got " +
                       std::to_string(it->size()));
    std::set<std::string> seen;
    for (std::size_t i = 0; i < dim; ++i) {
      const Json &name = (*it)[i];
      if (!name.is_string())
        throw InputError("algebra.basis[" + std::to_string(i) + "]: expected a string");
      if (!seen.insert(name.get<std::string>()).second)
        throw InputError("algebra.basis[" + std::to_string(i) + "]: duplicate name '" +
                         name.get<std::string>() + "'");
      names.push_back(name.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < dim; ++i)
      names.push_back("e" + std::to_string(i + 1));
  }
  std::vector<LieAlgebra::Bracket> brackets;
  if (auto it = j.find("brackets"); it != j.end()) {
    array_at(*it, "algebra.brackets");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string where = "algebra.brackets[" + std::to_string(k) + "]";
      const Json &b = (*it)[k];
      const std::size_t bi = index_from_json(member(b, "i", where), where + ".i");
      const std::size_t bj = index_from_json(member(b, "j", where), where + ".j");
      if (bi >= dim || bj >= dim)
        throw InputError(where + ": index out of range for dimension " + std::to_string(dim));
      if (bi >= bj)
        throw InputError(where + ": only pairs with i < j are permitted");
      brackets.push_back({bi, bj, vector_from_json(member(b, "value", where), dim, where + ".value")});
    }
  }
  return LieAlgebra(std::move(names), brackets, check);
}

Json endo_to_json(const Endo &f) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < f.dim(); ++r)
    rows.push_back(vector_to_json(Vector(f.matrix().row(r))));
  return Json{{"matrix", std::move(rows)}};
}

Endo endo_from_json(const Json &j, const LieAlgebra &algebra) {
  const std::size_t n = algebra.dim();
  const Json &rows = array_at(member(j, "matrix", "map"), "map.matrix");
  if (rows.size() != n)
    throw InputError("map.matrix: expected " + std::to_string(n) + " rows, got " +
                     std::to_string(rows.size()));
  linalg::Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Vector row = vector_from_json(rows[r], n, "map.matrix[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = row[c];
  }
  return Endo(algebra, std::move(m));
}

Json cochain_to_json(const Cochain &c) {
  Json entries = Json::array();
  const auto &tuples = lex_subsets(c.dim(), c.arity());
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const Vector v = c.value(t);
    if (v.is_zero())
      continue;
    entries.push_back(Json{{"tuple", tuples[t]}, {"value", vector_to_json(v)}});
  }
  return Json{{"degree", c.arity()}, {"entries", std::move(entries)}};
}

Cochain cochain_from_json(const Json &j, const LieAlgebra &algebra) {
  const std::size_t n = algebra.dim();
  const std::size_t k = index_from_json(member(j, "degree", "cochain"), "cochain.degree");
  if (k > n)
    throw InputError("cochain.degree: " + std::to_string(k) + " exceeds the dimension " +
                     std::to_string(n));
  Cochain c(algebra, k);
  std::set<std::vector<std::size_t>> seen;
  if (auto it = j.find("entries"); it != j.end()) {
    array_at(*it, "cochain.entries");
    for (std::size_t e = 0; e < it->size(); ++e) {
      const std::string where = "cochain.entries[" + std::to_string(e) + "]";
      const Json &entry = (*it)[e];
      const Json &tj = array_at(member(entry, "tuple", where), where + ".tuple");
      if (tj.size() != k)
        throw InputError(where + ".tuple: expected " + std::to_string(k) + " indices");
      std::vector<std::size_t> tuple;
      for (std::size_t p = 0; p < k; ++p) {
        const std::size_t idx =
            index_from_json(tj[p], where + ".tuple[" + std::to_string(p) + "]");
        if (idx >= n)
          throw InputError(where + ".tuple: index out of range for dimension " +
                           std::to_string(n));
        if (!tuple.empty() && tuple.back() >= idx)
          throw InputError(where + ".tuple: indices must be strictly increasing");
        tuple.push_back(idx);
      }
      if (!seen.insert(tuple).second)
        throw InputError(where + ".tuple: repeated tuple");
      c.set_value(tuple, vector_from_json(member(entry, "value", where), n, where + ".value"));
    }
  }
  return c;
}

Json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error &e) {
    throw InputError(path + ": " + e.what());
  }
}

} // namespace modr::io
