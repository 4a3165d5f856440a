#include "modr/cochain.hpp"

#include "modr/combinatorics.hpp"
#include "modr/errors.hpp"

#include <algorithm>
#include <string>

namespace modr {

namespace {

// Determinant by exact Gaussian elimination; k is small.
Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t k = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && a[p][c] == 0)
      ++p;
    if (p == k)
      return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < k; ++r) {
      if (a[r][c] == 0)
        continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < k; ++j)
        a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

} // namespace

std::size_t cochain_space_dim(std::size_t n, std::size_t arity) { return binomial(n, arity) * n; }

Cochain::Cochain(LieAlgebra algebra, std::size_t arity)
    : algebra_(std::move(algebra)), arity_(arity),
      coeffs_(cochain_space_dim(algebra_.dim(), arity)) {}

Cochain::Cochain(LieAlgebra algebra, std::size_t arity, std::vector<Rational> coeffs)
    : algebra_(std::move(algebra)), arity_(arity), coeffs_(std::move(coeffs)) {
  const std::size_t want = cochain_space_dim(algebra_.dim(), arity);
  if (coeffs_.size() != want)
    throw InputError("cochain of arity " + std::to_string(arity) + " needs " +
                     std::to_string(want) + " coefficients, got " +
                     std::to_string(coeffs_.size()));
}

Cochain Cochain::from_endo(const Endo &f) {
  const std::size_t n = f.dim();
  Cochain c(f.algebra(), 1);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t m = 0; m < n; ++m)
      c.coeffs_[j * n + m] = f.matrix()(m, j);
  return c;
}

Cochain Cochain::from_vector(const LieAlgebra &algebra, const Vector &x) {
  check_conforms(algebra, x, "vector");
  return Cochain(algebra, 0, x.coeffs());
}

Cochain Cochain::bracket_cochain(const LieAlgebra &algebra) {
  const std::size_t n = algebra.dim();
  Cochain c(algebra, 2);
  const auto &tuples = lex_subsets(n, 2);
  for (std::size_t r = 0; r < tuples.size(); ++r)
    for (const auto &[m, v] : algebra.bracket_terms(tuples[r][0], tuples[r][1]))
      c.coeffs_[r * n + m] = v;
  return c;
}

Endo Cochain::to_endo() const {
  if (arity_ != 1)
    throw InputError("cochain of arity " + std::to_string(arity_) + " is not a linear map");
  const std::size_t n = dim();
  linalg::Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < n; ++r)
      m(r, j) = coeffs_[j * n + r];
  return Endo(algebra_, std::move(m));
}

Vector Cochain::to_vector() const {
  if (arity_ != 0)
    throw InputError("cochain of arity " + std::to_string(arity_) + " is not an element");
  return Vector(coeffs_);
}

std::size_t Cochain::num_tuples() const { return binomial(dim(), arity_); }

Vector Cochain::value(std::size_t tuple_rank) const {
  const std::size_t n = dim();
  return Vector(std::vector<Rational>(coeffs_.begin() + tuple_rank * n,
                                      coeffs_.begin() + (tuple_rank + 1) * n));
}

Vector Cochain::value_at(std::span<const std::size_t> tuple) const {
  return value(subset_rank(dim(), tuple));
}

void Cochain::set_value(std::span<const std::size_t> tuple, const Vector &v) {
  check_conforms(algebra_, v, "cochain value");
  if (tuple.size() != arity_)
    throw InputError("tuple of length " + std::to_string(tuple.size()) + " for a cochain of arity " +
                     std::to_string(arity_));
  for (std::size_t i = 0; i < tuple.size(); ++i)
    if (tuple[i] >= dim() || (i > 0 && tuple[i - 1] >= tuple[i]))
      throw InputError("cochain tuple must be increasing and within the basis");
  const std::size_t base = subset_rank(dim(), tuple) * dim();
  std::copy(v.coeffs().begin(), v.coeffs().end(), coeffs_.begin() + base);
}

Vector Cochain::eval_basis(std::span<const std::size_t> indices) const {
  if (indices.size() != arity_)
    throw InputError("cochain of arity " + std::to_string(arity_) + " evaluated on " +
                     std::to_string(indices.size()) + " arguments");
  std::vector<std::size_t> idx(indices.begin(), indices.end());
  const int sign = sort_with_sign(idx);
  if (sign == 0)
    return Vector(dim());
  Vector v = value_at(idx);
  if (sign < 0)
    v *= Rational(-1);
  return v;
}

Vector Cochain::eval_first(const Vector &v, std::span<const std::size_t> rest) const {
  const std::size_t n = dim();
  Vector out(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (v[a] == 0)
      continue;
    const auto ins = insert_sorted(rest, a);
    if (!ins)
      continue;
    const std::size_t base = subset_rank(n, ins->second) * n;
    const Rational s = ins->first > 0 ? v[a] : Rational(-v[a]);
    for (std::size_t m = 0; m < n; ++m)
      if (coeffs_[base + m] != 0)
        out[m] += s * coeffs_[base + m];
  }
  return out;
}

Vector Cochain::eval(const std::vector<Vector> &args) const {
  if (args.size() != arity_)
    throw InputError("cochain of arity " + std::to_string(arity_) + " evaluated on " +
                     std::to_string(args.size()) + " arguments");
  for (const auto &a : args)
    check_conforms(algebra_, a, "cochain argument");
  const std::size_t n = dim();
  Vector out(n);
  const auto &tuples = lex_subsets(n, arity_);
  std::vector<std::vector<Rational>> minor(arity_, std::vector<Rational>(arity_));
  for (std::size_t r = 0; r < tuples.size(); ++r) {
    const std::size_t base = r * n;
    if (std::all_of(coeffs_.begin() + base, coeffs_.begin() + base + n,
                    [](const Rational &c) { return c == 0; }))
      continue;
    for (std::size_t s = 0; s < arity_; ++s)
      for (std::size_t t = 0; t < arity_; ++t)
        minor[s][t] = args[s][tuples[r][t]];
    const Rational det = determinant(minor);
    if (det == 0)
      continue;
    for (std::size_t m = 0; m < n; ++m)
      out[m] += det * coeffs_[base + m];
  }
  return out;
}

bool Cochain::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return c == 0; });
}

void Cochain::check_compatible(const Cochain &other, const char *op) const {
  if (other.arity_ != arity_ || other.coeffs_.size() != coeffs_.size())
    throw InputError(std::string("cochain ") + op + " needs equal arity and dimension");
}

Cochain &Cochain::operator+=(const Cochain &other) {
  check_compatible(other, "addition");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cochain &Cochain::operator-=(const Cochain &other) {
  check_compatible(other, "subtraction");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Cochain &Cochain::operator*=(const Rational &s) {
  for (auto &c : coeffs_)
    c *= s;
  return *this;
}

} // namespace modr
