#include "modr/liealg.hpp"

#include "modr/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace modr {

// ---------------------------------------------------------------------------
// Vector

Vector Vector::basis(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v[i] = 1;
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &a) { return a == 0; });
}

Vector &Vector::operator+=(const Vector &other) {
  if (other.size() != size())
    throw InputError("vector length mismatch in addition");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] += other.coeffs_[i];
  return *this;
}

Vector &Vector::operator-=(const Vector &other) {
  if (other.size() != size())
    throw InputError("vector length mismatch in subtraction");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Vector &Vector::operator*=(const Rational &s) {
  for (auto &a : coeffs_)
    a *= s;
  return *this;
}

Vector &Vector::add_scaled(const Rational &s, const Vector &other) {
  if (other.size() != size())
    throw InputError("vector length mismatch in addition");
  if (s == 0)
    return *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (other.coeffs_[i] != 0)
      coeffs_[i] += s * other.coeffs_[i];
  return *this;
}

// ---------------------------------------------------------------------------
// LieAlgebra

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names, const std::vector<Bracket> &brackets,
                       JacobiCheck check) {
  const std::size_t n = basis_names.size();
  auto data = std::make_shared<Data>();
  data->table.assign(n * n, Vector(n));
  data->terms.assign(n * n, Terms{});
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto &b : brackets) {
    if (b.i >= n || b.j >= n)
      throw InputError("bracket index (" + std::to_string(b.i) + ", " + std::to_string(b.j) +
                       ") out of range for dimension " + std::to_string(n));
    if (b.i >= b.j)
      throw InputError("bracket entries must have i < j, got (" + std::to_string(b.i) + ", " +
                       std::to_string(b.j) + ")");
    if (b.value.size() != n)
      throw InputError("bracket (" + std::to_string(b.i) + ", " + std::to_string(b.j) +
                       ") has a value of length " + std::to_string(b.value.size()) +
                       ", expected " + std::to_string(n));
    if (!seen.emplace(b.i, b.j).second)
      throw InputError("bracket (" + std::to_string(b.i) + ", " + std::to_string(b.j) +
                       ") given twice");
    data->table[b.i * n + b.j] = b.value;
    data->table[b.j * n + b.i] = -b.value;
  }
  for (std::size_t k = 0; k < n * n; ++k)
    for (std::size_t c = 0; c < n; ++c)
      if (data->table[k][c] != 0)
        data->terms[k].emplace_back(c, data->table[k][c]);
  data->names = std::move(basis_names);
  data_ = std::move(data);

  if (check == JacobiCheck::Eager) {
    const JacobiResult jr = verify_jacobi(*this);
    if (!jr.holds)
      throw JacobiViolation(*jr.counterexample);
  }
}

const std::vector<std::string> &LieAlgebra::basis_names() const {
  static const std::vector<std::string> empty;
  return data_ ? data_->names : empty;
}

Vector LieAlgebra::bracket(const Vector &x, const Vector &y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n)
    throw InputError("bracket arguments do not conform to dimension " + std::to_string(n));
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0)
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0)
        continue;
      const Terms &t = bracket_terms(i, j);
      if (t.empty())
        continue;
      const Rational s = x[i] * y[j];
      for (const auto &[c, v] : t)
        out[c] += s * v;
    }
  }
  return out;
}

Vector LieAlgebra::bracket_with_basis(const Vector &x, std::size_t j) const {
  const std::size_t n = dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0)
      continue;
    for (const auto &[c, v] : bracket_terms(i, j))
      out[c] += x[i] * v;
  }
  return out;
}

std::vector<LieAlgebra::Bracket> LieAlgebra::brackets() const {
  std::vector<Bracket> out;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!bracket_terms(i, j).empty())
        out.push_back({i, j, bracket_basis(i, j)});
  return out;
}

bool LieAlgebra::is_abelian() const {
  if (!data_)
    return true;
  return std::all_of(data_->terms.begin(), data_->terms.end(),
                     [](const Terms &t) { return t.empty(); });
}

bool LieAlgebra::equivalent_to(const LieAlgebra &other) const {
  if (same_as(other))
    return true;
  if (dim() != other.dim())
    return false;
  return data_->table == other.data_->table;
}

void check_conforms(const LieAlgebra &algebra, const Vector &x, const char *what) {
  if (x.size() != algebra.dim())
    throw InputError(std::string(what) + " has length " + std::to_string(x.size()) +
                     " but the algebra has dimension " + std::to_string(algebra.dim()));
}

// ---------------------------------------------------------------------------
// Endo

Endo::Endo(LieAlgebra algebra, linalg::Matrix matrix)
    : algebra_(std::move(algebra)), matrix_(std::move(matrix)) {
  const std::size_t n = algebra_.dim();
  if (matrix_.rows() != n || matrix_.cols() != n)
    throw InputError("operator matrix is " + std::to_string(matrix_.rows()) + "x" +
                     std::to_string(matrix_.cols()) + " but the algebra has dimension " +
                     std::to_string(n));
}

Endo Endo::identity(const LieAlgebra &algebra) {
  return Endo(algebra, linalg::Matrix::identity(algebra.dim()));
}

Endo Endo::zero(const LieAlgebra &algebra) {
  return Endo(algebra, linalg::Matrix(algebra.dim(), algebra.dim()));
}

Vector Endo::operator()(const Vector &x) const { return Vector(matrix_.apply(x.coeffs())); }

Vector Endo::image_of_basis(std::size_t j) const { return Vector(matrix_.column(j)); }

Endo &Endo::operator+=(const Endo &other) {
  matrix_ += other.matrix_;
  return *this;
}

Endo &Endo::operator-=(const Endo &other) {
  matrix_ -= other.matrix_;
  return *this;
}

Endo &Endo::operator*=(const Rational &s) {
  matrix_ *= s;
  return *this;
}

Endo operator*(const Endo &a, const Endo &b) { return Endo(a.algebra_, a.matrix_ * b.matrix_); }

// ---------------------------------------------------------------------------

JacobiViolation::JacobiViolation(Triple triple)
    : InputError("Jacobi identity fails on basis triple (" + std::to_string(triple[0]) + ", " +
                 std::to_string(triple[1]) + ", " + std::to_string(triple[2]) + ")"),
      triple_(triple) {}

JacobiResult verify_jacobi(const LieAlgebra &algebra) {
  const std::size_t n = algebra.dim();
  JacobiResult result;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector jac = algebra.bracket_with_basis(algebra.bracket_basis(i, j), k);
        jac += algebra.bracket_with_basis(algebra.bracket_basis(j, k), i);
        jac += algebra.bracket_with_basis(algebra.bracket_basis(k, i), j);
        if (!jac.is_zero()) {
          result.holds = false;
          result.counterexample = Triple{i, j, k};
          result.jacobiator = std::move(jac);
          return result;
        }
      }
  return result;
}

Endo ad(const LieAlgebra &algebra, const Vector &x) {
  check_conforms(algebra, x, "ad argument");
  const std::size_t n = algebra.dim();
  linalg::Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = algebra.bracket_with_basis(x, j);
    for (std::size_t r = 0; r < n; ++r)
      m(r, j) = col[r];
  }
  return Endo(algebra, std::move(m));
}

Endo exp_ad(const LieAlgebra &algebra, const Vector &x) {
  const std::size_t n = algebra.dim();
  const Endo a = ad(algebra, x);
  Endo term = Endo::identity(algebra);
  Endo sum = term;
  for (std::size_t k = 1; k <= n; ++k) {
    term = a * term;
    term *= Rational(1, static_cast<long>(k));
    if (term.matrix().is_zero())
      return sum;
    sum += term;
  }
  throw PreconditionError("exp_ad: ad_x is not nilpotent");
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

using linalg::Matrix;

struct SlBasis {
  std::vector<std::string> names;
  std::vector<Matrix> elements;
  // Positions of the upper, Cartan and lower parts in the basis.
  std::vector<int> part; // +1 upper, 0 Cartan, -1 lower
};

Matrix elementary(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

SlBasis sl_basis(std::size_t n) {
  SlBasis b;
  auto cartan = [&](std::size_t k) {
    Matrix m(n, n);
    m(k, k) = 1;
    m(k + 1, k + 1) = -1;
    return m;
  };
  if (n == 2) {
    b.names = {"e", "f", "h"};
    b.elements = {elementary(2, 0, 1), elementary(2, 1, 0), cartan(0)};
    b.part = {1, -1, 0};
    return b;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      b.names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      b.elements.push_back(elementary(n, i, j));
      b.part.push_back(1);
    }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    b.names.push_back("H" + std::to_string(k + 1));
    b.elements.push_back(cartan(k));
    b.part.push_back(0);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      b.names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      b.elements.push_back(elementary(n, i, j));
      b.part.push_back(-1);
    }
  return b;
}

// Coordinates of a traceless matrix in the sl basis.
Vector sl_coordinates(const SlBasis &b, const Matrix &m) {
  const std::size_t n = m.rows();
  Vector v(b.elements.size());
  for (std::size_t k = 0; k < b.elements.size(); ++k) {
    const Matrix &e = b.elements[k];
    if (b.part[k] != 0) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (e(i, j) != 0)
            v[k] = m(i, j);
    } else {
      // H_c = E_cc - E_{c+1,c+1}: coefficient is the partial trace up to c.
      std::size_t c = 0;
      while (e(c, c) != 1)
        ++c;
      Rational partial = 0;
      for (std::size_t l = 0; l <= c; ++l)
        partial += m(l, l);
      v[k] = partial;
    }
  }
  return v;
}

} // namespace

LieAlgebra special_linear(std::size_t n) {
  if (n < 2)
    throw InputError("sl(n) requires n >= 2");
  const SlBasis b = sl_basis(n);
  const std::size_t d = b.elements.size();
  std::vector<LieAlgebra::Bracket> brackets;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Matrix comm = b.elements[i] * b.elements[j] - b.elements[j] * b.elements[i];
      if (!comm.is_zero())
        brackets.push_back({i, j, sl_coordinates(b, comm)});
    }
  return LieAlgebra(b.names, brackets, JacobiCheck::Deferred);
}

CatalogEntry catalog(const std::string &name, std::size_t n) {
  if (name == "sl-borel" || name == "sl") {
    if (n < 2)
      throw InputError("catalog sl-borel requires n >= 2, got " + std::to_string(n));
    LieAlgebra alg = special_linear(n);
    const SlBasis b = sl_basis(n);
    linalg::Matrix r(alg.dim(), alg.dim());
    for (std::size_t k = 0; k < alg.dim(); ++k)
      r(k, k) = b.part[k] >= 0 ? 1 : -1;
    return {alg, Endo(alg, std::move(r))};
  }
  if (name == "abelian") {
    if (n < 1)
      throw InputError("catalog abelian requires n >= 1");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
      names.push_back("e" + std::to_string(i + 1));
    LieAlgebra alg(names, {});
    return {alg, Endo::identity(alg)};
  }
  if (name == "heisenberg") {
    LieAlgebra alg({"x", "y", "z"}, {{0, 1, Vector(std::vector<Rational>{0, 0, 1})}});
    linalg::Matrix r = linalg::Matrix::identity(3);
    r(1, 1) = -1;
    return {alg, Endo(alg, std::move(r))};
  }
  if (name == "affine") {
    LieAlgebra alg({"a", "b"}, {{0, 1, Vector(std::vector<Rational>{0, 1})}});
    linalg::Matrix r = linalg::Matrix::identity(2);
    r(1, 1) = -1;
    return {alg, Endo(alg, std::move(r))};
  }
  throw InputError("unknown catalog entry '" + name + "'");
}

} // namespace modr
