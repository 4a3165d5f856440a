#pragma once

#include "modr/errors.hpp"
#include "modr/linalg.hpp"
#include "modr/rational.hpp"

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace modr {

/// Coordinates of an element of a Lie algebra in its basis.
class Vector {
public:
  Vector() = default;
  explicit Vector(std::size_t dim) : coeffs_(dim) {}
  explicit Vector(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  static Vector basis(std::size_t dim, std::size_t i);

  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Rational> &coeffs() const { return coeffs_; }
  Rational &operator[](std::size_t i) { return coeffs_[i]; }
  const Rational &operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const;

  Vector &operator+=(const Vector &other);
  Vector &operator-=(const Vector &other);
  Vector &operator*=(const Rational &s);
  /// this += s * other
  Vector &add_scaled(const Rational &s, const Vector &other);

  friend Vector operator+(Vector a, const Vector &b) { return a += b; }
  friend Vector operator-(Vector a, const Vector &b) { return a -= b; }
  friend Vector operator-(Vector a) { return a *= Rational(-1); }
  friend Vector operator*(const Rational &s, Vector a) { return a *= s; }
  friend bool operator==(const Vector &, const Vector &) = default;

private:
  std::vector<Rational> coeffs_;
};

/// Whether the Jacobi identity is checked when a LieAlgebra is built.
enum class JacobiCheck { Eager, Deferred };

/// A finite-dimensional Lie algebra given by structure constants.
///
/// Only brackets [e_i, e_j] with i < j are supplied; [e_j, e_i] = -[e_i, e_j]
/// and [e_i, e_i] = 0 follow from the storage. The type is a cheap handle to
/// immutable shared data, so copies alias the same table.
class LieAlgebra {
public:
  struct Bracket {
    std::size_t i;
    std::size_t j;
    Vector value;
  };
  /// Nonzero coordinates of [e_i, e_j].
  using Terms = std::vector<std::pair<std::size_t, Rational>>;

  LieAlgebra() = default;
  /// Throws InputError on malformed tables (i >= j, indices out of range,
  /// repeated pairs, wrong vector length) and, with JacobiCheck::Eager, a
  /// JacobiViolation when the table is not a Lie algebra.
  LieAlgebra(std::vector<std::string> basis_names, const std::vector<Bracket> &brackets,
             JacobiCheck check = JacobiCheck::Eager);

  std::size_t dim() const { return data_ ? data_->names.size() : 0; }
  const std::vector<std::string> &basis_names() const;

  /// [e_i, e_j] for any i, j.
  const Vector &bracket_basis(std::size_t i, std::size_t j) const {
    return data_->table[i * dim() + j];
  }
  const Terms &bracket_terms(std::size_t i, std::size_t j) const {
    return data_->terms[i * dim() + j];
  }

  Vector bracket(const Vector &x, const Vector &y) const;
  /// [x, e_j]
  Vector bracket_with_basis(const Vector &x, std::size_t j) const;

  /// The nonzero brackets [e_i, e_j], i < j, in lexicographic order.
  std::vector<Bracket> brackets() const;
  bool is_abelian() const;

  bool same_as(const LieAlgebra &other) const { return data_ == other.data_; }
  /// Same dimension and identical structure constants.
  bool equivalent_to(const LieAlgebra &other) const;

private:
  struct Data {
    std::vector<std::string> names;
    std::vector<Vector> table;
    std::vector<Terms> terms;
  };
  std::shared_ptr<const Data> data_;
};

/// A linear map g -> g, as the matrix whose column j is the image of e_j.
class Endo {
public:
  Endo() = default;
  /// Throws InputError unless matrix is dim x dim.
  Endo(LieAlgebra algebra, linalg::Matrix matrix);

  static Endo identity(const LieAlgebra &algebra);
  static Endo zero(const LieAlgebra &algebra);

  const LieAlgebra &algebra() const { return algebra_; }
  const linalg::Matrix &matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.rows(); }

  Vector operator()(const Vector &x) const;
  /// Image of e_j (column j).
  Vector image_of_basis(std::size_t j) const;

  Endo &operator+=(const Endo &other);
  Endo &operator-=(const Endo &other);
  Endo &operator*=(const Rational &s);

  friend Endo operator+(Endo a, const Endo &b) { return a += b; }
  friend Endo operator-(Endo a, const Endo &b) { return a -= b; }
  friend Endo operator*(const Rational &s, Endo a) { return a *= s; }
  /// Composition a after b.
  friend Endo operator*(const Endo &a, const Endo &b);
  friend bool operator==(const Endo &a, const Endo &b) { return a.matrix_ == b.matrix_; }

private:
  LieAlgebra algebra_;
  linalg::Matrix matrix_;
};

using Triple = std::array<std::size_t, 3>;

struct JacobiResult {
  bool holds = true;
  /// First basis triple i < j < k whose Jacobiator is nonzero.
  std::optional<Triple> counterexample;
  Vector jacobiator;
};

/// Checks [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0 for all i < j < k.
JacobiResult verify_jacobi(const LieAlgebra &algebra);

class JacobiViolation : public InputError {
public:
  explicit JacobiViolation(Triple triple);
  const Triple &triple() const { return triple_; }

private:
  Triple triple_;
};

/// Matrix of y -> [x, y].
Endo ad(const LieAlgebra &algebra, const Vector &x);

/// exp(ad_x), an inner automorphism. Throws PreconditionError when ad_x is not nilpotent.
Endo exp_ad(const LieAlgebra &algebra, const Vector &x);

/// Throws InputError when x does not have the algebra's dimension.
void check_conforms(const LieAlgebra &algebra, const Vector &x, const char *what);

struct CatalogEntry {
  LieAlgebra algebra;
  /// A modified r-matrix on the algebra.
  Endo r_matrix;
};

/// Named example algebras with a distinguished modified r-matrix:
///  - "sl-borel", n >= 2: sl(n) with the map that is +1 on the Borel subalgebra
///    and -1 on the strictly lower triangular part. Basis: upper E_ij (i<j)
///    row-major, then H_i = E_ii - E_{i+1,i+1}, then lower E_ij (i>j) row-major.
///    For n = 2 the classical ordering (e, f, h) is used instead.
///  - "abelian", n >= 1: zero bracket, R = Id.
///  - "heisenberg": (x, y, z), [x,y] = z, R = diag(1, -1, 1).
///  - "affine": (a, b), [a,b] = b, R = diag(1, -1).
CatalogEntry catalog(const std::string &name, std::size_t n = 0);

/// sl(n) without the r-matrix.
LieAlgebra special_linear(std::size_t n);

} // namespace modr
