#pragma once

#include "modr/liealg.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace modr {

/// An alternating multilinear map f: g^k -> g, stored by its values on
/// increasing basis tuples.
///
/// Coefficient layout: the value on the r-th increasing k-tuple (lex order)
/// occupies coefficients r*n .. r*n + n - 1. Arity 0 cochains are elements of g
/// and arity 1 cochains are linear maps.
class Cochain {
public:
  Cochain() = default;
  /// The zero cochain.
  Cochain(LieAlgebra algebra, std::size_t arity);
  /// Throws InputError when coeffs has the wrong length.
  Cochain(LieAlgebra algebra, std::size_t arity, std::vector<Rational> coeffs);

  static Cochain from_endo(const Endo &f);
  static Cochain from_vector(const LieAlgebra &algebra, const Vector &x);
  /// The bracket of the algebra as an arity 2 cochain.
  static Cochain bracket_cochain(const LieAlgebra &algebra);

  /// Throws InputError unless arity is 1.
  Endo to_endo() const;
  /// Throws InputError unless arity is 0.
  Vector to_vector() const;

  const LieAlgebra &algebra() const { return algebra_; }
  std::size_t dim() const { return algebra_.dim(); }
  std::size_t arity() const { return arity_; }
  /// Cohomological degree: arity + 1.
  std::size_t degree() const { return arity_ + 1; }
  std::size_t num_tuples() const;
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Rational> &coeffs() const { return coeffs_; }
  std::vector<Rational> &coeffs() { return coeffs_; }

  /// Value on the tuple of the given rank.
  Vector value(std::size_t tuple_rank) const;
  /// Value on an increasing tuple.
  Vector value_at(std::span<const std::size_t> tuple) const;
  void set_value(std::span<const std::size_t> tuple, const Vector &v);

  /// f(e_{i_1}, ..., e_{i_k}) for arbitrary indices (unsorted, possibly repeated).
  Vector eval_basis(std::span<const std::size_t> indices) const;
  /// f(v, e_{rest...}) for an increasing tuple rest not yet containing the slot of v.
  Vector eval_first(const Vector &v, std::span<const std::size_t> rest) const;
  /// Alternating multilinear extension. Throws InputError on arity or length mismatch.
  Vector eval(const std::vector<Vector> &args) const;

  bool is_zero() const;

  Cochain &operator+=(const Cochain &other);
  Cochain &operator-=(const Cochain &other);
  Cochain &operator*=(const Rational &s);

  friend Cochain operator+(Cochain a, const Cochain &b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain &b) { return a -= b; }
  friend Cochain operator-(Cochain a) { return a *= Rational(-1); }
  friend Cochain operator*(const Rational &s, Cochain a) { return a *= s; }
  friend bool operator==(const Cochain &a, const Cochain &b) {
    return a.arity_ == b.arity_ && a.coeffs_ == b.coeffs_;
  }

private:
  void check_compatible(const Cochain &other, const char *op) const;

  LieAlgebra algebra_;
  std::size_t arity_ = 0;
  std::vector<Rational> coeffs_;
};

/// Dimension of Hom(wedge^k g, g).
std::size_t cochain_space_dim(std::size_t n, std::size_t arity);

} // namespace modr
