#pragma once

#include "modr/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

/// Exact rational linear algebra. Nothing in here ever touches floating point.
namespace modr::linalg {

using ColumnVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>> &rows);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<ColumnVector> &cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const Rational> entries() const { return entries_; }

  Rational &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational &operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  ColumnVector column(std::size_t c) const;
  ColumnVector row(std::size_t r) const;

  ColumnVector apply(std::span<const Rational> x) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix &operator+=(const Matrix &other);
  Matrix &operator-=(const Matrix &other);
  Matrix &operator*=(const Rational &s);

  friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational &s) { return a *= s; }
  friend Matrix operator*(const Rational &s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix &a, const Matrix &b);
  friend bool operator==(const Matrix &, const Matrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Row-compressed sparse matrix; each row keeps its nonzeros sorted by column.
/// Used for coboundary operators, whose dense form would not fit comfortably in
/// memory for the larger catalog algebras.
class SparseMatrix {
public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix from_dense(const Matrix &m);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  /// Replaces row r. Entries may come unsorted and with repeated columns;
  /// they are summed and zeros dropped.
  void set_row(std::size_t r, std::vector<Entry> entries);
  std::span<const Entry> row(std::size_t r) const { return rows_[r]; }

  Matrix to_dense() const;
  ColumnVector apply(std::span<const Rational> x) const;
  SparseMatrix scaled(const Rational &s) const;
  bool is_zero() const;

  friend SparseMatrix operator*(const SparseMatrix &a, const SparseMatrix &b);
  friend bool operator==(const SparseMatrix &, const SparseMatrix &) = default;

private:
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> rows_;
};

std::size_t rank(const Matrix &m);
std::size_t rank(const SparseMatrix &m);

/// Basis of the right null space. The basis is the canonical one read off the
/// reduced row echelon form: one vector per free column, equal to 1 there and 0
/// on every other free column.
std::vector<ColumnVector> kernel_basis(const Matrix &m);
std::vector<ColumnVector> kernel_basis(const SparseMatrix &m);

/// Pivot columns of the reduced echelon form, ascending. The corresponding
/// columns of m form a basis of its image.
std::vector<std::size_t> pivot_columns(const SparseMatrix &m);

/// Some x with m x = b, free variables set to zero; nullopt when b is not in
/// the image. Throws InputError when b has the wrong length.
std::optional<ColumnVector> solve(const Matrix &m, std::span<const Rational> b);
std::optional<ColumnVector> solve(const SparseMatrix &m, std::span<const Rational> b);

/// Reduced row echelon form (zero rows dropped) and its pivot columns.
struct EchelonForm {
  Matrix rref;
  std::vector<std::size_t> pivot_columns;
};
EchelonForm reduced_echelon(const Matrix &m);

std::optional<Matrix> inverse(const Matrix &m);

} // namespace modr::linalg
