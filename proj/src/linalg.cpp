#include "modr/linalg.hpp"

#include "modr/errors.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

namespace modr::linalg {

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw InputError("matrix entry count " + std::to_string(entries_.size()) +
                     " does not match shape " + std::to_string(rows) + "x" +
                     std::to_string(cols));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>> &rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw InputError("ragged matrix: row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(c));
    std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + i * c);
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<ColumnVector> &cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows)
      throw InputError("column " + std::to_string(j) + " has wrong length");
    for (std::size_t i = 0; i < rows; ++i)
      m(i, j) = cols[j][i];
  }
  return m;
}

ColumnVector Matrix::column(std::size_t c) const {
  ColumnVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    v[i] = (*this)(i, c);
  return v;
}

ColumnVector Matrix::row(std::size_t r) const {
  return {entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_};
}

ColumnVector Matrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_)
    throw InputError("vector of length " + std::to_string(x.size()) +
                     " does not conform to matrix with " + std::to_string(cols_) +
                     " columns");
  ColumnVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational &a = (*this)(i, j);
      if (a != 0 && x[j] != 0)
        y[i] += a * x[j];
    }
  return y;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational &a) { return a == 0; });
}

Matrix &Matrix::operator+=(const Matrix &other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw InputError("matrix shape mismatch in addition");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    entries_[k] += other.entries_[k];
  return *this;
}

Matrix &Matrix::operator-=(const Matrix &other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw InputError("matrix shape mismatch in subtraction");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    entries_[k] -= other.entries_[k];
  return *this;
}

Matrix &Matrix::operator*=(const Rational &s) {
  for (auto &a : entries_)
    a *= s;
  return *this;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  if (a.cols_ != b.rows_)
    throw InputError("matrix shape mismatch in product");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational &aik = a(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0)
          c(i, j) += aik * b(k, j);
    }
  return c;
}

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

SparseMatrix SparseMatrix::from_dense(const Matrix &m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0)
        s.rows_[i].emplace_back(j, m(i, j));
  return s;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto &r : rows_)
    n += r.size();
  return n;
}

void SparseMatrix::set_row(std::size_t r, std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry &a, const Entry &b) { return a.first < b.first; });
  std::vector<Entry> merged;
  merged.reserve(entries.size());
  for (auto &e : entries) {
    if (e.first >= cols_)
      throw InputError("sparse column index out of range");
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(std::move(e));
  }
  std::erase_if(merged, [](const Entry &e) { return e.second == 0; });
  rows_[r] = std::move(merged);
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows(), cols_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto &[j, a] : rows_[i])
      m(i, j) = a;
  return m;
}

ColumnVector SparseMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_)
    throw InputError("vector of length " + std::to_string(x.size()) +
                     " does not conform to matrix with " + std::to_string(cols_) +
                     " columns");
  ColumnVector y(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto &[j, a] : rows_[i])
      if (x[j] != 0)
        y[i] += a * x[j];
  return y;
}

SparseMatrix SparseMatrix::scaled(const Rational &s) const {
  SparseMatrix out(rows(), cols_);
  if (s == 0)
    return out;
  out.rows_ = rows_;
  for (auto &r : out.rows_)
    for (auto &e : r)
      e.second *= s;
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const auto &r) { return r.empty(); });
}

SparseMatrix operator*(const SparseMatrix &a, const SparseMatrix &b) {
  if (a.cols_ != b.rows())
    throw InputError("sparse matrix shape mismatch in product");
  SparseMatrix c(a.rows(), b.cols_);
  std::vector<Rational> acc(b.cols_);
  std::vector<char> touched(b.cols_, 0);
  std::vector<std::size_t> touched_cols;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    touched_cols.clear();
    for (const auto &[k, aik] : a.rows_[i])
      for (const auto &[j, bkj] : b.rows_[k]) {
        if (!touched[j]) {
          touched[j] = 1;
          touched_cols.push_back(j);
        }
        acc[j] += aik * bkj;
      }
    std::sort(touched_cols.begin(), touched_cols.end());
    auto &row = c.rows_[i];
    for (std::size_t j : touched_cols) {
      if (acc[j] != 0)
        row.emplace_back(j, acc[j]);
      acc[j] = 0;
      touched[j] = 0;
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination engine.
//
// Rows are cleared of denominators and kept primitive (content 1). A row is
// eliminated against a pivot row by cross-multiplication divided by the gcd of
// the two leading entries, so every intermediate stays an integer and growth is
// bounded by content removal. Pivot columns are taken left to right, which
// makes the resulting reduced form canonical; among the rows competing for a
// column the one with the fewest nonzeros (then smallest leading magnitude) is
// chosen to limit fill-in.

namespace {

struct IntRow {
  std::vector<std::size_t> cols;
  std::vector<Integer> vals;

  bool empty() const { return cols.empty(); }
  std::size_t lead() const { return cols.front(); }

  const Integer *find(std::size_t c) const {
    auto it = std::lower_bound(cols.begin(), cols.end(), c);
    if (it == cols.end() || *it != c)
      return nullptr;
    return &vals[static_cast<std::size_t>(it - cols.begin())];
  }
};

void make_primitive(IntRow &row) {
  if (row.empty())
    return;
  Integer g = 0;
  for (const auto &v : row.vals) {
    g = gcd(g, v);
    if (g == 1)
      return;
  }
  if (g > 1)
    for (auto &v : row.vals)
      v /= g;
}

IntRow to_int_row(std::span<const std::pair<std::size_t, Rational>> entries) {
  IntRow row;
  Integer l = 1;
  for (const auto &[c, q] : entries)
    if (q != 0)
      l = lcm(l, Integer(denominator(q)));
  for (const auto &[c, q] : entries) {
    if (q == 0)
      continue;
    row.cols.push_back(c);
    row.vals.push_back(Integer(numerator(q)) * (l / Integer(denominator(q))));
  }
  make_primitive(row);
  return row;
}

// target <- (p/g) target - (a/g) pivot, where p and a are the entries of the
// pivot row and of target in column `col`.
void eliminate(IntRow &target, const IntRow &pivot, std::size_t col) {
  const Integer *a_ptr = target.find(col);
  if (a_ptr == nullptr)
    return;
  const Integer &p_full = *pivot.find(col);
  const Integer g = gcd(p_full, *a_ptr);
  const Integer p = p_full / g;
  const Integer a = *a_ptr / g;

  IntRow out;
  out.cols.reserve(target.cols.size() + pivot.cols.size());
  out.vals.reserve(target.cols.size() + pivot.cols.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Integer tmp;
  while (i < target.cols.size() || j < pivot.cols.size()) {
    const bool take_t = j == pivot.cols.size() ||
                        (i < target.cols.size() && target.cols[i] <= pivot.cols[j]);
    const bool take_p = i == target.cols.size() ||
                        (j < pivot.cols.size() && pivot.cols[j] <= target.cols[i]);
    std::size_t c;
    if (take_t && take_p) {
      c = target.cols[i];
      tmp = p * target.vals[i] - a * pivot.vals[j];
      ++i;
      ++j;
    } else if (take_t) {
      c = target.cols[i];
      tmp = p * target.vals[i];
      ++i;
    } else {
      c = pivot.cols[j];
      tmp = -(a * pivot.vals[j]);
      ++j;
    }
    if (tmp != 0) {
      out.cols.push_back(c);
      out.vals.push_back(tmp);
    }
  }
  make_primitive(out);
  target = std::move(out);
}

class Eliminator {
public:
  explicit Eliminator(std::vector<IntRow> rows) : rows_(std::move(rows)) {}

  // Forward elimination, taking pivots only in columns < pivot_limit. Rows left
  // over (all of whose entries sit at or beyond pivot_limit) are kept in
  // residual().
  void forward(std::size_t pivot_limit) {
    std::map<std::size_t, std::vector<std::size_t>> buckets;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (!rows_[r].empty())
        buckets[rows_[r].lead()].push_back(r);

    while (!buckets.empty()) {
      auto first = buckets.begin();
      const std::size_t col = first->first;
      if (col >= pivot_limit)
        break;
      std::vector<std::size_t> candidates = std::move(first->second);
      buckets.erase(first);

      auto better = [&](std::size_t x, std::size_t y) {
        const IntRow &rx = rows_[x];
        const IntRow &ry = rows_[y];
        if (rx.cols.size() != ry.cols.size())
          return rx.cols.size() < ry.cols.size();
        const Integer ax = abs(rx.vals.front());
        const Integer ay = abs(ry.vals.front());
        if (ax != ay)
          return ax < ay;
        return x < y;
      };
      const std::size_t piv = *std::min_element(candidates.begin(), candidates.end(), better);
      for (std::size_t r : candidates) {
        if (r == piv)
          continue;
        eliminate(rows_[r], rows_[piv], col);
        if (!rows_[r].empty())
          buckets[rows_[r].lead()].push_back(r);
      }
      pivots_.push_back(std::move(rows_[piv]));
      pivot_cols_.push_back(col);
    }
    for (auto &[col, list] : buckets)
      for (std::size_t r : list)
        residual_.push_back(std::move(rows_[r]));
    rows_.clear();
  }

  // Clears every pivot column from the other pivot rows.
  void backward() {
    for (std::size_t k = pivots_.size(); k-- > 0;)
      for (std::size_t j = 0; j < k; ++j)
        eliminate(pivots_[j], pivots_[k], pivot_cols_[k]);
  }

  const std::vector<IntRow> &pivots() const { return pivots_; }
  const std::vector<std::size_t> &pivot_cols() const { return pivot_cols_; }
  const std::vector<IntRow> &residual() const { return residual_; }

private:
  std::vector<IntRow> rows_;
  std::vector<IntRow> pivots_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<IntRow> residual_;
};

std::vector<IntRow> int_rows(const Matrix &m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  std::vector<std::pair<std::size_t, Rational>> buf;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    buf.clear();
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0)
        buf.emplace_back(j, m(i, j));
    rows.push_back(to_int_row(buf));
  }
  return rows;
}

std::vector<IntRow> int_rows(const SparseMatrix &m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    rows.push_back(to_int_row(m.row(i)));
  return rows;
}

std::vector<ColumnVector> kernel_from(Eliminator &elim, std::size_t cols) {
  elim.backward();
  const auto &pc = elim.pivot_cols();
  std::vector<std::size_t> free_index(cols, cols);
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t c : pc)
    is_pivot[c] = 1;
  std::vector<ColumnVector> basis;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) {
      free_index[c] = basis.size();
      ColumnVector v(cols);
      v[c] = 1;
      basis.push_back(std::move(v));
    }
  for (std::size_t r = 0; r < pc.size(); ++r) {
    const IntRow &row = elim.pivots()[r];
    const Integer &p = *row.find(pc[r]);
    for (std::size_t k = 0; k < row.cols.size(); ++k) {
      const std::size_t c = row.cols[k];
      if (c == pc[r])
        continue;
      basis[free_index[c]][pc[r]] = -Rational(row.vals[k], p);
    }
  }
  return basis;
}

std::optional<ColumnVector> solve_from(std::vector<IntRow> rows, std::size_t nrows,
                                       std::size_t cols, std::span<const Rational> b) {
  if (b.size() != nrows)
    throw InputError("right-hand side of length " + std::to_string(b.size()) +
                     " does not conform to matrix with " + std::to_string(nrows) + " rows");
  Eliminator elim(std::move(rows));
  elim.forward(cols);
  if (!elim.residual().empty())
    return std::nullopt;
  elim.backward();
  ColumnVector x(cols);
  const auto &pc = elim.pivot_cols();
  for (std::size_t r = 0; r < pc.size(); ++r) {
    const IntRow &row = elim.pivots()[r];
    if (const Integer *rhs = row.find(cols))
      x[pc[r]] = Rational(*rhs, *row.find(pc[r]));
  }
  return x;
}

// Appends b as column `cols` to rational rows before clearing denominators.
template <class RowAccess>
std::vector<IntRow> augmented(std::size_t nrows, std::size_t cols, std::span<const Rational> b,
                              RowAccess row_entries) {
  std::vector<IntRow> rows;
  rows.reserve(nrows);
  std::vector<std::pair<std::size_t, Rational>> buf;
  for (std::size_t i = 0; i < nrows; ++i) {
    buf.clear();
    row_entries(i, buf);
    if (b[i] != 0)
      buf.emplace_back(cols, b[i]);
    rows.push_back(to_int_row(buf));
  }
  return rows;
}

} // namespace

std::size_t rank(const Matrix &m) {
  Eliminator elim(int_rows(m));
  elim.forward(m.cols());
  return elim.pivot_cols().size();
}

std::size_t rank(const SparseMatrix &m) {
  Eliminator elim(int_rows(m));
  elim.forward(m.cols());
  return elim.pivot_cols().size();
}

std::vector<ColumnVector> kernel_basis(const Matrix &m) {
  Eliminator elim(int_rows(m));
  elim.forward(m.cols());
  return kernel_from(elim, m.cols());
}

std::vector<ColumnVector> kernel_basis(const SparseMatrix &m) {
  Eliminator elim(int_rows(m));
  elim.forward(m.cols());
  return kernel_from(elim, m.cols());
}

std::vector<std::size_t> pivot_columns(const SparseMatrix &m) {
  Eliminator elim(int_rows(m));
  elim.forward(m.cols());
  return elim.pivot_cols();
}

std::optional<ColumnVector> solve(const Matrix &m, std::span<const Rational> b) {
  if (b.size() != m.rows())
    return solve_from({}, m.rows(), m.cols(), b);
  auto rows = augmented(m.rows(), m.cols(), b, [&](std::size_t i, auto &buf) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0)
        buf.emplace_back(j, m(i, j));
  });
  return solve_from(std::move(rows), m.rows(), m.cols(), b);
}

std::optional<ColumnVector> solve(const SparseMatrix &m, std::span<const Rational> b) {
  if (b.size() != m.rows())
    return solve_from({}, m.rows(), m.cols(), b);
  auto rows = augmented(m.rows(), m.cols(), b, [&](std::size_t i, auto &buf) {
    for (const auto &e : m.row(i))
      buf.push_back(e);
  });
  return solve_from(std::move(rows), m.rows(), m.cols(), b);
}

EchelonForm reduced_echelon(const Matrix &m) {
  Eliminator elim(int_rows(m));
  elim.forward(m.cols());
  elim.backward();
  EchelonForm out;
  out.pivot_columns = elim.pivot_cols();
  out.rref = Matrix(out.pivot_columns.size(), m.cols());
  for (std::size_t r = 0; r < out.pivot_columns.size(); ++r) {
    const IntRow &row = elim.pivots()[r];
    const Integer &p = *row.find(out.pivot_columns[r]);
    for (std::size_t k = 0; k < row.cols.size(); ++k)
      out.rref(r, row.cols[k]) = Rational(row.vals[k], p);
  }
  return out;
}

std::optional<Matrix> inverse(const Matrix &m) {
  if (m.rows() != m.cols())
    throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const EchelonForm ef = reduced_echelon(aug);
  if (ef.pivot_columns.size() < n || ef.pivot_columns[n - 1] != n - 1)
    return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = ef.rref(i, n + j);
  return inv;
}

} // namespace modr::linalg
