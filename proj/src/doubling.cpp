#include "modr/doubling.hpp"

#include "modr/deform.hpp"
#include "modr/errors.hpp"

#include <string>

namespace modr {

Vector DoubledAlgebra::pair(const Vector &x, const Vector &y) const {
  check_conforms(base, x, "first component");
  check_conforms(base, y, "second component");
  std::vector<Rational> c(x.coeffs());
  c.insert(c.end(), y.coeffs().begin(), y.coeffs().end());
  return Vector(std::move(c));
}

Vector DoubledAlgebra::embed_first(const Vector &x) const { return pair(x, Vector(base.dim())); }

Vector DoubledAlgebra::embed_second(const Vector &y) const { return pair(Vector(base.dim()), y); }

std::vector<Vector> DoubledAlgebra::diagonal() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < base.dim(); ++i) {
    const Vector e = Vector::basis(base.dim(), i);
    out.push_back(pair(e, e));
  }
  return out;
}

std::vector<Vector> DoubledAlgebra::antidiagonal() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < base.dim(); ++i) {
    const Vector e = Vector::basis(base.dim(), i);
    out.push_back(pair(e, -e));
  }
  return out;
}

DoubledAlgebra build_double(const LieAlgebra &algebra) {
  const std::size_t n = algebra.dim();
  std::vector<std::string> names;
  for (const auto &s : algebra.basis_names())
    names.push_back(s + ".1");
  for (const auto &s : algebra.basis_names())
    names.push_back(s + ".2");
  std::vector<LieAlgebra::Bracket> brackets;
  auto lift = [&](const Vector &v, std::size_t offset) {
    Vector out(2 * n);
    for (std::size_t c = 0; c < n; ++c)
      out[offset + c] = v[c];
    return out;
  };
  const auto base = algebra.brackets();
  for (const auto &b : base)
    brackets.push_back({b.i, b.j, lift(b.value, 0)});
  for (const auto &b : base)
    brackets.push_back({n + b.i, n + b.j, lift(b.value, n)});
  return {algebra, LieAlgebra(std::move(names), brackets, JacobiCheck::Deferred)};
}

SubspaceCert subspace_cert(const LieAlgebra &algebra, std::vector<Vector> basis) {
  SubspaceCert c;
  c.failing_pair = subalgebra_violation(algebra, basis);
  c.is_subalgebra = !c.failing_pair;
  c.basis = std::move(basis);
  return c;
}

GraphCert graph_complement(const Endo &r) {
  const LieAlgebra &alg = r.algebra();
  DoubledAlgebra d = build_double(alg);
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const Vector e = Vector::basis(alg.dim(), i);
    const Vector re = r.image_of_basis(i);
    basis.push_back(d.pair(e - re, -e - re));
  }
  GraphCert out{d, subspace_cert(d.underlying, std::move(basis)), mcybe_defect(r).is_zero};
  return out;
}

ComplementCert complement_certificate(const Endo &r) {
  if (!mcybe_defect(r).is_zero)
    throw PreconditionError("complement certificate needs a modified r-matrix");
  GraphCert g = graph_complement(r);
  ComplementCert c;
  c.diagonal = subspace_cert(g.doubled.underlying, g.doubled.diagonal());
  c.graph = std::move(g.graph);
  c.total_dim = 2 * r.dim();
  std::vector<linalg::ColumnVector> cols;
  for (const auto &v : c.diagonal.basis)
    cols.push_back(v.coeffs());
  for (const auto &v : c.graph.basis)
    cols.push_back(v.coeffs());
  c.stacked_rank = linalg::rank(linalg::Matrix::from_columns(c.total_dim, cols));
  return c;
}

std::vector<ComplementCert> deformed_complements(const Endo &r, const Endo &rhat,
                                                 const std::vector<Rational> &t_values) {
  if (!check_linear_deformation(r, rhat).valid)
    throw PreconditionError("deformed complements need a valid linear deformation");
  std::vector<ComplementCert> out;
  for (const auto &t : t_values)
    out.push_back(complement_certificate(r + t * rhat));
  return out;
}

} // namespace modr
