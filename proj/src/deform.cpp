#include "modr/deform.hpp"

#include "modr/combinatorics.hpp"
#include "modr/complex.hpp"
#include "modr/errors.hpp"

#include <string>

namespace modr {

namespace {

// a(b(x,y),z) + a(b(y,z),x) + a(b(z,x),y) on increasing triples.
Cochain mixed_jacobiator(const Cochain &a, const Cochain &b) {
  const LieAlgebra &alg = a.algebra();
  const std::size_t n = alg.dim();
  Cochain out(alg, 3);
  const auto &triples = lex_subsets(n, 3);
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const std::size_t i = triples[t][0], j = triples[t][1], k = triples[t][2];
    const std::size_t ij[] = {i, j}, jk[] = {j, k}, ik[] = {i, k};
    const std::size_t ri[] = {i}, rj[] = {j}, rk[] = {k};
    Vector acc = a.eval_first(b.value_at(ij), rk);
    acc += a.eval_first(b.value_at(jk), ri);
    acc -= a.eval_first(b.value_at(ik), rj);
    std::copy(acc.coeffs().begin(), acc.coeffs().end(), out.coeffs().begin() + t * n);
  }
  return out;
}

void require_mcybe(const Endo &r) {
  const DefectReport d = mcybe_defect(r);
  if (!d.is_zero)
    throw PreconditionError("operator is not a modified r-matrix: defect nonzero on basis pair (" +
                            std::to_string(d.worst_pair->first) + ", " +
                            std::to_string(d.worst_pair->second) + ")");
}

void require_valid(const Endo &r, const Endo &rhat) {
  const DeformationVerdict v = check_linear_deformation(r, rhat);
  if (!v.valid)
    throw PreconditionError(std::string("not a linear deformation: ") +
                            (!v.cocycle_ok ? "the direction is not a 2-cocycle"
                                           : "the direction is not a weight 0 Rota-Baxter operator"));
}

std::optional<BasisPair> first_nonzero_pair(const Cochain &c) {
  const std::size_t n = c.dim();
  const auto &tuples = lex_subsets(n, 2);
  for (std::size_t t = 0; t < tuples.size(); ++t)
    for (std::size_t m = 0; m < n; ++m)
      if (c.coeffs()[t * n + m] != 0)
        return BasisPair{tuples[t][0], tuples[t][1]};
  return std::nullopt;
}

} // namespace

Cochain jacobiator(const Cochain &bracket) { return mixed_jacobiator(bracket, bracket); }

Cochain induced_cochain(const Endo &r) {
  const LieAlgebra &alg = r.algebra();
  Cochain c(alg, 2);
  for (const auto &b : induced_structure(r)) {
    const std::size_t idx[] = {b.i, b.j};
    c.set_value(idx, b.value);
  }
  return c;
}

DeformationVerdict check_linear_deformation(const Endo &r, const Endo &rhat) {
  if (r.dim() != rhat.dim())
    throw InputError("operators act on spaces of different dimension");
  require_mcybe(r);
  DeformationVerdict v;
  const Cochain dr = coboundary(r, Cochain::from_endo(rhat));
  v.cocycle_ok = dr.is_zero();
  const RotaBaxterVerdict rb = is_rota_baxter(rhat, 0);
  v.weight0_ok = rb.holds;
  v.valid = v.cocycle_ok && v.weight0_ok;
  if (!v.cocycle_ok)
    v.failing_pair = first_nonzero_pair(dr);
  else if (!v.weight0_ok)
    v.failing_pair = rb.failing_pair;

  v.defect_polynomial = mcybe_defect_polynomial(r, rhat);
  v.polynomial_zero = v.defect_polynomial[0].is_zero() && v.defect_polynomial[1].is_zero() &&
                      v.defect_polynomial[2].is_zero();
  if (v.polynomial_zero != v.valid)
    throw std::logic_error("linear deformation: coefficient test and defect expansion disagree");
  return v;
}

EquivalenceVerdict check_equivalence(const Endo &r, const Endo &rhat1, const Endo &rhat2,
                                     const Vector &x) {
  const LieAlgebra &alg = r.algebra();
  if (rhat1.dim() != r.dim() || rhat2.dim() != r.dim())
    throw InputError("operators act on spaces of different dimension");
  check_conforms(alg, x, "equivalence element");
  const std::size_t n = alg.dim();
  EquivalenceVerdict v;

  // phi_t [y,z] - [phi_t y, phi_t z]: the t coefficient is the derivation
  // property of ad_x, the t^2 coefficient is -[[x,y],[x,z]].
  const Endo adx = ad(alg, x);
  v.homomorphism = true;
  for (std::size_t i = 0; i < n && v.homomorphism; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector xi = adx.image_of_basis(i);
      const Vector xj = adx.image_of_basis(j);
      Vector t1 = adx(alg.bracket_basis(i, j));
      t1 -= alg.bracket_with_basis(xi, j);
      t1 += alg.bracket_with_basis(xj, i);
      const Vector t2 = alg.bracket(xi, xj);
      if (!t1.is_zero() || !t2.is_zero()) {
        v.homomorphism = false;
        v.homomorphism_witness = BasisPair{i, j};
        break;
      }
    }

  // (R + t Rhat2)(Id + t ad_x) - (Id + t ad_x)(R + t Rhat1)
  const std::array<linalg::Matrix, 3> coeff = {
      linalg::Matrix(n, n),
      (r * adx + rhat2 - adx * r - rhat1).matrix(),
      (rhat2 * adx - adx * rhat1).matrix(),
  };
  v.intertwines = true;
  for (std::size_t p = 1; p < 3 && v.intertwines; ++p)
    for (std::size_t j = 0; j < n; ++j)
      if (!Vector(coeff[p].column(j)).is_zero()) {
        v.intertwines = false;
        v.intertwine_witness = std::make_pair(p, j);
        break;
      }
  return v;
}

NijenhuisVerdict nijenhuis_check(const Endo &r, const Vector &x) {
  const LieAlgebra &alg = r.algebra();
  check_conforms(alg, x, "candidate element");
  const std::size_t n = alg.dim();
  const Endo adx = ad(alg, x);
  NijenhuisVerdict v;
  v.eq1_ok = true;
  for (std::size_t i = 0; i < n && v.eq1_ok; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!alg.bracket(adx.image_of_basis(i), adx.image_of_basis(j)).is_zero()) {
        v.eq1_ok = false;
        v.eq1_witness = BasisPair{i, j};
        break;
      }
  v.eq2_ok = true;
  for (std::size_t j = 0; j < n; ++j) {
    const Vector lhs = adx(adx(r.image_of_basis(j)));
    const Vector rhs = adx(r(adx.image_of_basis(j)));
    if (lhs != rhs) {
      v.eq2_ok = false;
      v.eq2_witness = j;
      break;
    }
  }
  v.is_nijenhuis_element = v.eq1_ok && v.eq2_ok;
  return v;
}

std::vector<Vector> default_nijenhuis_candidates(std::size_t dim) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim; ++i)
    out.push_back(Vector::basis(dim, i));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      out.push_back(Vector::basis(dim, i) + Vector::basis(dim, j));
  return out;
}

std::vector<std::pair<Vector, NijenhuisVerdict>>
nijenhuis_scan(const Endo &r, const std::vector<Vector> &candidates) {
  require_mcybe(r);
  std::vector<std::pair<Vector, NijenhuisVerdict>> out;
  for (const auto &x : candidates)
    out.emplace_back(x, nijenhuis_check(r, x));
  return out;
}

TrivialDeformation trivial_deformation(const Endo &r, const Vector &x) {
  require_mcybe(r);
  const NijenhuisVerdict nv = nijenhuis_check(r, x);
  if (!nv.eq1_ok)
    throw PreconditionError("not a Nijenhuis element: [[x,y],[x,z]] != 0 for basis pair (" +
                            std::to_string(nv.eq1_witness->first) + ", " +
                            std::to_string(nv.eq1_witness->second) + ")");
  if (!nv.eq2_ok)
    throw PreconditionError("not a Nijenhuis element: [x,[x,Ry]] != [x,R[x,y]] for basis vector " +
                            std::to_string(*nv.eq2_witness));
  const Endo rhat = coboundary(r, Cochain::from_vector(r.algebra(), x)).to_endo();
  TrivialDeformation out{rhat, check_linear_deformation(r, rhat),
                         check_equivalence(r, rhat, Endo::zero(r.algebra()), x)};
  return out;
}

NijenhuisOperatorVerdict nijenhuis_operator_check(const LieAlgebra &algebra, const Endo &n_op) {
  if (n_op.dim() != algebra.dim())
    throw InputError("operator does not conform to the algebra");
  const std::size_t n = algebra.dim();
  const Endo n2 = n_op * n_op;
  NijenhuisOperatorVerdict v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector ni = n_op.image_of_basis(i);
      const Vector nj = n_op.image_of_basis(j);
      Vector inner = algebra.bracket_with_basis(ni, j);
      inner -= algebra.bracket_with_basis(nj, i);
      Vector diff = algebra.bracket(ni, nj);
      diff -= n_op(inner);
      diff += n2(algebra.bracket_basis(i, j));
      if (!diff.is_zero()) {
        v.holds = false;
        v.failing_pair = BasisPair{i, j};
        return v;
      }
    }
  return v;
}

BracketDeformation induced_bracket_deformation(const Endo &r, const Endo &rhat) {
  require_valid(r, rhat);
  BracketDeformation out;
  out.omega = induced_cochain(rhat);
  const Cochain base = induced_cochain(r);
  out.jacobi_polynomial = {jacobiator(base),
                           mixed_jacobiator(base, out.omega) + mixed_jacobiator(out.omega, base),
                           jacobiator(out.omega)};
  out.jacobi_holds = out.jacobi_polynomial[0].is_zero() && out.jacobi_polynomial[1].is_zero() &&
                     out.jacobi_polynomial[2].is_zero();
  return out;
}

CompatibleVerdict compatible_bracket_check(const Endo &r, const Endo &rhat, const Rational &t1,
                                           const Rational &t2) {
  require_valid(r, rhat);
  const Cochain sum = induced_cochain(r + t1 * rhat) + induced_cochain(r + t2 * rhat);
  CompatibleVerdict v;
  const Cochain jac = jacobiator(sum);
  v.jacobi_holds = jac.is_zero();
  if (!v.jacobi_holds) {
    const std::size_t n = sum.dim();
    const auto &triples = lex_subsets(n, 3);
    for (std::size_t t = 0; t < triples.size() && !v.jacobi_witness; ++t)
      for (std::size_t m = 0; m < n; ++m)
        if (jac.coeffs()[t * n + m] != 0) {
          v.jacobi_witness = Triple{triples[t][0], triples[t][1], triples[t][2]};
          break;
        }
  }
  const Endo mid = r + ((t1 + t2) / 2) * rhat;
  v.equals_twice_midpoint = sum == Rational(2) * induced_cochain(mid);
  return v;
}

} // namespace modr
