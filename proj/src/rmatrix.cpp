#include "modr/rmatrix.hpp"

#include "modr/combinatorics.hpp"
#include "modr/deform.hpp"
#include "modr/errors.hpp"

#include <string>

namespace modr {

namespace {

template <class F> Cochain pair_cochain(const LieAlgebra &alg, F &&value) {
  const std::size_t n = alg.dim();
  Cochain c(alg, 2);
  const auto &tuples = lex_subsets(n, 2);
  for (std::size_t r = 0; r < tuples.size(); ++r) {
    const Vector v = value(tuples[r][0], tuples[r][1]);
    std::copy(v.coeffs().begin(), v.coeffs().end(), c.coeffs().begin() + r * n);
  }
  return c;
}

void check_same_algebra(const Endo &a, const Endo &b) {
  if (a.dim() != b.dim())
    throw InputError("operators act on spaces of different dimension");
}

// Q(A,B)(e_i,e_j) = [Ae_i,Be_j] - A([Be_i,e_j] + [e_i,Be_j]).
Vector q_form(const LieAlgebra &alg, const Endo &a, const Endo &b, std::size_t i, std::size_t j) {
  const Vector bi = b.image_of_basis(i);
  const Vector bj = b.image_of_basis(j);
  Vector inner = alg.bracket_with_basis(bi, j);
  inner -= alg.bracket_with_basis(bj, i);
  Vector out = alg.bracket(a.image_of_basis(i), bj);
  out -= a(inner);
  return out;
}

} // namespace

DefectReport mcybe_defect(const Endo &r) {
  const LieAlgebra &alg = r.algebra();
  DefectReport rep;
  rep.defect = pair_cochain(alg, [&](std::size_t i, std::size_t j) {
    const Vector ri = r.image_of_basis(i);
    const Vector rj = r.image_of_basis(j);
    Vector inner = alg.bracket_with_basis(ri, j);
    inner -= alg.bracket_with_basis(rj, i);
    Vector s = alg.bracket(ri, rj);
    s -= r(inner);
    s += alg.bracket_basis(i, j);
    return s;
  });
  const std::size_t n = alg.dim();
  const auto &tuples = lex_subsets(n, 2);
  std::size_t best = 0;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    std::size_t nz = 0;
    for (std::size_t m = 0; m < n; ++m)
      if (rep.defect.coeffs()[t * n + m] != 0)
        ++nz;
    if (nz > best) {
      best = nz;
      rep.worst_pair = BasisPair{tuples[t][0], tuples[t][1]};
    }
  }
  rep.is_zero = best == 0;
  return rep;
}

Cochain rota_baxter_form(const Endo &a, const Endo &b) {
  check_same_algebra(a, b);
  const LieAlgebra &alg = a.algebra();
  return pair_cochain(alg, [&](std::size_t i, std::size_t j) { return q_form(alg, a, b, i, j); });
}

std::array<Cochain, 3> mcybe_defect_polynomial(const Endo &r, const Endo &g) {
  check_same_algebra(r, g);
  return {mcybe_defect(r).defect, rota_baxter_form(r, g) + rota_baxter_form(g, r),
          rota_baxter_form(g, g)};
}

RotaBaxterVerdict is_rota_baxter(const Endo &b, const Rational &weight) {
  const LieAlgebra &alg = b.algebra();
  const std::size_t n = alg.dim();
  RotaBaxterVerdict v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector diff = q_form(alg, b, b, i, j);
      diff -= weight * b(alg.bracket_basis(i, j));
      if (!diff.is_zero()) {
        v.holds = false;
        v.failing_pair = BasisPair{i, j};
        return v;
      }
    }
  return v;
}

Endo rb_from_r(const Endo &r) {
  Endo b = r - Endo::identity(r.algebra());
  b *= Rational(1, 2);
  return b;
}

Endo r_from_rb(const Endo &b) { return Endo::identity(b.algebra()) + Rational(2) * b; }

std::vector<LieAlgebra::Bracket> induced_structure(const Endo &r) {
  const LieAlgebra &alg = r.algebra();
  const std::size_t n = alg.dim();
  std::vector<LieAlgebra::Bracket> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = alg.bracket_with_basis(r.image_of_basis(i), j);
      v -= alg.bracket_with_basis(r.image_of_basis(j), i);
      if (!v.is_zero())
        out.push_back({i, j, std::move(v)});
    }
  return out;
}

ForcedBracket induced_bracket_forced(const Endo &r) {
  LieAlgebra alg(r.algebra().basis_names(), induced_structure(r), JacobiCheck::Deferred);
  JacobiResult jr = verify_jacobi(alg);
  return {std::move(alg), std::move(jr)};
}

LieAlgebra induced_bracket(const Endo &r) {
  const DefectReport d = mcybe_defect(r);
  if (!d.is_zero)
    throw PreconditionError("induced bracket: the operator is not a modified r-matrix (defect "
                            "nonzero on basis pair (" +
                            std::to_string(d.worst_pair->first) + ", " +
                            std::to_string(d.worst_pair->second) + "))");
  return LieAlgebra(r.algebra().basis_names(), induced_structure(r), JacobiCheck::Eager);
}

Endo rho(const Endo &r, const Vector &x) {
  const LieAlgebra &alg = r.algebra();
  check_conforms(alg, x, "rho argument");
  return ad(alg, r(x)) - r * ad(alg, x);
}

std::optional<BasisPair> subalgebra_violation(const LieAlgebra &algebra,
                                              const std::vector<Vector> &basis) {
  std::vector<linalg::ColumnVector> cols;
  for (const auto &b : basis)
    cols.push_back(b.coeffs());
  const std::size_t base_rank = linalg::rank(linalg::Matrix::from_columns(algebra.dim(), cols));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Vector br = algebra.bracket(basis[i], basis[j]);
      if (br.is_zero())
        continue;
      cols.push_back(br.coeffs());
      const std::size_t r = linalg::rank(linalg::Matrix::from_columns(algebra.dim(), cols));
      cols.pop_back();
      if (r != base_rank)
        return BasisPair{i, j};
    }
  return std::nullopt;
}

InvolutiveReport involutive_analyze(const Endo &r) {
  const LieAlgebra &alg = r.algebra();
  const std::size_t n = alg.dim();
  const Endo r2 = r * r;
  for (std::size_t j = 0; j < n; ++j)
    if (r2.image_of_basis(j) != Vector::basis(n, j)) {
      const auto &names = alg.basis_names();
      throw InputError("operator is not an involution: R^2 differs from the identity on basis "
                       "vector " +
                       std::to_string(j) + (j < names.size() ? " (" + names[j] + ")" : ""));
    }

  InvolutiveReport rep;
  rep.mcybe = mcybe_defect(r).is_zero;
  rep.nijenhuis = nijenhuis_operator_check(alg, r).holds;

  const Endo id = Endo::identity(alg);
  auto eigenbasis = [&](const Endo &shifted) {
    std::vector<Vector> out;
    for (auto &v : linalg::kernel_basis(shifted.matrix()))
      out.emplace_back(std::move(v));
    return out;
  };
  rep.plus_basis = eigenbasis(r - id);
  rep.minus_basis = eigenbasis(r + id);
  rep.eigenspaces_subalgebras =
      !subalgebra_violation(alg, rep.plus_basis) && !subalgebra_violation(alg, rep.minus_basis);

  Endo p_plus = id + r;
  p_plus *= Rational(1, 2);
  Endo p_minus = id - r;
  p_minus *= Rational(1, 2);
  rep.product_structure = true;
  for (std::size_t i = 0; i < n && rep.product_structure; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector pp = p_minus(alg.bracket(p_plus.image_of_basis(i), p_plus.image_of_basis(j)));
      const Vector mm = p_plus(alg.bracket(p_minus.image_of_basis(i), p_minus.image_of_basis(j)));
      if (!pp.is_zero() || !mm.is_zero()) {
        rep.product_structure = false;
        break;
      }
    }
  return rep;
}

} // namespace modr
