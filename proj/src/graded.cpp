#include "modr/graded.hpp"

#include "modr/combinatorics.hpp"
#include "modr/complex.hpp"
#include "modr/errors.hpp"
#include "modr/rmatrix.hpp"

namespace modr {

namespace {

std::vector<std::size_t> pick(const std::vector<std::size_t> &tuple,
                              const std::vector<std::size_t> &perm, std::size_t from,
                              std::size_t to) {
  std::vector<std::size_t> out;
  out.reserve(to - from);
  for (std::size_t s = from; s < to; ++s)
    out.push_back(tuple[perm[s]]);
  return out;
}

// sum over S(a,1,b-1) of sgn * outer([inner(x..), x], x..), with inner of arity a
// and outer of arity b.
void nested_sum(const Cochain &outer, const Cochain &inner, const std::vector<std::size_t> &tuple,
                const Rational &scale, Vector &acc) {
  const LieAlgebra &alg = outer.algebra();
  const std::size_t a = inner.arity();
  const std::size_t b = outer.arity();
  for (const Shuffle &s : shuffles({static_cast<long>(a), 1, static_cast<long>(b) - 1})) {
    const Vector in = inner.value_at(pick(tuple, s.perm, 0, a));
    if (in.is_zero())
      continue;
    const Vector w = alg.bracket_with_basis(in, tuple[s.perm[a]]);
    if (w.is_zero())
      continue;
    const Vector v = outer.eval_first(w, pick(tuple, s.perm, a + 1, a + b));
    acc.add_scaled(s.sign > 0 ? scale : Rational(-scale), v);
  }
}

} // namespace

Cochain graded_bracket(const Cochain &f, const Cochain &g) {
  if (f.dim() != g.dim())
    throw InputError("graded bracket of cochains on spaces of different dimension");
  const LieAlgebra &alg = f.algebra();
  const std::size_t n = alg.dim();
  const std::size_t p = f.arity();
  const std::size_t q = g.arity();
  Cochain out(alg, p + q);
  if (p + q > n)
    return out;
  const Rational epq = (p * q) % 2 == 0 ? 1 : -1;
  const auto &tuples = lex_subsets(n, p + q);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const auto &tuple = tuples[t];
    Vector acc(n);
    nested_sum(f, g, tuple, Rational(1), acc);
    nested_sum(g, f, tuple, Rational(-epq), acc);
    for (const Shuffle &s : shuffles({static_cast<long>(p), static_cast<long>(q)})) {
      const Vector fv = f.value_at(pick(tuple, s.perm, 0, p));
      if (fv.is_zero())
        continue;
      const Vector gv = g.value_at(pick(tuple, s.perm, p, p + q));
      acc.add_scaled(s.sign > 0 ? epq : Rational(-epq), alg.bracket(fv, gv));
    }
    std::copy(acc.coeffs().begin(), acc.coeffs().end(), out.coeffs().begin() + t * n);
  }
  return out;
}

Cochain d_R(const Endo &r, const Cochain &f) {
  const DefectReport d = mcybe_defect(r);
  if (!d.is_zero)
    throw PreconditionError("d_R needs a modified r-matrix");
  return graded_bracket(Cochain::from_endo(r), f);
}

bool is_maurer_cartan_weight0(const Endo &f) {
  const Cochain c = Cochain::from_endo(f);
  return graded_bracket(c, c).is_zero();
}

bool satisfies_mc_modified(const Endo &r) {
  const Cochain c = Cochain::from_endo(r);
  return graded_bracket(c, c) == Rational(2) * Cochain::bracket_cochain(r.algebra());
}

McDeformationVerdict mc_deformation_check(const Endo &r, const Endo &rp) {
  if (r.dim() != rp.dim())
    throw InputError("operators act on spaces of different dimension");
  const Cochain c = Cochain::from_endo(rp);
  Cochain mc = d_R(r, c);
  mc += Rational(1, 2) * graded_bracket(c, c);
  McDeformationVerdict v;
  v.maurer_cartan = mc.is_zero();
  v.defect_zero = mcybe_defect(r + rp).is_zero;
  return v;
}

KuranishiReport kuranishi(const Endo &r, const Endo &f) {
  const Cochain fc = Cochain::from_endo(f);
  if (!is_cocycle(r, fc))
    throw PreconditionError("Kuranishi map is defined on 2-cocycles only");
  KuranishiReport rep;
  rep.ff = graded_bracket(fc, fc);
  rep.is_cocycle = is_cocycle(r, rep.ff);
  rep.witness = coboundary_preimage(r, rep.ff);
  rep.vanishes_in_h3 = rep.witness.has_value();
  return rep;
}

} // namespace modr
