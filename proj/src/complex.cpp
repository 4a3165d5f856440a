#include "modr/complex.hpp"

#include "modr/combinatorics.hpp"
#include "modr/errors.hpp"
#include "modr/rmatrix.hpp"

#include <map>
#include <string>

namespace modr {

namespace {

struct ComplexData {
  std::size_t n = 0;
  std::vector<linalg::Matrix> rho; ///< rho(e_a), a = 0..n-1
  std::vector<LieAlgebra::Terms> bracket; ///< [e_a, e_b]_* at a*n+b
};

ComplexData complex_data(const Endo &op, Flavor flavor) {
  const LieAlgebra &alg = op.algebra();
  const std::size_t n = alg.dim();
  ComplexData data;
  data.n = n;
  for (std::size_t a = 0; a < n; ++a)
    data.rho.push_back(rho(op, Vector::basis(n, a)).matrix());
  data.bracket.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b)
        continue;
      Vector v = alg.bracket_with_basis(op.image_of_basis(a), b);
      v -= alg.bracket_with_basis(op.image_of_basis(b), a);
      if (flavor == Flavor::B)
        v += alg.bracket_basis(a, b);
      for (std::size_t c = 0; c < n; ++c)
        if (v[c] != 0)
          data.bracket[a * n + b].emplace_back(c, v[c]);
    }
  return data;
}

linalg::SparseMatrix assemble(const ComplexData &data, std::size_t k) {
  const std::size_t n = data.n;
  const auto &targets = lex_subsets(n, k + 1);
  linalg::SparseMatrix m(targets.size() * n, binomial(n, k) * n);
  const long kk = static_cast<long>(k);
  const auto &act = shuffles({1, kk});
  const auto &brk = shuffles({2, kk - 1});

  std::vector<std::vector<linalg::SparseMatrix::Entry>> rows(n);
  std::vector<std::size_t> rest;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const auto &tuple = targets[t];
    for (auto &r : rows)
      r.clear();

    // sgn * rho(x_s(0)) f(x_s(1), ..., x_s(k))
    for (const Shuffle &s : act) {
      rest.clear();
      for (std::size_t p = 1; p < s.perm.size(); ++p)
        rest.push_back(tuple[s.perm[p]]);
      const std::size_t col0 = subset_rank(n, rest) * n;
      const linalg::Matrix &rm = data.rho[tuple[s.perm[0]]];
      for (std::size_t row = 0; row < n; ++row)
        for (std::size_t src = 0; src < n; ++src) {
          const Rational &c = rm(row, src);
          if (c != 0)
            rows[row].emplace_back(col0 + src, s.sign > 0 ? c : Rational(-c));
        }
    }

    // -sgn * f([x_s(0), x_s(1)]_*, x_s(2), ..., x_s(k))
    for (const Shuffle &s : brk) {
      rest.clear();
      for (std::size_t p = 2; p < s.perm.size(); ++p)
        rest.push_back(tuple[s.perm[p]]);
      const auto &terms = data.bracket[tuple[s.perm[0]] * n + tuple[s.perm[1]]];
      for (const auto &[c, v] : terms) {
        const auto ins = insert_sorted(rest, c);
        if (!ins)
          continue;
        const std::size_t col0 = subset_rank(n, ins->second) * n;
        const Rational coef = (-s.sign * ins->first) > 0 ? v : Rational(-v);
        for (std::size_t row = 0; row < n; ++row)
          rows[row].emplace_back(col0 + row, coef);
      }
    }

    for (std::size_t row = 0; row < n; ++row)
      m.set_row(t * n + row, std::move(rows[row]));
  }
  return m;
}

void require_axiom(const Endo &op, Flavor flavor) {
  if (flavor == Flavor::R) {
    const DefectReport d = mcybe_defect(op);
    if (!d.is_zero)
      throw PreconditionError("operator is not a modified r-matrix: defect nonzero on basis pair (" +
                              std::to_string(d.worst_pair->first) + ", " +
                              std::to_string(d.worst_pair->second) + ")");
  } else {
    const RotaBaxterVerdict v = is_rota_baxter(op, 1);
    if (!v.holds)
      throw PreconditionError("operator is not a Rota-Baxter operator of weight 1: fails on basis "
                              "pair (" +
                              std::to_string(v.failing_pair->first) + ", " +
                              std::to_string(v.failing_pair->second) + ")");
  }
}

Cochain column_cochain(const LieAlgebra &alg, std::size_t arity, std::vector<Rational> v) {
  return Cochain(alg, arity, std::move(v));
}

} // namespace

CoboundaryMatrix coboundary_matrix_unchecked(const Endo &op, std::size_t k, Flavor flavor) {
  if (k > op.dim())
    throw InputError("coboundary requested from arity " + std::to_string(k) +
                     " but the algebra has dimension " + std::to_string(op.dim()));
  CoboundaryMatrix out;
  out.from_arity = k;
  out.flavor = flavor;
  out.matrix = assemble(complex_data(op, flavor), k);
  return out;
}

CoboundaryMatrix coboundary_matrix(const Endo &op, std::size_t k, Flavor flavor) {
  require_axiom(op, flavor);
  return coboundary_matrix_unchecked(op, k, flavor);
}

Cochain coboundary(const Endo &r, const Cochain &f) {
  const CoboundaryMatrix d = coboundary_matrix(r, f.arity(), Flavor::R);
  return Cochain(r.algebra(), f.arity() + 1, d.matrix.apply(f.coeffs()));
}

bool is_cocycle(const Endo &r, const Cochain &f) {
  if (f.dim() != r.dim())
    throw InputError("cochain and operator act on spaces of different dimension");
  if (f.arity() >= r.dim()) {
    require_axiom(r, Flavor::R);
    return true;
  }
  return coboundary(r, f).is_zero();
}

std::optional<Cochain> coboundary_preimage(const Endo &r, const Cochain &f) {
  if (f.dim() != r.dim())
    throw InputError("cochain and operator act on spaces of different dimension");
  require_axiom(r, Flavor::R);
  if (f.arity() == 0)
    return std::nullopt;
  const CoboundaryMatrix d = coboundary_matrix_unchecked(r, f.arity() - 1, Flavor::R);
  auto x = linalg::solve(d.matrix, f.coeffs());
  if (!x)
    return std::nullopt;
  return Cochain(r.algebra(), f.arity() - 1, std::move(*x));
}

CohomologyReport cohomology(const Endo &r, CohomologyOptions options) {
  require_axiom(r, Flavor::R);
  const LieAlgebra &alg = r.algebra();
  const std::size_t n = alg.dim();
  const ComplexData data = complex_data(r, Flavor::R);

  std::map<std::size_t, linalg::SparseMatrix> mats; // by source arity
  auto matrix = [&](std::size_t arity) -> const linalg::SparseMatrix & {
    auto it = mats.find(arity);
    if (it == mats.end())
      it = mats.emplace(arity, assemble(data, arity)).first;
    return it->second;
  };
  std::map<std::size_t, std::size_t> ranks;
  auto rank_of = [&](std::size_t arity) {
    auto it = ranks.find(arity);
    if (it == ranks.end())
      it = ranks.emplace(arity, linalg::rank(matrix(arity))).first;
    return it->second;
  };

  CohomologyReport rep;
  for (std::size_t degree = 1; degree <= options.max_degree; ++degree) {
    DegreeReport d;
    d.degree = degree;
    const std::size_t arity = degree - 1;
    if (arity > n) {
      rep.degrees.push_back(std::move(d));
      continue;
    }
    d.dim_cochains = cochain_space_dim(n, arity);

    if (!options.witnesses) {
      d.dim_cocycles = d.dim_cochains - rank_of(arity);
      d.dim_coboundaries = arity == 0 ? 0 : rank_of(arity - 1);
      d.dim_cohomology = d.dim_cocycles - d.dim_coboundaries;
      rep.degrees.push_back(std::move(d));
      continue;
    }

    for (auto &v : linalg::kernel_basis(matrix(arity)))
      d.cocycle_basis.push_back(column_cochain(alg, arity, std::move(v)));
    d.dim_cocycles = d.cocycle_basis.size();

    if (arity > 0) {
      const linalg::SparseMatrix &in = matrix(arity - 1);
      const linalg::Matrix dense = in.to_dense();
      for (std::size_t c : linalg::pivot_columns(in)) {
        std::vector<Rational> pre(in.cols());
        pre[c] = 1;
        d.coboundary_basis.push_back(
            {column_cochain(alg, arity, dense.column(c)), column_cochain(alg, arity - 1, pre)});
      }
    }
    d.dim_coboundaries = d.coboundary_basis.size();
    d.dim_cohomology = d.dim_cocycles - d.dim_coboundaries;

    // Extend the coboundary basis by cocycles; the added ones represent H^n.
    const std::size_t len = d.dim_cochains;
    linalg::SparseMatrix stacked(len, d.dim_coboundaries + d.dim_cocycles);
    {
      std::vector<std::vector<linalg::SparseMatrix::Entry>> rows(len);
      std::size_t col = 0;
      auto add = [&](const Cochain &c) {
        for (std::size_t i = 0; i < len; ++i)
          if (c.coeffs()[i] != 0)
            rows[i].emplace_back(col, c.coeffs()[i]);
        ++col;
      };
      for (const auto &w : d.coboundary_basis)
        add(w.cochain);
      for (const auto &z : d.cocycle_basis)
        add(z);
      for (std::size_t i = 0; i < len; ++i)
        stacked.set_row(i, std::move(rows[i]));
    }
    for (std::size_t c : linalg::pivot_columns(stacked))
      if (c >= d.dim_coboundaries)
        d.cohomology_representatives.push_back(d.cocycle_basis[c - d.dim_coboundaries]);
    if (d.cohomology_representatives.size() != d.dim_cohomology)
      throw std::logic_error("cohomology: representatives do not match the dimension count");
    rep.degrees.push_back(std::move(d));
  }
  return rep;
}

} // namespace modr
