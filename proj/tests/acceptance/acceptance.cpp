// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include "modr/complex.hpp"
#include "modr/deform.hpp"
#include "modr/doubling.hpp"
#include "modr/errors.hpp"
#include "modr/graded.hpp"
#include "modr/rmatrix.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace modr;

namespace {

struct Instance {
  std::string label;
  LieAlgebra algebra;
  Endo r;
};

std::vector<Instance> instances() {
  std::vector<Instance> out;
  for (std::size_t n : {2, 3, 4}) {
    auto c = catalog("sl-borel", n);
    out.push_back({"sl(" + std::to_string(n) + ")", c.algebra, c.r_matrix});
  }
  for (const char *name : {"heisenberg", "affine"}) {
    auto c = catalog(name);
    out.push_back({name, c.algebra, c.r_matrix});
  }
  auto c = catalog("abelian", 3);
  out.push_back({"abelian(3)", c.algebra, c.r_matrix});
  return out;
}

/// Four-dimensional oscillator algebra: [p,q] = z, [n,p] = q, [n,q] = -p.
LieAlgebra oscillator() {
  return LieAlgebra({"p", "q", "z", "n"},
                    {{0, 1, Vector({0, 0, 1, 0})}, {0, 3, Vector({0, -1, 0, 0})},
                     {1, 3, Vector({1, 0, 0, 0})}});
}

Rational sgn(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

struct Result {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string &what) {
    if (!cond && ok) {
      ok = false;
      detail.str("");
      detail << "first failure: " << what;
    }
  }
};

using Dense = oracle::Dense;

/// Summed bracket of the operators (each x -> [Ox,y] + [x,Oy]) on vectors, from the table only.
std::vector<Rational> summed(const LieAlgebra &g, const std::vector<Dense> &ops,
                             const std::vector<Rational> &x, const std::vector<Rational> &y) {
  std::vector<Rational> out(g.dim());
  for (const auto &o : ops) {
    out = oracle::add(out, oracle::bracket(g, oracle::apply(o, x), y));
    out = oracle::add(out, oracle::bracket(g, x, oracle::apply(o, y)));
  }
  return out;
}

bool summed_jacobi(const LieAlgebra &g, const std::vector<Dense> &ops) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto a = oracle::unit(n, i), b = oracle::unit(n, j), c = oracle::unit(n, k);
        auto s = summed(g, ops, summed(g, ops, a, b), c);
        s = oracle::add(s, summed(g, ops, summed(g, ops, b, c), a));
        s = oracle::add(s, summed(g, ops, summed(g, ops, c, a), b));
        for (const auto &v : s)
          if (v != 0)
            return false;
      }
  return true;
}

// 1
Result sl2_cohomology() {
  Result res;
  const auto c = catalog("sl-borel", 2);
  const auto rep = cohomology(c.r_matrix, {2, true});
  const std::size_t h1 = rep.at(1).dim_cohomology, h2 = rep.at(2).dim_cohomology;
  res.require(h1 == 1, "dim H1 = " + std::to_string(h1));
  res.require(h2 == 2, "dim H2 = " + std::to_string(h2));
  if (res.ok)
    res.detail << "dim H1 = " << h1 << ", dim H2 = " << h2;
  return res;
}

// 2
Result sln_first_cohomology() {
  Result res;
  double seconds_at_4 = 0;
  for (std::size_t n : {2, 3, 4}) {
    const auto start = std::chrono::steady_clock::now();
    const auto c = catalog("sl-borel", n);
    const std::size_t h1 = cohomology(c.r_matrix, {1, false}).at(1).dim_cohomology;
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (n == 4)
      seconds_at_4 = s;
    res.require(h1 == n - 1, "n = " + std::to_string(n) + ": dim H1 = " + std::to_string(h1));
  }
  res.require(seconds_at_4 < 10, "n = 4 took " + std::to_string(seconds_at_4) + " s");
  if (res.ok)
    res.detail << "dim H1 = n - 1 for n = 2, 3, 4; n = 4 in " << seconds_at_4 << " s";
  return res;
}

// 3
Result complex_property(const std::vector<Instance> &all) {
  Result res;
  std::size_t products = 0;
  for (const auto &inst : all) {
    const Endo b = rb_from_r(inst.r);
    for (Flavor fl : {Flavor::R, Flavor::B}) {
      const Endo &op = fl == Flavor::R ? inst.r : b;
      // Cochain degrees 1..3 map into degrees 2..4.
      for (std::size_t k = 0; k + 1 <= std::min<std::size_t>(inst.algebra.dim(), 3) && k <= 2; ++k) {
        const auto d1 = coboundary_matrix(op, k, fl).matrix;
        const auto d2 = coboundary_matrix(op, k + 1, fl).matrix;
        res.require((d2 * d1).is_zero(), inst.label + (fl == Flavor::R ? " R" : " B") +
                                             " flavor, degree " + std::to_string(k + 1));
        ++products;
      }
    }
  }
  if (res.ok)
    res.detail << products << " exact products d o d vanish";
  return res;
}

// 4
Result scaling_isomorphism(const std::vector<Instance> &all) {
  Result res;
  std::size_t compared = 0;
  for (const auto &inst : all) {
    const Endo b = rb_from_r(inst.r);
    for (std::size_t k = 0; k <= std::min<std::size_t>(inst.algebra.dim(), 3); ++k) {
      res.require(coboundary_matrix(inst.r, k, Flavor::R).matrix ==
                      coboundary_matrix(b, k, Flavor::B).matrix.scaled(2),
                  inst.label + ", degree " + std::to_string(k + 1));
      ++compared;
    }
  }
  if (res.ok)
    res.detail << compared << " matrix pairs satisfy d_R = 2 d_B";
  return res;
}

// 5
Result bridge_identity(std::mt19937 &rng) {
  Result res;
  std::size_t checked = 0;
  for (std::size_t n : {2, 3}) {
    const auto c = catalog("sl-borel", n);
    const Cochain r = Cochain::from_endo(c.r_matrix);
    for (std::size_t k = 0; k <= 2; ++k)
      for (int trial = 0; trial < 50; ++trial) {
        const Cochain f = oracle::random_cochain(rng, c.algebra, k);
        res.require(coboundary(c.r_matrix, f) == sgn(k) * graded_bracket(r, f),
                    "sl(" + std::to_string(n) + "), degree " + std::to_string(k + 1));
        ++checked;
      }
  }
  if (res.ok)
    res.detail << checked << " random cochains on sl(2), sl(3), degrees 1-3";
  return res;
}

// 6
Result maurer_cartan(std::mt19937 &rng) {
  Result res;
  std::size_t pos_r = 0, neg_r = 0, pos_b = 0, neg_b = 0;
  auto test_r = [&](const Endo &r, const std::string &label) {
    const bool mc = satisfies_mc_modified(r);
    const bool defect = mcybe_defect(r).is_zero;
    res.require(mc == defect, "R = " + label);
    (defect ? pos_r : neg_r)++;
  };
  auto test_b = [&](const Endo &b, const std::string &label) {
    const bool mc = is_maurer_cartan_weight0(b);
    const bool rb = is_rota_baxter(b, 0).holds;
    res.require(mc == rb, "B = " + label);
    (rb ? pos_b : neg_b)++;
  };

  const auto sl2 = catalog("sl-borel", 2);
  const auto heis = catalog("heisenberg");
  const auto aff = catalog("affine");
  for (const auto &c : {sl2, catalog("sl-borel", 3), heis, aff}) {
    test_r(c.r_matrix, "catalog");
    test_r(Endo::identity(c.algebra), "Id");
    test_r(Rational(-1) * Endo::identity(c.algebra), "-Id");
    test_r(Rational(2) * c.r_matrix, "2R");
    test_r(Endo::zero(c.algebra), "0");
    for (int k = 0; k < 3; ++k)
      test_r(oracle::random_endo(rng, c.algebra), "random");
  }

  const auto ab = catalog("abelian", 3);
  for (int k = 0; k < 3; ++k)
    test_b(oracle::random_endo(rng, ab.algebra), "random on abelian");
  test_b(Endo::zero(sl2.algebra), "0");
  // Maps into the center of the Heisenberg algebra.
  for (int k = 0; k < 2; ++k) {
    linalg::Matrix m(3, 3);
    for (std::size_t j = 0; j < 3; ++j)
      m(2, j) = oracle::small_rational(rng);
    test_b(Endo(heis.algebra, m), "central");
  }
  test_b(trivial_deformation(aff.r_matrix, Vector::basis(2, 1)).rhat, "d b on affine");
  test_b(Endo::identity(sl2.algebra), "Id");
  test_b(rb_from_r(sl2.r_matrix), "(R - Id)/2");
  for (const auto &c : {sl2, heis, aff})
    for (int k = 0; k < 2; ++k)
      test_b(oracle::random_endo(rng, c.algebra), "random");

  res.require(pos_r >= 3 && neg_r >= 3, "too few modified r-matrix instances");
  res.require(pos_b >= 3 && neg_b >= 3, "too few Rota-Baxter instances");
  if (res.ok)
    res.detail << "[[R,R]] = 2 pi: " << pos_r << " positive, " << neg_r
               << " negative; [[B,B]] = 0: " << pos_b << " positive, " << neg_b << " negative";
  return res;
}

// 7
Result graded_axioms(std::mt19937 &rng) {
  Result res;
  const std::vector<std::pair<std::string, LieAlgebra>> algebras{
      {"sl(2)", catalog("sl-borel", 2).algebra},
      {"heisenberg", catalog("heisenberg").algebra},
      {"affine", catalog("affine").algebra},
      {"oscillator", oscillator()},
  };
  std::size_t triples = 0, central = 0;
  for (const auto &[label, g] : algebras)
    for (std::size_t p = 0; p <= 2; ++p)
      for (std::size_t q = 0; q <= 2; ++q)
        for (std::size_t r = 0; r <= 2; ++r) {
          const Cochain f = oracle::random_cochain(rng, g, p);
          const Cochain h = oracle::random_cochain(rng, g, q);
          const Cochain k = oracle::random_cochain(rng, g, r);
          const std::string where = label + " arities " + std::to_string(p) +
                                    std::to_string(q) + std::to_string(r);
          res.require(graded_bracket(f, h) == -sgn(p * q) * graded_bracket(h, f),
                      "antisymmetry, " + where);
          Cochain sum = sgn(p * r) * graded_bracket(f, graded_bracket(h, k));
          sum += sgn(p * q) * graded_bracket(h, graded_bracket(k, f));
          sum += sgn(q * r) * graded_bracket(k, graded_bracket(f, h));
          res.require(sum.is_zero(), "Jacobi, " + where);
          ++triples;
        }
  for (const auto &[label, g] : algebras) {
    const Cochain two_pi = Rational(2) * Cochain::bracket_cochain(g);
    for (int trial = 0; trial < 15; ++trial) {
      const std::size_t k = trial % 3;
      res.require(graded_bracket(two_pi, oracle::random_cochain(rng, g, k)).is_zero(),
                  "center, " + label);
      ++central;
    }
  }
  if (res.ok)
    res.detail << triples << " triples (antisymmetry and Jacobi), " << central
               << " center checks";
  return res;
}

// 8
Result representation(const std::vector<Instance> &all, std::mt19937 &rng) {
  Result res;
  std::size_t pairs = 0;
  for (const auto &inst : all) {
    const LieAlgebra gr = induced_bracket(inst.r);
    const std::size_t n = inst.algebra.dim();
    for (int trial = 0; trial < 100; ++trial) {
      const Vector x = oracle::random_vector(rng, n), y = oracle::random_vector(rng, n);
      const Endo rx = rho(inst.r, x), ry = rho(inst.r, y);
      res.require(rho(inst.r, gr.bracket(x, y)) == rx * ry - ry * rx, inst.label);
      ++pairs;
    }
  }
  if (res.ok)
    res.detail << pairs << " random pairs over " << all.size() << " catalog r-matrices";
  return res;
}

// 9
Result deformation_chain(const std::vector<Instance> &all, std::mt19937 &rng) {
  Result res;
  std::size_t found = 0;
  for (const auto &inst : all) {
    const std::size_t n = inst.algebra.dim();
    std::vector<Vector> candidates = default_nijenhuis_candidates(n);
    for (int k = 0; k < 3; ++k)
      candidates.push_back(oracle::random_vector(rng, n));
    const LieAlgebra gr = induced_bracket(inst.r);
    for (const auto &[x, v] : nijenhuis_scan(inst.r, candidates)) {
      if (!v.is_nijenhuis_element)
        continue;
      ++found;
      const Endo dx = coboundary(inst.r, Cochain::from_vector(inst.algebra, x)).to_endo();
      const DeformationVerdict dv = check_linear_deformation(inst.r, dx);
      res.require(dv.valid && dv.polynomial_zero, inst.label + ": deformation");
      res.require(check_equivalence(inst.r, dx, Endo::zero(inst.algebra), x).equivalent(),
                  inst.label + ": equivalence");
      res.require(nijenhuis_operator_check(gr, ad(inst.algebra, x)).holds,
                  inst.label + ": Nijenhuis operator");
      const TrivialDeformation t = trivial_deformation(inst.r, x);
      res.require(t.rhat == dx && t.verdict.valid && t.equivalence.equivalent(),
                  inst.label + ": trivial deformation");
    }
  }
  res.require(found > 0, "no Nijenhuis elements found");
  if (res.ok)
    res.detail << found << " Nijenhuis elements, each through the full chain";
  return res;
}

// 10
Result graph_criterion(std::mt19937 &rng) {
  Result res;
  std::ostringstream counts;
  for (const auto &[name, n] : std::vector<std::pair<std::string, std::size_t>>{
           {"sl-borel", 2}, {"sl-borel", 3}, {"heisenberg", 0}, {"affine", 0}, {"abelian", 3}}) {
    const auto c = catalog(name, n);
    const LieAlgebra &g = c.algebra;
    const std::size_t dim = g.dim();
    std::vector<Endo> positives{c.r_matrix, Endo::identity(g), Rational(-1) * Endo::identity(g),
                                Rational(-1) * c.r_matrix};
    // Conjugates by inner automorphisms exp(ad x) with ad x nilpotent.
    for (std::size_t i = 0; i < dim && positives.size() < 8; ++i) {
      const Vector x = oracle::small_rational(rng) * Vector::basis(dim, i);
      Endo phi, phi_inv;
      try {
        phi = exp_ad(g, x);
        phi_inv = exp_ad(g, -x);
      } catch (const PreconditionError &) {
        continue;
      }
      positives.push_back(phi * c.r_matrix * phi_inv);
    }
    std::vector<Endo> negatives;
    for (int attempt = 0; attempt < 50 && negatives.size() < 6 && !g.is_abelian(); ++attempt) {
      Endo r = attempt % 2 == 0 ? oracle::random_endo(rng, g) : c.r_matrix;
      if (attempt % 2 == 1) {
        linalg::Matrix m = r.matrix();
        m(attempt % dim, (attempt / 2) % dim) += 1;
        r = Endo(g, m);
      }
      if (!mcybe_defect(r).is_zero)
        negatives.push_back(r);
    }
    std::size_t pos = 0, neg = 0;
    for (const auto &r : positives) {
      const bool defect = mcybe_defect(r).is_zero;
      res.require(defect, name + ": positive instance fails the equation");
      res.require(graph_complement(r).graph.is_subalgebra == defect, name + ": graph criterion");
      res.require(complement_certificate(r).passes(), name + ": complement certificate");
      ++pos;
    }
    for (const auto &r : negatives) {
      res.require(!graph_complement(r).graph.is_subalgebra, name + ": negative accepted");
      ++neg;
    }
    res.require(pos >= 5, name + ": fewer than 5 positives");
    res.require(g.is_abelian() || neg >= 5, name + ": fewer than 5 negatives");
    counts << " " << name << (n ? "(" + std::to_string(n) + ")" : "") << " " << pos << "+/" << neg
           << "-";
  }
  if (res.ok)
    res.detail << "agreement on" << counts.str()
               << " (every map on an abelian algebra is a positive)";
  return res;
}

// 11
Result involutive(std::mt19937 &rng) {
  Result res;
  std::ostringstream counts;
  for (const auto &[name, n] : std::vector<std::pair<std::string, std::size_t>>{
           {"sl-borel", 2}, {"sl-borel", 3}, {"heisenberg", 0}, {"affine", 0}, {"abelian", 3}}) {
    const auto c = catalog(name, n);
    const LieAlgebra &g = c.algebra;
    const std::size_t dim = g.dim();
    std::vector<Endo> involutions{c.r_matrix, Rational(-1) * c.r_matrix, Endo::identity(g)};
    for (std::size_t i = 0; i < dim; ++i) {
      try {
        const Vector x = oracle::small_rational(rng) * Vector::basis(dim, i);
        involutions.push_back(exp_ad(g, x) * c.r_matrix * exp_ad(g, -x));
      } catch (const PreconditionError &) {
      }
    }
    while (involutions.size() < 24) {
      const linalg::Matrix p = oracle::random_endo(rng, g).matrix();
      const auto p_inv = linalg::inverse(p);
      if (!p_inv)
        continue;
      linalg::Matrix d(dim, dim);
      for (std::size_t i = 0; i < dim; ++i)
        d(i, i) = rng() % 2 == 0 ? 1 : -1;
      involutions.push_back(Endo(g, p * d * *p_inv));
    }
    std::size_t pos = 0, neg = 0;
    for (const auto &r : involutions) {
      const InvolutiveReport rep = involutive_analyze(r);
      res.require(rep.consistent(), name + ": verdicts disagree");
      (rep.mcybe ? pos : neg)++;
    }
    // In dimension 2 every line is a subalgebra, so every involution is a positive.
    res.require(pos > 0, name + ": no positives");
    res.require(g.is_abelian() || dim < 3 || neg > 0, name + ": no negatives");
    counts << " " << name << (n ? "(" + std::to_string(n) + ")" : "") << " " << pos << "+/" << neg
           << "-";
  }
  if (res.ok)
    res.detail << "four verdicts coincide on" << counts.str();
  return res;
}

// 12
Result kuranishi_consistency() {
  Result res;
  const auto c = catalog("sl-borel", 2);
  const auto first = cohomology(c.r_matrix, {2, true}).at(2).cocycle_basis;
  const auto second = cohomology(c.r_matrix, {2, true}).at(2).cocycle_basis;
  res.require(first.size() == 4 && second.size() == 4, "dim Z2 is not 4");
  // Independent membership test: [[f,f]] lies in B3 iff appending it keeps the rank.
  const Dense d2 = oracle::to_dense(coboundary_matrix(c.r_matrix, 1).matrix.to_dense());
  std::size_t vanishing = 0;
  for (std::size_t i = 0; i < first.size() && i < second.size(); ++i) {
    res.require(first[i] == second[i], "cocycle bases differ between runs");
    const KuranishiReport a = kuranishi(c.r_matrix, first[i].to_endo());
    const KuranishiReport b = kuranishi(c.r_matrix, second[i].to_endo());
    res.require(a.is_cocycle, "[[f,f]] is not a cocycle");
    res.require(a.vanishes_in_h3 == b.vanishes_in_h3 && a.ff == b.ff, "unstable verdict");
    Dense aug = d2;
    for (std::size_t row = 0; row < aug.size(); ++row)
      aug[row].push_back(a.ff.coeffs()[row]);
    const bool in_b3 = oracle::rank(aug) == oracle::rank(d2);
    res.require(a.vanishes_in_h3 == in_b3, "membership disagrees with the rank test");
    if (a.witness)
      res.require(coboundary(c.r_matrix, *a.witness) == a.ff, "witness is not a preimage");
    vanishing += a.vanishes_in_h3;
  }
  std::size_t trivial = 0;
  for (const char *name : {"affine", "heisenberg"}) {
    const auto cc = catalog(name);
    for (const auto &[x, v] :
         nijenhuis_scan(cc.r_matrix, default_nijenhuis_candidates(cc.algebra.dim()))) {
      if (!v.is_nijenhuis_element)
        continue;
      const Endo f = trivial_deformation(cc.r_matrix, x).rhat;
      res.require(kuranishi(cc.r_matrix, f).vanishes_in_h3,
                  std::string(name) + ": trivial deformation obstructed");
      ++trivial;
    }
  }
  if (res.ok)
    res.detail << "Z2 basis of 4, " << vanishing << " vanish in H3 on both runs; " << trivial
               << " trivial deformations unobstructed";
  return res;
}

// 13
Result compatible_brackets(std::mt19937 &rng) {
  Result res;
  struct Case {
    std::string label;
    Endo r, rhat;
  };
  std::vector<Case> cases;
  for (const auto &[name, n] : std::vector<std::pair<std::string, std::size_t>>{
           {"sl-borel", 2}, {"heisenberg", 0}, {"affine", 0}}) {
    const auto c = catalog(name, n);
    cases.push_back({name + " zero", c.r_matrix, Endo::zero(c.algebra)});
    for (const auto &[x, v] :
         nijenhuis_scan(c.r_matrix, default_nijenhuis_candidates(c.algebra.dim())))
      if (v.is_nijenhuis_element)
        cases.push_back({name + " trivial", c.r_matrix, trivial_deformation(c.r_matrix, x).rhat});
    const CohomologyReport rep = cohomology(c.r_matrix, {2, true});
    for (const auto &z : rep.at(2).cocycle_basis)
      if (check_linear_deformation(c.r_matrix, z.to_endo()).valid)
        cases.push_back({name + " cocycle", c.r_matrix, z.to_endo()});
  }
  std::size_t checks = 0;
  for (const auto &cs : cases) {
    const LieAlgebra &g = cs.r.algebra();
    res.require(check_linear_deformation(cs.r, cs.rhat).valid, cs.label + ": invalid deformation");
    for (int trial = 0; trial < 10; ++trial) {
      const Rational t1 = oracle::small_rational(rng, 9), t2 = oracle::small_rational(rng, 9);
      const CompatibleVerdict v = compatible_bracket_check(cs.r, cs.rhat, t1, t2);
      const Endo r1 = cs.r + t1 * cs.rhat, r2 = cs.r + t2 * cs.rhat;
      const Endo mid = cs.r + Rational((t1 + t2) / 2) * cs.rhat;
      const std::vector<Dense> sum_ops{oracle::matrix_of(r1), oracle::matrix_of(r2)};
      const bool jac = summed_jacobi(g, sum_ops);
      bool twice = true;
      for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
          const auto a = oracle::unit(g.dim(), i), b = oracle::unit(g.dim(), j);
          const auto lhs = summed(g, sum_ops, a, b);
          const auto rhs = summed(g, {oracle::matrix_of(mid), oracle::matrix_of(mid)}, a, b);
          twice = twice && lhs == rhs;
        }
      res.require(v.jacobi_holds && jac, cs.label + ": Jacobi fails");
      res.require(v.equals_twice_midpoint && twice, cs.label + ": not twice the midpoint");
      ++checks;
    }
  }
  if (res.ok)
    res.detail << cases.size() << " valid deformations, " << checks << " parameter pairs";
  return res;
}

} // namespace

int main() {
  std::mt19937 rng(20240611);
  const std::vector<Instance> all = instances();
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"sl(2) cohomology", [] { return sl2_cohomology(); }},
      {"sl(n) first cohomology", [] { return sln_first_cohomology(); }},
      {"complex property", [&] { return complex_property(all); }},
      {"scaling isomorphism", [&] { return scaling_isomorphism(all); }},
      {"bridge identity", [&] { return bridge_identity(rng); }},
      {"Maurer-Cartan characterizations", [&] { return maurer_cartan(rng); }},
      {"graded Lie axioms", [&] { return graded_axioms(rng); }},
      {"representation property", [&] { return representation(all, rng); }},
      {"deformation chain", [&] { return deformation_chain(all, rng); }},
      {"graph criterion", [&] { return graph_criterion(rng); }},
      {"involutive equivalences", [&] { return involutive(rng); }},
      {"Kuranishi consistency", [] { return kuranishi_consistency(); }},
      {"compatible brackets", [&] { return compatible_brackets(rng); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception &e) {
      r.ok = false;
      r.detail << "exception: " << e.what();
    }
    std::cout << (r.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": "
              << r.detail.str() << std::endl;
    failures += !r.ok;
  }
  return failures == 0 ? 0 : 1;
}
