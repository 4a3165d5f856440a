#include "modr/complex.hpp"
#include "modr/errors.hpp"
#include "modr/graded.hpp"
#include "modr/rmatrix.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace modr;

namespace {

Rational sgn(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

Endo diag(const LieAlgebra &g, std::initializer_list<Rational> d) {
  linalg::Matrix m(g.dim(), g.dim());
  std::size_t i = 0;
  for (const auto &v : d) {
    m(i, i) = v;
    ++i;
  }
  return Endo(g, std::move(m));
}

} // namespace

TEST_CASE("graded bracket of two linear maps") {
  std::mt19937 rng(61);
  const LieAlgebra g = special_linear(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Endo f = oracle::random_endo(rng, g), h = oracle::random_endo(rng, g);
    const Cochain fh = graded_bracket(Cochain::from_endo(f), Cochain::from_endo(h));
    const Vector x = oracle::random_vector(rng, 8), y = oracle::random_vector(rng, 8);
    // f([hx,y]) - f([hy,x]) + h([fx,y]) - h([fy,x]) - [fx,hy] + [fy,hx]
    Vector expected = f(g.bracket(h(x), y)) - f(g.bracket(h(y), x)) + h(g.bracket(f(x), y)) -
                      h(g.bracket(f(y), x)) - g.bracket(f(x), h(y)) + g.bracket(f(y), h(x));
    CHECK(fh.eval({x, y}) == expected);
  }
}

TEST_CASE("bracket of the identity with itself is twice the Lie bracket") {
  for (const auto &c : {catalog("sl-borel", 2), catalog("sl-borel", 3), catalog("heisenberg")}) {
    const Cochain id = Cochain::from_endo(Endo::identity(c.algebra));
    CHECK(graded_bracket(id, id) == Rational(2) * Cochain::bracket_cochain(c.algebra));
  }
}

TEST_CASE("bracket of R with itself") {
  const auto c = catalog("sl-borel", 2);
  const Endo &r = c.r_matrix;
  const Cochain rr = graded_bracket(Cochain::from_endo(r), Cochain::from_endo(r));
  std::mt19937 rng(62);
  for (int trial = 0; trial < 10; ++trial) {
    const Vector x = oracle::random_vector(rng, 3), y = oracle::random_vector(rng, 3);
    const Vector expected = Rational(2) * (r(c.algebra.bracket(r(x), y)) -
                                           r(c.algebra.bracket(r(y), x)) -
                                           c.algebra.bracket(r(x), r(y)));
    CHECK(rr.eval({x, y}) == expected);
  }
  CHECK(rr == Rational(2) * Cochain::bracket_cochain(c.algebra));
}

TEST_CASE("Maurer-Cartan tests") {
  const auto c = catalog("sl-borel", 2);
  CHECK(is_maurer_cartan_weight0(Endo::zero(c.algebra)));
  CHECK(satisfies_mc_modified(c.r_matrix));
  CHECK_FALSE(is_maurer_cartan_weight0(c.r_matrix));
  const Endo bad = diag(c.algebra, {2, -1, 1});
  CHECK_FALSE(satisfies_mc_modified(bad));
  CHECK_FALSE(mcybe_defect(bad).is_zero);
}

TEST_CASE("d_R on R and on arbitrary cochains") {
  const auto c = catalog("sl-borel", 2);
  const Cochain r = Cochain::from_endo(c.r_matrix);
  CHECK(d_R(c.r_matrix, r) == Rational(2) * Cochain::bracket_cochain(c.algebra));
  std::mt19937 rng(63);
  for (std::size_t k = 0; k <= 2; ++k) {
    const Cochain f = oracle::random_cochain(rng, c.algebra, k);
    CHECK(d_R(c.r_matrix, d_R(c.r_matrix, f)).is_zero());
    CHECK(coboundary(c.r_matrix, f) == sgn(k) * d_R(c.r_matrix, f));
  }
}

TEST_CASE("graded antisymmetry and Jacobi") {
  std::mt19937 rng(64);
  const std::vector<LieAlgebra> algebras{catalog("sl-borel", 2).algebra, catalog("heisenberg").algebra,
                                         catalog("affine").algebra};
  for (const auto &g : algebras)
    for (std::size_t p = 0; p <= 2; ++p)
      for (std::size_t q = 0; q <= 2; ++q) {
        const Cochain f = oracle::random_cochain(rng, g, p);
        const Cochain h = oracle::random_cochain(rng, g, q);
        CHECK(graded_bracket(f, h) == -sgn(p * q) * graded_bracket(h, f));
        for (std::size_t r = 0; r <= 1; ++r) {
          const Cochain k = oracle::random_cochain(rng, g, r);
          Cochain sum = sgn(p * r) * graded_bracket(f, graded_bracket(h, k));
          sum += sgn(p * q) * graded_bracket(h, graded_bracket(k, f));
          sum += sgn(q * r) * graded_bracket(k, graded_bracket(f, h));
          CHECK(sum.is_zero());
        }
      }
}

TEST_CASE("twice the Lie bracket is central") {
  std::mt19937 rng(65);
  const auto c = catalog("sl-borel", 2);
  const Cochain two_pi = Rational(2) * Cochain::bracket_cochain(c.algebra);
  for (std::size_t k = 0; k <= 1; ++k)
    CHECK(graded_bracket(two_pi, oracle::random_cochain(rng, c.algebra, k)).is_zero());
}

TEST_CASE("Maurer-Cartan deformations") {
  const auto c = catalog("sl-borel", 2);
  const Endo id = Endo::identity(c.algebra);
  auto v = mc_deformation_check(c.r_matrix, Endo::zero(c.algebra));
  CHECK(v.maurer_cartan);
  CHECK(v.agree());
  v = mc_deformation_check(id, c.r_matrix - id);
  CHECK(v.maurer_cartan);
  CHECK(v.agree());
  v = mc_deformation_check(c.r_matrix, c.r_matrix);
  CHECK_FALSE(v.maurer_cartan);
  CHECK_FALSE(v.defect_zero);
  CHECK_THROWS_AS(mc_deformation_check(diag(c.algebra, {2, -1, 1}), id), PreconditionError);

  std::mt19937 rng(66);
  for (int trial = 0; trial < 10; ++trial)
    CHECK(mc_deformation_check(c.r_matrix, oracle::random_endo(rng, c.algebra)).agree());
}

TEST_CASE("Kuranishi map on sl(2)") {
  const auto c = catalog("sl-borel", 2);
  const auto zero = kuranishi(c.r_matrix, Endo::zero(c.algebra));
  CHECK(zero.ff.is_zero());
  CHECK(zero.is_cocycle);
  CHECK(zero.vanishes_in_h3);

  const auto rep = cohomology(c.r_matrix, {2, true});
  REQUIRE(rep.at(2).cocycle_basis.size() == 4);
  for (const auto &z : rep.at(2).cocycle_basis) {
    const auto k = kuranishi(c.r_matrix, z.to_endo());
    CHECK(k.is_cocycle);
    if (k.witness)
      CHECK(coboundary(c.r_matrix, *k.witness) == k.ff);
  }
  const Endo not_closed = diag(c.algebra, {1, 0, 0});
  REQUIRE_FALSE(is_cocycle(c.r_matrix, Cochain::from_endo(not_closed)));
  CHECK_THROWS_AS(kuranishi(c.r_matrix, not_closed), PreconditionError);
}
