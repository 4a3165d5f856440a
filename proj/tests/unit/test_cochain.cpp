#include "modr/cochain.hpp"
#include "modr/combinatorics.hpp"
#include "modr/errors.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace modr;

TEST_CASE("lex subsets and their ranks") {
  const auto &s = lex_subsets(4, 2);
  REQUIRE(s.size() == 6);
  CHECK(s[0] == std::vector<std::size_t>{0, 1});
  CHECK(s[5] == std::vector<std::size_t>{2, 3});
  for (std::size_t n = 0; n <= 7; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      const auto &all = lex_subsets(n, k);
      CHECK(all.size() == binomial(n, k));
      for (std::size_t r = 0; r < all.size(); ++r)
        CHECK(subset_rank(n, all[r]) == r);
    }
  CHECK(lex_subsets(3, 4).empty());
}

TEST_CASE("sorting and insertion signs") {
  std::vector<std::size_t> a{2, 0, 1};
  CHECK(sort_with_sign(a) == 1);
  CHECK(a == std::vector<std::size_t>{0, 1, 2});
  std::vector<std::size_t> b{1, 0};
  CHECK(sort_with_sign(b) == -1);
  std::vector<std::size_t> c{3, 1, 3};
  CHECK(sort_with_sign(c) == 0);
  const std::vector<std::size_t> t{1, 4};
  const auto ins = insert_sorted(t, 2);
  REQUIRE(ins);
  CHECK(ins->first == -1);
  CHECK(ins->second == std::vector<std::size_t>{1, 2, 4});
  CHECK_FALSE(insert_sorted(t, 4));
}

TEST_CASE("shuffles are order preserving with permutation signs") {
  const auto &s = shuffles({1, 2});
  REQUIRE(s.size() == 3);
  CHECK(s[0].perm == std::vector<std::size_t>{0, 1, 2});
  CHECK(s[0].sign == 1);
  CHECK(s[1].perm == std::vector<std::size_t>{1, 0, 2});
  CHECK(s[1].sign == -1);
  CHECK(s[2].perm == std::vector<std::size_t>{2, 0, 1});
  CHECK(s[2].sign == 1);
  CHECK(shuffles({2, 1, 1}).size() == 12);
  CHECK(shuffles({2, -1}).empty());
  CHECK(shuffles({0, 0}).size() == 1);
  for (const auto &sh : shuffles({2, 1, 2})) {
    CHECK(sh.perm[0] < sh.perm[1]);
    CHECK(sh.perm[3] < sh.perm[4]);
    CHECK(sh.sign == oracle::inversion_sign(sh.perm));
  }
}

TEST_CASE("cochain space dimensions") {
  CHECK(cochain_space_dim(15, 2) == 105 * 15);
  CHECK(cochain_space_dim(3, 0) == 3);
  CHECK(cochain_space_dim(3, 4) == 0);
  const LieAlgebra g = special_linear(3);
  for (std::size_t k = 0; k <= 4; ++k)
    CHECK(Cochain(g, k).size() == binomial(8, k) * 8);
}

TEST_CASE("the bracket as an arity 2 cochain") {
  const LieAlgebra g = catalog("sl-borel", 2).algebra;
  const Cochain pi = Cochain::bracket_cochain(g);
  CHECK(pi.eval({Vector::basis(3, 0), Vector::basis(3, 1)}) == Vector::basis(3, 2));
  std::mt19937 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const Vector x = oracle::random_vector(rng, 3), y = oracle::random_vector(rng, 3);
    CHECK(pi.eval({x, y}) == g.bracket(x, y));
  }
}

TEST_CASE("evaluation is alternating and multilinear") {
  const LieAlgebra g = special_linear(3);
  std::mt19937 rng(32);
  for (std::size_t k = 1; k <= 3; ++k) {
    const Cochain f = oracle::random_cochain(rng, g, k);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Vector> args;
      for (std::size_t i = 0; i < k; ++i)
        args.push_back(oracle::random_vector(rng, 8));
      const Vector base = f.eval(args);
      if (k >= 2) {
        auto swapped = args;
        std::swap(swapped[0], swapped[k - 1]);
        CHECK(f.eval(swapped) == -base);
        auto repeated = args;
        repeated[k - 1] = repeated[0];
        CHECK(f.eval(repeated).is_zero());
      }
      const Vector extra = oracle::random_vector(rng, 8);
      const Rational s = oracle::small_rational(rng);
      auto combo = args;
      combo[0] = args[0] + s * extra;
      auto other = args;
      other[0] = extra;
      CHECK(f.eval(combo) == base + s * f.eval(other));
    }
    // Sorted basis tuples return stored values.
    const auto &tuples = lex_subsets(8, k);
    for (std::size_t r = 0; r < tuples.size(); r += 7) {
      std::vector<Vector> args;
      for (std::size_t i : tuples[r])
        args.push_back(Vector::basis(8, i));
      CHECK(f.eval(args) == f.value(r));
      CHECK(f.eval_basis(tuples[r]) == f.value(r));
    }
  }
}

TEST_CASE("conversions between cochains, maps and elements") {
  std::mt19937 rng(33);
  const LieAlgebra g = special_linear(3);
  const Endo r = oracle::random_endo(rng, g);
  const Cochain c = Cochain::from_endo(r);
  CHECK(c.arity() == 1);
  CHECK(c.degree() == 2);
  CHECK(c.to_endo() == r);
  const Vector x = oracle::random_vector(rng, 8);
  CHECK(c.eval({x}) == r(x));
  CHECK(Cochain::from_vector(g, x).to_vector() == x);
  CHECK_THROWS_AS(c.to_vector(), InputError);
  CHECK_THROWS_AS(Cochain(g, 2).to_endo(), InputError);
  CHECK_THROWS_AS(c.eval({x, x}), InputError);
  CHECK_THROWS_AS(Cochain(g, 1, std::vector<Rational>(5)), InputError);
}
