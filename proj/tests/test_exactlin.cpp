#include <algorithm>
#include <memory>
#include <random>

#include "doctest.h"
#include "ehalg/algebra.hpp"
#include "ehalg/error.hpp"
#include "test_support.hpp"

using namespace ehalg;
using testing_support::f2_elements;
using testing_support::from_mask;
using testing_support::ints;
using testing_support::random_vec;
using testing_support::to_mask;

namespace {

FiniteAlgebra f2_z2(const Field& f) { return group_algebra(f, {"1", "g"}, {0, 1, 1, 0}); }

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937& rng) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < r; ++i) rows.push_back(random_vec(f, c, rng));
  return Matrix::from_rows(f, c, rows);
}

// Ideals of a small F_2 algebra by brute force over all subsets of F_2^n.
std::vector<std::set<std::uint32_t>> brute_force_ideals(const FiniteAlgebra& a) {
  const Field& f = a.field();
  std::size_t n = a.dim();
  std::uint32_t points = 1u << n;
  std::vector<std::uint32_t> left(n * points), right(n * points);
  for (std::size_t i = 0; i < n; ++i)
    for (std::uint32_t m = 0; m < points; ++m) {
      Vec v = from_mask(f, n, m);
      left[i * points + m] = to_mask(a.multiply(a.basis_vector(i), v));
      right[i * points + m] = to_mask(a.multiply(v, a.basis_vector(i)));
    }
  std::vector<std::set<std::uint32_t>> out;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << points); ++subset) {
    if (!(subset & 1)) continue;  // must contain 0
    auto has = [&](std::uint32_t m) { return (subset >> m) & 1; };
    bool ok = true;
    for (std::uint32_t x = 0; x < points && ok; ++x) {
      if (!has(x)) continue;
      for (std::uint32_t y = 0; y < points && ok; ++y)
        if (has(y) && !has(x ^ y)) ok = false;
      for (std::size_t i = 0; i < n && ok; ++i)
        if (!has(left[i * points + x]) || !has(right[i * points + x])) ok = false;
    }
    if (!ok) continue;
    std::set<std::uint32_t> s;
    for (std::uint32_t m = 0; m < points; ++m)
      if (has(m)) s.insert(m);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("field arithmetic") {
  Field f5 = Field::prime(5);
  CHECK(f5.mul(f5.from_int(3), f5.inv(f5.from_int(3))) == f5.one());
  CHECK(f5.from_int(-1) == f5.from_int(4));
  CHECK(f5.from_fraction(1, 2) == f5.from_int(3));
  Field q = Field::rationals();
  CHECK(q.format(q.from_fraction(6, -4), true) == "-3/2");
  CHECK(q.format(q.from_int(2), true) == "2/1");
  CHECK(q.add(q.from_fraction(1, 3), q.from_fraction(2, 3)) == q.one());
  CHECK(Field::parse("GF(7)") == Field::prime(7));
  CHECK(Field::parse("F 3") == Field::prime(3));
  CHECK(Field::parse("Q") == q);
  CHECK_THROWS_AS(Field::prime(4), Error);
  CHECK_THROWS_AS(Field::parse("R"), Error);
  CHECK_THROWS_AS(q.inv(q.zero()), Error);
}

TEST_CASE("rref examples") {
  Field f2 = Field::prime(2);
  auto id = rref(Matrix::identity(f2, 2));
  CHECK(id.rank == 2);
  CHECK(id.reduced == Matrix::identity(f2, 2));

  Field f3 = Field::prime(3);
  auto z = rref(Matrix(f3, 3, 3));
  CHECK(z.rank == 0);
  CHECK(z.reduced.rows() == 0);
  CHECK(z.reduced.cols() == 3);

  // Hand elimination: subtract row 1 from row 2.
  auto ones = rref(Matrix::from_rows(f2, 2, {ints(f2, {1, 1}), ints(f2, {1, 1})}));
  CHECK(ones.rank == 1);
  CHECK(ones.reduced == Matrix::from_rows(f2, 2, {ints(f2, {1, 1})}));

  // Over Q: [[2,4],[1,3]] has full rank; [[2,4],[1,2]] reduces to [[1,2]].
  Field q = Field::rationals();
  CHECK(rref(Matrix::from_rows(q, 2, {ints(q, {2, 4}), ints(q, {1, 3})})).rank == 2);
  CHECK(rref(Matrix::from_rows(q, 2, {ints(q, {2, 4}), ints(q, {1, 2})})).reduced ==
        Matrix::from_rows(q, 2, {ints(q, {1, 2})}));
}

TEST_CASE("rref is canonical and idempotent on random matrices") {
  std::mt19937 rng(20261015);
  for (Field f : {Field::prime(2), Field::prime(3), Field::rationals()}) {
    for (int trial = 0; trial < 40; ++trial) {
      Matrix m = random_matrix(f, 1 + rng() % 5, 1 + rng() % 5, rng);
      auto e = rref(m);
      CHECK(rref(e.reduced).reduced == e.reduced);
      // Row operations do not change the canonical form.
      Matrix shuffled = m;
      if (m.rows() > 1) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          shuffled.at(0, j) = f.add(m.at(0, j), f.mul(f.from_int(2), m.at(1, j)));
          shuffled.at(1, j) = m.at(0, j);
        }
        // rows 0,1 replaced by r0 + 2 r1 and r0: same row space unless 2 = 0.
        if (f.characteristic() != 2) CHECK(rref(shuffled).reduced == e.reduced);
      }
      CHECK(rank(m) == rank(m.transpose()));
    }
  }
}

TEST_CASE("nullspace, solve and inverse") {
  std::mt19937 rng(7);
  for (Field f : {Field::prime(3), Field::rationals()}) {
    for (int trial = 0; trial < 30; ++trial) {
      Matrix m = random_matrix(f, 1 + rng() % 4, 1 + rng() % 5, rng);
      Matrix ns = nullspace_basis(m);
      CHECK(ns.rows() + rank(m) == m.cols());
      for (std::size_t i = 0; i < ns.rows(); ++i) CHECK(vec_is_zero(f, m.apply(ns.row_vec(i))));
      Vec x = random_vec(f, m.cols(), rng);
      Vec b = m.apply(x);
      auto sol = solve(m, b);
      REQUIRE(sol.has_value());
      CHECK(m.apply(*sol) == b);
      if (m.rows() == m.cols()) {
        auto inv = inverse(m);
        CHECK(inv.has_value() == (rank(m) == m.rows()));
        if (inv) CHECK(*inv * m == Matrix::identity(f, m.rows()));
      }
    }
  }
  Field f2 = Field::prime(2);
  Matrix m = Matrix::from_rows(f2, 2, {ints(f2, {1, 1}), ints(f2, {1, 1})});
  CHECK_FALSE(solve(m, ints(f2, {1, 0})).has_value());
}

TEST_CASE("sum and intersection examples") {
  Field f2 = Field::prime(2);
  auto e1 = Subspace::span(f2, 2, {ints(f2, {1, 0})});
  auto e2 = Subspace::span(f2, 2, {ints(f2, {0, 1})});
  CHECK(subspace_sum(e1, e2) == Subspace::full(f2, 2));
  CHECK(subspace_intersect(e1, e2) == Subspace::zero(f2, 2));
  CHECK(subspace_sum(e1, e1) == e1);
  CHECK(subspace_intersect(e1, e1) == e1);

  auto a = Subspace::span(f2, 3, {ints(f2, {1, 1, 0})});
  auto b = Subspace::span(f2, 3, {ints(f2, {0, 1, 1})});
  CHECK(subspace_intersect(a, b).dim() == 0);
  CHECK(subspace_sum(a, b).dim() == 2);
  CHECK_THROWS_AS(subspace_sum(a, e1), Error);
}

TEST_CASE("intersection matches brute force over F_2^3") {
  Field f2 = Field::prime(2);
  std::vector<Subspace> all;
  for (std::uint32_t g1 = 0; g1 < 8; ++g1)
    for (std::uint32_t g2 = g1; g2 < 8; ++g2)
      all.push_back(Subspace::span(f2, 3, {from_mask(f2, 3, g1), from_mask(f2, 3, g2)}));
  for (const auto& a : all)
    for (const auto& b : all) {
      auto ea = f2_elements(a), eb = f2_elements(b);
      std::set<std::uint32_t> meet;
      for (auto x : ea)
        if (eb.count(x)) meet.insert(x);
      auto inter = subspace_intersect(a, b);
      CHECK(f2_elements(inter) == meet);
      CHECK(a.dim() + b.dim() == subspace_sum(a, b).dim() + inter.dim());
      bool subset = std::includes(eb.begin(), eb.end(), ea.begin(), ea.end());
      CHECK(a.is_subset_of(b) == subset);
    }
}

TEST_CASE("modular law on random subspaces") {
  std::mt19937 rng(99);
  for (Field f : {Field::prime(3), Field::rationals()}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t n = 2 + rng() % 4;
      std::vector<Vec> ga, gb;
      for (std::size_t k = rng() % 4; k > 0; --k) ga.push_back(random_vec(f, n, rng, -1, 1));
      for (std::size_t k = rng() % 4; k > 0; --k) gb.push_back(random_vec(f, n, rng, -1, 1));
      auto a = Subspace::span(f, n, ga), b = Subspace::span(f, n, gb);
      auto inter = subspace_intersect(a, b);
      CHECK(a.dim() + b.dim() == subspace_sum(a, b).dim() + inter.dim());
      for (const auto& v : inter.basis_vectors()) CHECK((a.contains(v) && b.contains(v)));
      for (const auto& v : ga) CHECK(a.contains(v));
    }
  }
}

TEST_CASE("ideal generation examples") {
  Field f2 = Field::prime(2);
  auto z2 = f2_z2(f2);
  CHECK(ideal_generate(z2, {}).dim() == 0);
  auto aug = ideal_generate(z2, {ints(f2, {1, 1})});
  CHECK(aug == Subspace::span(f2, 2, {ints(f2, {1, 1})}));

  auto m2 = matrix_algebra(f2, 2);
  CHECK(ideal_generate(m2, {m2.basis_vector(0)}) == Subspace::full(f2, 4));
  CHECK(is_ideal(m2, Subspace::zero(f2, 4)));
  CHECK(is_ideal(m2, Subspace::full(f2, 4)));
  CHECK_FALSE(is_ideal(m2, Subspace::span(f2, 4, {m2.basis_vector(0)})));
}

TEST_CASE("generated ideal is minimal") {
  // Over F_3[Z/3] every ideal containing the generator contains the generated ideal.
  Field f3 = Field::prime(3);
  auto a = group_algebra(f3, {"1", "g", "g2"}, {0, 1, 2, 1, 2, 0, 2, 0, 1});
  std::mt19937 rng(5);
  auto ideals = enumerate_ideals(a, 6);
  for (int trial = 0; trial < 20; ++trial) {
    Vec g = random_vec(f3, 3, rng);
    auto j = ideal_generate(a, {g});
    CHECK(is_ideal(a, j));
    CHECK(j.contains(g));
    for (const auto& i : ideals)
      if (i.contains(g)) CHECK(j.is_subset_of(i));
  }
}

TEST_CASE("associativity check rejects a corrupted table") {
  Field f2 = Field::prime(2);
  auto m2 = matrix_algebra(f2, 2);
  CHECK_FALSE(m2.find_associativity_violation().has_value());
  std::vector<SparseVec> table;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) table.push_back(m2.basis_product(i, j));
  table[0 * 4 + 0] = {{1, f2.one()}};  // e11 e11 = e12
  FiniteAlgebra bad(f2, m2.labels(), table);
  CHECK(bad.find_associativity_violation().has_value());
  CHECK_THROWS_AS(FiniteAlgebra::checked(f2, m2.labels(), table), Error);
}

TEST_CASE("left regular representation modulo an ideal") {
  Field f2 = Field::prime(2);
  auto z2 = std::make_shared<const FiniteAlgebra>(f2_z2(f2));
  auto full = left_regular_mod(z2, Subspace::full(f2, 2));
  CHECK(full.dim() == 0);
  CHECK(kernel(full) == Subspace::full(f2, 2));

  auto reg = left_regular_mod(z2, Subspace::zero(f2, 2));
  CHECK(reg.dim() == 2);
  CHECK(kernel(reg).dim() == 0);
  CHECK(reg.is_nondegenerate());

  auto aug = Subspace::span(f2, 2, {ints(f2, {1, 1})});
  auto q = left_regular_mod(z2, aug);
  CHECK(q.dim() == 1);
  CHECK(kernel(q) == aug);
  CHECK_THROWS_AS(left_regular_mod(z2, Subspace::span(f2, 2, {ints(f2, {1, 0})})), Error);
}

TEST_CASE("enumerate_ideals examples") {
  Field f2 = Field::prime(2);
  auto k = group_algebra(f2, {"1"}, {0});
  CHECK(enumerate_ideals(k, 6).size() == 2);
  auto z2 = enumerate_ideals(f2_z2(f2), 6);
  REQUIRE(z2.size() == 3);
  CHECK(z2[1] == Subspace::span(f2, 2, {ints(f2, {1, 1})}));
  CHECK(enumerate_ideals(matrix_algebra(f2, 2), 6).size() == 2);
  CHECK_THROWS_AS(enumerate_ideals(matrix_algebra(f2, 3), 6), Error);
  CHECK_THROWS_AS(enumerate_ideals(f2_z2(Field::rationals()), 6), Error);
}

TEST_CASE("enumerate_ideals agrees with subset brute force") {
  Field f2 = Field::prime(2);
  // Upper triangular 2x2 matrices: basis e11, e12, e22.
  std::vector<SparseVec> tri(9);
  tri[0 * 3 + 0] = {{0, f2.one()}};
  tri[0 * 3 + 1] = {{1, f2.one()}};
  tri[1 * 3 + 2] = {{1, f2.one()}};
  tri[2 * 3 + 2] = {{2, f2.one()}};
  std::vector<FiniteAlgebra> algebras = {
      f2_z2(f2),
      matrix_algebra(f2, 2),
      FiniteAlgebra::checked(f2, {"e11", "e12", "e22"}, tri),
      group_algebra(f2, {"1", "a", "b", "ab"}, {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0}),
  };
  for (const auto& a : algebras) {
    auto found = enumerate_ideals(a, 6);
    auto oracle = brute_force_ideals(a);
    std::set<std::set<std::uint32_t>> found_sets, oracle_sets(oracle.begin(), oracle.end());
    for (const auto& i : found) found_sets.insert(f2_elements(i));
    CHECK(found.size() == oracle.size());
    CHECK(found_sets == oracle_sets);
  }
}
