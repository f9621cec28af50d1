#include <random>

#include "doctest.h"
#include "ehalg/fixtures.hpp"

using namespace ehalg;

namespace {

InverseSemigroup brandt() { return fix_brandt().semigroup(); }

// Symmetric inverse monoid on {0,1}: all partial bijections, composed as maps.
InverseSemigroup symmetric_inverse_2() {
  std::vector<PartialBijection> elems;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      std::vector<std::size_t> img = {a == 2 ? npos : a, b == 2 ? npos : b};
      if (img[0] != npos && img[0] == img[1]) continue;
      elems.emplace_back(img);
    }
  std::size_t n = elems.size();
  auto index = [&](const PartialBijection& p) {
    for (std::size_t i = 0; i < n; ++i)
      if (elems[i] == p) return i;
    return npos;
  };
  std::vector<std::size_t> mult(n * n), star(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mult[i * n + j] = index(elems[i].compose(elems[j]));
    star[i] = index(elems[i].inverse());
  }
  return InverseSemigroup(n, mult, star);
}

}  // namespace

TEST_CASE("validate examples") {
  CHECK(cyclic_group(2).validate().ok);
  CHECK(brandt().validate().ok);
  CHECK(symmetric_inverse_2().size() == 7);
  CHECK(symmetric_inverse_2().validate().ok);

  InverseSemigroup bad(2, {0, 1, 1, 0}, {0, 0}, {"1", "g"});
  auto r = bad.validate();
  CHECK_FALSE(r.ok);
  CHECK(r.axiom == "involution");
  REQUIRE(r.witness.size() == 1);
  CHECK(bad.name(r.witness[0]) == "g");
}

TEST_CASE("validate reports associativity and commuting idempotents") {
  // Rectangular band on pairs (i,j), (i,j)(k,l) = (i,l), star swaps the pair.
  // Every other axiom holds, but (0,0)(1,1) = (0,1) while (1,1)(0,0) = (1,0).
  std::vector<std::size_t> mult(16);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) mult[a * 4 + b] = (a & 2) | (b & 1);
  InverseSemigroup band(4, mult, {0, 2, 1, 3});
  auto r = band.validate();
  CHECK_FALSE(r.ok);
  CHECK(r.axiom == "idempotents commute");

  InverseSemigroup nonassoc(2, {1, 0, 0, 0}, {0, 1}, {"a", "b"});
  auto n = nonassoc.validate();
  CHECK_FALSE(n.ok);
  CHECK(n.axiom == "associativity");
  CHECK(n.witness.size() == 3);
}

TEST_CASE("idempotents") {
  CHECK(cyclic_group(3).idempotents() == std::vector<std::size_t>{0});
  CHECK(brandt().idempotents() == std::vector<std::size_t>{0, 1, 2});
  CHECK(fix_semilat().semigroup().idempotents() == std::vector<std::size_t>{0, 1});
}

TEST_CASE("natural partial order") {
  auto b = brandt();
  const std::size_t zero = 0, e = 1, s = 3;
  CHECK(b.leq(s, s));
  CHECK(b.leq(zero, s));
  CHECK_FALSE(b.leq(s, e));
  CHECK(b.leq(zero, e));
  CHECK_FALSE(cyclic_group(2).leq(1, 0));
}

TEST_CASE("order axioms and idempotent semilattice on all fixtures") {
  std::vector<InverseSemigroup> all = {symmetric_inverse_2(), cyclic_group(3)};
  for (const auto& fx : all_fixtures()) all.push_back(fx.system.semigroup());
  for (const auto& s : all) {
    std::size_t n = s.size();
    auto e = s.idempotents();
    CHECK_FALSE(e.empty());
    for (std::size_t a = 0; a < n; ++a) {
      CHECK(s.is_idempotent(s.mul(a, s.star(a))));
      CHECK(s.is_idempotent(s.mul(s.star(a), a)));
      CHECK(s.leq(a, a));
      for (std::size_t b = 0; b < n; ++b) {
        // Independent form of the order: a = (a a*) b.
        bool alt = s.mul(s.mul(a, s.star(a)), b) == a;
        CHECK(s.leq(a, b) == alt);
        if (s.leq(a, b)) CHECK(s.leq(s.star(a), s.star(b)));
        if (s.leq(a, b) && s.leq(b, a)) CHECK(a == b);
        for (std::size_t c = 0; c < n; ++c)
          if (s.leq(a, b) && s.leq(b, c)) CHECK(s.leq(a, c));
      }
    }
    for (auto x : e)
      for (auto y : e) {
        CHECK(s.mul(x, y) == s.mul(y, x));
        CHECK(s.is_idempotent(s.mul(x, y)));
      }
  }
}

TEST_CASE("unitize") {
  InverseSemigroup one(1, {0}, {0}, {"e"});
  auto u = one.unitize();
  CHECK(u.size() == 2);
  CHECK(u.validate().ok);
  CHECK(u.leq(0, 1));
  CHECK(u.name(1) == "1");

  auto ub = brandt().unitize();
  CHECK(ub.size() == 6);
  CHECK(ub.validate().ok);
  // The adjoined unit sits above exactly the idempotents.
  for (std::size_t s = 0; s < 6; ++s) CHECK(ub.leq(s, 5) == ub.is_idempotent(s));
  for (std::size_t s = 0; s < 6; ++s) CHECK_FALSE((s != 5 && ub.leq(5, s)));

  auto uz = cyclic_group(2).unitize();
  CHECK(uz.size() == 3);
  CHECK(uz.validate().ok);
  CHECK(uz.name(2) == "1+");
  CHECK(uz.idempotents() == std::vector<std::size_t>{0, 2});
}

TEST_CASE("random Rees-matrix style Brandt semigroups validate") {
  // B_n: pairs (i,j) plus zero, (i,j)(k,l) = (i,l) if j == k.
  std::mt19937 rng(11);
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t size = n * n + 1;
    std::vector<std::size_t> mult(size * size, 0), star(size, 0);
    auto idx = [&](std::size_t i, std::size_t j) { return 1 + i * n + j; };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        star[idx(i, j)] = idx(j, i);
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) mult[idx(i, j) * size + idx(k, l)] = j == k ? idx(i, l) : 0;
      }
    InverseSemigroup b(size, mult, star);
    CHECK(b.validate().ok);
    CHECK(b.idempotents().size() == n + 1);
    // Swapping one product entry breaks some axiom.
    auto broken = mult;
    std::size_t a = 1 + rng() % (size - 1);
    broken[a * size + a] = broken[a * size + a] == 0 ? a : 0;
    CHECK_FALSE(InverseSemigroup(size, broken, star).validate().ok);
  }
}
