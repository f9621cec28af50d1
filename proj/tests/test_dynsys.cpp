#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "ehalg/fixtures.hpp"

using namespace ehalg;

namespace {

// Germ classes straight from the definition: (s,x) ~ (t,x) iff se = te for
// some idempotent e with x in X_e. Returns the number of classes.
std::size_t count_germs_by_definition(const AmpleSystem& sys) {
  const auto& s = sys.semigroup();
  std::size_t classes = 0;
  for (std::size_t x = 0; x < sys.space_size(); ++x) {
    std::vector<std::size_t> elems;
    for (std::size_t a = 0; a < s.size(); ++a)
      if (sys.in_domain(a, x)) elems.push_back(a);
    std::vector<int> cls(elems.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (cls[i] >= 0) continue;
      cls[i] = next;
      for (std::size_t j = i + 1; j < elems.size(); ++j)
        for (auto e : s.idempotents())
          if (sys.in_domain(e, x) && s.mul(elems[i], e) == s.mul(elems[j], e)) cls[j] = next;
      ++next;
    }
    classes += static_cast<std::size_t>(next);
  }
  return classes;
}

SystemSpec flip_with_short_domain() {
  return SystemSpec{cyclic_group(2), {"a", "b"}, {PartialBijection::identity(2), PartialBijection({1, npos})}};
}

}  // namespace

TEST_CASE("partial bijections") {
  PartialBijection p({1, npos, 0});
  CHECK(p.domain() == std::vector<std::size_t>{0, 2});
  CHECK(p.range() == std::vector<std::size_t>{0, 1});
  CHECK(p.inverse().inverse() == p);
  CHECK(p.compose(p.inverse()) == PartialBijection::identity_on(3, {0, 1}));
  CHECK(p.compose(p) == PartialBijection({npos, npos, 1}));
  CHECK_THROWS_AS(PartialBijection({0, 0}), Error);
}

TEST_CASE("validate_system examples") {
  CHECK(validate_system(fix_triv().spec()).ok);
  CHECK(validate_system(fix_flip().spec()).ok);
  auto r = validate_system(flip_with_short_domain());
  CHECK_FALSE(r.ok);
  CHECK(r.axiom == "composition");
  REQUIRE(r.witness.size() == 3);
  CHECK(r.witness[0] == 1);
  CHECK(r.witness[1] == 1);
  CHECK_THROWS_AS(AmpleSystem{flip_with_short_domain()}, Error);

  SystemSpec uncovered{InverseSemigroup(1, {0}, {0}, {"e"}), {"x", "y"}, {PartialBijection::identity_on(2, {0})}};
  auto c = validate_system(uncovered);
  CHECK_FALSE(c.ok);
  CHECK(c.axiom == "covering");
}

TEST_CASE("germ_of examples") {
  auto semilat = fix_semilat();
  std::size_t x = semilat.find_point("x"), y = semilat.find_point("y");
  CHECK(semilat.germ_of(0, x) == semilat.germ_of(1, x));
  CHECK(semilat.L(y).size() == 1);
  CHECK(semilat.L(y)[0] == Germ{0, y});
  CHECK_THROWS_AS(semilat.germ_of(1, y), Error);

  auto flip = fix_flip();
  CHECK_FALSE(flip.germ_of(0, 0) == flip.germ_of(1, 0));
}

TEST_CASE("L, G and orbits") {
  auto flip = fix_flip();
  CHECK(flip.L(0).size() == 2);
  CHECK(flip.G(0).size() == 1);
  CHECK(flip.orbit(0) == std::vector<std::size_t>{0, 1});
  CHECK(flip.orbit_representatives() == std::vector<std::size_t>{0});

  auto z2 = fix_z2fix();
  CHECK(z2.G(0).size() == 2);
  CHECK(z2.orbit(0) == std::vector<std::size_t>{0});

  auto b = fix_brandt();
  std::size_t a = b.find_point("a");
  auto la = b.L(a);
  REQUIRE(la.size() == 2);
  CHECK(la[0] == Germ{2, a});  // [f,a]
  CHECK(la[1] == Germ{3, a});  // [s,a]
  CHECK(b.G(a).size() == 1);
  CHECK(b.orbit(a) == std::vector<std::size_t>{0, 1});

  CHECK(fix_triv().orbit_representatives() == std::vector<std::size_t>{0});
  CHECK(fix_semilat().orbit_representatives() == std::vector<std::size_t>{0, 1});
  CHECK(fix_swapfix().orbit_representatives() == std::vector<std::size_t>{0, 2});
}

TEST_CASE("isotropy group algebras") {
  Field f2 = Field::prime(2);
  CHECK(isotropy_group_algebra(fix_flip(), 0, f2).dim() == 1);
  auto kz = isotropy_group_algebra(fix_z2fix(), 0, f2);
  CHECK(kz.dim() == 2);
  CHECK(enumerate_ideals(kz, 6).size() == 3);
  // Over Q the group algebra of Z/2 splits: (1+g)/2 is a central idempotent.
  Field q = Field::rationals();
  auto kq = isotropy_group_algebra(fix_z2fix(), 0, q);
  Vec p = {q.from_fraction(1, 2), q.from_fraction(1, 2)};
  CHECK(kq.multiply(p, p) == p);
}

TEST_CASE("germ classes agree with the definition on all fixtures") {
  for (const auto& fx : all_fixtures()) {
    const auto& sys = fx.system;
    CAPTURE(fx.name);
    CHECK(sys.germs().size() == count_germs_by_definition(sys));
    for (std::size_t x = 0; x < sys.space_size(); ++x)
      for (std::size_t s = 0; s < sys.semigroup().size(); ++s)
        for (std::size_t t = 0; t < sys.semigroup().size(); ++t) {
          if (!sys.in_domain(s, x) || !sys.in_domain(t, x)) continue;
          CHECK((sys.germ_of(s, x) == sys.germ_of(t, x)) == sys.germ_equivalent(s, t, x));
          // The canonical representative is the smallest equivalent index.
          if (sys.germ_equivalent(s, t, x)) CHECK(sys.germ_of(s, x).elem <= std::min(s, t));
        }
  }
}

TEST_CASE("hereditariness along the natural order") {
  for (const auto& fx : all_fixtures()) {
    const auto& sys = fx.system;
    const auto& S = sys.semigroup();
    for (std::size_t s = 0; s < S.size(); ++s)
      for (std::size_t t = 0; t < S.size(); ++t) {
        if (!S.leq(s, t)) continue;
        for (std::size_t x = 0; x < sys.space_size(); ++x) {
          if (!sys.in_domain(s, x)) continue;
          CHECK(sys.in_domain(t, x));
          CHECK(sys.germ_of(s, x) == sys.germ_of(t, x));
          CHECK(sys.apply(s, x) == sys.apply(t, x));
        }
      }
  }
}

TEST_CASE("germ composition is well defined and isotropy is a group") {
  for (const auto& fx : all_fixtures()) {
    const auto& sys = fx.system;
    const auto& S = sys.semigroup();
    // [t, s(x)] [s, x] = [ts, x] for every pair of representatives.
    for (std::size_t x = 0; x < sys.space_size(); ++x)
      for (std::size_t s = 0; s < S.size(); ++s) {
        if (!sys.in_domain(s, x)) continue;
        std::size_t y = sys.apply(s, x);
        for (std::size_t t = 0; t < S.size(); ++t) {
          if (!sys.in_domain(t, y)) continue;
          for (std::size_t s2 = 0; s2 < S.size(); ++s2)
            for (std::size_t t2 = 0; t2 < S.size(); ++t2) {
              if (!sys.in_domain(s2, x) || !sys.germ_equivalent(s, s2, x)) continue;
              if (!sys.in_domain(t2, y) || !sys.germ_equivalent(t, t2, y)) continue;
              CHECK(sys.germ_of(S.mul(t, s), x) == sys.germ_of(S.mul(t2, s2), x));
            }
        }
      }
    for (std::size_t x = 0; x < sys.space_size(); ++x) {
      auto g = sys.G(x);
      std::size_t n = g.size();
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(g.mult[g.identity * n + i] == i);
        CHECK(g.mult[i * n + g.inverse[i]] == g.identity);
        CHECK(g.elements[g.inverse[i]] == sys.germ_of(S.star(g.elements[i].elem), x));
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            CHECK(g.mult[g.mult[i * n + j] * n + k] == g.mult[i * n + g.mult[j * n + k]]);
      }
      for (auto e : S.idempotents())
        if (sys.in_domain(e, x)) CHECK(sys.germ_of(e, x) == g.elements[g.identity]);
    }
  }
}

TEST_CASE("orbits partition the space") {
  for (const auto& fx : all_fixtures()) {
    const auto& sys = fx.system;
    std::set<std::size_t> seen;
    for (auto r : sys.orbit_representatives())
      for (auto y : sys.orbit(r)) CHECK(seen.insert(y).second);
    CHECK(seen.size() == sys.space_size());
    for (std::size_t x = 0; x < sys.space_size(); ++x)
      for (std::size_t y = 0; y < sys.space_size(); ++y) {
        auto ox = sys.orbit(x);
        bool in = std::find(ox.begin(), ox.end(), y) != ox.end();
        CHECK((sys.orbit(x) == sys.orbit(y)) == in);
      }
  }
}

TEST_CASE("unitized systems") {
  for (const auto& fx : all_fixtures()) {
    auto u = fx.system.unitize();
    CHECK(u.semigroup().size() == fx.system.semigroup().size() + 1);
    CHECK(u.theta(u.semigroup().size() - 1) == PartialBijection::identity(u.space_size()));
    CHECK(u.orbit_representatives() == fx.system.orbit_representatives());
  }
}
