#include "ehalg/fixtures.hpp"

namespace ehalg {

AmpleSystem fix_triv() {
  InverseSemigroup s(1, {0}, {0}, {"e"});
  return AmpleSystem(SystemSpec{s, {"x0"}, {PartialBijection::identity(1)}});
}

AmpleSystem fix_flip() {
  return AmpleSystem(SystemSpec{cyclic_group(2), {"a", "b"}, {PartialBijection::identity(2), PartialBijection({1, 0})}});
}

AmpleSystem fix_z2fix() {
  return AmpleSystem(SystemSpec{cyclic_group(2), {"x"}, {PartialBijection::identity(1), PartialBijection::identity(1)}});
}

AmpleSystem fix_brandt() {
  // 0, e = ss*, f = s*s, s, s*
  std::vector<std::size_t> mult = {
      0, 0, 0, 0, 0,  //
      0, 1, 0, 3, 0,  //
      0, 0, 2, 0, 4,  //
      0, 0, 3, 0, 1,  //
      0, 4, 0, 2, 0,  //
  };
  InverseSemigroup s(5, mult, {0, 1, 2, 4, 3}, {"0", "e", "f", "s", "s*"});
  std::vector<PartialBijection> theta = {
      PartialBijection::empty(2),
      PartialBijection::identity_on(2, {1}),
      PartialBijection::identity_on(2, {0}),
      PartialBijection({1, npos}),
      PartialBijection({npos, 0}),
  };
  return AmpleSystem(SystemSpec{s, {"a", "b"}, theta});
}

AmpleSystem fix_semilat() {
  InverseSemigroup s(2, {0, 1, 1, 1}, {0, 1}, {"1", "e"});
  return AmpleSystem(SystemSpec{s, {"x", "y"}, {PartialBijection::identity(2), PartialBijection::identity_on(2, {0})}});
}

AmpleSystem fix_swapfix() {
  return AmpleSystem(
      SystemSpec{cyclic_group(2), {"a", "b", "c"}, {PartialBijection::identity(3), PartialBijection({1, 0, 2})}});
}

AlgebraAction fix_nilp(const Field& field) {
  auto a = std::make_shared<const FiniteAlgebra>(field, std::vector<std::string>{"n"}, std::vector<SparseVec>(1));
  return AlgebraAction{InverseSemigroup(1, {0}, {0}, {"e"}), a, {Subspace::full(field, 1)},
                       {Matrix::identity(field, 1)}};
}

std::vector<NamedSystem> standard_fixtures() {
  return {{"FIX-TRIV", fix_triv()},
          {"FIX-FLIP", fix_flip()},
          {"FIX-Z2FIX", fix_z2fix()},
          {"FIX-BRANDT", fix_brandt()},
          {"FIX-SEMILAT", fix_semilat()}};
}

std::vector<NamedSystem> all_fixtures() {
  auto out = standard_fixtures();
  out.push_back({"FIX-SWAPFIX", fix_swapfix()});
  return out;
}

std::vector<NamedGroupoid> standard_groupoids() {
  return {{"one-unit", FiniteGroupoid::trivial()},
          {"Z/2", FiniteGroupoid::from_group(cyclic_group(2))},
          {"pair-2", FiniteGroupoid::pair({"a", "b"})}};
}

}  // namespace ehalg
