#pragma once

#include <string>
#include <vector>

#include "ehalg/germoid.hpp"

namespace ehalg {

// S = {e}, X = {x0}.
AmpleSystem fix_triv();
// Z/2 swapping a and b.
AmpleSystem fix_flip();
// Z/2 fixing the single point x.
AmpleSystem fix_z2fix();
// Brandt semigroup {0, e, f, s, s*} on {a, b} with s: a -> b.
AmpleSystem fix_brandt();
// {1, e} on {x, y}, all maps identities, X_e = {x}.
AmpleSystem fix_semilat();
// Z/2 on {a, b, c} swapping a and b, fixing c.
AmpleSystem fix_swapfix();
// The trivial semigroup acting on span{n} with n^2 = 0.
AlgebraAction fix_nilp(const Field& field);

struct NamedSystem {
  std::string name;
  AmpleSystem system;
};

// TRIV, FLIP, Z2FIX, BRANDT, SEMILAT in that order.
std::vector<NamedSystem> standard_fixtures();
// standard_fixtures() plus SWAPFIX.
std::vector<NamedSystem> all_fixtures();

struct NamedGroupoid {
  std::string name;
  FiniteGroupoid groupoid;
};

// One unit, Z/2, and the pair groupoid on {a, b}.
std::vector<NamedGroupoid> standard_groupoids();

}  // namespace ehalg
