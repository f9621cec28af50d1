#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ehalg/effroshahn.hpp"

namespace ehalg {

// Finite groupoid on elements 0..n-1. compose[a * n + b] is ab, or npos when
// d(a) != r(b). d and r take values among the unit elements.
class FiniteGroupoid {
 public:
  // Checks table shapes only; validate() checks the axioms.
  FiniteGroupoid(std::vector<std::string> labels, std::vector<std::size_t> units, std::vector<std::size_t> d,
                 std::vector<std::size_t> r, std::vector<std::size_t> compose);
  // Rejects tables that fail validate().
  static FiniteGroupoid checked(std::vector<std::string> labels, std::vector<std::size_t> units,
                                std::vector<std::size_t> d, std::vector<std::size_t> r,
                                std::vector<std::size_t> compose);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t g) const { return labels_.at(g); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t find(const std::string& label) const;
  const std::vector<std::size_t>& units() const { return units_; }
  bool is_unit(std::size_t g) const;
  std::size_t d(std::size_t g) const { return d_.at(g); }
  std::size_t r(std::size_t g) const { return r_.at(g); }
  const std::vector<std::size_t>& d_table() const { return d_; }
  const std::vector<std::size_t>& r_table() const { return r_; }
  std::size_t compose(std::size_t a, std::size_t b) const { return compose_[a * size() + b]; }
  const std::vector<std::size_t>& compose_table() const { return compose_; }
  // npos when g has no inverse (only possible for invalid tables).
  std::size_t inverse(std::size_t g) const { return inverse_.at(g); }

  ValidationReport validate() const;

  // Groupoid with one unit.
  static FiniteGroupoid trivial();
  // A group as a one-unit groupoid; element 0 must be the identity.
  static FiniteGroupoid from_group(const InverseSemigroup& group);
  // X x X with (x,y)(y,z) = (x,z); element (x,y) has index x * n + y.
  static FiniteGroupoid pair(const std::vector<std::string>& points);

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> units_;
  std::vector<std::size_t> d_;
  std::vector<std::size_t> r_;
  std::vector<std::size_t> compose_;
  std::vector<std::size_t> inverse_;
};

struct GermGroupoid {
  FiniteGroupoid groupoid;
  std::vector<Germ> germs;  // element i is germs[i]
  std::vector<std::size_t> unit_of_point;

  std::size_t index_of(const Germ& g) const;
};

GermGroupoid germ_groupoid(const AmpleSystem& sys);

FiniteAlgebra steinberg_algebra(const FiniteGroupoid& g, const Field& field);

// Elements with d = r = u, in index order.
std::vector<std::size_t> groupoid_isotropy(const FiniteGroupoid& g, std::size_t u);
// Restriction of f to the isotropy at u, as coordinates over groupoid_isotropy.
Vec bold_gamma(const FiniteGroupoid& g, std::size_t u, const Vec& f);
// Convolution action of A(G) on span{delta_v : d(v) = u}, basis in index order.
Matrix groupoid_module_action(const FiniteGroupoid& g, std::size_t u, const Field& field, const Vec& f);

struct PhiIso {
  CrossedProductPtr cp;
  GermGroupoid gg;
  AlgebraPtr steinberg;
  Matrix map;  // crossed product coordinates -> germ basis
};

// delta_y Delta_s -> delta_[s, theta_s*(y)]. Verifies bijectivity,
// multiplicativity and the Gamma triangle at every point; a failure throws a
// Verification error naming the witness.
PhiIso phi_iso(const CrossedProductPtr& cp);

// Phi(ind_x(I)) for an ideal I of KG_x, coordinates as in InductionContext.
Subspace groupoid_induced_ideal(const PhiIso& phi, std::size_t x, const Subspace& i);

// Subsets of G on which d and r are injective, as bit masks in increasing
// order. Throws a Guard error when |G| exceeds `guard`.
std::vector<std::uint64_t> bisections(const FiniteGroupoid& g, std::size_t guard = 12);
std::string bisection_name(const FiniteGroupoid& g, std::uint64_t mask);
std::uint64_t bisection_product(const FiniteGroupoid& g, std::uint64_t u, std::uint64_t v);
std::uint64_t bisection_star(const FiniteGroupoid& g, std::uint64_t u);

struct BisectionSemigroup {
  std::vector<std::uint64_t> masks;
  InverseSemigroup semigroup;
};

BisectionSemigroup bisection_semigroup(const FiniteGroupoid& g, std::size_t guard = 12);
// Same, restricted to the given family, which must be closed under product
// and star.
BisectionSemigroup bisection_semigroup_of(const FiniteGroupoid& g, const std::vector<std::uint64_t>& family);

// theta_U = r o d^-1 on d(U), on the unit space (points named by unit labels,
// in units() order). Throws a Validation error naming the failed hypothesis.
AmpleSystem intrinsic_action(const FiniteGroupoid& g, const std::vector<std::uint64_t>& family);

struct SteinbergCrossedIso {
  BisectionSemigroup sa;
  CrossedProductPtr cp;
  GermGroupoid gg;
  std::vector<std::size_t> groupoid_map;  // germ index -> element of G
  AlgebraPtr steinberg;
  Matrix map;  // crossed product coordinates -> A(G)
};

SteinbergCrossedIso steinberg_as_crossed_product(const FiniteGroupoid& g, const Field& field,
                                                 std::size_t guard = 12);

}  // namespace ehalg
