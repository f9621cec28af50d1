#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ehalg/algebra.hpp"
#include "ehalg/dynsys.hpp"

namespace ehalg {

// Fell bundle over a finite inverse semigroup with finite-dimensional fibers.
// Products and inclusions are arbitrary tensors; validate_bundle checks them.
class FellBundle {
 public:
  // mu[s * |S| + t][i * dim(B_t) + j] is the product of the i-th basis vector
  // of B_s with the j-th of B_t, as coordinates in B_{st}. inclusions must
  // hold a dim(B_t) x dim(B_s) matrix for every pair s <= t.
  FellBundle(Field field, InverseSemigroup semigroup, std::vector<std::vector<std::string>> fiber_labels,
             std::vector<std::vector<Vec>> mu, std::map<std::pair<std::size_t, std::size_t>, Matrix> inclusions);

  const Field& field() const { return field_; }
  const InverseSemigroup& semigroup() const { return semigroup_; }
  std::size_t fiber_dim(std::size_t s) const { return fiber_labels_.at(s).size(); }
  const std::string& fiber_label(std::size_t s, std::size_t i) const { return fiber_labels_.at(s).at(i); }
  const Vec& basis_product(std::size_t s, std::size_t t, std::size_t i, std::size_t j) const;
  Vec multiply(std::size_t s, std::size_t t, const Vec& a, const Vec& b) const;
  const Matrix& inclusion(std::size_t s, std::size_t t) const;
  const std::map<std::pair<std::size_t, std::size_t>, Matrix>& inclusions() const { return inclusions_; }

 private:
  Field field_;
  InverseSemigroup semigroup_;
  std::vector<std::vector<std::string>> fiber_labels_;
  std::vector<std::vector<Vec>> mu_;
  std::map<std::pair<std::size_t, std::size_t>, Matrix> inclusions_;
};

ValidationReport validate_bundle(const FellBundle& b);

// Action of S on an algebra A by isomorphisms between ideals. maps[s] is any
// endomorphism of A whose restriction to domains[s] is alpha_s.
struct AlgebraAction {
  InverseSemigroup semigroup;
  AlgebraPtr algebra;
  std::vector<Subspace> domains;
  std::vector<Matrix> maps;
};

ValidationReport validate_action(const AlgebraAction& action);

// The action f -> f o theta_{s*} on functions on X with pointwise product.
AlgebraAction function_action(const AmpleSystem& sys, const Field& field);

// Fibers B_s = A_{ss*}; built without checking that the fibers are idempotent.
FellBundle semidirect_triple(const AlgebraAction& action);

struct SemidirectResult {
  std::optional<FellBundle> bundle;
  // On rejection: the element whose fiber is not idempotent and the span of
  // the products inside that fiber.
  std::optional<std::size_t> witness;
  std::optional<Subspace> product_span;
};

SemidirectResult semidirect_bundle(const AlgebraAction& action);

// L(B) = direct sum of the fibers, N the redundancy ideal and L(B)/N.
struct CrossSectionalAlgebra {
  std::shared_ptr<const FellBundle> bundle;
  std::vector<std::size_t> offsets;
  AlgebraPtr ell;
  Subspace redundancy;
  QuotientAlgebra quotient;

  std::size_t ell_index(std::size_t s, std::size_t i) const { return offsets.at(s) + i; }
  Vec ell_vector(std::size_t s, const Vec& fiber_vec) const;
  // The universal map B_s -> L(B)/N.
  Vec universal(std::size_t s, const Vec& fiber_vec) const { return quotient.project(ell_vector(s, fiber_vec)); }
  const AlgebraPtr& algebra() const { return quotient.algebra; }
};

CrossSectionalAlgebra cross_sectional(std::shared_ptr<const FellBundle> bundle);

// Lc(X) x S, realized as the cross-sectional algebra of the semidirect
// product bundle. Basis vectors are the L(B) basis elements delta_y Delta_s
// that survive as coset representatives.
class CrossedProduct {
 public:
  struct Label {
    std::size_t point;
    std::size_t elem;
  };

  static std::shared_ptr<const CrossedProduct> build(const AmpleSystem& sys, const Field& field);

  const AmpleSystem& system() const { return sys_; }
  const Field& field() const { return field_; }
  const CrossSectionalAlgebra& csa() const { return csa_; }
  const AlgebraPtr& algebra() const { return csa_.algebra(); }
  std::size_t dim() const { return algebra()->dim(); }
  std::size_t ell_dim() const { return ell_labels_.size(); }
  const Label& label(std::size_t i) const { return labels_.at(i); }
  const Label& ell_label(std::size_t i) const { return ell_labels_.at(i); }
  std::string label_text(std::size_t i) const;
  // Index of delta_y Delta_s in L(B), or npos when y is outside ran(s).
  std::size_t ell_index(std::size_t y, std::size_t s) const;

  Vec delta(std::size_t y, std::size_t s) const;
  Vec ell_delta(std::size_t y, std::size_t s) const;
  // f Delta_s for f supported in ran(s).
  Vec element(std::size_t s, const Vec& f) const;
  Vec ell_element(std::size_t s, const Vec& f) const;
  Vec project(const Vec& ell_vec) const { return csa_.quotient.project(ell_vec); }
  Vec lift(const Vec& v) const { return csa_.quotient.lift(v); }
  Vec multiply(const Vec& a, const Vec& b) const { return algebra()->multiply(a, b); }
  // The functions f_s of the canonical lift, for each s with f_s != 0.
  std::vector<std::pair<std::size_t, Vec>> components(const Vec& v) const;

 private:
  CrossedProduct(AmpleSystem sys, Field field, CrossSectionalAlgebra csa);
  AmpleSystem sys_;
  Field field_;
  CrossSectionalAlgebra csa_;
  std::vector<Label> ell_labels_;
  std::vector<Label> labels_;
};

using CrossedProductPtr = std::shared_ptr<const CrossedProduct>;

Vec indicator(const Field& field, std::size_t n, const std::vector<std::size_t>& points);
Vec bar_alpha(const AmpleSystem& sys, const Field& field, std::size_t s, const Vec& f);

// sum_e f_e Delta_e where supp(f) is split greedily over the X_e, visiting
// idempotents in the given order (default: index order).
Vec embed_function(const CrossedProduct& cp, const Vec& f);
Vec embed_function_with_order(const CrossedProduct& cp, const Vec& f, const std::vector<std::size_t>& order);

// Idempotent phi with phi b = b = b phi, built from the support pieces of b.
Vec local_unit(const CrossedProduct& cp, const Vec& b);

// pi is given on the point indicators delta_x; sigma on every element.
struct CovariantRep {
  std::size_t dim;
  std::vector<Matrix> pi;
  std::vector<Matrix> sigma;

  Matrix pi_of(const Field& field, const Vec& f) const;
};

ValidationReport validate_covariant(const AmpleSystem& sys, const Field& field, const CovariantRep& cr);
Representation integrate(const CrossedProduct& cp, const CovariantRep& cr);
CovariantRep disintegrate(const CrossedProduct& cp, const Representation& rep);
// sigma_s through the sum formula sigma_s(pi(f) xi) = rep(bar_alpha_s(f) Delta_s) xi.
Matrix sigma_via_sum(const CrossedProduct& cp, const Representation& rep, std::size_t s);

// Linear maps B_s -> T (columns = images of fiber basis vectors).
struct BundleRep {
  AlgebraPtr target;
  std::vector<Matrix> maps;
};

// Multiplicativity across fibers only (a pre-representation).
ValidationReport pre_representation_check(const CrossSectionalAlgebra& csa, const BundleRep& rep);
// Compatibility with the inclusions j.
ValidationReport inclusion_check(const CrossSectionalAlgebra& csa, const BundleRep& rep);
// Whether the induced map on L(B) vanishes on N.
bool kills_redundancy(const CrossSectionalAlgebra& csa, const BundleRep& rep);
// The homomorphism L(B)/N -> T extending the maps; rejects non-representations.
Matrix extend_bundle_rep(const CrossSectionalAlgebra& csa, const BundleRep& rep);
// For targets of the form M_d(K): span of all pi_s(b) applied to K^d is K^d.
bool bundle_rep_nondegenerate(const CrossSectionalAlgebra& csa, const BundleRep& rep, std::size_t d);
Representation matrix_map_to_representation(const AlgebraPtr& source, std::size_t d, const Matrix& phi);

struct UnitizationIso {
  CrossedProductPtr cp;
  CrossedProductPtr unitized;
  Matrix map;
};

// f Delta_s -> f Delta_s into the crossed product of the unitized system;
// rejects (as a verification failure) maps that are not isomorphisms.
UnitizationIso unitization_iso(const AmpleSystem& sys, const Field& field);

}  // namespace ehalg
