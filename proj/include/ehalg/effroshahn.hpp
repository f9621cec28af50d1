#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ehalg/fellbundle.hpp"

namespace ehalg {

// Data attached to a point x: the module M_x with basis L_x, the isotropy
// group G_x and its group algebra KG_x.
class InductionContext {
 public:
  InductionContext(CrossedProductPtr cp, std::size_t x);

  const CrossedProduct& cp() const { return *cp_; }
  const CrossedProductPtr& cp_ptr() const { return cp_; }
  std::size_t point() const { return x_; }
  const std::vector<Germ>& module_basis() const { return lx_; }
  std::size_t module_dim() const { return lx_.size(); }
  std::size_t module_index(const Germ& g) const;
  const IsotropyGroup& isotropy() const { return gx_; }
  const AlgebraPtr& group_algebra() const { return kgx_; }
  // R_x: for each point of the orbit (in index order), the first germ of L_x
  // landing there. Entries index module_basis().
  const std::vector<std::size_t>& representatives() const { return reps_; }

  Matrix left_action(const Vec& b) const;
  Matrix ell_left_action(const Vec& ell_vec) const;
  // m -> m a for a in KG_x.
  Matrix right_action(const Vec& a) const;
  Vec pairing(const Vec& m, const Vec& n) const;
  // <delta_k, b delta_l>
  Vec matrix_entry(std::size_t k, std::size_t l, const Vec& b) const;

  // Coefficients at x of the components of b along isotropy germs. Evaluated
  // on the canonical lift and on a second lift shifted by the redundancy ideal.
  Vec gamma(const Vec& b) const;
  Vec ell_gamma(const Vec& ell_vec) const;

 private:
  CrossedProductPtr cp_;
  std::size_t x_;
  std::vector<Germ> lx_;
  IsotropyGroup gx_;
  AlgebraPtr kgx_;
  std::vector<std::size_t> reps_;
  std::vector<Matrix> basis_actions_;
};

Subspace gamma_image(const InductionContext& ctx, const Subspace& j);
Subspace induced_ideal(const InductionContext& ctx, const Subspace& i);
// {b : gamma(u b v) in I for all basis elements u, v}.
Subspace induced_ideal_via_gamma(const InductionContext& ctx, const Subspace& i);
Subspace admissible_hull(const InductionContext& ctx, const Subspace& i);
bool is_admissible(const InductionContext& ctx, const Subspace& i);
// M_x tensored over KG_x with V, on the basis (r in R_x) x (basis of V).
Representation induced_module(const InductionContext& ctx, const Representation& v);

struct DiscretizationData {
  CrossedProductPtr cp;
  Representation rep;
  CovariantRep covariant;
  std::vector<Subspace> z;
  std::vector<Matrix> q;     // V -> V_x
  std::vector<Matrix> lift;  // V_x -> V
  std::vector<std::size_t> offsets;
  std::size_t total_dim;
  std::map<std::pair<std::size_t, std::size_t>, Matrix> mu;  // (s, x) -> V_x -> V_{theta_s(x)}
  std::vector<Matrix> u;   // U_s on the direct sum
  std::vector<Matrix> pi;  // Pi(delta_x) on the direct sum
  Representation discretized;
  Matrix embedding;  // V -> direct sum, xi -> (q_x xi)_x

  std::size_t block_dim(std::size_t x) const { return q.at(x).rows(); }
  // Block (y, x) of the discretized image of b.
  Matrix entry_block(const Vec& b, std::size_t y, std::size_t x) const;
};

DiscretizationData discretize(const CrossedProductPtr& cp, const Representation& rep);
Representation rho_x(const DiscretizationData& dd, std::size_t x);
// V_x as a KG_x-module through g = [s,x] -> mu_s^x.
Representation isotropy_module(const DiscretizationData& dd, const InductionContext& ctx);

struct TauIso {
  Matrix tau;
  Matrix upsilon;
  Representation induced;
  Representation rho;
};

TauIso tau_iso(const DiscretizationData& dd, std::size_t x);

struct EffrosHahnEntry {
  std::size_t point;
  Subspace gamma_ideal;
  bool admissible;
  Subspace induced;
};

struct EffrosHahnCertificate {
  Subspace ideal;
  std::vector<EffrosHahnEntry> entries;
  Subspace intersection;
};

// Rejects non-ideals; aborts with the offending vector if the intersection of
// the induced ideals differs from J.
EffrosHahnCertificate effros_hahn_decompose(const CrossedProductPtr& cp, const Subspace& j);

}  // namespace ehalg
