#include "ehalg/effroshahn.hpp"

#include <algorithm>
#include <random>

namespace ehalg {

InductionContext::InductionContext(CrossedProductPtr cp, std::size_t x)
    : cp_(std::move(cp)), x_(x), lx_(cp_->system().L(x)), gx_(cp_->system().G(x)) {
  const AmpleSystem& sys = cp_->system();
  kgx_ = std::make_shared<const FiniteAlgebra>(isotropy_group_algebra(gx_, sys, cp_->field()));
  for (auto y : sys.orbit(x))
    for (std::size_t i = 0; i < lx_.size(); ++i)
      if (sys.target(lx_[i]) == y) {
        reps_.push_back(i);
        break;
      }
  for (std::size_t i = 0; i < cp_->ell_dim(); ++i) basis_actions_.push_back(ell_left_action(cp_->field().unit_vec(cp_->ell_dim(), i)));
}

std::size_t InductionContext::module_index(const Germ& g) const {
  auto it = std::find(lx_.begin(), lx_.end(), g);
  require(it != lx_.end(), ErrorKind::InvalidArgument, "germ is not based at this point");
  return static_cast<std::size_t>(it - lx_.begin());
}

Matrix InductionContext::ell_left_action(const Vec& ell_vec) const {
  const AmpleSystem& sys = cp_->system();
  const InverseSemigroup& S = sys.semigroup();
  const Field& f = cp_->field();
  Matrix out(f, lx_.size(), lx_.size());
  for (std::size_t i = 0; i < ell_vec.size(); ++i) {
    if (f.is_zero(ell_vec[i])) continue;
    const auto& lab = cp_->ell_label(i);
    // (delta_y Delta_s) delta_[t] = [x in dom(st), theta_st(x) = y] delta_[st]
    for (std::size_t l = 0; l < lx_.size(); ++l) {
      std::size_t st = S.mul(lab.elem, lx_[l].elem);
      if (!sys.in_domain(st, x_) || sys.apply(st, x_) != lab.point) continue;
      std::size_t k = module_index(sys.germ_of(st, x_));
      out.at(k, l) = f.add(out.at(k, l), ell_vec[i]);
    }
  }
  return out;
}

Matrix InductionContext::left_action(const Vec& b) const {
  Vec l = cp_->lift(b);
  const Field& f = cp_->field();
  Matrix out(f, lx_.size(), lx_.size());
  for (std::size_t i = 0; i < l.size(); ++i)
    if (!f.is_zero(l[i])) out = out + basis_actions_[i].scaled(l[i]);
  return out;
}

Matrix InductionContext::right_action(const Vec& a) const {
  const AmpleSystem& sys = cp_->system();
  const Field& f = cp_->field();
  Matrix out(f, lx_.size(), lx_.size());
  for (std::size_t g = 0; g < a.size(); ++g) {
    if (f.is_zero(a[g])) continue;
    for (std::size_t l = 0; l < lx_.size(); ++l) {
      std::size_t k = module_index(sys.germ_of(sys.semigroup().mul(lx_[l].elem, gx_.elements[g].elem), x_));
      out.at(k, l) = f.add(out.at(k, l), a[g]);
    }
  }
  return out;
}

Vec InductionContext::pairing(const Vec& m, const Vec& n) const {
  const AmpleSystem& sys = cp_->system();
  const InverseSemigroup& S = sys.semigroup();
  const Field& f = cp_->field();
  Vec out = f.zero_vec(gx_.size());
  for (std::size_t k = 0; k < lx_.size(); ++k) {
    if (f.is_zero(m[k])) continue;
    for (std::size_t l = 0; l < lx_.size(); ++l) {
      if (f.is_zero(n[l])) continue;
      std::size_t st = S.mul(S.star(lx_[k].elem), lx_[l].elem);
      if (!sys.in_domain(st, x_) || sys.apply(st, x_) != x_) continue;
      std::size_t g = gx_.index_of(sys.germ_of(st, x_));
      out[g] = f.add(out[g], f.mul(m[k], n[l]));
    }
  }
  return out;
}

Vec InductionContext::matrix_entry(std::size_t k, std::size_t l, const Vec& b) const {
  const Field& f = cp_->field();
  return pairing(f.unit_vec(lx_.size(), k), left_action(b).column(l));
}

Vec InductionContext::ell_gamma(const Vec& ell_vec) const {
  const AmpleSystem& sys = cp_->system();
  const Field& f = cp_->field();
  Vec out = f.zero_vec(gx_.size());
  for (std::size_t i = 0; i < ell_vec.size(); ++i) {
    if (f.is_zero(ell_vec[i])) continue;
    const auto& lab = cp_->ell_label(i);
    if (lab.point != x_ || !sys.in_domain(lab.elem, x_) || sys.apply(lab.elem, x_) != x_) continue;
    std::size_t g = gx_.index_of(sys.germ_of(lab.elem, x_));
    out[g] = f.add(out[g], ell_vec[i]);
  }
  return out;
}

Vec InductionContext::gamma(const Vec& b) const {
  const Field& f = cp_->field();
  Vec lifted = cp_->lift(b);
  Vec value = ell_gamma(lifted);
  const Subspace& n = cp_->csa().redundancy;
  if (n.dim() > 0) {
    std::mt19937 rng(static_cast<unsigned>(n.dim() * 7919 + x_));
    std::uniform_int_distribution<int> coeff(-3, 3);
    Vec shifted = lifted;
    for (const auto& v : n.basis_vectors()) vec_axpy(f, shifted, f.from_int(coeff(rng)), v);
    require(ell_gamma(shifted) == value, ErrorKind::Verification, "gamma depends on the chosen lift");
  }
  return value;
}

Subspace gamma_image(const InductionContext& ctx, const Subspace& j) {
  std::vector<Vec> images;
  for (const auto& b : j.basis_vectors()) images.push_back(ctx.gamma(b));
  Subspace out = Subspace::span(ctx.cp().field(), ctx.isotropy().size(), images);
  require(is_ideal(*ctx.group_algebra(), out), ErrorKind::Verification, "gamma image of an ideal is not an ideal");
  return out;
}

namespace {

// Rows of the linear conditions "v(b) lies in I" given the images v(e_j) of
// the basis, read off on the coordinates outside I's pivots.
void append_membership_rows(const Subspace& i, const std::vector<Vec>& images, std::vector<Vec>& rows) {
  const Field& f = i.field();
  auto comp = i.complement_columns();
  std::vector<Vec> residues;
  for (const auto& v : images) residues.push_back(i.reduce(v));
  for (auto c : comp) {
    Vec row(images.size());
    bool nonzero = false;
    for (std::size_t j = 0; j < images.size(); ++j) {
      row[j] = residues[j][c];
      nonzero = nonzero || !f.is_zero(row[j]);
    }
    if (nonzero) rows.push_back(std::move(row));
  }
}

Subspace solve_conditions(const Field& f, std::size_t n, const std::vector<Vec>& rows) {
  if (rows.empty()) return Subspace::full(f, n);
  return nullspace(Matrix::from_rows(f, n, rows));
}

}  // namespace

Subspace induced_ideal(const InductionContext& ctx, const Subspace& i) {
  const CrossedProduct& cp = ctx.cp();
  const Field& f = cp.field();
  require(is_ideal(*ctx.group_algebra(), i), ErrorKind::InvalidArgument, "induction needs an ideal of the group algebra");
  std::vector<Matrix> actions;
  for (std::size_t j = 0; j < cp.dim(); ++j) actions.push_back(ctx.left_action(f.unit_vec(cp.dim(), j)));
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < ctx.module_dim(); ++k)
    for (std::size_t l = 0; l < ctx.module_dim(); ++l) {
      std::vector<Vec> images;
      for (std::size_t j = 0; j < cp.dim(); ++j)
        images.push_back(ctx.pairing(f.unit_vec(ctx.module_dim(), k), actions[j].column(l)));
      append_membership_rows(i, images, rows);
    }
  Subspace out = solve_conditions(f, cp.dim(), rows);
  require(is_ideal(*cp.algebra(), out), ErrorKind::Verification, "induced subspace is not an ideal");
  return out;
}

Subspace induced_ideal_via_gamma(const InductionContext& ctx, const Subspace& i) {
  const CrossedProduct& cp = ctx.cp();
  const Field& f = cp.field();
  require(is_ideal(*ctx.group_algebra(), i), ErrorKind::InvalidArgument, "induction needs an ideal of the group algebra");
  std::size_t n = cp.dim();
  std::vector<Vec> rows;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<Vec> images;
      for (std::size_t j = 0; j < n; ++j)
        images.push_back(ctx.gamma(cp.multiply(cp.multiply(f.unit_vec(n, u), f.unit_vec(n, j)), f.unit_vec(n, v))));
      append_membership_rows(i, images, rows);
    }
  return solve_conditions(f, n, rows);
}

Subspace admissible_hull(const InductionContext& ctx, const Subspace& i) {
  return gamma_image(ctx, induced_ideal(ctx, i));
}

bool is_admissible(const InductionContext& ctx, const Subspace& i) { return admissible_hull(ctx, i) == i; }

Representation induced_module(const InductionContext& ctx, const Representation& v) {
  const CrossedProduct& cp = ctx.cp();
  const AmpleSystem& sys = cp.system();
  const InverseSemigroup& S = sys.semigroup();
  const Field& f = cp.field();
  require(v.algebra()->dim() == ctx.isotropy().size(), ErrorKind::InvalidArgument,
          "module is not over the isotropy group algebra");
  const auto& reps = ctx.representatives();
  const auto& lx = ctx.module_basis();
  std::size_t dv = v.dim(), total = reps.size() * dv;
  std::vector<std::size_t> rep_at(sys.space_size(), npos);
  for (std::size_t a = 0; a < reps.size(); ++a) rep_at[sys.target(lx[reps[a]])] = a;
  std::vector<Matrix> images;
  for (std::size_t j = 0; j < cp.dim(); ++j) {
    Matrix act = ctx.left_action(f.unit_vec(cp.dim(), j));
    Matrix img(f, total, total);
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t t = 0; t < lx.size(); ++t) {
        const Scalar& c = act.at(t, reps[a]);
        if (f.is_zero(c)) continue;
        // delta_[t] (x) w = delta_[r'] (x) [r'* t] w
        std::size_t b = rep_at[sys.target(lx[t])];
        std::size_t g = ctx.isotropy().index_of(sys.germ_of(S.mul(S.star(lx[reps[b]].elem), lx[t].elem), ctx.point()));
        img.set_block(b * dv, a * dv, img.block(b * dv, a * dv, dv, dv) + v.image(g).scaled(c));
      }
    images.push_back(std::move(img));
  }
  return Representation(cp.algebra(), total, std::move(images));
}

Matrix DiscretizationData::entry_block(const Vec& b, std::size_t y, std::size_t x) const {
  const AmpleSystem& sys = cp->system();
  const Field& f = cp->field();
  Matrix sum(f, rep.dim(), rep.dim());
  for (const auto& [s, fs] : cp->components(b))
    if (sys.in_domain(s, x) && sys.apply(s, x) == y) sum = sum + covariant.pi_of(f, fs) * covariant.sigma[s];
  return q[y] * sum * lift[x];
}

DiscretizationData discretize(const CrossedProductPtr& cp, const Representation& rep) {
  const AmpleSystem& sys = cp->system();
  const Field& f = cp->field();
  std::size_t n = sys.space_size(), d = rep.dim();
  CovariantRep cr = disintegrate(*cp, rep);
  std::vector<Subspace> z;
  std::vector<Matrix> q, lift;
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Vec> cols;
    for (std::size_t y = 0; y < n; ++y)
      if (y != x)
        for (std::size_t j = 0; j < d; ++j) cols.push_back(cr.pi[y].column(j));
    Subspace zx = Subspace::span(f, d, cols);
    auto comp = zx.complement_columns();
    Matrix qx(f, comp.size(), d), lx(f, d, comp.size());
    for (std::size_t j = 0; j < d; ++j) {
      Vec r = zx.reduce(f.unit_vec(d, j));
      for (std::size_t k = 0; k < comp.size(); ++k) qx.at(k, j) = r[comp[k]];
    }
    for (std::size_t k = 0; k < comp.size(); ++k) lx.at(comp[k], k) = f.one();
    offsets.push_back(total);
    total += comp.size();
    z.push_back(std::move(zx));
    q.push_back(std::move(qx));
    lift.push_back(std::move(lx));
  }
  std::map<std::pair<std::size_t, std::size_t>, Matrix> mu;
  std::vector<Matrix> u;
  for (std::size_t s = 0; s < sys.semigroup().size(); ++s) {
    Matrix us(f, total, total);
    for (auto x : sys.theta(s).domain()) {
      std::size_t y = sys.apply(s, x);
      Matrix through = q[y] * cr.sigma[s];
      for (const auto& v : z[x].basis_vectors())
        require(vec_is_zero(f, through.apply(v)), ErrorKind::Verification, "mu is not well defined on V_x");
      Matrix m = through * lift[x];
      us.set_block(offsets[y], offsets[x], m);
      mu.emplace(std::make_pair(s, x), std::move(m));
    }
    u.push_back(std::move(us));
  }
  std::vector<Matrix> pi;
  for (std::size_t x = 0; x < n; ++x) {
    Matrix p(f, total, total);
    p.set_block(offsets[x], offsets[x], Matrix::identity(f, q[x].rows()));
    pi.push_back(std::move(p));
  }
  Matrix embedding(f, total, d);
  for (std::size_t x = 0; x < n; ++x) embedding.set_block(offsets[x], 0, q[x]);
  // Placeholder image list; replaced below once entry_block can see the blocks.
  DiscretizationData dd{cp, rep, cr, std::move(z), std::move(q), std::move(lift), std::move(offsets), total,
                        std::move(mu), std::move(u), std::move(pi),
                        Representation(cp->algebra(), 0, std::vector<Matrix>(cp->dim(), Matrix(f, 0, 0))),
                        std::move(embedding)};
  std::vector<Matrix> images;
  for (std::size_t k = 0; k < cp->dim(); ++k) {
    Vec b = f.unit_vec(cp->dim(), k);
    Matrix img(f, total, total);
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x) img.set_block(dd.offsets[y], dd.offsets[x], dd.entry_block(b, y, x));
    images.push_back(std::move(img));
  }
  dd.discretized = Representation(cp->algebra(), total, std::move(images));
  return dd;
}

Representation rho_x(const DiscretizationData& dd, std::size_t x) {
  const AmpleSystem& sys = dd.cp->system();
  const Field& f = dd.cp->field();
  std::vector<std::size_t> idx;
  std::vector<bool> inside(dd.total_dim, false);
  for (auto y : sys.orbit(x))
    for (std::size_t k = 0; k < dd.block_dim(y); ++k) {
      idx.push_back(dd.offsets[y] + k);
      inside[dd.offsets[y] + k] = true;
    }
  std::vector<Matrix> images;
  for (const auto& img : dd.discretized.images()) {
    for (std::size_t r = 0; r < dd.total_dim; ++r)
      for (auto c : idx)
        require(inside[r] || f.is_zero(img.at(r, c)), ErrorKind::Verification, "orbit block is not invariant");
    Matrix m(f, idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) m.at(a, b) = img.at(idx[a], idx[b]);
    images.push_back(std::move(m));
  }
  return Representation(dd.cp->algebra(), idx.size(), std::move(images));
}

Representation isotropy_module(const DiscretizationData& dd, const InductionContext& ctx) {
  std::vector<Matrix> images;
  for (const auto& g : ctx.isotropy().elements) images.push_back(dd.mu.at({g.elem, g.point}));
  return Representation(ctx.group_algebra(), dd.block_dim(ctx.point()), std::move(images));
}

TauIso tau_iso(const DiscretizationData& dd, std::size_t x) {
  const AmpleSystem& sys = dd.cp->system();
  const Field& f = dd.cp->field();
  InductionContext ctx(dd.cp, x);
  Representation induced = induced_module(ctx, isotropy_module(dd, ctx));
  Representation rho = rho_x(dd, x);
  std::size_t dv = dd.block_dim(x);
  std::vector<std::size_t> local_offset(sys.space_size(), npos);
  std::size_t pos = 0;
  for (auto y : sys.orbit(x)) {
    local_offset[y] = pos;
    pos += dd.block_dim(y);
  }
  require(pos == induced.dim(), ErrorKind::Verification, "induced module and orbit block differ in dimension");
  Matrix tau(f, pos, pos), upsilon(f, pos, pos);
  const auto& reps = ctx.representatives();
  for (std::size_t a = 0; a < reps.size(); ++a) {
    const Germ& r = ctx.module_basis()[reps[a]];
    std::size_t y = sys.target(r);
    // tau(delta_[r] (x) xi) = U_r xi, upsilon_y(eta) = delta_[r] (x) U_r* eta
    tau.set_block(local_offset[y], a * dv, dd.mu.at({r.elem, x}));
    upsilon.set_block(a * dv, local_offset[y], dd.mu.at({sys.semigroup().star(r.elem), y}));
  }
  require(inverse(tau).has_value(), ErrorKind::Verification, "tau is not invertible at " + sys.point_name(x));
  require(upsilon * tau == Matrix::identity(f, pos), ErrorKind::Verification, "upsilon is not the inverse of tau");
  for (std::size_t k = 0; k < dd.cp->dim(); ++k)
    require(tau * induced.image(k) == rho.image(k) * tau, ErrorKind::Verification,
            "tau does not intertwine at basis element " + dd.cp->label_text(k));
  return TauIso{std::move(tau), std::move(upsilon), std::move(induced), std::move(rho)};
}

EffrosHahnCertificate effros_hahn_decompose(const CrossedProductPtr& cp, const Subspace& j) {
  require(is_ideal(*cp->algebra(), j), ErrorKind::InvalidArgument, "decomposition needs a two-sided ideal");
  const Field& f = cp->field();
  EffrosHahnCertificate cert{j, {}, Subspace::full(f, cp->dim())};
  for (auto x : cp->system().orbit_representatives()) {
    InductionContext ctx(cp, x);
    Subspace g = gamma_image(ctx, j);
    bool admissible = is_admissible(ctx, g);
    Subspace ind = induced_ideal(ctx, g);
    cert.intersection = subspace_intersect(cert.intersection, ind);
    cert.entries.push_back({x, std::move(g), admissible, std::move(ind)});
  }
  for (const auto& v : cert.intersection.basis_vectors())
    require(j.contains(v), ErrorKind::Verification,
            "intersection of induced ideals contains " + format_vec(f, v) + " outside the ideal");
  for (const auto& v : j.basis_vectors())
    require(cert.intersection.contains(v), ErrorKind::Verification,
            "ideal vector " + format_vec(f, v) + " is missing from the intersection of induced ideals");
  return cert;
}

}  // namespace ehalg
