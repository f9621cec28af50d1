#include "ehalg/fellbundle.hpp"

#include <map>

namespace ehalg {

namespace {

std::vector<std::pair<std::size_t, std::size_t>> order_pairs(const InverseSemigroup& s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b)
      if (s.leq(a, b)) out.emplace_back(a, b);
  return out;
}

// Coordinates of v in the canonical basis of `space`, or a validation error.
Vec coords_in(const Subspace& space, const Vec& v, const std::string& what) {
  auto c = space.coordinates(v);
  if (!c) fail(ErrorKind::Validation, what);
  return *c;
}

Matrix reshape_square(const Field& f, const Vec& v, std::size_t d) {
  Matrix m(f, d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m.at(r, c) = v.at(r * d + c);
  return m;
}

}  // namespace

FellBundle::FellBundle(Field field, InverseSemigroup semigroup, std::vector<std::vector<std::string>> fiber_labels,
                       std::vector<std::vector<Vec>> mu, std::map<std::pair<std::size_t, std::size_t>, Matrix> inclusions)
    : field_(field),
      semigroup_(std::move(semigroup)),
      fiber_labels_(std::move(fiber_labels)),
      mu_(std::move(mu)),
      inclusions_(std::move(inclusions)) {
  std::size_t n = semigroup_.size();
  require(fiber_labels_.size() == n, ErrorKind::InvalidArgument, "need one fiber per semigroup element");
  require(mu_.size() == n * n, ErrorKind::InvalidArgument, "need one product tensor per pair of elements");
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      const auto& tensor = mu_[s * n + t];
      require(tensor.size() == fiber_dim(s) * fiber_dim(t), ErrorKind::InvalidArgument, "product tensor has the wrong size");
      for (const auto& v : tensor)
        require(v.size() == fiber_dim(semigroup_.mul(s, t)), ErrorKind::InvalidArgument,
                "product lands outside the fiber of the product element");
    }
  for (auto [s, t] : order_pairs(semigroup_)) {
    auto it = inclusions_.find({s, t});
    require(it != inclusions_.end(), ErrorKind::InvalidArgument,
            "missing inclusion for " + semigroup_.name(s) + " <= " + semigroup_.name(t));
    require(it->second.rows() == fiber_dim(t) && it->second.cols() == fiber_dim(s), ErrorKind::InvalidArgument,
            "inclusion matrix has the wrong shape");
  }
  for (const auto& [key, m] : inclusions_)
    require(semigroup_.leq(key.first, key.second), ErrorKind::InvalidArgument, "inclusion given for an unordered pair");
}

const Vec& FellBundle::basis_product(std::size_t s, std::size_t t, std::size_t i, std::size_t j) const {
  return mu_.at(s * semigroup_.size() + t).at(i * fiber_dim(t) + j);
}

Vec FellBundle::multiply(std::size_t s, std::size_t t, const Vec& a, const Vec& b) const {
  Vec out = field_.zero_vec(fiber_dim(semigroup_.mul(s, t)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (field_.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!field_.is_zero(b[j])) vec_axpy(field_, out, field_.mul(a[i], b[j]), basis_product(s, t, i, j));
  }
  return out;
}

const Matrix& FellBundle::inclusion(std::size_t s, std::size_t t) const {
  auto it = inclusions_.find({s, t});
  require(it != inclusions_.end(), ErrorKind::InvalidArgument,
          semigroup_.name(s) + " is not below " + semigroup_.name(t));
  return it->second;
}

ValidationReport validate_bundle(const FellBundle& b) {
  const InverseSemigroup& S = b.semigroup();
  const Field& f = b.field();
  auto pairs = order_pairs(S);
  for (auto [s, t] : pairs)
    if (rank(b.inclusion(s, t)) != b.fiber_dim(s))
      return ValidationReport::fail("injectivity", {s, t},
                                    "inclusion " + S.name(s) + " -> " + S.name(t) + " is not injective");
  for (std::size_t r = 0; r < S.size(); ++r)
    for (std::size_t s = 0; s < S.size(); ++s)
      for (std::size_t t = 0; t < S.size(); ++t)
        for (std::size_t i = 0; i < b.fiber_dim(r); ++i)
          for (std::size_t j = 0; j < b.fiber_dim(s); ++j)
            for (std::size_t k = 0; k < b.fiber_dim(t); ++k) {
              Vec left = b.multiply(S.mul(r, s), t, b.basis_product(r, s, i, j), f.unit_vec(b.fiber_dim(t), k));
              Vec right = b.multiply(r, S.mul(s, t), f.unit_vec(b.fiber_dim(r), i), b.basis_product(s, t, j, k));
              if (left != right)
                return ValidationReport::fail("associativity", {r, s, t, i, j, k},
                                              "fiber products over " + S.name(r) + ", " + S.name(s) + ", " +
                                                  S.name(t) + " are not associative");
            }
  for (std::size_t s = 0; s < S.size(); ++s) {
    std::size_t ss = S.star(s), sss = S.mul(s, ss);
    std::vector<Vec> products;
    for (std::size_t i = 0; i < b.fiber_dim(s); ++i)
      for (std::size_t j = 0; j < b.fiber_dim(ss); ++j)
        for (std::size_t k = 0; k < b.fiber_dim(s); ++k)
          products.push_back(b.multiply(sss, s, b.basis_product(s, ss, i, j), f.unit_vec(b.fiber_dim(s), k)));
    if (Subspace::span(f, b.fiber_dim(s), products).dim() != b.fiber_dim(s))
      return ValidationReport::fail("fiber spanning", {s},
                                    "products B_s B_s* B_s do not span B_s for s = " + S.name(s));
  }
  for (auto [r, s] : pairs)
    for (auto [s2, t] : pairs) {
      if (s2 != s) continue;
      if (b.inclusion(r, t) != b.inclusion(s, t) * b.inclusion(r, s))
        return ValidationReport::fail("inclusion transitivity", {r, s, t},
                                      "inclusions through " + S.name(s) + " do not compose");
    }
  for (auto [r, r2] : pairs)
    for (auto [s, s2] : pairs)
      for (std::size_t i = 0; i < b.fiber_dim(r); ++i)
        for (std::size_t j = 0; j < b.fiber_dim(s); ++j) {
          Vec left = b.inclusion(S.mul(r, s), S.mul(r2, s2)).apply(b.basis_product(r, s, i, j));
          Vec right = b.multiply(r2, s2, b.inclusion(r, r2).column(i), b.inclusion(s, s2).column(j));
          if (left != right)
            return ValidationReport::fail("inclusion compatibility", {r, r2, s, s2, i, j},
                                          "inclusions do not commute with products");
        }
  return ValidationReport::pass();
}

ValidationReport validate_action(const AlgebraAction& action) {
  const InverseSemigroup& S = action.semigroup;
  const FiniteAlgebra& A = *action.algebra;
  const Field& f = A.field();
  if (action.domains.size() != S.size() || action.maps.size() != S.size())
    return ValidationReport::fail("shape", {}, "need one domain and one map per element");
  for (std::size_t s = 0; s < S.size(); ++s) {
    const Subspace& dom = action.domains[s];
    const Matrix& m = action.maps[s];
    if (dom.ambient_dim() != A.dim() || m.rows() != A.dim() || m.cols() != A.dim())
      return ValidationReport::fail("shape", {s}, "domain or map of " + S.name(s) + " has the wrong shape");
  }
  for (std::size_t s = 0; s < S.size(); ++s) {
    const Subspace& dom = action.domains[s];
    if (!is_ideal(A, dom)) return ValidationReport::fail("domain ideal", {s}, "domain of " + S.name(s) + " is not an ideal");
    if (dom != action.domains[S.mul(S.star(s), s)])
      return ValidationReport::fail("domain consistency", {s}, "domain of " + S.name(s) + " differs from that of s*s");
    std::vector<Vec> images;
    for (const auto& a : dom.basis_vectors()) images.push_back(action.maps[s].apply(a));
    if (Subspace::span(f, A.dim(), images) != action.domains[S.star(s)])
      return ValidationReport::fail("bijectivity", {s},
                                    "alpha_" + S.name(s) + " does not map its domain onto the domain of s*");
    auto basis = dom.basis_vectors();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (action.maps[S.star(s)].apply(images[i]) != basis[i])
        return ValidationReport::fail("inverse", {s, i}, "alpha_s* o alpha_s is not the identity for s = " + S.name(s));
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (action.maps[s].apply(A.multiply(basis[i], basis[j])) != A.multiply(images[i], images[j]))
          return ValidationReport::fail("homomorphism", {s, i, j}, "alpha_" + S.name(s) + " is not multiplicative");
    }
  }
  for (std::size_t s = 0; s < S.size(); ++s)
    for (std::size_t t = 0; t < S.size(); ++t) {
      // dom(alpha_s o alpha_t) = alpha_t*(ran(alpha_t) cap dom(alpha_s))
      Subspace meet = subspace_intersect(action.domains[S.star(t)], action.domains[s]);
      std::vector<Vec> pre;
      for (const auto& a : meet.basis_vectors()) pre.push_back(action.maps[S.star(t)].apply(a));
      Subspace dom = Subspace::span(f, A.dim(), pre);
      std::size_t st = S.mul(s, t);
      if (dom != action.domains[st])
        return ValidationReport::fail("composition", {s, t}, "domain of alpha_s o alpha_t differs from that of alpha_st");
      for (const auto& a : dom.basis_vectors())
        if (action.maps[s].apply(action.maps[t].apply(a)) != action.maps[st].apply(a))
          return ValidationReport::fail("composition", {s, t}, "alpha_s o alpha_t differs from alpha_st");
    }
  Subspace total = Subspace::zero(f, A.dim());
  for (const auto& d : action.domains) total = subspace_sum(total, d);
  if (total.dim() != A.dim()) return ValidationReport::fail("covering", {}, "domains do not span the algebra");
  return ValidationReport::pass();
}

AlgebraAction function_action(const AmpleSystem& sys, const Field& field) {
  std::size_t n = sys.space_size();
  std::vector<std::string> labels;
  std::vector<SparseVec> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back(sys.point_name(x));
    table[x * n + x] = {{x, field.one()}};
  }
  auto algebra = std::make_shared<const FiniteAlgebra>(field, std::move(labels), std::move(table));
  AlgebraAction action{sys.semigroup(), algebra, {}, {}};
  for (std::size_t s = 0; s < sys.semigroup().size(); ++s) {
    std::vector<Vec> dom;
    Matrix m(field, n, n);
    for (auto x : sys.theta(s).domain()) {
      dom.push_back(field.unit_vec(n, x));
      m.at(sys.apply(s, x), x) = field.one();
    }
    action.domains.push_back(Subspace::span(field, n, dom));
    action.maps.push_back(std::move(m));
  }
  return action;
}

FellBundle semidirect_triple(const AlgebraAction& action) {
  const InverseSemigroup& S = action.semigroup;
  const FiniteAlgebra& A = *action.algebra;
  std::size_t n = S.size();
  auto fiber = [&](std::size_t s) -> const Subspace& { return action.domains[S.mul(s, S.star(s))]; };
  std::vector<std::vector<std::string>> labels(n);
  for (std::size_t s = 0; s < n; ++s)
    for (auto p : fiber(s).pivots()) labels[s].push_back(A.label(p));
  std::vector<std::vector<Vec>> mu(n * n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t st = S.mul(s, t);
      for (const auto& a : fiber(s).basis_vectors())
        for (const auto& b : fiber(t).basis_vectors()) {
          Vec c = action.maps[s].apply(A.multiply(action.maps[S.star(s)].apply(a), b));
          mu[s * n + t].push_back(coords_in(fiber(st), c, "product of fibers leaves the target fiber"));
        }
    }
  std::map<std::pair<std::size_t, std::size_t>, Matrix> inclusions;
  for (auto [s, t] : order_pairs(S)) {
    std::vector<Vec> cols;
    for (const auto& a : fiber(s).basis_vectors())
      cols.push_back(coords_in(fiber(t), a, "fiber of " + S.name(s) + " is not inside the fiber of " + S.name(t)));
    inclusions.emplace(std::make_pair(s, t), Matrix::from_columns(A.field(), fiber(t).dim(), cols));
  }
  return FellBundle(A.field(), S, std::move(labels), std::move(mu), std::move(inclusions));
}

SemidirectResult semidirect_bundle(const AlgebraAction& action) {
  ValidationReport report = validate_action(action);
  if (!report.ok) fail(ErrorKind::Validation, "not an action (" + report.axiom + "): " + report.detail);
  const InverseSemigroup& S = action.semigroup;
  const FiniteAlgebra& A = *action.algebra;
  for (std::size_t s = 0; s < S.size(); ++s) {
    const Subspace& fib = action.domains[S.mul(s, S.star(s))];
    std::vector<Vec> products;
    for (const auto& a : fib.basis_vectors())
      for (const auto& b : fib.basis_vectors()) products.push_back(A.multiply(a, b));
    Subspace span = Subspace::span(A.field(), A.dim(), products);
    if (span != fib) return SemidirectResult{std::nullopt, s, span};
  }
  return SemidirectResult{semidirect_triple(action), std::nullopt, std::nullopt};
}

Vec CrossSectionalAlgebra::ell_vector(std::size_t s, const Vec& fiber_vec) const {
  require(fiber_vec.size() == bundle->fiber_dim(s), ErrorKind::InvalidArgument, "vector is not in the fiber");
  Vec out = bundle->field().zero_vec(ell->dim());
  for (std::size_t i = 0; i < fiber_vec.size(); ++i) out[offsets[s] + i] = fiber_vec[i];
  return out;
}

CrossSectionalAlgebra cross_sectional(std::shared_ptr<const FellBundle> bundle) {
  const FellBundle& b = *bundle;
  const InverseSemigroup& S = b.semigroup();
  const Field& f = b.field();
  std::vector<std::size_t> offsets;
  std::vector<std::string> labels;
  std::size_t total = 0;
  for (std::size_t s = 0; s < S.size(); ++s) {
    offsets.push_back(total);
    total += b.fiber_dim(s);
    for (std::size_t i = 0; i < b.fiber_dim(s); ++i) labels.push_back(b.fiber_label(s, i) + ":" + S.name(s));
  }
  std::vector<SparseVec> table(total * total);
  for (std::size_t s = 0; s < S.size(); ++s)
    for (std::size_t t = 0; t < S.size(); ++t) {
      std::size_t st = S.mul(s, t);
      for (std::size_t i = 0; i < b.fiber_dim(s); ++i)
        for (std::size_t j = 0; j < b.fiber_dim(t); ++j) {
          SparseVec entry;
          for (const auto& term : to_sparse(f, b.basis_product(s, t, i, j)))
            entry.push_back({offsets[st] + term.index, term.coeff});
          table[(offsets[s] + i) * total + offsets[t] + j] = std::move(entry);
        }
    }
  auto ell = std::make_shared<const FiniteAlgebra>(f, std::move(labels), std::move(table));
  std::vector<Vec> relations;
  for (auto [s, t] : order_pairs(S)) {
    if (s == t) continue;
    const Matrix& j = b.inclusion(s, t);
    for (std::size_t i = 0; i < b.fiber_dim(s); ++i) {
      Vec rel = f.zero_vec(total);
      rel[offsets[s] + i] = f.one();
      for (std::size_t k = 0; k < b.fiber_dim(t); ++k) rel[offsets[t] + k] = f.sub(rel[offsets[t] + k], j.at(k, i));
      relations.push_back(std::move(rel));
    }
  }
  Subspace span = Subspace::span(f, total, relations);
  Subspace n = ideal_generate(*ell, relations);
  require(n == span, ErrorKind::Verification, "the span of the redundancy relations is not an ideal");
  QuotientAlgebra q = quotient_algebra(*ell, n);
  return CrossSectionalAlgebra{std::move(bundle), std::move(offsets), std::move(ell), std::move(n), std::move(q)};
}

CrossedProduct::CrossedProduct(AmpleSystem sys, Field field, CrossSectionalAlgebra csa)
    : sys_(std::move(sys)), field_(field), csa_(std::move(csa)) {
  const FellBundle& b = *csa_.bundle;
  for (std::size_t s = 0; s < sys_.semigroup().size(); ++s) {
    auto range = sys_.theta(s).range();
    require(range.size() == b.fiber_dim(s), ErrorKind::Verification, "fiber dimension differs from |ran(s)|");
    for (auto y : range) ell_labels_.push_back({y, s});
  }
  for (auto c : csa_.quotient.coset_columns) labels_.push_back(ell_labels_[c]);
}

std::shared_ptr<const CrossedProduct> CrossedProduct::build(const AmpleSystem& sys, const Field& field) {
  SemidirectResult res = semidirect_bundle(function_action(sys, field));
  require(res.bundle.has_value(), ErrorKind::Verification, "function algebra fiber is not idempotent");
  auto bundle = std::make_shared<const FellBundle>(std::move(*res.bundle));
  return std::shared_ptr<const CrossedProduct>(new CrossedProduct(sys, field, cross_sectional(bundle)));
}

std::string CrossedProduct::label_text(std::size_t i) const {
  return sys_.point_name(label(i).point) + ":" + sys_.semigroup().name(label(i).elem);
}

std::size_t CrossedProduct::ell_index(std::size_t y, std::size_t s) const {
  auto range = sys_.theta(s).range();
  for (std::size_t i = 0; i < range.size(); ++i)
    if (range[i] == y) return csa_.ell_index(s, i);
  return npos;
}

Vec CrossedProduct::ell_delta(std::size_t y, std::size_t s) const {
  std::size_t i = ell_index(y, s);
  require(i != npos, ErrorKind::InvalidArgument,
          sys_.point_name(y) + " is outside the range of " + sys_.semigroup().name(s));
  return field_.unit_vec(ell_dim(), i);
}

Vec CrossedProduct::delta(std::size_t y, std::size_t s) const { return project(ell_delta(y, s)); }

Vec CrossedProduct::ell_element(std::size_t s, const Vec& f) const {
  require(f.size() == sys_.space_size(), ErrorKind::InvalidArgument, "function has the wrong length");
  Vec out = field_.zero_vec(ell_dim());
  for (std::size_t y = 0; y < f.size(); ++y)
    if (!field_.is_zero(f[y])) vec_axpy(field_, out, f[y], ell_delta(y, s));
  return out;
}

Vec CrossedProduct::element(std::size_t s, const Vec& f) const { return project(ell_element(s, f)); }

std::vector<std::pair<std::size_t, Vec>> CrossedProduct::components(const Vec& v) const {
  Vec l = lift(v);
  std::map<std::size_t, Vec> parts;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (field_.is_zero(l[i])) continue;
    auto [it, fresh] = parts.try_emplace(ell_labels_[i].elem, field_.zero_vec(sys_.space_size()));
    it->second[ell_labels_[i].point] = l[i];
  }
  return {parts.begin(), parts.end()};
}

Vec indicator(const Field& field, std::size_t n, const std::vector<std::size_t>& points) {
  Vec v = field.zero_vec(n);
  for (auto x : points) v.at(x) = field.one();
  return v;
}

Vec bar_alpha(const AmpleSystem& sys, const Field& field, std::size_t s, const Vec& f) {
  require(f.size() == sys.space_size(), ErrorKind::InvalidArgument, "function has the wrong length");
  Vec out = field.zero_vec(f.size());
  for (auto x : sys.theta(s).domain()) out[sys.apply(s, x)] = f[x];
  return out;
}

Vec embed_function_with_order(const CrossedProduct& cp, const Vec& f, const std::vector<std::size_t>& order) {
  const AmpleSystem& sys = cp.system();
  const Field& field = cp.field();
  std::vector<bool> pending(f.size(), false);
  for (std::size_t x = 0; x < f.size(); ++x) pending[x] = !field.is_zero(f[x]);
  Vec out = field.zero_vec(cp.dim());
  for (auto e : order) {
    require(sys.semigroup().is_idempotent(e), ErrorKind::InvalidArgument, "decomposition order lists a non-idempotent");
    Vec part = field.zero_vec(f.size());
    for (std::size_t x = 0; x < f.size(); ++x)
      if (pending[x] && sys.in_domain(e, x)) {
        part[x] = f[x];
        pending[x] = false;
      }
    if (!vec_is_zero(field, part)) out = vec_add(field, out, cp.element(e, part));
  }
  for (std::size_t x = 0; x < f.size(); ++x)
    require(!pending[x], ErrorKind::InvalidArgument, "support of the function is not covered by the listed domains");
  return out;
}

Vec embed_function(const CrossedProduct& cp, const Vec& f) {
  return embed_function_with_order(cp, f, cp.system().semigroup().idempotents());
}

Vec local_unit(const CrossedProduct& cp, const Vec& b) {
  const AmpleSystem& sys = cp.system();
  const InverseSemigroup& S = sys.semigroup();
  const Field& field = cp.field();
  auto parts = cp.components(b);
  std::size_t n = sys.space_size();
  // Each point determines the pair (epsilon, varsigma) of the piece E it lies
  // in: epsilon = {s : x in C_s}, varsigma = {s : x in theta_s*(C_s)}.
  std::map<std::pair<std::vector<bool>, std::vector<bool>>, std::vector<std::size_t>> pieces;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<bool> eps(parts.size(), false), var(parts.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto [s, fs] = parts[i];
      eps[i] = !field.is_zero(fs[x]);
      var[i] = sys.in_domain(s, x) && !field.is_zero(fs[sys.apply(s, x)]);
      any = any || eps[i] || var[i];
    }
    if (any) pieces[{eps, var}].push_back(x);
  }
  Vec phi = field.zero_vec(cp.dim());
  for (const auto& [key, points] : pieces) {
    std::size_t e = npos;
    auto fold = [&](std::size_t idem) { e = e == npos ? idem : S.mul(e, idem); };
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::size_t s = parts[i].first;
      if (key.first[i]) fold(S.mul(s, S.star(s)));
      if (key.second[i]) fold(S.mul(S.star(s), s));
    }
    phi = vec_add(field, phi, cp.element(e, indicator(field, n, points)));
  }
  return phi;
}

Matrix CovariantRep::pi_of(const Field& field, const Vec& f) const {
  Matrix out(field, dim, dim);
  for (std::size_t x = 0; x < f.size(); ++x)
    if (!field.is_zero(f[x])) out = out + pi.at(x).scaled(f[x]);
  return out;
}

ValidationReport validate_covariant(const AmpleSystem& sys, const Field& field, const CovariantRep& cr) {
  const InverseSemigroup& S = sys.semigroup();
  std::size_t n = sys.space_size(), d = cr.dim;
  if (cr.pi.size() != n || cr.sigma.size() != S.size()) return ValidationReport::fail("shape", {}, "wrong number of operators");
  for (const auto& m : cr.pi)
    if (m.rows() != d || m.cols() != d) return ValidationReport::fail("shape", {}, "operator has the wrong size");
  for (const auto& m : cr.sigma)
    if (m.rows() != d || m.cols() != d) return ValidationReport::fail("shape", {}, "operator has the wrong size");
  Matrix zero(field, d, d);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (cr.pi[x] * cr.pi[y] != (x == y ? cr.pi[x] : zero))
        return ValidationReport::fail("pi homomorphism", {x, y}, "pi is not multiplicative on point indicators");
  std::vector<Vec> cols;
  for (const auto& m : cr.pi)
    for (std::size_t j = 0; j < d; ++j) cols.push_back(m.column(j));
  if (Subspace::span(field, d, cols).dim() != d) return ValidationReport::fail("pi nondegenerate", {}, "pi is degenerate");
  for (std::size_t s = 0; s < S.size(); ++s)
    for (std::size_t t = 0; t < S.size(); ++t)
      if (cr.sigma[s] * cr.sigma[t] != cr.sigma[S.mul(s, t)])
        return ValidationReport::fail("sigma homomorphism", {s, t}, "sigma is not multiplicative");
  for (std::size_t s = 0; s < S.size(); ++s)
    for (auto x : sys.theta(s).domain())
      if (cr.pi[sys.apply(s, x)] != cr.sigma[s] * cr.pi[x] * cr.sigma[S.star(s)])
        return ValidationReport::fail("covariance", {s, x}, "pi(alpha_s f) != sigma_s pi(f) sigma_s*");
  for (auto e : S.idempotents()) {
    std::vector<Vec> span;
    for (auto x : sys.theta(e).domain())
      for (std::size_t j = 0; j < d; ++j) span.push_back(cr.pi[x].column(j));
    if (Subspace::span(field, d, span) != column_space(cr.sigma[e]))
      return ValidationReport::fail("idempotent range", {e}, "range of sigma_e differs from pi(Lc(X_e)) V");
  }
  return ValidationReport::pass();
}

Representation integrate(const CrossedProduct& cp, const CovariantRep& cr) {
  ValidationReport report = validate_covariant(cp.system(), cp.field(), cr);
  if (!report.ok) fail(ErrorKind::Validation, "not a covariant representation (" + report.axiom + "): " + report.detail);
  std::vector<Matrix> images;
  for (std::size_t i = 0; i < cp.dim(); ++i) images.push_back(cr.pi[cp.label(i).point] * cr.sigma[cp.label(i).elem]);
  return Representation(cp.algebra(), cr.dim, std::move(images));
}

CovariantRep disintegrate(const CrossedProduct& cp, const Representation& rep) {
  require(rep.algebra() == cp.algebra(), ErrorKind::InvalidArgument, "representation of a different algebra");
  require(rep.is_nondegenerate(), ErrorKind::InvalidArgument, "cannot disintegrate a degenerate representation");
  const AmpleSystem& sys = cp.system();
  const Field& field = cp.field();
  std::size_t n = sys.space_size();
  CovariantRep cr{rep.dim(), {}, {}};
  for (std::size_t x = 0; x < n; ++x) cr.pi.push_back(rep.image_of(embed_function(cp, field.unit_vec(n, x))));
  for (std::size_t s = 0; s < sys.semigroup().size(); ++s)
    cr.sigma.push_back(rep.image_of(cp.element(s, indicator(field, n, sys.theta(s).range()))));
  ValidationReport report = validate_covariant(sys, field, cr);
  if (!report.ok) fail(ErrorKind::Verification, "disintegration is not covariant (" + report.axiom + "): " + report.detail);
  return cr;
}

Matrix sigma_via_sum(const CrossedProduct& cp, const Representation& rep, std::size_t s) {
  const AmpleSystem& sys = cp.system();
  const Field& field = cp.field();
  std::size_t n = sys.space_size(), d = rep.dim();
  CovariantRep cr = disintegrate(cp, rep);
  // Express each standard vector as sum pi(delta_x) e_j c_{x,j}.
  std::vector<Vec> cols;
  std::vector<std::pair<std::size_t, std::size_t>> index;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t j = 0; j < d; ++j) {
      cols.push_back(cr.pi[x].column(j));
      index.emplace_back(x, j);
    }
  Matrix span = Matrix::from_columns(field, d, cols);
  std::vector<Matrix> moved;
  for (std::size_t x = 0; x < n; ++x) moved.push_back(rep.image_of(cp.element(s, bar_alpha(sys, field, s, field.unit_vec(n, x)))));
  Matrix out(field, d, d);
  for (std::size_t k = 0; k < d; ++k) {
    auto c = solve(span, field.unit_vec(d, k));
    require(c.has_value(), ErrorKind::Verification, "pi is degenerate");
    Vec col = field.zero_vec(d);
    for (std::size_t m = 0; m < index.size(); ++m)
      if (!field.is_zero((*c)[m])) vec_axpy(field, col, (*c)[m], moved[index[m].first].column(index[m].second));
    for (std::size_t r = 0; r < d; ++r) out.at(r, k) = col[r];
  }
  return out;
}

ValidationReport pre_representation_check(const CrossSectionalAlgebra& csa, const BundleRep& rep) {
  const FellBundle& b = *csa.bundle;
  const InverseSemigroup& S = b.semigroup();
  const FiniteAlgebra& T = *rep.target;
  if (rep.maps.size() != S.size()) return ValidationReport::fail("shape", {}, "need one map per element");
  for (std::size_t s = 0; s < S.size(); ++s)
    if (rep.maps[s].rows() != T.dim() || rep.maps[s].cols() != b.fiber_dim(s))
      return ValidationReport::fail("shape", {s}, "map has the wrong shape");
  for (std::size_t s = 0; s < S.size(); ++s)
    for (std::size_t t = 0; t < S.size(); ++t)
      for (std::size_t i = 0; i < b.fiber_dim(s); ++i)
        for (std::size_t j = 0; j < b.fiber_dim(t); ++j)
          if (rep.maps[S.mul(s, t)].apply(b.basis_product(s, t, i, j)) !=
              T.multiply(rep.maps[s].column(i), rep.maps[t].column(j)))
            return ValidationReport::fail("multiplicativity", {s, t, i, j}, "pi_st(ab) != pi_s(a) pi_t(b)");
  return ValidationReport::pass();
}

ValidationReport inclusion_check(const CrossSectionalAlgebra& csa, const BundleRep& rep) {
  const FellBundle& b = *csa.bundle;
  for (const auto& [key, j] : b.inclusions())
    if (rep.maps.at(key.second) * j != rep.maps.at(key.first))
      return ValidationReport::fail("inclusion", {key.first, key.second}, "pi_t o j_{t,s} != pi_s");
  return ValidationReport::pass();
}

namespace {

Matrix ell_map(const CrossSectionalAlgebra& csa, const BundleRep& rep) {
  const FellBundle& b = *csa.bundle;
  Matrix m(b.field(), rep.target->dim(), csa.ell->dim());
  for (std::size_t s = 0; s < b.semigroup().size(); ++s) m.set_block(0, csa.offsets[s], rep.maps.at(s));
  return m;
}

}  // namespace

bool kills_redundancy(const CrossSectionalAlgebra& csa, const BundleRep& rep) {
  Matrix m = ell_map(csa, rep);
  for (const auto& v : csa.redundancy.basis_vectors())
    if (!vec_is_zero(csa.bundle->field(), m.apply(v))) return false;
  return true;
}

Matrix extend_bundle_rep(const CrossSectionalAlgebra& csa, const BundleRep& rep) {
  for (const auto& report : {pre_representation_check(csa, rep), inclusion_check(csa, rep)})
    if (!report.ok) fail(ErrorKind::Validation, "not a bundle representation (" + report.axiom + "): " + report.detail);
  Matrix m = ell_map(csa, rep);
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < csa.algebra()->dim(); ++k)
    cols.push_back(m.apply(csa.quotient.lift(csa.bundle->field().unit_vec(csa.algebra()->dim(), k))));
  return Matrix::from_columns(csa.bundle->field(), rep.target->dim(), cols);
}

bool bundle_rep_nondegenerate(const CrossSectionalAlgebra& csa, const BundleRep& rep, std::size_t d) {
  const Field& f = csa.bundle->field();
  require(rep.target->dim() == d * d, ErrorKind::InvalidArgument, "target is not a d x d matrix algebra");
  std::vector<Vec> cols;
  for (const auto& m : rep.maps)
    for (std::size_t i = 0; i < m.cols(); ++i) {
      Matrix op = reshape_square(f, m.column(i), d);
      for (std::size_t j = 0; j < d; ++j) cols.push_back(op.column(j));
    }
  return Subspace::span(f, d, cols).dim() == d;
}

Representation matrix_map_to_representation(const AlgebraPtr& source, std::size_t d, const Matrix& phi) {
  require(phi.rows() == d * d && phi.cols() == source->dim(), ErrorKind::InvalidArgument, "map has the wrong shape");
  std::vector<Matrix> images;
  for (std::size_t k = 0; k < source->dim(); ++k) images.push_back(reshape_square(source->field(), phi.column(k), d));
  return Representation(source, d, std::move(images));
}

UnitizationIso unitization_iso(const AmpleSystem& sys, const Field& field) {
  auto cp = CrossedProduct::build(sys, field);
  auto cpp = CrossedProduct::build(sys.unitize(), field);
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < cp->dim(); ++k) cols.push_back(cpp->delta(cp->label(k).point, cp->label(k).elem));
  Matrix map = Matrix::from_columns(field, cpp->dim(), cols);
  require(map.rows() == map.cols() && inverse(map).has_value(), ErrorKind::Verification,
          "unitization map is not bijective");
  if (auto w = homomorphism_violation(*cp->algebra(), *cpp->algebra(), map))
    fail(ErrorKind::Verification, "unitization map is not multiplicative on " + cp->label_text(w->first) + ", " +
                                      cp->label_text(w->second));
  return UnitizationIso{cp, cpp, map};
}

}  // namespace ehalg
