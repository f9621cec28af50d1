#include "ehalg/germoid.hpp"

#include <algorithm>
#include <set>

namespace ehalg {

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> labels, std::vector<std::size_t> units,
                               std::vector<std::size_t> d, std::vector<std::size_t> r,
                               std::vector<std::size_t> compose)
    : labels_(std::move(labels)), units_(std::move(units)), d_(std::move(d)), r_(std::move(r)),
      compose_(std::move(compose)) {
  std::size_t n = labels_.size();
  require(n > 0, ErrorKind::InvalidArgument, "groupoid has no elements");
  require(n <= 64, ErrorKind::Guard, "groupoid has more than 64 elements");
  require(d_.size() == n && r_.size() == n, ErrorKind::InvalidArgument, "d and r need one entry per element");
  require(compose_.size() == n * n, ErrorKind::InvalidArgument, "composition table must be n x n");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  require(seen.size() == n, ErrorKind::InvalidArgument, "groupoid labels are not unique");
  for (auto u : units_) require(u < n, ErrorKind::InvalidArgument, "unit index out of range");
  for (std::size_t g = 0; g < n; ++g)
    require(d_[g] < n && r_[g] < n, ErrorKind::InvalidArgument, "d or r of " + labels_[g] + " out of range");
  for (auto c : compose_) require(c == npos || c < n, ErrorKind::InvalidArgument, "composition entry out of range");
  inverse_.assign(n, npos);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (this->compose(g, h) == r_[g] && this->compose(h, g) == d_[g]) {
        inverse_[g] = h;
        break;
      }
}

FiniteGroupoid FiniteGroupoid::checked(std::vector<std::string> labels, std::vector<std::size_t> units,
                                       std::vector<std::size_t> d, std::vector<std::size_t> r,
                                       std::vector<std::size_t> compose) {
  FiniteGroupoid g(std::move(labels), std::move(units), std::move(d), std::move(r), std::move(compose));
  auto report = g.validate();
  require(report.ok, ErrorKind::Validation, "invalid groupoid (" + report.axiom + "): " + report.detail);
  return g;
}

std::size_t FiniteGroupoid::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? size() : static_cast<std::size_t>(it - labels_.begin());
}

bool FiniteGroupoid::is_unit(std::size_t g) const { return std::find(units_.begin(), units_.end(), g) != units_.end(); }

ValidationReport FiniteGroupoid::validate() const {
  std::size_t n = size();
  std::set<std::size_t> unit_set(units_.begin(), units_.end());
  if (unit_set.size() != units_.size()) return ValidationReport::fail("units", {}, "repeated unit");
  for (auto u : units_)
    if (d_[u] != u || r_[u] != u) return ValidationReport::fail("units", {u}, label(u) + " is not its own source and range");
  for (std::size_t g = 0; g < n; ++g)
    if (!unit_set.count(d_[g]) || !unit_set.count(r_[g]))
      return ValidationReport::fail("units", {g}, "d or r of " + label(g) + " is not a unit");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t ab = compose(a, b);
      if ((ab != npos) != (d_[a] == r_[b]))
        return ValidationReport::fail("composable pairs", {a, b},
                                      label(a) + label(b) + (ab == npos ? " undefined" : " defined") +
                                          " but d(" + label(a) + ") " + (d_[a] == r_[b] ? "=" : "!=") + " r(" +
                                          label(b) + ")");
      if (ab != npos && (d_[ab] != d_[b] || r_[ab] != r_[a]))
        return ValidationReport::fail("source and range", {a, b}, "d or r of " + label(a) + label(b) + " is wrong");
    }
  for (std::size_t g = 0; g < n; ++g)
    if (compose(r_[g], g) != g || compose(g, d_[g]) != g)
      return ValidationReport::fail("unit law", {g}, "units do not act trivially on " + label(g));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t ab = compose(a, b);
      if (ab == npos) continue;
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t bc = compose(b, c);
        if (bc == npos) continue;
        if (compose(ab, c) != compose(a, bc))
          return ValidationReport::fail("associativity", {a, b, c},
                                        "(" + label(a) + label(b) + ")" + label(c) + " != " + label(a) + "(" +
                                            label(b) + label(c) + ")");
      }
    }
  for (std::size_t g = 0; g < n; ++g)
    if (inverse_[g] == npos) return ValidationReport::fail("inverse", {g}, label(g) + " has no inverse");
  return ValidationReport::pass();
}

FiniteGroupoid FiniteGroupoid::trivial() { return FiniteGroupoid({"u"}, {0}, {0}, {0}, {0}); }

FiniteGroupoid FiniteGroupoid::from_group(const InverseSemigroup& group) {
  std::size_t n = group.size();
  auto e = group.idempotents();
  require(e.size() == 1, ErrorKind::InvalidArgument, "not a group");
  return FiniteGroupoid::checked(group.names(), {e[0]}, std::vector<std::size_t>(n, e[0]),
                                 std::vector<std::size_t>(n, e[0]), group.mult_table());
}

FiniteGroupoid FiniteGroupoid::pair(const std::vector<std::string>& points) {
  std::size_t n = points.size();
  std::vector<std::string> labels;
  std::vector<std::size_t> units, d, r, compose(n * n * n * n, npos);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      labels.push_back("(" + points[x] + "," + points[y] + ")");
      d.push_back(y * n + y);
      r.push_back(x * n + x);
      if (x == y) units.push_back(x * n + x);
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) compose[(x * n + y) * n * n + (y * n + z)] = x * n + z;
  return FiniteGroupoid::checked(std::move(labels), std::move(units), std::move(d), std::move(r), std::move(compose));
}

std::size_t GermGroupoid::index_of(const Germ& g) const {
  auto it = std::lower_bound(germs.begin(), germs.end(), g);
  require(it != germs.end() && *it == g, ErrorKind::InvalidArgument, "not a canonical germ");
  return static_cast<std::size_t>(it - germs.begin());
}

GermGroupoid germ_groupoid(const AmpleSystem& sys) {
  const InverseSemigroup& S = sys.semigroup();
  std::vector<Germ> germs = sys.germs();
  std::size_t n = germs.size();
  GermGroupoid out{FiniteGroupoid({"u"}, {0}, {0}, {0}, {0}), germs, {}};
  std::vector<std::string> labels;
  for (const auto& g : germs) labels.push_back(germ_label(sys, g));
  std::vector<std::size_t> units;
  for (std::size_t x = 0; x < sys.space_size(); ++x) units.push_back(out.index_of(sys.unit_germ(x)));
  std::vector<std::size_t> d(n), r(n), compose(n * n, npos);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = units[germs[i].point];
    r[i] = units[sys.target(germs[i])];
  }
  // [s,x][t,y] = [st,y] when x = theta_t(y)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (germs[i].point == sys.target(germs[j]))
        compose[i * n + j] = out.index_of(sys.germ_of(S.mul(germs[i].elem, germs[j].elem), germs[j].point));
  out.unit_of_point = units;
  out.groupoid = FiniteGroupoid::checked(std::move(labels), std::move(units), std::move(d), std::move(r),
                                         std::move(compose));
  return out;
}

FiniteAlgebra steinberg_algebra(const FiniteGroupoid& g, const Field& field) {
  std::size_t n = g.size();
  std::vector<SparseVec> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.compose(a, b) != npos) table[a * n + b] = {Term{g.compose(a, b), field.one()}};
  return FiniteAlgebra(field, g.labels(), std::move(table));
}

std::vector<std::size_t> groupoid_isotropy(const FiniteGroupoid& g, std::size_t u) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.d(i) == u && g.r(i) == u) out.push_back(i);
  return out;
}

Vec bold_gamma(const FiniteGroupoid& g, std::size_t u, const Vec& f) {
  Vec out;
  for (auto i : groupoid_isotropy(g, u)) out.push_back(f.at(i));
  return out;
}

Matrix groupoid_module_action(const FiniteGroupoid& g, std::size_t u, const Field& field, const Vec& f) {
  std::vector<std::size_t> basis;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.d(i) == u) basis.push_back(i);
  std::vector<std::size_t> pos(g.size(), npos);
  for (std::size_t k = 0; k < basis.size(); ++k) pos[basis[k]] = k;
  Matrix out(field, basis.size(), basis.size());
  for (std::size_t m = 0; m < g.size(); ++m) {
    if (field.is_zero(f.at(m))) continue;
    for (std::size_t l = 0; l < basis.size(); ++l) {
      std::size_t mv = g.compose(m, basis[l]);
      if (mv == npos) continue;
      out.at(pos[mv], l) = field.add(out.at(pos[mv], l), f[m]);
    }
  }
  return out;
}

namespace {

Matrix unit_columns(const Field& f, std::size_t rows, const std::vector<std::size_t>& targets) {
  Matrix m(f, rows, targets.size());
  for (std::size_t j = 0; j < targets.size(); ++j) m.at(targets[j], j) = f.one();
  return m;
}

std::vector<std::size_t> members(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

}  // namespace

PhiIso phi_iso(const CrossedProductPtr& cp) {
  const AmpleSystem& sys = cp->system();
  const Field& f = cp->field();
  GermGroupoid gg = germ_groupoid(sys);
  auto steinberg = std::make_shared<const FiniteAlgebra>(steinberg_algebra(gg.groupoid, f));
  require(cp->dim() == gg.germs.size(), ErrorKind::Verification,
          "crossed product has dimension " + std::to_string(cp->dim()) + " but there are " +
              std::to_string(gg.germs.size()) + " germs");
  std::vector<std::size_t> targets;
  for (std::size_t i = 0; i < cp->dim(); ++i) {
    const auto& lab = cp->label(i);
    std::size_t pre = sys.apply(sys.semigroup().star(lab.elem), lab.point);
    targets.push_back(gg.index_of(sys.germ_of(lab.elem, pre)));
  }
  Matrix map = unit_columns(f, gg.germs.size(), targets);
  require(inverse(map).has_value(), ErrorKind::Verification, "Phi is not a bijection on the bases");
  if (auto bad = homomorphism_violation(*cp->algebra(), *steinberg, map))
    fail(ErrorKind::Verification, "Phi is not multiplicative on (" + cp->label_text(bad->first) + ", " +
                                      cp->label_text(bad->second) + ")");
  for (std::size_t x = 0; x < sys.space_size(); ++x) {
    InductionContext ctx(cp, x);
    auto iso = groupoid_isotropy(gg.groupoid, gg.unit_of_point[x]);
    for (std::size_t k = 0; k < cp->dim(); ++k) {
      Vec bg = bold_gamma(gg.groupoid, gg.unit_of_point[x], map.column(k));
      Vec moved = f.zero_vec(ctx.isotropy().size());
      for (std::size_t j = 0; j < iso.size(); ++j) moved[ctx.isotropy().index_of(gg.germs[iso[j]])] = bg[j];
      require(moved == ctx.gamma(f.unit_vec(cp->dim(), k)), ErrorKind::Verification,
              "Gamma triangle fails at " + sys.point_name(x) + " on " + cp->label_text(k));
    }
  }
  return PhiIso{cp, std::move(gg), std::move(steinberg), std::move(map)};
}

Subspace groupoid_induced_ideal(const PhiIso& phi, std::size_t x, const Subspace& i) {
  InductionContext ctx(phi.cp, x);
  std::vector<Vec> images;
  for (const auto& v : induced_ideal(ctx, i).basis_vectors()) images.push_back(phi.map.apply(v));
  return Subspace::span(phi.cp->field(), phi.map.rows(), images);
}

std::vector<std::uint64_t> bisections(const FiniteGroupoid& g, std::size_t guard) {
  require(g.size() <= guard, ErrorKind::Guard,
          "groupoid has " + std::to_string(g.size()) + " elements, bisection guard is " + std::to_string(guard));
  std::vector<std::uint64_t> out;
  // d and r values are element indices, so they fit the same 64-bit masks.
  auto extend = [&](auto&& self, std::size_t i, std::uint64_t chosen, std::uint64_t ds, std::uint64_t rs) -> void {
    if (i == g.size()) {
      out.push_back(chosen);
      return;
    }
    self(self, i + 1, chosen, ds, rs);
    std::uint64_t db = std::uint64_t{1} << g.d(i), rb = std::uint64_t{1} << g.r(i);
    if (!(ds & db) && !(rs & rb)) self(self, i + 1, chosen | (std::uint64_t{1} << i), ds | db, rs | rb);
  };
  extend(extend, 0, 0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::string bisection_name(const FiniteGroupoid& g, std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (auto i : members(mask)) {
    out += (first ? "" : ",") + g.label(i);
    first = false;
  }
  return out + "}";
}

std::uint64_t bisection_product(const FiniteGroupoid& g, std::uint64_t u, std::uint64_t v) {
  std::uint64_t out = 0;
  for (auto a : members(u))
    for (auto b : members(v))
      if (g.compose(a, b) != npos) out |= std::uint64_t{1} << g.compose(a, b);
  return out;
}

std::uint64_t bisection_star(const FiniteGroupoid& g, std::uint64_t u) {
  std::uint64_t out = 0;
  for (auto a : members(u)) out |= std::uint64_t{1} << g.inverse(a);
  return out;
}

BisectionSemigroup bisection_semigroup_of(const FiniteGroupoid& g, const std::vector<std::uint64_t>& family) {
  std::size_t n = family.size();
  auto index = [&](std::uint64_t m) {
    auto it = std::find(family.begin(), family.end(), m);
    return it == family.end() ? npos : static_cast<std::size_t>(it - family.begin());
  };
  std::vector<std::size_t> mult(n * n), star(n);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(bisection_name(g, family[a]));
    star[a] = index(bisection_star(g, family[a]));
    require(star[a] != npos, ErrorKind::Validation, "family is not closed under star at " + names.back());
    for (std::size_t b = 0; b < n; ++b) {
      mult[a * n + b] = index(bisection_product(g, family[a], family[b]));
      require(mult[a * n + b] != npos, ErrorKind::Validation,
              "family is not closed under product at " + bisection_name(g, family[a]) + bisection_name(g, family[b]));
    }
  }
  return BisectionSemigroup{family, InverseSemigroup(n, std::move(mult), std::move(star), std::move(names))};
}

BisectionSemigroup bisection_semigroup(const FiniteGroupoid& g, std::size_t guard) {
  return bisection_semigroup_of(g, bisections(g, guard));
}

AmpleSystem intrinsic_action(const FiniteGroupoid& g, const std::vector<std::uint64_t>& family) {
  BisectionSemigroup sa = bisection_semigroup_of(g, family);
  std::uint64_t all = g.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.size()) - 1, covered = 0;
  for (auto m : family) covered |= m;
  if (covered != all) {
    std::size_t missing = members(all & ~covered).front();
    fail(ErrorKind::Validation, "hypothesis (i) fails: no bisection of the family contains " + g.label(missing));
  }
  for (auto u : family)
    for (auto v : family)
      for (auto a : members(u & v)) {
        bool found = false;
        for (auto w : family)
          if ((w >> a & 1) && (w & ~(u & v)) == 0) {
            found = true;
            break;
          }
        require(found, ErrorKind::Validation,
                "hypothesis (ii) fails: (" + bisection_name(g, u) + ", " + bisection_name(g, v) + ", " + g.label(a) +
                    ")");
      }
  std::vector<std::size_t> pos(g.size(), npos);
  std::vector<std::string> points;
  for (std::size_t k = 0; k < g.units().size(); ++k) {
    pos[g.units()[k]] = k;
    points.push_back(g.label(g.units()[k]));
  }
  std::vector<PartialBijection> theta;
  for (auto m : family) {
    std::vector<std::size_t> image(points.size(), npos);
    for (auto a : members(m)) image[pos[g.d(a)]] = pos[g.r(a)];
    theta.emplace_back(std::move(image));
  }
  return AmpleSystem(SystemSpec{std::move(sa.semigroup), std::move(points), std::move(theta)});
}

SteinbergCrossedIso steinberg_as_crossed_product(const FiniteGroupoid& g, const Field& field, std::size_t guard) {
  BisectionSemigroup sa = bisection_semigroup(g, guard);
  AmpleSystem sys = intrinsic_action(g, sa.masks);
  CrossedProductPtr cp = CrossedProduct::build(sys, field);
  PhiIso phi = phi_iso(cp);
  const GermGroupoid& gg = phi.gg;
  std::size_t n = gg.germs.size();
  std::vector<std::size_t> psi(n, npos);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t x = g.units()[gg.germs[i].point];
    for (auto a : members(sa.masks[gg.germs[i].elem]))
      if (g.d(a) == x) psi[i] = a;
    require(psi[i] != npos, ErrorKind::Verification, "germ " + gg.groupoid.label(i) + " has no arrow over its base");
  }
  std::vector<std::size_t> sorted = psi;
  std::sort(sorted.begin(), sorted.end());
  require(n == g.size() && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), ErrorKind::Verification,
          "germ groupoid is not in bijection with the groupoid");
  const FiniteGroupoid& h = gg.groupoid;
  for (std::size_t i = 0; i < n; ++i) {
    require(psi[h.d(i)] == g.d(psi[i]) && psi[h.r(i)] == g.r(psi[i]), ErrorKind::Verification,
            "germ map does not preserve d and r at " + h.label(i));
    require(psi[h.inverse(i)] == g.inverse(psi[i]), ErrorKind::Verification,
            "germ map does not preserve inverses at " + h.label(i));
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t ij = h.compose(i, j), image = g.compose(psi[i], psi[j]);
      require(ij == npos ? image == npos : image == psi[ij], ErrorKind::Verification,
              "germ map does not preserve the product of " + h.label(i) + " and " + h.label(j));
    }
  }
  auto steinberg = std::make_shared<const FiniteAlgebra>(steinberg_algebra(g, field));
  Matrix map = unit_columns(field, n, psi) * phi.map;
  require(inverse(map).has_value(), ErrorKind::Verification, "algebra map is not invertible");
  if (auto bad = homomorphism_violation(*cp->algebra(), *steinberg, map))
    fail(ErrorKind::Verification, "algebra map is not multiplicative on (" + cp->label_text(bad->first) + ", " +
                                      cp->label_text(bad->second) + ")");
  return SteinbergCrossedIso{std::move(sa), cp, phi.gg, std::move(psi), std::move(steinberg), std::move(map)};
}

}  // namespace ehalg
