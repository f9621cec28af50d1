#include "ehalg/dynsys.hpp"

#include <algorithm>
#include <set>

namespace ehalg {

PartialBijection::PartialBijection(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (auto y : image_) {
    if (y == npos) continue;
    require(y < image_.size(), ErrorKind::InvalidArgument, "partial bijection maps outside the space");
    require(!hit[y], ErrorKind::InvalidArgument, "partial bijection is not injective");
    hit[y] = true;
  }
}

PartialBijection PartialBijection::identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  for (std::size_t x = 0; x < n; ++x) image[x] = x;
  return PartialBijection(std::move(image));
}

PartialBijection PartialBijection::identity_on(std::size_t n, const std::vector<std::size_t>& domain) {
  std::vector<std::size_t> image(n, npos);
  for (auto x : domain) image.at(x) = x;
  return PartialBijection(std::move(image));
}

bool PartialBijection::in_range(std::size_t y) const {
  return std::find(image_.begin(), image_.end(), y) != image_.end();
}

std::vector<std::size_t> PartialBijection::domain() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < image_.size(); ++x)
    if (image_[x] != npos) out.push_back(x);
  return out;
}

std::vector<std::size_t> PartialBijection::range() const {
  std::vector<std::size_t> out;
  for (auto y : image_)
    if (y != npos) out.push_back(y);
  std::sort(out.begin(), out.end());
  return out;
}

PartialBijection PartialBijection::compose(const PartialBijection& other) const {
  require(other.space_size() == space_size(), ErrorKind::InvalidArgument, "partial bijections on different spaces");
  std::vector<std::size_t> image(space_size(), npos);
  for (std::size_t x = 0; x < space_size(); ++x)
    if (other.in_domain(x)) image[x] = image_[other(x)];
  return PartialBijection(std::move(image));
}

PartialBijection PartialBijection::inverse() const {
  std::vector<std::size_t> image(space_size(), npos);
  for (std::size_t x = 0; x < space_size(); ++x)
    if (in_domain(x)) image[image_[x]] = x;
  return PartialBijection(std::move(image));
}

ValidationReport validate_system(const SystemSpec& spec) {
  const InverseSemigroup& s = spec.semigroup;
  std::size_t n = spec.points.size();
  if (spec.theta.size() != s.size())
    return ValidationReport::fail("shape", {}, "need one partial bijection per semigroup element");
  for (std::size_t a = 0; a < s.size(); ++a)
    if (spec.theta[a].space_size() != n)
      return ValidationReport::fail("shape", {a}, "partial bijection of " + s.name(a) + " acts on the wrong space");
  ValidationReport semigroup = s.validate();
  if (!semigroup.ok) return semigroup;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) {
      PartialBijection lhs = spec.theta[a].compose(spec.theta[b]);
      const PartialBijection& rhs = spec.theta[s.mul(a, b)];
      for (std::size_t x = 0; x < n; ++x)
        if (lhs(x) != rhs(x))
          return ValidationReport::fail("composition", {a, b, x},
                                        "theta_" + s.name(a) + " o theta_" + s.name(b) + " differs from theta_" +
                                            s.name(s.mul(a, b)) + " at " + spec.points[x]);
    }
  for (std::size_t a = 0; a < s.size(); ++a) {
    PartialBijection inv = spec.theta[a].inverse();
    const PartialBijection& st = spec.theta[s.star(a)];
    for (std::size_t x = 0; x < n; ++x)
      if (inv(x) != st(x))
        return ValidationReport::fail("inverse", {a, x},
                                      "theta_" + s.name(s.star(a)) + " is not the inverse of theta_" + s.name(a) +
                                          " at " + spec.points[x]);
  }
  for (std::size_t x = 0; x < n; ++x) {
    bool covered = false;
    for (std::size_t a = 0; a < s.size() && !covered; ++a) covered = spec.theta[a].in_domain(x);
    if (!covered) return ValidationReport::fail("covering", {x}, "no domain contains " + spec.points[x]);
  }
  return ValidationReport::pass();
}

std::size_t IsotropyGroup::index_of(const Germ& g) const {
  auto it = std::find(elements.begin(), elements.end(), g);
  require(it != elements.end(), ErrorKind::InvalidArgument, "germ is not in the isotropy group");
  return static_cast<std::size_t>(it - elements.begin());
}

AmpleSystem::AmpleSystem(SystemSpec spec) : spec_(std::move(spec)) {
  ValidationReport report = validate_system(spec_);
  if (!report.ok) fail(ErrorKind::Validation, "invalid system (" + report.axiom + "): " + report.detail);
  for (std::size_t x = 0; x < spec_.points.size(); ++x)
    for (std::size_t y = 0; y < x; ++y)
      require(spec_.points[x] != spec_.points[y], ErrorKind::InvalidArgument,
              "duplicate point name '" + spec_.points[x] + "'");
  std::size_t n = space_size();
  germ_rep_.assign(semigroup().size() * n, npos);
  for (std::size_t s = 0; s < semigroup().size(); ++s)
    for (std::size_t x = 0; x < n; ++x) {
      if (!in_domain(s, x)) continue;
      for (std::size_t t = 0; t <= s; ++t)
        if (in_domain(t, x) && germ_equivalent(s, t, x)) {
          germ_rep_[s * n + x] = t;
          break;
        }
    }
}

std::size_t AmpleSystem::find_point(const std::string& name) const {
  auto it = std::find(spec_.points.begin(), spec_.points.end(), name);
  return static_cast<std::size_t>(it - spec_.points.begin());
}

bool AmpleSystem::germ_equivalent(std::size_t s, std::size_t t, std::size_t x) const {
  const InverseSemigroup& S = semigroup();
  for (std::size_t e = 0; e < S.size(); ++e)
    if (S.is_idempotent(e) && in_domain(e, x) && S.mul(s, e) == S.mul(t, e)) return true;
  return false;
}

Germ AmpleSystem::germ_of(std::size_t s, std::size_t x) const {
  require(s < semigroup().size() && x < space_size(), ErrorKind::InvalidArgument, "germ index out of range");
  require(in_domain(s, x), ErrorKind::InvalidArgument,
          point_name(x) + " is outside the domain of " + semigroup().name(s));
  return {germ_rep_[s * space_size() + x], x};
}

Germ AmpleSystem::unit_germ(std::size_t x) const {
  for (auto e : semigroup().idempotents())
    if (in_domain(e, x)) return germ_of(e, x);
  fail(ErrorKind::Verification, "no idempotent is defined at " + point_name(x));
}

std::vector<Germ> AmpleSystem::germs() const {
  std::set<Germ> all;
  for (std::size_t s = 0; s < semigroup().size(); ++s)
    for (std::size_t x = 0; x < space_size(); ++x)
      if (in_domain(s, x)) all.insert(germ_of(s, x));
  return {all.begin(), all.end()};
}

std::vector<Germ> AmpleSystem::L(std::size_t x) const {
  std::set<Germ> out;
  for (std::size_t s = 0; s < semigroup().size(); ++s)
    if (in_domain(s, x)) out.insert(germ_of(s, x));
  return {out.begin(), out.end()};
}

IsotropyGroup AmpleSystem::G(std::size_t x) const {
  IsotropyGroup g{x, {}, {}, 0, {}};
  for (const auto& germ : L(x))
    if (target(germ) == x) g.elements.push_back(germ);
  std::size_t n = g.size();
  g.mult.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g.mult[i * n + j] = g.index_of(germ_of(semigroup().mul(g.elements[i].elem, g.elements[j].elem), x));
  g.identity = g.index_of(unit_germ(x));
  for (std::size_t i = 0; i < n; ++i) g.inverse.push_back(g.index_of(germ_of(semigroup().star(g.elements[i].elem), x)));
  return g;
}

std::vector<std::size_t> AmpleSystem::orbit(std::size_t x) const {
  std::set<std::size_t> out;
  for (std::size_t s = 0; s < semigroup().size(); ++s)
    if (in_domain(s, x)) out.insert(apply(s, x));
  return {out.begin(), out.end()};
}

std::vector<std::size_t> AmpleSystem::orbit_representatives() const {
  std::vector<std::size_t> reps;
  std::vector<bool> seen(space_size(), false);
  for (std::size_t x = 0; x < space_size(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (auto y : orbit(x)) seen[y] = true;
  }
  return reps;
}

AmpleSystem AmpleSystem::unitize() const {
  SystemSpec spec{semigroup().unitize(), spec_.points, spec_.theta};
  spec.theta.push_back(PartialBijection::identity(space_size()));
  return AmpleSystem(std::move(spec));
}

std::string germ_label(const AmpleSystem& sys, const Germ& g) {
  return "[" + sys.semigroup().name(g.elem) + "," + sys.point_name(g.point) + "]";
}

FiniteAlgebra isotropy_group_algebra(const IsotropyGroup& g, const AmpleSystem& sys, const Field& field) {
  std::vector<std::string> labels;
  for (const auto& germ : g.elements) labels.push_back(germ_label(sys, germ));
  return group_algebra(field, labels, g.mult);
}

FiniteAlgebra isotropy_group_algebra(const AmpleSystem& sys, std::size_t x, const Field& field) {
  return isotropy_group_algebra(sys.G(x), sys, field);
}

}  // namespace ehalg
