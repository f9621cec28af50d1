#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ehalg/algebra.hpp"
#include "ehalg/isemigroup.hpp"

namespace ehalg {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Injective map from a subset of {0..n-1} into {0..n-1}.
class PartialBijection {
 public:
  // image[x] is the image of x, or npos when x is outside the domain.
  explicit PartialBijection(std::vector<std::size_t> image);
  static PartialBijection identity(std::size_t n);
  static PartialBijection identity_on(std::size_t n, const std::vector<std::size_t>& domain);
  static PartialBijection empty(std::size_t n) { return PartialBijection(std::vector<std::size_t>(n, npos)); }

  std::size_t space_size() const { return image_.size(); }
  bool in_domain(std::size_t x) const { return image_.at(x) != npos; }
  bool in_range(std::size_t y) const;
  std::size_t operator()(std::size_t x) const { return image_.at(x); }
  std::vector<std::size_t> domain() const;
  std::vector<std::size_t> range() const;
  const std::vector<std::size_t>& table() const { return image_; }

  // (this o other) on the largest domain where it makes sense.
  PartialBijection compose(const PartialBijection& other) const;
  PartialBijection inverse() const;

  friend bool operator==(const PartialBijection&, const PartialBijection&) = default;

 private:
  std::vector<std::size_t> image_;
};

struct SystemSpec {
  InverseSemigroup semigroup;
  std::vector<std::string> points;
  std::vector<PartialBijection> theta;
};

ValidationReport validate_system(const SystemSpec& spec);

struct Germ {
  std::size_t elem;
  std::size_t point;
  auto operator<=>(const Germ&) const = default;
};

struct IsotropyGroup {
  std::size_t base_point;
  std::vector<Germ> elements;  // ordered by representative index
  std::vector<std::size_t> mult;  // mult[i * n + j] = elements[i] * elements[j]
  std::size_t identity;
  std::vector<std::size_t> inverse;

  std::size_t size() const { return elements.size(); }
  std::size_t index_of(const Germ& g) const;
};

// A validated action of a finite inverse semigroup on a finite set by
// partial bijections. Germ classes are tabulated on construction.
class AmpleSystem {
 public:
  // Rejects specs that fail validate_system or InverseSemigroup::validate.
  explicit AmpleSystem(SystemSpec spec);

  const SystemSpec& spec() const { return spec_; }
  const InverseSemigroup& semigroup() const { return spec_.semigroup; }
  std::size_t space_size() const { return spec_.points.size(); }
  const std::string& point_name(std::size_t x) const { return spec_.points.at(x); }
  std::size_t find_point(const std::string& name) const;
  const PartialBijection& theta(std::size_t s) const { return spec_.theta.at(s); }
  bool in_domain(std::size_t s, std::size_t x) const { return theta(s).in_domain(x); }
  bool in_range(std::size_t s, std::size_t y) const { return theta(s).in_range(y); }
  std::size_t apply(std::size_t s, std::size_t x) const { return theta(s)(x); }

  // Canonical class of (s, x): the smallest equivalent element index.
  Germ germ_of(std::size_t s, std::size_t x) const;
  // Raw equivalence test: x in X_e and se = te for some idempotent e.
  bool germ_equivalent(std::size_t s, std::size_t t, std::size_t x) const;
  // Unit germ at x.
  Germ unit_germ(std::size_t x) const;
  // r([s,x]) = theta_s(x).
  std::size_t target(const Germ& g) const { return apply(g.elem, g.point); }

  std::vector<Germ> germs() const;
  std::vector<Germ> L(std::size_t x) const;
  IsotropyGroup G(std::size_t x) const;
  std::vector<std::size_t> orbit(std::size_t x) const;
  std::vector<std::size_t> orbit_representatives() const;

  AmpleSystem unitize() const;

 private:
  SystemSpec spec_;
  std::vector<std::size_t> germ_rep_;  // (s * |X| + x) -> canonical element, npos outside dom
};

FiniteAlgebra isotropy_group_algebra(const AmpleSystem& sys, std::size_t x, const Field& field);
FiniteAlgebra isotropy_group_algebra(const IsotropyGroup& g, const AmpleSystem& sys, const Field& field);

std::string germ_label(const AmpleSystem& sys, const Germ& g);

}  // namespace ehalg
