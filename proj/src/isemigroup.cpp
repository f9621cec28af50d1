#include "ehalg/isemigroup.hpp"

#include <algorithm>

namespace ehalg {

InverseSemigroup::InverseSemigroup(std::size_t size, std::vector<std::size_t> mult, std::vector<std::size_t> star,
                                   std::vector<std::string> names)
    : size_(size), mult_(std::move(mult)), star_(std::move(star)), names_(std::move(names)) {
  require(size_ > 0, ErrorKind::InvalidArgument, "a semigroup needs at least one element");
  require(mult_.size() == size_ * size_, ErrorKind::InvalidArgument, "multiplication table has the wrong size");
  require(star_.size() == size_, ErrorKind::InvalidArgument, "star table has the wrong size");
  for (auto v : mult_) require(v < size_, ErrorKind::InvalidArgument, "multiplication table entry out of range");
  for (auto v : star_) require(v < size_, ErrorKind::InvalidArgument, "star table entry out of range");
  if (names_.empty())
    for (std::size_t i = 0; i < size_; ++i) names_.push_back(std::to_string(i));
  require(names_.size() == size_, ErrorKind::InvalidArgument, "name table has the wrong size");
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      require(names_[i] != names_[j], ErrorKind::InvalidArgument, "duplicate element name '" + names_[i] + "'");
}

std::size_t InverseSemigroup::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return static_cast<std::size_t>(it - names_.begin());
}

std::vector<std::size_t> InverseSemigroup::idempotents() const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < size_; ++s)
    if (is_idempotent(s)) out.push_back(s);
  return out;
}

bool InverseSemigroup::leq(std::size_t s, std::size_t t) const {
  for (std::size_t e = 0; e < size_; ++e)
    if (is_idempotent(e) && mul(t, e) == s) return true;
  return false;
}

ValidationReport InverseSemigroup::validate() const {
  std::size_t n = size_;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          return ValidationReport::fail("associativity", {a, b, c},
                                        "(" + name(a) + name(b) + ")" + name(c) + " != " + name(a) + "(" + name(b) +
                                            name(c) + ")");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (star(mul(a, b)) != mul(star(b), star(a)))
        return ValidationReport::fail("anti-homomorphism", {a, b},
                                      "(" + name(a) + name(b) + ")* != " + name(b) + "*" + name(a) + "*");
  for (std::size_t a = 0; a < n; ++a)
    if (star(star(a)) != a) return ValidationReport::fail("involution", {a}, name(a) + "** != " + name(a));
  for (std::size_t a = 0; a < n; ++a) {
    if (mul(mul(a, star(a)), a) != a)
      return ValidationReport::fail("regularity", {a}, name(a) + " " + name(a) + "* " + name(a) + " != " + name(a));
    if (mul(mul(star(a), a), star(a)) != star(a))
      return ValidationReport::fail("regularity", {a}, name(a) + "* " + name(a) + " " + name(a) + "* != " + name(a) + "*");
  }
  auto e = idempotents();
  for (auto x : e)
    for (auto y : e)
      if (mul(x, y) != mul(y, x))
        return ValidationReport::fail("idempotents commute", {x, y}, name(x) + " and " + name(y) + " do not commute");
  return ValidationReport::pass();
}

InverseSemigroup InverseSemigroup::unitize() const {
  std::size_t n = size_ + 1, one = size_;
  std::vector<std::size_t> mult(n * n), star(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      mult[a * n + b] = a == one ? b : (b == one ? a : mul(a, b));
  for (std::size_t a = 0; a < size_; ++a) star[a] = star_[a];
  star[one] = one;
  std::vector<std::string> names = names_;
  std::string unit = "1";
  while (find(unit) != size_) unit += "+";
  names.push_back(unit);
  return InverseSemigroup(n, std::move(mult), std::move(star), std::move(names));
}

InverseSemigroup cyclic_group(std::size_t n) {
  std::vector<std::size_t> mult(n * n), star(n);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mult[a * n + b] = (a + b) % n;
    star[a] = (n - a) % n;
    names.push_back(a == 0 ? "1" : (n == 2 ? "g" : "g" + std::to_string(a)));
  }
  return InverseSemigroup(n, std::move(mult), std::move(star), std::move(names));
}

}  // namespace ehalg
