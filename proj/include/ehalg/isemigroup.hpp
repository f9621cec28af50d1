#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ehalg/error.hpp"

namespace ehalg {

// Finite semigroup with an involution, elements are 0..size-1. The tables are
// only checked for shape on construction; validate() checks the axioms.
class InverseSemigroup {
 public:
  InverseSemigroup(std::size_t size, std::vector<std::size_t> mult, std::vector<std::size_t> star,
                   std::vector<std::string> names = {});

  std::size_t size() const { return size_; }
  std::size_t mul(std::size_t s, std::size_t t) const { return mult_[s * size_ + t]; }
  std::size_t star(std::size_t s) const { return star_[s]; }
  const std::string& name(std::size_t s) const { return names_.at(s); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::size_t>& mult_table() const { return mult_; }
  const std::vector<std::size_t>& star_table() const { return star_; }
  // Index of the element with this name, or size() when absent.
  std::size_t find(const std::string& name) const;

  bool is_idempotent(std::size_t s) const { return mul(s, s) == s; }
  std::vector<std::size_t> idempotents() const;
  // Natural order: s <= t iff s = t e for an idempotent e.
  bool leq(std::size_t s, std::size_t t) const;

  ValidationReport validate() const;

  // S with a formal identity adjoined as the last element.
  InverseSemigroup unitize() const;

  friend bool operator==(const InverseSemigroup&, const InverseSemigroup&) = default;

 private:
  std::size_t size_;
  std::vector<std::size_t> mult_;
  std::vector<std::size_t> star_;
  std::vector<std::string> names_;
};

InverseSemigroup cyclic_group(std::size_t n);

}  // namespace ehalg
