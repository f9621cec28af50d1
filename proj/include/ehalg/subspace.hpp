#pragma once

#include <optional>
#include <vector>

#include "ehalg/matrix.hpp"

namespace ehalg {

// A subspace of K^n stored by its canonical reduced row echelon basis, so two
// subspaces are equal exactly when their basis matrices are equal.
class Subspace {
 public:
  static Subspace zero(Field field, std::size_t ambient);
  static Subspace full(Field field, std::size_t ambient);
  static Subspace span(Field field, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace row_space(const Matrix& m);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec basis_vector(std::size_t i) const { return basis_.row_vec(i); }
  std::vector<Vec> basis_vectors() const;

  // Coordinates outside the pivot columns, in increasing column order.
  std::vector<std::size_t> complement_columns() const;

  // Residue of v after clearing the pivot columns; zero iff v is contained.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  // Coefficients of v in the canonical basis, when v is contained.
  std::optional<Vec> coordinates(const Vec& v) const;
  bool is_subset_of(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
inline bool contains(const Subspace& a, const Vec& v) { return a.contains(v); }
inline bool equal(const Subspace& a, const Subspace& b) { return a == b; }

// {v : m v = 0} as a subspace of K^cols.
Subspace nullspace(const Matrix& m);
// Span of the images m v over all v, i.e. the column space.
Subspace column_space(const Matrix& m);

}  // namespace ehalg
