#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ehalg/subspace.hpp"

namespace ehalg {

struct Term {
  std::size_t index;
  Scalar coeff;
};
using SparseVec = std::vector<Term>;

// Finite-dimensional associative algebra given by structure constants:
// e_i * e_j = sum of the terms stored for (i, j).
class FiniteAlgebra {
 public:
  FiniteAlgebra(Field field, std::vector<std::string> labels, std::vector<SparseVec> table);
  // Same as the constructor but rejects non-associative tables with a witness.
  static FiniteAlgebra checked(Field field, std::vector<std::string> labels, std::vector<SparseVec> table);

  const Field& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  const SparseVec& basis_product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Vec basis_product_dense(std::size_t i, std::size_t j) const;

  Vec basis_vector(std::size_t i) const { return field_.unit_vec(dim(), i); }
  Vec multiply(const Vec& a, const Vec& b) const;
  // Matrix of x -> a x and of x -> x a.
  Matrix left_multiplication(const Vec& a) const;
  Matrix right_multiplication(const Vec& a) const;

  std::optional<std::array<std::size_t, 3>> find_associativity_violation() const;

 private:
  Field field_;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

SparseVec to_sparse(const Field& f, const Vec& v);

// Full matrix algebra M_d(K) on matrix units e_ij (index i*d + j).
FiniteAlgebra matrix_algebra(Field field, std::size_t d);
// Group algebra from a multiplication table of indices.
FiniteAlgebra group_algebra(Field field, const std::vector<std::string>& labels,
                            const std::vector<std::size_t>& mult);

// A linear map phi: A -> B (columns = images of A's basis) that violates
// multiplicativity on the returned basis pair, if any.
std::optional<std::pair<std::size_t, std::size_t>> homomorphism_violation(const FiniteAlgebra& a,
                                                                          const FiniteAlgebra& b,
                                                                          const Matrix& phi);

Subspace ideal_generate(const FiniteAlgebra& a, const std::vector<Vec>& gens);
bool is_ideal(const FiniteAlgebra& a, const Subspace& s);

// A / J with basis the cosets of the basis elements outside the pivot
// columns of J's canonical form.
struct QuotientAlgebra {
  AlgebraPtr algebra;
  Subspace kernel;
  std::vector<std::size_t> coset_columns;

  Vec project(const Vec& v) const;
  Vec lift(const Vec& q) const;
};

QuotientAlgebra quotient_algebra(const FiniteAlgebra& a, const Subspace& j);

class Representation {
 public:
  // Rejects image lists that do not respect the structure constants.
  Representation(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> images);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t dim() const { return dim_; }
  const Matrix& image(std::size_t i) const { return images_.at(i); }
  const std::vector<Matrix>& images() const { return images_; }
  Matrix image_of(const Vec& a) const;
  // span{ image(a) v } is the whole space.
  bool is_nondegenerate() const;

 private:
  AlgebraPtr algebra_;
  std::size_t dim_;
  std::vector<Matrix> images_;
};

// Left multiplication on A/J.
Representation left_regular_mod(const AlgebraPtr& a, const Subspace& j);
Subspace kernel(const Representation& rep);

// Every two-sided ideal of A over a prime field, by exhaustive subspace
// enumeration; ordered by dimension, then pivot columns, then entries.
std::vector<Subspace> enumerate_ideals(const FiniteAlgebra& a, std::size_t dim_limit);

}  // namespace ehalg
