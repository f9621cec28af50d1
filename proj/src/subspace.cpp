#include "ehalg/subspace.hpp"

#include "ehalg/error.hpp"

namespace ehalg {

Subspace Subspace::zero(Field field, std::size_t ambient) { return Subspace(Matrix(field, 0, ambient), {}); }

Subspace Subspace::full(Field field, std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(Matrix::identity(field, ambient), std::move(pivots));
}

Subspace Subspace::span(Field field, std::size_t ambient, const std::vector<Vec>& vectors) {
  return row_space(Matrix::from_rows(field, ambient, vectors));
}

Subspace Subspace::row_space(const Matrix& m) {
  EchelonForm e = rref(m);
  return Subspace(std::move(e.reduced), std::move(e.pivots));
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
  return out;
}

std::vector<std::size_t> Subspace::complement_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_dim(); ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  require(v.size() == ambient_dim(), ErrorKind::InvalidArgument, "vector length does not match ambient dimension");
  const Field& f = field();
  Vec r = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    Scalar c = r[pivots_[i]];
    if (f.is_zero(c)) continue;
    for (std::size_t j = 0; j < ambient_dim(); ++j)
      if (!f.is_zero(basis_.at(i, j))) r[j] = f.sub(r[j], f.mul(c, basis_.at(i, j)));
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(field(), reduce(v)); }

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

bool Subspace::is_subset_of(const Subspace& other) const {
  require(ambient_dim() == other.ambient_dim(), ErrorKind::InvalidArgument, "ambient dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i)
    if (!other.contains(basis_vector(i))) return false;
  return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim() && a.field() == b.field(), ErrorKind::InvalidArgument,
          "ambient dimension mismatch");
  std::vector<Vec> rows = a.basis_vectors();
  for (auto& v : b.basis_vectors()) rows.push_back(std::move(v));
  return Subspace::span(a.field(), a.ambient_dim(), rows);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim() && a.field() == b.field(), ErrorKind::InvalidArgument,
          "ambient dimension mismatch");
  // Zassenhaus: reduce [[A, A], [B, 0]]; rows with vanishing left half carry
  // a basis of the intersection in their right half.
  const Field& f = a.field();
  std::size_t n = a.ambient_dim();
  Matrix z(f, a.dim() + b.dim(), 2 * n);
  z.set_block(0, 0, a.basis());
  z.set_block(0, n, a.basis());
  z.set_block(a.dim(), 0, b.basis());
  EchelonForm e = rref(z);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < e.rank; ++i)
    if (e.pivots[i] >= n) rows.push_back(e.reduced.block(i, n, 1, n).row_vec(0));
  return Subspace::span(f, n, rows);
}

Subspace nullspace(const Matrix& m) { return Subspace::row_space(nullspace_basis(m)); }

Subspace column_space(const Matrix& m) { return Subspace::row_space(m.transpose()); }

}  // namespace ehalg
