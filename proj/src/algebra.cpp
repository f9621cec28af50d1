#include "ehalg/algebra.hpp"

#include "ehalg/error.hpp"

namespace ehalg {

FiniteAlgebra::FiniteAlgebra(Field field, std::vector<std::string> labels, std::vector<SparseVec> table)
    : field_(field), labels_(std::move(labels)), table_(std::move(table)) {
  std::size_t n = labels_.size();
  require(table_.size() == n * n, ErrorKind::InvalidArgument,
          "structure constant table has " + std::to_string(table_.size()) + " entries, expected " +
              std::to_string(n * n));
  for (const auto& entry : table_)
    for (const auto& t : entry)
      require(t.index < n, ErrorKind::InvalidArgument, "structure constant refers to basis index out of range");
}

FiniteAlgebra FiniteAlgebra::checked(Field field, std::vector<std::string> labels, std::vector<SparseVec> table) {
  FiniteAlgebra a(field, std::move(labels), std::move(table));
  if (auto w = a.find_associativity_violation())
    fail(ErrorKind::Validation, "structure constants are not associative on basis triple (" + a.label((*w)[0]) +
                                    ", " + a.label((*w)[1]) + ", " + a.label((*w)[2]) + ")");
  return a;
}

Vec FiniteAlgebra::basis_product_dense(std::size_t i, std::size_t j) const {
  Vec v = field_.zero_vec(dim());
  for (const auto& t : basis_product(i, j)) v[t.index] = field_.add(v[t.index], t.coeff);
  return v;
}

Vec FiniteAlgebra::multiply(const Vec& a, const Vec& b) const {
  require(a.size() == dim() && b.size() == dim(), ErrorKind::InvalidArgument, "vector is not in the algebra");
  Vec out = field_.zero_vec(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (field_.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (field_.is_zero(b[j])) continue;
      Scalar c = field_.mul(a[i], b[j]);
      for (const auto& t : basis_product(i, j)) out[t.index] = field_.add(out[t.index], field_.mul(c, t.coeff));
    }
  }
  return out;
}

Matrix FiniteAlgebra::left_multiplication(const Vec& a) const {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(a, basis_vector(j)));
  return Matrix::from_columns(field_, dim(), cols);
}

Matrix FiniteAlgebra::right_multiplication(const Vec& a) const {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(basis_vector(j), a));
  return Matrix::from_columns(field_, dim(), cols);
}

std::optional<std::array<std::size_t, 3>> FiniteAlgebra::find_associativity_violation() const {
  std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec ij = basis_product_dense(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec left = multiply(ij, basis_vector(k));
        Vec right = multiply(basis_vector(i), basis_product_dense(j, k));
        if (left != right) return std::array<std::size_t, 3>{i, j, k};
      }
    }
  return std::nullopt;
}

SparseVec to_sparse(const Field& f, const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!f.is_zero(v[i])) out.push_back({i, v[i]});
  return out;
}

FiniteAlgebra matrix_algebra(Field field, std::size_t d) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) labels.push_back("e" + std::to_string(i + 1) + "," + std::to_string(j + 1));
  std::vector<SparseVec> table(d * d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) table[(i * d + j) * d * d + (j * d + l)] = {{i * d + l, field.one()}};
  return FiniteAlgebra(field, std::move(labels), std::move(table));
}

FiniteAlgebra group_algebra(Field field, const std::vector<std::string>& labels, const std::vector<std::size_t>& mult) {
  std::size_t n = labels.size();
  require(mult.size() == n * n, ErrorKind::InvalidArgument, "group table size mismatch");
  std::vector<SparseVec> table(n * n);
  for (std::size_t i = 0; i < n * n; ++i) table[i] = {{mult[i], field.one()}};
  return FiniteAlgebra(field, labels, std::move(table));
}

std::optional<std::pair<std::size_t, std::size_t>> homomorphism_violation(const FiniteAlgebra& a,
                                                                          const FiniteAlgebra& b,
                                                                          const Matrix& phi) {
  require(phi.rows() == b.dim() && phi.cols() == a.dim(), ErrorKind::InvalidArgument, "map shape mismatch");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec lhs = phi.apply(a.basis_product_dense(i, j));
      Vec rhs = b.multiply(phi.column(i), phi.column(j));
      if (lhs != rhs) return std::make_pair(i, j);
    }
  return std::nullopt;
}

Subspace ideal_generate(const FiniteAlgebra& a, const std::vector<Vec>& gens) {
  Subspace s = Subspace::span(a.field(), a.dim(), gens);
  while (true) {
    std::vector<Vec> rows = s.basis_vectors();
    for (const auto& v : s.basis_vectors())
      for (std::size_t i = 0; i < a.dim(); ++i) {
        rows.push_back(a.multiply(a.basis_vector(i), v));
        rows.push_back(a.multiply(v, a.basis_vector(i)));
      }
    Subspace next = Subspace::span(a.field(), a.dim(), rows);
    if (next.dim() == s.dim()) return next;
    s = std::move(next);
  }
}

bool is_ideal(const FiniteAlgebra& a, const Subspace& s) {
  require(s.ambient_dim() == a.dim(), ErrorKind::InvalidArgument, "subspace is not in the algebra");
  for (const auto& v : s.basis_vectors())
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!s.contains(a.multiply(a.basis_vector(i), v)) || !s.contains(a.multiply(v, a.basis_vector(i))))
        return false;
  return true;
}

Vec QuotientAlgebra::project(const Vec& v) const {
  Vec r = kernel.reduce(v);
  Vec out(coset_columns.size());
  for (std::size_t k = 0; k < coset_columns.size(); ++k) out[k] = r[coset_columns[k]];
  return out;
}

Vec QuotientAlgebra::lift(const Vec& q) const {
  require(q.size() == coset_columns.size(), ErrorKind::InvalidArgument, "vector is not in the quotient");
  Vec out = kernel.field().zero_vec(kernel.ambient_dim());
  for (std::size_t k = 0; k < coset_columns.size(); ++k) out[coset_columns[k]] = q[k];
  return out;
}

QuotientAlgebra quotient_algebra(const FiniteAlgebra& a, const Subspace& j) {
  require(is_ideal(a, j), ErrorKind::InvalidArgument, "quotient by a subspace that is not a two-sided ideal");
  QuotientAlgebra q{nullptr, j, j.complement_columns()};
  std::size_t m = q.coset_columns.size();
  std::vector<std::string> labels;
  for (auto c : q.coset_columns) labels.push_back(a.label(c));
  std::vector<SparseVec> table(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      table[x * m + y] = to_sparse(a.field(), q.project(a.basis_product_dense(q.coset_columns[x], q.coset_columns[y])));
  q.algebra = std::make_shared<const FiniteAlgebra>(a.field(), std::move(labels), std::move(table));
  return q;
}

Representation::Representation(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> images)
    : algebra_(std::move(algebra)), dim_(dim), images_(std::move(images)) {
  const FiniteAlgebra& a = *algebra_;
  require(images_.size() == a.dim(), ErrorKind::InvalidArgument, "representation needs one image per basis element");
  for (const auto& m : images_)
    require(m.rows() == dim_ && m.cols() == dim_ && m.field() == a.field(), ErrorKind::InvalidArgument,
            "representation image has the wrong shape");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (images_[i] * images_[j] != image_of(a.basis_product_dense(i, j)))
        fail(ErrorKind::Validation, "representation does not respect the product of basis elements " + a.label(i) +
                                        " and " + a.label(j));
}

Matrix Representation::image_of(const Vec& a) const {
  const Field& f = algebra_->field();
  Matrix out(f, dim_, dim_);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!f.is_zero(a[i])) out = out + images_[i].scaled(a[i]);
  return out;
}

bool Representation::is_nondegenerate() const {
  const Field& f = algebra_->field();
  std::vector<Vec> cols;
  for (const auto& m : images_)
    for (std::size_t j = 0; j < dim_; ++j) cols.push_back(m.column(j));
  return Subspace::span(f, dim_, cols).dim() == dim_;
}

Representation left_regular_mod(const AlgebraPtr& a, const Subspace& j) {
  QuotientAlgebra q = quotient_algebra(*a, j);
  std::size_t m = q.coset_columns.size();
  std::vector<Matrix> images;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    std::vector<Vec> cols;
    for (std::size_t k = 0; k < m; ++k) cols.push_back(q.project(a->basis_product_dense(i, q.coset_columns[k])));
    images.push_back(Matrix::from_columns(a->field(), m, cols));
  }
  return Representation(a, m, std::move(images));
}

Subspace kernel(const Representation& rep) {
  const FiniteAlgebra& a = *rep.algebra();
  std::size_t d = rep.dim();
  Matrix m(a.field(), d * d, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) m.at(r * d + c, i) = rep.image(i).at(r, c);
  return nullspace(m);
}

std::vector<Subspace> enumerate_ideals(const FiniteAlgebra& a, std::size_t dim_limit) {
  const Field& f = a.field();
  require(f.is_prime(), ErrorKind::InvalidArgument, "ideal enumeration needs a prime field");
  std::size_t n = a.dim();
  require(n <= dim_limit, ErrorKind::Guard,
          "algebra dimension " + std::to_string(n) + " exceeds the enumeration limit " + std::to_string(dim_limit));
  std::vector<Subspace> ideals;
  for (std::size_t k = 0; k <= n; ++k) {
    // Pivot sets of size k in lexicographic order, then all fillings of the
    // free entries (right of each pivot, outside pivot columns).
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
      std::vector<bool> is_pivot(n, false);
      for (auto p : piv) is_pivot[p] = true;
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = piv[r] + 1; c < n; ++c)
          if (!is_pivot[c]) free.emplace_back(r, c);
      std::vector<std::uint32_t> digits(free.size(), 0);
      while (true) {
        Matrix m(f, k, n);
        for (std::size_t r = 0; r < k; ++r) m.at(r, piv[r]) = f.one();
        for (std::size_t t = 0; t < free.size(); ++t) m.at(free[t].first, free[t].second) = f.from_int(digits[t]);
        Subspace s = Subspace::row_space(m);
        if (is_ideal(a, s)) ideals.push_back(std::move(s));
        std::size_t t = 0;
        while (t < digits.size() && ++digits[t] == f.characteristic()) digits[t++] = 0;
        if (t == digits.size()) break;
      }
      // next combination
      std::size_t i = k;
      while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
  return ideals;
}

}  // namespace ehalg
