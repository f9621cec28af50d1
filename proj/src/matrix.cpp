#include "ehalg/matrix.hpp"

#include "ehalg/error.hpp"

namespace ehalg {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, ErrorKind::InvalidArgument, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require(cols[j].size() == rows, ErrorKind::InvalidArgument, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::row_vec(std::size_t i) const { return Vec(row(i).begin(), row(i).end()); }

Vec Matrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Matrix Matrix::operator*(const Matrix& other) const {
  require(cols_ == other.rows_, ErrorKind::InvalidArgument, "matrix product shape mismatch");
  Matrix out(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (field_.is_zero(a)) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Scalar& b = other.at(k, j);
        if (!field_.is_zero(b)) out.at(i, j) = field_.add(out.at(i, j), field_.mul(a, b));
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  require(rows_ == other.rows_ && cols_ == other.cols_, ErrorKind::InvalidArgument, "matrix sum shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], other.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  require(rows_ == other.rows_ && cols_ == other.cols_, ErrorKind::InvalidArgument, "matrix difference shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], other.data_[i]);
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.mul(c, data_[i]);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  require(v.size() == cols_, ErrorKind::InvalidArgument, "matrix-vector shape mismatch");
  Vec out = field_.zero_vec(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!field_.is_zero(at(i, j)) && !field_.is_zero(v[j])) out[i] = field_.add(out[i], field_.mul(at(i, j), v[j]));
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!field_.is_zero(x)) return false;
  return true;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, ErrorKind::InvalidArgument, "block out of range");
  Matrix out(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out.at(i, j) = at(r0 + i, c0 + j);
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, ErrorKind::InvalidArgument, "block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

EchelonForm rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && f.is_zero(a.at(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    Scalar inv = f.inv(a.at(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) = f.mul(inv, a.at(r, j));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || f.is_zero(a.at(i, c))) continue;
      Scalar factor = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!f.is_zero(a.at(r, j))) a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {a.block(0, 0, r, a.cols()), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix nullspace_basis(const Matrix& m) {
  const Field& f = m.field();
  EchelonForm e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = f.zero_vec(m.cols());
    v[free] = f.one();
    for (std::size_t i = 0; i < e.rank; ++i) v[e.pivots[i]] = f.neg(e.reduced.at(i, free));
    vectors.push_back(std::move(v));
  }
  return rref(Matrix::from_rows(f, m.cols(), vectors)).reduced;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  const Field& f = m.field();
  require(b.size() == m.rows(), ErrorKind::InvalidArgument, "right-hand side length mismatch");
  Matrix aug(f, m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug.at(i, m.cols()) = b[i];
  EchelonForm e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec x = f.zero_vec(m.cols());
  for (std::size_t i = 0; i < e.rank; ++i) x[e.pivots[i]] = e.reduced.at(i, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  require(m.rows() == m.cols(), ErrorKind::InvalidArgument, "inverse of a non-square matrix");
  const Field& f = m.field();
  std::size_t n = m.rows();
  Matrix aug(f, n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(f, n));
  EchelonForm e = rref(aug);
  if (e.rank < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

}  // namespace ehalg
