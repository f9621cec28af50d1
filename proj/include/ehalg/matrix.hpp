#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ehalg/field.hpp"

namespace ehalg {

// Dense row-major matrix over an exact field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows);
  static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vec>& cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vec row_vec(std::size_t i) const;
  Vec column(std::size_t j) const;

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  Vec apply(const Vec& v) const;
  bool is_zero() const;
  // Copies rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct EchelonForm {
  Matrix reduced;  // nonzero rows only
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

// Canonical reduced row echelon form. Zero rows are dropped.
EchelonForm rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Basis (as canonical rows) of {v : m v = 0}.
Matrix nullspace_basis(const Matrix& m);

// Some solution of m x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace ehalg
