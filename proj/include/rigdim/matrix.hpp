#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "rigdim/field.hpp"

namespace rigdim {

/// Dense row-major matrix over a Field. Entries are always kept normalized.
class Matrix {
 public:
  Matrix() : field_(Field::rational()) {}
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, std::initializer_list<std::initializer_list<long>> rows);
  /// Columns given as vectors of equal length `rows`.
  static Matrix from_columns(Field field, std::size_t rows, const std::vector<std::vector<Scalar>>& cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const Scalar& v) { data_[r * cols_ + c] = field_.normalize(v); }
  /// For values already normalized in this field.
  void set_raw(std::size_t r, std::size_t c, Scalar v) { data_[r * cols_ + c] = std::move(v); }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Scalar> column(std::size_t c) const;

  bool is_zero() const;
  Matrix transpose() const;
  Matrix scaled(const Scalar& s) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;

  friend struct RowReducer;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct Reduction {
  Matrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivot choice: leftmost nonzero column, topmost
/// nonzero entry at or below the current row. Row elimination runs in
/// parallel (OpenMP) once the matrix is large enough.
Reduction reduce(const Matrix& m);
/// Single-threaded reference for reduce(); results are identical.
Reduction reduce_serial(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Columns form a basis of the null space, one per free column in
/// increasing order (free entry 1, other free entries 0).
Matrix kernel(const Matrix& m);

/// Some x with a*x = b, or nullopt if inconsistent. Free variables are 0.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// The pivot columns of m (a basis of its column space taken from m itself).
Matrix column_basis(const Matrix& m);

/// Standard basis vectors e_j (smallest j first) completing the independent
/// columns of w to a basis of the ambient space.
Matrix complement_basis(const Matrix& w);

std::optional<Matrix> inverse(const Matrix& m);

/// True if every column of b lies in the column space of a.
bool in_column_space(const Matrix& a, const Matrix& b);

}  // namespace rigdim
