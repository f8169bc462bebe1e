#include "rigdim/matrix.hpp"

#include <utility>

#include "rigdim/errors.hpp"

namespace rigdim {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(Field field, std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr ? rows.begin()->size() : 0;
  Matrix m(field, nr, nc);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != nc) throw DimensionMismatch("ragged rows");
    std::size_t c = 0;
    for (long v : row) m.set(r, c++, Scalar(v));
    ++r;
  }
  return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<std::vector<Scalar>>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionMismatch("column length");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, cols[c][r]);
  }
  return m;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = at(r, c);
  return t;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out(field_, rows_, cols_);
  Scalar sn = field_.normalize(s);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.mul(data_[i], sn);
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  Matrix out(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out.data_[r * nc + c] = at(r0 + r, c0 + c);
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out.data_[r * cols.size() + c] = at(r, cols[c]);
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix out(field_, rows.size(), cols_);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.data_[r * cols_ + c] = at(rows[r], c);
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw DimensionMismatch("set_block out of range");
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) data_[(r0 + r) * cols_ + c0 + c] = m.at(r, c);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
  if (!(a.field_ == b.field_)) throw FieldMismatch("matrix product");
  const Field& f = a.field_;
  Matrix out(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (bkj == 0) continue;
        Scalar& o = out.data_[i * b.cols_ + j];
        o = f.add(o, f.mul(aik, bkj));
      }
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum");
  Matrix out(a.field_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference");
  Matrix out(a.field_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

struct RowReducer {
  static Reduction run(const Matrix& m, bool allow_parallel) {
    Reduction red{m, 0, {}};
    Matrix& a = red.rref;
    const Field& f = a.field_;
    const std::size_t nr = a.rows_, nc = a.cols_;
    auto& d = a.data_;
    const bool parallel = allow_parallel && nr * nc >= kParallelThreshold;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
      std::size_t piv = nr;
      for (std::size_t i = r; i < nr; ++i)
        if (d[i * nc + c] != 0) {
          piv = i;
          break;
        }
      if (piv == nr) continue;
      if (piv != r)
        for (std::size_t j = 0; j < nc; ++j) std::swap(d[piv * nc + j], d[r * nc + j]);
      Scalar inv = f.inv(d[r * nc + c]);
      for (std::size_t j = c; j < nc; ++j)
        if (d[r * nc + j] != 0) d[r * nc + j] = f.mul(d[r * nc + j], inv);
      const std::size_t prow = r;
#pragma omp parallel for schedule(static) if (parallel)
      for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(nr); ++si) {
        std::size_t i = static_cast<std::size_t>(si);
        if (i == prow) continue;
        Scalar factor = d[i * nc + c];
        if (factor == 0) continue;
        for (std::size_t j = c; j < nc; ++j) {
          const Scalar& pv = d[prow * nc + j];
          if (pv == 0) continue;
          d[i * nc + j] = f.sub(d[i * nc + j], f.mul(factor, pv));
        }
      }
      red.pivots.push_back(c);
      ++r;
    }
    red.rank = r;
    return red;
  }

  static constexpr std::size_t kParallelThreshold = 64 * 64;
};

Reduction reduce(const Matrix& m) { return RowReducer::run(m, true); }
Reduction reduce_serial(const Matrix& m) { return RowReducer::run(m, false); }

std::size_t rank(const Matrix& m) { return reduce(m).rank; }

Matrix kernel(const Matrix& m) {
  Reduction red = reduce(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(f, m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    std::size_t fc = free_cols[j];
    k.set_raw(fc, j, Scalar(1));
    for (std::size_t i = 0; i < red.rank; ++i) {
      const Scalar& v = red.rref.at(i, fc);
      if (v != 0) k.set_raw(red.pivots[i], j, f.neg(v));
    }
  }
  return k;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: a.rows != b.rows");
  if (!(a.field() == b.field())) throw FieldMismatch("solve");
  Reduction red = reduce(hstack(a, b));
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t i = 0; i < red.rank; ++i) {
    std::size_t pc = red.pivots[i];
    if (pc >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x.set_raw(pc, j, red.rref.at(i, a.cols() + j));
  }
  return x;
}

Matrix column_basis(const Matrix& m) {
  Reduction red = reduce(m);
  return m.select_columns(red.pivots);
}

Matrix complement_basis(const Matrix& w) {
  const std::size_t n = w.rows();
  Matrix aug = hstack(w, Matrix::identity(w.field(), n));
  Reduction red = reduce(aug);
  std::vector<std::size_t> picks;
  for (auto p : red.pivots)
    if (p >= w.cols()) picks.push_back(p - w.cols());
  Matrix out(w.field(), n, picks.size());
  for (std::size_t j = 0; j < picks.size(); ++j) out.set_raw(picks[j], j, Scalar(1));
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve(m, Matrix::identity(m.field(), m.rows()));
  if (!x || rank(m) != m.rows()) return std::nullopt;
  return x;
}

bool in_column_space(const Matrix& a, const Matrix& b) { return solve(a, b).has_value(); }

}  // namespace rigdim
