#include "secdet/scalmat.hpp"

#include <stdexcept>

namespace secdet {

ScalMat::ScalMat(size_t rows, size_t cols, const FieldSpec& f)
    : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {}

ScalMat ScalMat::identity(size_t n, const FieldSpec& f) {
  ScalMat m(n, n, f);
  for (size_t i = 0; i < n; i++) m.at(i, i) = Scalar::one(f);
  return m;
}

ScalMat ScalMat::from_rows(std::vector<std::vector<Scalar>> rows, const FieldSpec& f) {
  size_t r = rows.size(), c = r ? rows[0].size() : 0;
  ScalMat m(r, c, f);
  for (size_t i = 0; i < r; i++) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
    for (size_t j = 0; j < c; j++) m.at(i, j) = std::move(rows[i][j]);
  }
  return m;
}

ScalMat ScalMat::transpose() const {
  ScalMat m(cols_, rows_, field_);
  for (size_t i = 0; i < rows_; i++)
    for (size_t j = 0; j < cols_; j++) m.at(j, i) = at(i, j);
  return m;
}

ScalMat ScalMat::operator*(const ScalMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("dim mismatch");
  ScalMat m(rows_, o.cols_, field_);
  for (size_t i = 0; i < rows_; i++)
    for (size_t k = 0; k < cols_; k++) {
      if (at(i, k).is_zero()) continue;
      for (size_t j = 0; j < o.cols_; j++)
        m.at(i, j) += at(i, k) * o.at(k, j);
    }
  return m;
}

ScalMat ScalMat::operator+(const ScalMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dim mismatch");
  ScalMat m = *this;
  for (size_t i = 0; i < a_.size(); i++) m.a_[i] += o.a_[i];
  return m;
}

ScalMat ScalMat::operator-(const ScalMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dim mismatch");
  ScalMat m = *this;
  for (size_t i = 0; i < a_.size(); i++) m.a_[i] -= o.a_[i];
  return m;
}

ScalMat ScalMat::scaled(const Scalar& c) const {
  ScalMat m = *this;
  for (auto& x : m.a_) x *= c;
  return m;
}

bool ScalMat::operator==(const ScalMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); i++)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

std::vector<Scalar> ScalMat::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw std::invalid_argument("dim mismatch");
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (size_t i = 0; i < rows_; i++)
    for (size_t j = 0; j < cols_; j++)
      if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

std::vector<size_t> ScalMat::rref() {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols_ && row < rows_; col++) {
    size_t piv = row;
    while (piv < rows_ && at(piv, col).is_zero()) piv++;
    if (piv == rows_) continue;
    if (piv != row)
      for (size_t j = 0; j < cols_; j++) std::swap(at(piv, j), at(row, j));
    Scalar inv = at(row, col).inv();
    for (size_t j = col; j < cols_; j++) at(row, j) *= inv;
    for (size_t i = 0; i < rows_; i++) {
      if (i == row || at(i, col).is_zero()) continue;
      Scalar f = at(i, col);
      for (size_t j = col; j < cols_; j++) at(i, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    row++;
  }
  return pivots;
}

size_t ScalMat::rank() const {
  ScalMat m = *this;
  return m.rref().size();
}

std::vector<std::vector<Scalar>> ScalMat::kernel() const {
  ScalMat m = *this;
  std::vector<size_t> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (size_t free_col = 0; free_col < cols_; free_col++) {
    if (is_pivot[free_col]) continue;
    std::vector<Scalar> v(cols_, Scalar::zero(field_));
    v[free_col] = Scalar::one(field_);
    for (size_t r = 0; r < pivots.size(); r++)
      v[pivots[r]] = -m.at(r, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> ScalMat::solve(std::span<const Scalar> b) const {
  if (b.size() != rows_) throw std::invalid_argument("dim mismatch");
  ScalMat aug(rows_, cols_ + 1, field_);
  for (size_t i = 0; i < rows_; i++) {
    for (size_t j = 0; j < cols_; j++) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<size_t> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
  std::vector<Scalar> x(cols_, Scalar::zero(field_));
  for (size_t r = 0; r < pivots.size(); r++) x[pivots[r]] = aug.at(r, cols_);
  return x;
}

std::optional<ScalMat> ScalMat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("not square");
  ScalMat aug(rows_, 2 * cols_, field_);
  for (size_t i = 0; i < rows_; i++) {
    for (size_t j = 0; j < cols_; j++) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Scalar::one(field_);
  }
  std::vector<size_t> pivots = aug.rref();
  if (pivots.size() != rows_ || (rows_ && pivots.back() != rows_ - 1)) return std::nullopt;
  ScalMat inv(rows_, cols_, field_);
  for (size_t i = 0; i < rows_; i++)
    for (size_t j = 0; j < cols_; j++) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

Scalar ScalMat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("not square");
  ScalMat m = *this;
  Scalar d = Scalar::one(field_);
  for (size_t col = 0; col < cols_; col++) {
    size_t piv = col;
    while (piv < rows_ && m.at(piv, col).is_zero()) piv++;
    if (piv == rows_) return Scalar::zero(field_);
    if (piv != col) {
      for (size_t j = 0; j < cols_; j++) std::swap(m.at(piv, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    Scalar inv = m.at(col, col).inv();
    for (size_t i = col + 1; i < rows_; i++) {
      if (m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col) * inv;
      for (size_t j = col; j < cols_; j++) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

std::vector<Scalar> ScalMat::row(size_t i) const {
  std::vector<Scalar> r;
  r.reserve(cols_);
  for (size_t j = 0; j < cols_; j++) r.push_back(at(i, j));
  return r;
}

ScalMat ScalMat::vstack(const ScalMat& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("dim mismatch");
  ScalMat m(rows_ + o.rows_, cols_, field_);
  for (size_t i = 0; i < rows_; i++)
    for (size_t j = 0; j < cols_; j++) m.at(i, j) = at(i, j);
  for (size_t i = 0; i < o.rows_; i++)
    for (size_t j = 0; j < cols_; j++) m.at(rows_ + i, j) = o.at(i, j);
  return m;
}

}  // namespace secdet
