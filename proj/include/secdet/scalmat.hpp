#pragma once

#include <optional>
#include <span>
#include <vector>

#include "secdet/field.hpp"

namespace secdet {

// Dense matrix over the coefficient field, with exact Gaussian elimination.
class ScalMat {
 public:
  ScalMat() = default;
  ScalMat(size_t rows, size_t cols, const FieldSpec& f);
  static ScalMat identity(size_t n, const FieldSpec& f);
  static ScalMat from_rows(std::vector<std::vector<Scalar>> rows, const FieldSpec& f);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  ScalMat transpose() const;
  ScalMat operator*(const ScalMat& o) const;
  ScalMat operator+(const ScalMat& o) const;
  ScalMat operator-(const ScalMat& o) const;
  ScalMat scaled(const Scalar& c) const;
  bool operator==(const ScalMat& o) const;

  std::vector<Scalar> apply(std::span<const Scalar> v) const;  // A v

  // In-place reduced row echelon form, first-nonzero column pivoting.
  // Returns the pivot columns.
  std::vector<size_t> rref();

  size_t rank() const;
  // Basis of the right null space {x : A x = 0}, deterministic order.
  std::vector<std::vector<Scalar>> kernel() const;
  // One solution of A x = b, if any.
  std::optional<std::vector<Scalar>> solve(std::span<const Scalar> b) const;
  std::optional<ScalMat> inverse() const;
  Scalar det() const;

  std::vector<Scalar> row(size_t i) const;
  ScalMat vstack(const ScalMat& o) const;

 private:
  size_t rows_ = 0, cols_ = 0;
  FieldSpec field_;
  std::vector<Scalar> a_;
};

}  // namespace secdet
