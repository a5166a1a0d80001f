#pragma once

#include "secdet/ideal.hpp"
#include "secdet/rng.hpp"
#include "secdet/scalmat.hpp"

namespace secdet {

// Matrix of homogeneous linear forms. Entries may be zero; a symmetric
// matrix satisfies entry(i,j) == entry(j,i) exactly.
class LinearMatrix {
 public:
  LinearMatrix() = default;
  LinearMatrix(RingPtr ring, size_t rows, size_t cols, bool symmetric = false);
  static LinearMatrix from_entries(RingPtr ring, size_t rows, size_t cols,
                                   std::vector<Poly> entries, bool symmetric = false);

  const RingPtr& ring() const { return ring_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool symmetric() const { return symmetric_; }
  void set_symmetric(bool s);

  const Poly& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
  void set(size_t i, size_t j, Poly p);

  bool is_zero() const;
  LinearMatrix transpose() const;
  // A M B^T for scalar matrices A (rows x rows) and B (cols x cols).
  LinearMatrix apply(const ScalMat& A, const ScalMat& B) const;
  ScalMat eval(std::span<const Scalar> point) const;
  LinearMatrix submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const;
  LinearMatrix drop_col(size_t j) const;
  LinearMatrix drop_row_col(size_t i, size_t j) const;
  bool operator==(const LinearMatrix& o) const;

  // Stacked coefficient matrix: row (i*cols+j) holds the coefficient vector
  // of entry (i,j) over the ring variables.
  ScalMat coefficient_matrix() const;

  // Text format: header "linmat a b [symmetric]", rows joined by ';',
  // entries by ','. Bit-exact round-trip with parse_linmat on canonical text.
  std::string to_text() const;

 private:
  RingPtr ring_;
  size_t rows_ = 0, cols_ = 0;
  bool symmetric_ = false;
  std::vector<Poly> e_;
};

LinearMatrix parse_linmat(const std::string& text, const RingPtr& ring);

// All s-minors, expanded, in row-major enumeration order of the (row set,
// column set) pairs. Laplace with memoized sub-minors for s <= 4,
// fraction-free Bareiss beyond.
std::vector<Poly> minors(const LinearMatrix& M, size_t s);
Poly det_linmat(const LinearMatrix& M);

struct OneGenericResult {
  bool one_generic = false;
  // witness vectors with (v^T M w) == 0, when a rational one exists
  std::optional<std::pair<std::vector<Scalar>, std::vector<Scalar>>> witness;
  // chart (i,j) whose bilinear system is consistent over the closure, when
  // no rational witness was found
  std::optional<std::pair<size_t, size_t>> chart;
};

// Decides 1-genericity over the algebraic closure by chart-wise consistency
// of the bilinear systems v^T M w = 0.
OneGenericResult is_one_generic(const LinearMatrix& M, const GBOptions& opt = {});

// Gamma-regularity: the right kernels of M(z), z in gamma, intersect in
// codimension |gamma|. Requires rank M(z) <= 1 for each z (throws otherwise).
bool gamma_regular(const LinearMatrix& M, const std::vector<std::vector<Scalar>>& gamma);
bool gamma_regular_transpose(const LinearMatrix& M, const std::vector<std::vector<Scalar>>& gamma);

struct GLWitness {
  ScalMat A, B;  // invertible; the action is M -> A M B^T
};

// GL pair (A,B) with (A M B^T)(z) = E^{0,0}; for symmetric M a congruence
// (B = A). Requires rank M(z) == 1.
std::pair<GLWitness, LinearMatrix> normalize_at_point(const LinearMatrix& M,
                                                      std::span<const Scalar> z,
                                                      Rng* rng = nullptr);

// Remark-style projection operators; all require M(z) = E^{0,0}.
LinearMatrix project_pi(const LinearMatrix& M, std::span<const Scalar> z);
LinearMatrix project_pi_t(const LinearMatrix& M, std::span<const Scalar> z);
LinearMatrix project_partial(const LinearMatrix& M, std::span<const Scalar> z);

// Coefficients c with A = M' c as linear forms, if any.
std::optional<std::vector<Scalar>> column_dependence(const std::vector<Poly>& A,
                                                     const LinearMatrix& Mp);

struct GLEquivalenceOptions {
  size_t samples = 16;
  bool congruence = false;  // restrict to B = A (symmetric action)
  GBOptions gb;
};

// Witness with A M B^T = M', or nullopt. When `congruence` is set both
// matrices must be symmetric and the witness satisfies B = A.
std::optional<GLWitness> gl_equivalent(const LinearMatrix& M, const LinearMatrix& Mp,
                                       Rng& rng, const GLEquivalenceOptions& opt = {});

// Attempts a point of V(I) with coordinates in the base field.
std::optional<std::vector<Scalar>> find_rational_point(const Ideal& I, Rng& rng,
                                                       const GBOptions& opt = {},
                                                       int depth_budget = 64);

}  // namespace secdet
