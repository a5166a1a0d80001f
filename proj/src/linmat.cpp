#include "secdet/linmat.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace secdet {

LinearMatrix::LinearMatrix(RingPtr ring, size_t rows, size_t cols, bool symmetric)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), symmetric_(symmetric),
      e_(rows * cols, Poly(ring_)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("empty matrix");
  if (symmetric && rows != cols) throw std::invalid_argument("symmetric matrix must be square");
}

LinearMatrix LinearMatrix::from_entries(RingPtr ring, size_t rows, size_t cols,
                                        std::vector<Poly> entries, bool symmetric) {
  if (entries.size() != rows * cols) throw std::invalid_argument("entry count mismatch");
  LinearMatrix m(ring, rows, cols, symmetric);
  for (size_t i = 0; i < rows; i++)
    for (size_t j = 0; j < cols; j++) m.set(i, j, std::move(entries[i * cols + j]));
  if (symmetric) {
    for (size_t i = 0; i < rows; i++)
      for (size_t j = 0; j < cols; j++)
        if (m.at(i, j) != m.at(j, i))
          throw std::invalid_argument("symmetric flag set but entries are not symmetric");
  }
  return m;
}

void LinearMatrix::set(size_t i, size_t j, Poly p) {
  if (p.ring().get() != ring_.get()) throw std::domain_error("ring mismatch");
  int d;
  if (!p.is_homogeneous(&d) || (d > 1))
    throw std::invalid_argument("entries must be linear forms or zero");
  if (d == 0) throw std::invalid_argument("entries must be linear forms or zero");
  e_[i * cols_ + j] = std::move(p);
}

void LinearMatrix::set_symmetric(bool s) {
  if (s) {
    if (rows_ != cols_) throw std::invalid_argument("symmetric matrix must be square");
    for (size_t i = 0; i < rows_; i++)
      for (size_t j = 0; j < cols_; j++)
        if (at(i, j) != at(j, i)) throw std::invalid_argument("entries are not symmetric");
  }
  symmetric_ = s;
}

bool LinearMatrix::is_zero() const {
  for (const auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

LinearMatrix LinearMatrix::transpose() const {
  LinearMatrix m(ring_, cols_, rows_, symmetric_);
  for (size_t i = 0; i < rows_; i++)
    for (size_t j = 0; j < cols_; j++) m.e_[j * rows_ + i] = at(i, j);
  return m;
}

LinearMatrix LinearMatrix::apply(const ScalMat& A, const ScalMat& B) const {
  if (A.cols() != rows_ || B.cols() != cols_) throw std::invalid_argument("dim mismatch");
  LinearMatrix tmp(ring_, A.rows(), cols_);
  for (size_t i = 0; i < A.rows(); i++)
    for (size_t j = 0; j < cols_; j++) {
      Poly acc(ring_);
      for (size_t k = 0; k < rows_; k++)
        if (!A.at(i, k).is_zero()) acc = acc + at(k, j).scaled(A.at(i, k));
      tmp.e_[i * cols_ + j] = std::move(acc);
    }
  LinearMatrix out(ring_, A.rows(), B.rows());
  for (size_t i = 0; i < A.rows(); i++)
    for (size_t j = 0; j < B.rows(); j++) {
      Poly acc(ring_);
      for (size_t k = 0; k < cols_; k++)
        if (!B.at(j, k).is_zero()) acc = acc + tmp.at(i, k).scaled(B.at(j, k));
      out.e_[i * B.rows() + j] = std::move(acc);
    }
  return out;
}

ScalMat LinearMatrix::eval(std::span<const Scalar> point) const {
  ScalMat m(rows_, cols_, ring_->field());
  for (size_t i = 0; i < rows_; i++)
    for (size_t j = 0; j < cols_; j++) m.at(i, j) = at(i, j).eval(point);
  return m;
}

LinearMatrix LinearMatrix::submatrix(const std::vector<size_t>& rows,
                                     const std::vector<size_t>& cols) const {
  LinearMatrix m(ring_, rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); i++)
    for (size_t j = 0; j < cols.size(); j++) m.e_[i * cols.size() + j] = at(rows[i], cols[j]);
  return m;
}

LinearMatrix LinearMatrix::drop_col(size_t drop) const {
  std::vector<size_t> rs, cs;
  for (size_t i = 0; i < rows_; i++) rs.push_back(i);
  for (size_t j = 0; j < cols_; j++)
    if (j != drop) cs.push_back(j);
  return submatrix(rs, cs);
}

LinearMatrix LinearMatrix::drop_row_col(size_t di, size_t dj) const {
  std::vector<size_t> rs, cs;
  for (size_t i = 0; i < rows_; i++)
    if (i != di) rs.push_back(i);
  for (size_t j = 0; j < cols_; j++)
    if (j != dj) cs.push_back(j);
  LinearMatrix m = submatrix(rs, cs);
  if (symmetric_ && di == dj) m.symmetric_ = true;
  return m;
}

bool LinearMatrix::operator==(const LinearMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || ring_.get() != o.ring_.get()) return false;
  for (size_t k = 0; k < e_.size(); k++)
    if (e_[k] != o.e_[k]) return false;
  return true;
}

ScalMat LinearMatrix::coefficient_matrix() const {
  const size_t n = ring_->nvars();
  ScalMat m(rows_ * cols_, n, ring_->field());
  for (size_t i = 0; i < rows_; i++)
    for (size_t j = 0; j < cols_; j++)
      for (size_t k = 0; k < n; k++) m.at(i * cols_ + j, k) = at(i, j).linear_coeff(k);
  return m;
}

std::string LinearMatrix::to_text() const {
  std::ostringstream os;
  os << "linmat " << rows_ << " " << cols_;
  if (symmetric_) os << " symmetric";
  os << "\n";
  for (size_t i = 0; i < rows_; i++) {
    for (size_t j = 0; j < cols_; j++) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
    os << (i + 1 < rows_ ? ";\n" : "\n");
  }
  return os.str();
}

LinearMatrix parse_linmat(const std::string& text, const RingPtr& ring) {
  std::istringstream is(text);
  std::string kw;
  size_t a, b;
  is >> kw >> a >> b;
  if (kw != "linmat" || !is) throw std::invalid_argument("bad linmat header");
  std::string rest;
  std::getline(is, rest);
  bool symmetric = rest.find("symmetric") != std::string::npos;
  std::string body((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());

  std::vector<Poly> entries;
  std::string cur;
  auto flush = [&]() {
    if (cur.find_first_not_of(" \t\r\n") == std::string::npos)
      throw std::invalid_argument("empty matrix entry");
    entries.push_back(parse_poly(cur, ring));
    cur.clear();
  };
  for (char c : body) {
    if (c == ',' || c == ';')
      flush();
    else
      cur += c;
  }
  if (cur.find_first_not_of(" \t\r\n") != std::string::npos) flush();
  if (entries.size() != a * b) throw std::invalid_argument("entry count mismatch");
  return LinearMatrix::from_entries(ring, a, b, std::move(entries), symmetric);
}

// ---------- minors ----------

namespace {

// Laplace expansion over column subsets, memoized per (row-window, colset).
Poly minor_laplace(const LinearMatrix& M, const std::vector<size_t>& rows,
                   const std::vector<size_t>& cols,
                   std::map<std::pair<size_t, uint64_t>, Poly>& memo) {
  const RingPtr& ring = M.ring();
  if (rows.size() == 1) return M.at(rows[0], cols[0]);
  uint64_t colmask = 0;
  for (size_t c : cols) colmask |= uint64_t(1) << c;
  auto key = std::make_pair(rows.size(), colmask);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  Poly acc(ring);
  std::vector<size_t> subrows(rows.begin() + 1, rows.end());
  bool neg = false;
  for (size_t k = 0; k < cols.size(); k++) {
    std::vector<size_t> subcols;
    for (size_t j = 0; j < cols.size(); j++)
      if (j != k) subcols.push_back(cols[j]);
    Poly sub = minor_laplace(M, subrows, subcols, memo);
    Poly term = M.at(rows[0], cols[k]) * sub;
    acc = neg ? acc - term : acc + term;
    neg = !neg;
  }
  memo.emplace(key, acc);
  return acc;
}

// Fraction-free Bareiss determinant for larger blocks.
Poly det_bareiss(const LinearMatrix& M, const std::vector<size_t>& rows,
                 const std::vector<size_t>& cols) {
  const RingPtr& ring = M.ring();
  const size_t n = rows.size();
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n, Poly(ring)));
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++) a[i][j] = M.at(rows[i], cols[j]);
  Poly prev = Poly::constant(ring, Scalar::one(ring->field()));
  bool neg = false;
  for (size_t k = 0; k + 1 < n; k++) {
    if (a[k][k].is_zero()) {
      size_t piv = k + 1;
      while (piv < n && a[piv][k].is_zero()) piv++;
      if (piv == n) return Poly(ring);
      std::swap(a[piv], a[k]);
      neg = !neg;
    }
    for (size_t i = k + 1; i < n; i++)
      for (size_t j = k + 1; j < n; j++)
        a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
    prev = a[k][k];
  }
  return neg ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

void subsets(size_t n, size_t k, const std::function<void(const std::vector<size_t>&)>& fn) {
  std::vector<size_t> idx(k);
  std::function<void(size_t, size_t)> rec = [&](size_t start, size_t depth) {
    if (depth == k) {
      fn(idx);
      return;
    }
    for (size_t i = start; i + (k - depth) <= n; i++) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

std::vector<Poly> minors(const LinearMatrix& M, size_t s) {
  if (s < 1 || s > std::min(M.rows(), M.cols()))
    throw std::invalid_argument("minor size out of range");
  std::vector<Poly> out;
  subsets(M.rows(), s, [&](const std::vector<size_t>& rs) {
    std::map<std::pair<size_t, uint64_t>, Poly> memo;
    subsets(M.cols(), s, [&](const std::vector<size_t>& cs) {
      if (s <= 4)
        out.push_back(minor_laplace(M, rs, cs, memo));
      else
        out.push_back(det_bareiss(M, rs, cs));
    });
  });
  return out;
}

Poly det_linmat(const LinearMatrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("det of non-square matrix");
  return minors(M, M.rows()).front();
}

// ---------- gamma regularity ----------

namespace {

// row vector r with M0 = c r^T (rank-1 factor); rank must be <= 1
std::optional<std::vector<Scalar>> rank1_row_factor(const ScalMat& M0) {
  size_t piv_i = M0.rows(), piv_j = 0;
  for (size_t i = 0; i < M0.rows() && piv_i == M0.rows(); i++)
    for (size_t j = 0; j < M0.cols(); j++)
      if (!M0.at(i, j).is_zero()) {
        piv_i = i;
        piv_j = j;
        break;
      }
  if (piv_i == M0.rows()) return std::nullopt;  // zero matrix
  if (M0.rank() > 1) throw std::invalid_argument("matrix has rank >= 2 at a point of gamma");
  (void)piv_j;
  return M0.row(piv_i);
}

}  // namespace

bool gamma_regular(const LinearMatrix& M, const std::vector<std::vector<Scalar>>& gamma) {
  if (gamma.empty()) return true;
  const FieldSpec f = M.ring()->field();
  std::vector<std::vector<Scalar>> rows;
  for (const auto& z : gamma) {
    ScalMat M0 = M.eval(z);
    auto r = rank1_row_factor(M0);
    if (!r) return false;  // M(z) = 0: kernel drops no dimension
    rows.push_back(*r);
  }
  return ScalMat::from_rows(rows, f).rank() == gamma.size();
}

bool gamma_regular_transpose(const LinearMatrix& M, const std::vector<std::vector<Scalar>>& gamma) {
  return gamma_regular(M.transpose(), gamma);
}

// ---------- normalization at a point ----------

std::pair<GLWitness, LinearMatrix> normalize_at_point(const LinearMatrix& M,
                                                      std::span<const Scalar> z, Rng* rng) {
  const FieldSpec f = M.ring()->field();
  ScalMat M0 = M.eval(z);
  size_t r = M0.rank();
  if (r == 0) throw std::invalid_argument("normalize_at_point: M(z) = 0");
  if (r > 1) throw std::invalid_argument("normalize_at_point: rank M(z) >= 2");

  if (M.symmetric()) {
    // congruence normal form; retry with random upper-triangular congruence
    // while the (0,0) pivot vanishes
    std::optional<Rng> local;
    if (!rng) {
      local.emplace(0);
      rng = &*local;
    }
    const size_t n = M.rows();
    for (int attempt = 0; attempt < 8; attempt++) {
      ScalMat P = ScalMat::identity(n, f);
      if (attempt > 0) {
        for (size_t i = 0; i < n; i++)
          for (size_t j = i + 1; j < n; j++) P.at(i, j) = rng->scalar(f);
      }
      ScalMat N0 = P * M0 * P.transpose();
      if (N0.at(0, 0).is_zero()) continue;
      ScalMat A = ScalMat::identity(n, f);
      Scalar inv = N0.at(0, 0).inv();
      for (size_t i = 1; i < n; i++) A.at(i, 0) = -(N0.at(i, 0) * inv);
      ScalMat W = A * P;
      LinearMatrix out = M.apply(W, W);
      out.set_symmetric(true);
      return {GLWitness{W, W}, out};
    }
    throw std::runtime_error("normalize_at_point: pivot search failed");
  }

  // pick the lexicographically first nonzero entry as pivot
  size_t pi = 0, pj = 0;
  bool found = false;
  for (size_t i = 0; i < M.rows() && !found; i++)
    for (size_t j = 0; j < M.cols() && !found; j++)
      if (!M0.at(i, j).is_zero()) {
        pi = i;
        pj = j;
        found = true;
      }
  ScalMat A = ScalMat::identity(M.rows(), f);
  ScalMat B = ScalMat::identity(M.cols(), f);
  // move pivot to (0,0)
  if (pi != 0)
    for (size_t j = 0; j < M.rows(); j++) std::swap(A.at(0, j), A.at(pi, j));
  if (pj != 0)
    for (size_t j = 0; j < M.cols(); j++) std::swap(B.at(0, j), B.at(pj, j));
  ScalMat N0 = A * M0 * B.transpose();
  // clear the first row and column; scale pivot to 1
  Scalar inv = N0.at(0, 0).inv();
  ScalMat A2 = ScalMat::identity(M.rows(), f);
  A2.at(0, 0) = inv;
  for (size_t i = 1; i < M.rows(); i++) A2.at(i, 0) = -(N0.at(i, 0) * inv);
  ScalMat B2 = ScalMat::identity(M.cols(), f);
  for (size_t j = 1; j < M.cols(); j++) B2.at(j, 0) = -(N0.at(0, j) * inv);
  ScalMat FA = A2 * A, FB = B2 * B;
  return {GLWitness{FA, FB}, M.apply(FA, FB)};
}

namespace {

void require_normalized(const LinearMatrix& M, std::span<const Scalar> z) {
  ScalMat M0 = M.eval(z);
  for (size_t i = 0; i < M0.rows(); i++)
    for (size_t j = 0; j < M0.cols(); j++) {
      bool want_nonzero = (i == 0 && j == 0);
      if (want_nonzero != !M0.at(i, j).is_zero())
        throw std::invalid_argument("matrix is not normalized to E^{0,0} at z");
    }
}

}  // namespace

LinearMatrix project_pi(const LinearMatrix& M, std::span<const Scalar> z) {
  require_normalized(M, z);
  return M.drop_col(0);
}

LinearMatrix project_pi_t(const LinearMatrix& M, std::span<const Scalar> z) {
  return project_pi(M, z).transpose();
}

LinearMatrix project_partial(const LinearMatrix& M, std::span<const Scalar> z) {
  require_normalized(M, z);
  return M.drop_row_col(0, 0);
}

// ---------- column dependence ----------

std::optional<std::vector<Scalar>> column_dependence(const std::vector<Poly>& A,
                                                     const LinearMatrix& Mp) {
  if (A.size() != Mp.rows()) throw std::invalid_argument("row count mismatch");
  const RingPtr& ring = Mp.ring();
  const size_t n = ring->nvars();
  ScalMat sys(Mp.rows() * n, Mp.cols(), ring->field());
  std::vector<Scalar> rhs;
  rhs.reserve(Mp.rows() * n);
  for (size_t i = 0; i < Mp.rows(); i++) {
    if (A[i].ring().get() != ring.get()) throw std::domain_error("ring mismatch");
    for (size_t k = 0; k < n; k++) {
      for (size_t j = 0; j < Mp.cols(); j++) sys.at(i * n + k, j) = Mp.at(i, j).linear_coeff(k);
      rhs.push_back(A[i].linear_coeff(k));
    }
  }
  return sys.solve(rhs);
}

}  // namespace secdet
