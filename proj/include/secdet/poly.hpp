#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "secdet/ring.hpp"

namespace secdet {

struct Term {
  Monomial m;
  Scalar c;
};

// Sparse multivariate polynomial. Terms are kept strictly descending in the
// ring's monomial order and never carry a zero coefficient.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
  static Poly constant(RingPtr ring, const Scalar& c);
  static Poly variable(RingPtr ring, size_t i);
  static Poly term(RingPtr ring, Monomial m, Scalar c);
  static Poly from_terms(RingPtr ring, std::vector<Term> unsorted);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  size_t nterms() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& lt() const { return terms_.front(); }

  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous(int* deg = nullptr) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Scalar& c) const;
  Poly term_mul(const Monomial& m, const Scalar& c) const;
  Poly monic() const;
  Poly derivative(size_t var) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Scalar eval(std::span<const Scalar> point) const;
  Scalar coeff(const Monomial& m) const;  // zero if absent

  // Coefficient of variable i in a form of degree <= 1.
  Scalar linear_coeff(size_t i) const;

  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
  friend Poly add_impl(const Poly&, const Poly&, bool);
};

// Grammar (whitespace insignificant):
//   poly := ['-'] term (('+'|'-') term)*
//   term := coef | [coef '*'] var['^'exp] ('*' var['^'exp])*
//   coef := integer | integer '/' integer
Poly parse_poly(const std::string& text, const RingPtr& ring);

// Substitute map[i] for variable i of p; result lives in `target`.
Poly pullback(const Poly& p, std::span<const Poly> map, const RingPtr& target);

// Rename p into `target` sending variable i of p to variable var_map[i].
Poly transport(const Poly& p, const RingPtr& target, std::span<const size_t> var_map);

// GCD, normalized to monic leading coefficient. gcd(p, 0) = monic(p).
Poly poly_gcd(const Poly& a, const Poly& b);

// Exact quotient; throws std::domain_error when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

// All monomials of the ring of total degree d, descending in ring order.
std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int d);

}  // namespace secdet
