#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace secdet {

enum class FieldKind : uint8_t { Rationals, Prime };

// Coefficient field: the rationals or a prime field GF(p), p < 2^31.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  int64_t characteristic = 0;  // 0 for Q, p for GF(p)

  static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
  static FieldSpec gf(int64_t p);

  bool operator==(const FieldSpec& o) const {
    return kind == o.kind && characteristic == o.characteristic;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  bool is_prime_field() const { return kind == FieldKind::Prime; }
  std::string str() const;                  // "q" or "gf:32003"
  static FieldSpec parse(const std::string& s);
};

// Exact field element. GF(p) values are stored as canonical representatives
// in [0, p); rationals as normalized GMP fractions.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_int(int64_t n, const FieldSpec& f);
  static Scalar from_mpz(const mpz_class& num, const mpz_class& den,
                         const FieldSpec& f);

  const FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(uint64_t e) const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // True when the element is a square in the field; on success *root is set.
  bool sqrt(Scalar* root) const;

  std::string str() const;  // "3", "-1/2"; GF(p) values print in [0, p)

 private:
  struct Zp {
    int64_t v;
    int64_t p;
  };
  std::variant<Zp, mpq_class> v_;

  explicit Scalar(Zp z) : v_(z) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}

  static int64_t mod_inv(int64_t a, int64_t p);
  friend struct ScalarAccess;
};

int64_t binomial_i64(int64_t n, int64_t k);

}  // namespace secdet
