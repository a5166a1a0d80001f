#include "secdet/field.hpp"

#include <cstdlib>

namespace secdet {

namespace {

bool is_probable_prime(int64_t p) {
  mpz_class z(static_cast<long>(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;
}

int64_t mod_reduce(int64_t v, int64_t p) {
  int64_t r = v % p;
  return r < 0 ? r + p : r;
}

}  // namespace

FieldSpec FieldSpec::gf(int64_t p) {
  if (p < 2 || p >= (int64_t(1) << 31) || !is_probable_prime(p))
    throw std::invalid_argument("FieldSpec::gf: characteristic must be a prime < 2^31");
  return {FieldKind::Prime, p};
}

std::string FieldSpec::str() const {
  return kind == FieldKind::Rationals ? "q" : "gf:" + std::to_string(characteristic);
}

FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "q" || s == "Q") return rationals();
  if (s.rfind("gf:", 0) == 0) return gf(std::stoll(s.substr(3)));
  throw std::invalid_argument("unknown field spec: " + s);
}

Scalar Scalar::zero(const FieldSpec& f) {
  if (f.is_prime_field()) return Scalar(Zp{0, f.characteristic});
  return Scalar(mpq_class(0));
}

Scalar Scalar::one(const FieldSpec& f) {
  if (f.is_prime_field()) return Scalar(Zp{1 % f.characteristic, f.characteristic});
  return Scalar(mpq_class(1));
}

Scalar Scalar::from_int(int64_t n, const FieldSpec& f) {
  if (f.is_prime_field()) return Scalar(Zp{mod_reduce(n, f.characteristic), f.characteristic});
  mpq_class q;
  q = mpz_class(static_cast<long>(n >> 32)) * mpz_class(int64_t(1) << 32) +
      mpz_class(static_cast<long>(n & 0xffffffff));
  return Scalar(q);
}

Scalar Scalar::from_mpz(const mpz_class& num, const mpz_class& den, const FieldSpec& f) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (f.is_prime_field()) {
    const int64_t p = f.characteristic;
    mpz_class r = num % p, s = den % p;
    int64_t rn = mod_reduce(r.get_si(), p), rd = mod_reduce(s.get_si(), p);
    if (rd == 0) throw std::domain_error("denominator divisible by the characteristic");
    return Scalar(Zp{mod_reduce(rn * mod_inv(rd, p), p), p});
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

const FieldSpec Scalar::field() const {
  if (auto* z = std::get_if<Zp>(&v_)) return FieldSpec{FieldKind::Prime, z->p};
  return FieldSpec::rationals();
}

bool Scalar::is_zero() const {
  if (auto* z = std::get_if<Zp>(&v_)) return z->v == 0;
  return std::get<mpq_class>(v_) == 0;
}

bool Scalar::is_one() const {
  if (auto* z = std::get_if<Zp>(&v_)) return z->v == 1;
  return std::get<mpq_class>(v_) == 1;
}

int64_t Scalar::mod_inv(int64_t a, int64_t p) {
  // extended Euclid; a in (0, p)
  int64_t t = 0, newt = 1, r = p, newr = a;
  while (newr != 0) {
    int64_t q = r / newr;
    int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  return t < 0 ? t + p : t;
}

#define SECDET_SCALAR_BINOP(OP, ZPEXPR)                                       \
  if (auto* a = std::get_if<Zp>(&v_)) {                                       \
    auto* b = std::get_if<Zp>(&o.v_);                                         \
    if (!b || a->p != b->p) throw std::domain_error("field mismatch");        \
    return Scalar(Zp{(ZPEXPR), a->p});                                        \
  }                                                                           \
  if (!std::holds_alternative<mpq_class>(o.v_))                               \
    throw std::domain_error("field mismatch");                                \
  return Scalar(mpq_class(std::get<mpq_class>(v_) OP std::get<mpq_class>(o.v_)));

Scalar Scalar::operator+(const Scalar& o) const {
  SECDET_SCALAR_BINOP(+, mod_reduce(a->v + b->v, a->p))
}

Scalar Scalar::operator-(const Scalar& o) const {
  SECDET_SCALAR_BINOP(-, mod_reduce(a->v - b->v, a->p))
}

Scalar Scalar::operator*(const Scalar& o) const {
  SECDET_SCALAR_BINOP(*, mod_reduce(a->v * b->v, a->p))
}

#undef SECDET_SCALAR_BINOP

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
  if (auto* z = std::get_if<Zp>(&v_)) return Scalar(Zp{z->v == 0 ? 0 : z->p - z->v, z->p});
  return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

Scalar Scalar::inv() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (auto* z = std::get_if<Zp>(&v_)) return Scalar(Zp{mod_inv(z->v, z->p), z->p});
  return Scalar(mpq_class(1 / std::get<mpq_class>(v_)));
}

Scalar Scalar::pow(uint64_t e) const {
  Scalar r = Scalar::one(field()), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (auto* a = std::get_if<Zp>(&v_)) {
    auto* b = std::get_if<Zp>(&o.v_);
    return b && a->p == b->p && a->v == b->v;
  }
  auto* b = std::get_if<mpq_class>(&o.v_);
  return b && std::get<mpq_class>(v_) == *b;
}

bool Scalar::sqrt(Scalar* root) const {
  if (is_zero()) {
    *root = *this;
    return true;
  }
  if (auto* z = std::get_if<Zp>(&v_)) {
    const int64_t p = z->p, a = z->v;
    if (p == 2) {
      *root = *this;
      return true;
    }
    Scalar half = Scalar(Zp{a, p}).pow(uint64_t((p - 1) / 2));
    if (!half.is_one()) return false;
    // Tonelli-Shanks
    int64_t q = p - 1, s = 0;
    while (q % 2 == 0) q /= 2, s++;
    int64_t nq = 2;
    while (Scalar(Zp{nq, p}).pow(uint64_t((p - 1) / 2)).is_one()) nq++;
    Scalar c = Scalar(Zp{nq, p}).pow(uint64_t(q));
    Scalar t = Scalar(Zp{a, p}).pow(uint64_t(q));
    Scalar r = Scalar(Zp{a, p}).pow(uint64_t((q + 1) / 2));
    int64_t m = s;
    while (!t.is_one()) {
      Scalar t2 = t;
      int64_t i = 0;
      while (!t2.is_one()) {
        t2 = t2 * t2;
        i++;
      }
      Scalar b = c;
      for (int64_t j = 0; j < m - i - 1; j++) b = b * b;
      r = r * b;
      c = b * b;
      t = t * c;
      m = i;
    }
    *root = r;
    return true;
  }
  const mpq_class& q = std::get<mpq_class>(v_);
  if (q < 0) return false;
  mpz_class num = q.get_num(), den = q.get_den(), rn, rd;
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  *root = Scalar(mpq_class(rn, rd));
  return true;
}

std::string Scalar::str() const {
  if (auto* z = std::get_if<Zp>(&v_)) return std::to_string(z->v);
  return std::get<mpq_class>(v_).get_str();
}

int64_t binomial_i64(int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  if (!r.fits_slong_p()) throw std::overflow_error("binomial overflow");
  return r.get_si();
}

}  // namespace secdet
