#include "secdet/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace secdet {

namespace {

void check_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() != b.get()) throw std::domain_error("ring mismatch");
}

}  // namespace

Poly Poly::constant(RingPtr ring, const Scalar& c) {
  Poly p(ring);
  if (!c.is_zero()) p.terms_.push_back({Monomial::one(ring->nvars()), c});
  return p;
}

Poly Poly::variable(RingPtr ring, size_t i) {
  Poly p(ring);
  p.terms_.push_back({Monomial::var(ring->nvars(), i), Scalar::one(ring->field())});
  return p;
}

Poly Poly::term(RingPtr ring, Monomial m, Scalar c) {
  Poly p(ring);
  if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> unsorted) {
  std::map<Monomial, Scalar, std::function<bool(const Monomial&, const Monomial&)>> acc(
      [r = ring.get()](const Monomial& a, const Monomial& b) { return r->cmp(a, b) > 0; });
  for (auto& t : unsorted) {
    auto it = acc.find(t.m);
    if (it == acc.end())
      acc.emplace(t.m, std::move(t.c));
    else
      it->second += t.c;
  }
  Poly p(ring);
  for (auto& [m, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, int(t.m.deg));
  return d;
}

bool Poly::is_homogeneous(int* deg) const {
  if (terms_.empty()) {
    if (deg) *deg = -1;
    return true;
  }
  const int d = terms_.front().m.deg;
  for (const auto& t : terms_)
    if (t.m.deg != d) return false;
  if (deg) *deg = d;
  return true;
}

Poly add_impl(const Poly& a, const Poly& b, bool negate_b) {
  check_same_ring(a.ring_, b.ring_);
  Poly r(a.ring_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    int c = a.ring_->cmp(a.terms_[i].m, b.terms_[j].m);
    if (c > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      const auto& t = b.terms_[j++];
      r.terms_.push_back({t.m, negate_b ? -t.c : t.c});
    } else {
      Scalar s = negate_b ? a.terms_[i].c - b.terms_[j].c : a.terms_[i].c + b.terms_[j].c;
      if (!s.is_zero()) r.terms_.push_back({a.terms_[i].m, std::move(s)});
      i++, j++;
    }
  }
  for (; i < a.terms_.size(); i++) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); j++) {
    const auto& t = b.terms_[j];
    r.terms_.push_back({t.m, negate_b ? -t.c : t.c});
  }
  return r;
}

Poly Poly::operator+(const Poly& o) const { return add_impl(*this, o, false); }
Poly Poly::operator-(const Poly& o) const { return add_impl(*this, o, true); }

Poly Poly::operator-() const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m, -t.c});
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  if (c.is_zero()) return Poly(ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m, t.c * c});
  return r;
}

Poly Poly::term_mul(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return Poly(ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return Poly(ring_);
  const Poly *small = this, *big = &o;
  if (small->terms_.size() > big->terms_.size()) std::swap(small, big);
  Poly acc(ring_);
  for (const auto& t : small->terms_) acc = acc + big->term_mul(t.m, t.c);
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(lt().c.inv());
}

Poly Poly::derivative(size_t var) const {
  Poly r(ring_);
  for (const auto& t : terms_) {
    if (t.m.e[var] == 0) continue;
    Monomial m = t.m;
    Scalar c = t.c * Scalar::from_int(m.e[var], ring_->field());
    m.e[var]--;
    m.deg--;
    if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (ring_.get() != o.ring_.get() || terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); i++)
    if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

Scalar Poly::eval(std::span<const Scalar> point) const {
  if (point.size() != ring_->nvars()) throw std::invalid_argument("point length mismatch");
  const FieldSpec f = ring_->field();
  Scalar acc = Scalar::zero(f);
  for (const auto& t : terms_) {
    Scalar v = t.c;
    for (size_t i = 0; i < ring_->nvars(); i++)
      if (t.m.e[i]) v = v * point[i].pow(t.m.e[i]);
    acc = acc + v;
  }
  return acc;
}

Scalar Poly::coeff(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.m == m) return t.c;
  return Scalar::zero(ring_->field());
}

Scalar Poly::linear_coeff(size_t i) const {
  for (const auto& t : terms_)
    if (t.m.deg == 1 && t.m.e[i] == 1) return t.c;
  return Scalar::zero(ring_->field());
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string cs = t.c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool unit_coeff = (cs == "1");
    bool wrote_coeff = false;
    if (!unit_coeff || t.m.is_one()) {
      os << cs;
      wrote_coeff = true;
    }
    bool need_star = wrote_coeff;
    for (size_t i = 0; i < ring_->nvars(); i++) {
      if (!t.m.e[i]) continue;
      if (need_star) os << "*";
      os << ring_->var(i);
      if (t.m.e[i] > 1) os << "^" << int(t.m.e[i]);
      need_star = true;
    }
  }
  return os.str();
}

Poly pullback(const Poly& p, std::span<const Poly> map, const RingPtr& target) {
  if (map.size() != p.ring()->nvars())
    throw std::invalid_argument("pullback: map length must match the source ring");
  for (const auto& q : map) check_same_ring(q.ring(), target);
  if (p.ring()->field() != target->field()) throw std::domain_error("field mismatch");
  // cache powers of each substituted image
  std::vector<std::vector<Poly>> pow(map.size());
  auto power = [&](size_t i, uint8_t e) -> const Poly& {
    auto& cache = pow[i];
    if (cache.empty()) cache.push_back(Poly::constant(target, Scalar::one(target->field())));
    while (cache.size() <= e) cache.push_back(cache.back() * map[i]);
    return cache[e];
  };
  Poly acc(target);
  for (const auto& t : p.terms()) {
    Poly term = Poly::constant(target, t.c);
    for (size_t i = 0; i < map.size(); i++)
      if (t.m.e[i]) term = term * power(i, t.m.e[i]);
    acc = acc + term;
  }
  return acc;
}

Poly transport(const Poly& p, const RingPtr& target, std::span<const size_t> var_map) {
  if (var_map.size() != p.ring()->nvars())
    throw std::invalid_argument("transport: var_map length mismatch");
  std::vector<Term> terms;
  terms.reserve(p.nterms());
  for (const auto& t : p.terms()) {
    Monomial m = Monomial::one(target->nvars());
    for (size_t i = 0; i < var_map.size(); i++) {
      m.e[var_map[i]] = static_cast<uint8_t>(m.e[var_map[i]] + t.m.e[i]);
    }
    m.deg = t.m.deg;
    terms.push_back({m, t.c});
  }
  return Poly::from_terms(target, std::move(terms));
}

std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int d) {
  std::vector<Monomial> out;
  Monomial m = Monomial::one(ring->nvars());
  const size_t n = ring->nvars();
  // enumerate exponent vectors summing to d
  std::function<void(size_t, int)> rec = [&](size_t i, int rem) {
    if (i + 1 == n) {
      m.e[i] = static_cast<uint8_t>(rem);
      m.deg = static_cast<uint16_t>(d);
      out.push_back(m);
      m.e[i] = 0;
      return;
    }
    for (int k = rem; k >= 0; k--) {
      m.e[i] = static_cast<uint8_t>(k);
      rec(i + 1, rem - k);
    }
    m.e[i] = 0;
  };
  rec(0, d);
  // construction order is lex-descending
  return out;
}

}  // namespace secdet
