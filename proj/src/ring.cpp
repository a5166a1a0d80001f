#include "secdet/ring.hpp"

#include <algorithm>
#include <set>

namespace secdet {

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (size_t i = 0; i < n; i++) r.e[i] = static_cast<uint8_t>(r.e[i] + o.e[i]);
  r.deg = static_cast<uint16_t>(deg + o.deg);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (size_t i = 0; i < n; i++)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::divide(const Monomial& o) const {
  Monomial r = *this;
  for (size_t i = 0; i < n; i++) r.e[i] = static_cast<uint8_t>(r.e[i] - o.e[i]);
  r.deg = static_cast<uint16_t>(deg - o.deg);
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.deg = 0;
  for (size_t i = 0; i < a.n; i++) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg = static_cast<uint16_t>(r.deg + r.e[i]);
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.deg = 0;
  for (size_t i = 0; i < a.n; i++) {
    r.e[i] = std::min(a.e[i], b.e[i]);
    r.deg = static_cast<uint16_t>(r.deg + r.e[i]);
  }
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (size_t i = 0; i < n; i++)
    if (e[i] && o.e[i]) return false;
  return true;
}

bool Monomial::operator==(const Monomial& o) const {
  if (n != o.n || deg != o.deg) return false;
  for (size_t i = 0; i < n; i++)
    if (e[i] != o.e[i]) return false;
  return true;
}

namespace {

// degrevlex on the index window [lo, hi)
int cmp_drl(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
  int da = 0, db = 0;
  for (size_t i = lo; i < hi; i++) da += a.e[i], db += b.e[i];
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = hi; i-- > lo;) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case OrderKind::Lex:
      for (size_t i = 0; i < a.n; i++)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
      return 0;
    case OrderKind::DegRevLex:
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      for (size_t i = a.n; i-- > 0;)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
      return 0;
    case OrderKind::Block: {
      int c = cmp_drl(a, b, 0, block);
      if (c) return c;
      return cmp_drl(a, b, block, a.n);
    }
  }
  return 0;
}

std::string MonomialOrder::str() const {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::DegRevLex: return "degrevlex";
    case OrderKind::Block: return "block(" + std::to_string(block) + ")";
  }
  return "?";
}

PolyRing::PolyRing(std::vector<std::string> vars, FieldSpec field, MonomialOrder order)
    : vars_(std::move(vars)), field_(field), order_(order) {}

RingPtr PolyRing::make(std::vector<std::string> vars, FieldSpec field, MonomialOrder order) {
  if (vars.empty() || vars.size() > kMaxVars)
    throw std::invalid_argument("ring must have between 1 and " +
                                std::to_string(kMaxVars) + " variables");
  std::set<std::string> seen(vars.begin(), vars.end());
  if (seen.size() != vars.size())
    throw std::invalid_argument("duplicate variable names");
  if (order.kind == OrderKind::Block && (order.block == 0 || order.block >= vars.size()))
    throw std::invalid_argument("block order must split the variables into two nonempty blocks");
  return RingPtr(new PolyRing(std::move(vars), field, order));
}

RingPtr PolyRing::make_indexed(const std::string& stem, size_t n, FieldSpec field,
                               MonomialOrder order) {
  std::vector<std::string> vars;
  vars.reserve(n);
  for (size_t i = 0; i < n; i++) vars.push_back(stem + std::to_string(i));
  return make(std::move(vars), field, order);
}

std::optional<size_t> PolyRing::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); i++)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

}  // namespace secdet
