#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "secdet/field.hpp"

namespace secdet {

// Hard cap on ring size; the instances this library targets stay well below.
inline constexpr size_t kMaxVars = 24;

// Exponent vector with inline storage. Total degree is cached.
struct Monomial {
  std::array<uint8_t, kMaxVars> e{};
  uint8_t n = 0;      // number of variables of the ring
  uint16_t deg = 0;   // total degree

  static Monomial one(size_t nvars) {
    Monomial m;
    m.n = static_cast<uint8_t>(nvars);
    return m;
  }
  static Monomial var(size_t nvars, size_t i, uint8_t exp = 1) {
    Monomial m = one(nvars);
    m.e[i] = exp;
    m.deg = exp;
    return m;
  }

  bool is_one() const { return deg == 0; }
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;  // this | o
  Monomial divide(const Monomial& o) const;  // this / o (caller checks)
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;
  bool operator==(const Monomial& o) const;
};

enum class OrderKind : uint8_t { Lex, DegRevLex, Block };

// Monomial order. Block splits variables into [0, block) and [block, n),
// each compared by degrevlex; the leading block is the elimination block.
struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  size_t block = 0;

  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder degrevlex() { return {OrderKind::DegRevLex, 0}; }
  static MonomialOrder block_elim(size_t k) { return {OrderKind::Block, k}; }

  // >0 if a > b, 0 if equal, <0 if a < b.
  int cmp(const Monomial& a, const Monomial& b) const;
  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && block == o.block;
  }
  std::string str() const;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

class PolyRing {
 public:
  static RingPtr make(std::vector<std::string> vars, FieldSpec field,
                      MonomialOrder order = MonomialOrder::degrevlex());
  // Convenience: variables named <stem>0..<stem>{n-1}.
  static RingPtr make_indexed(const std::string& stem, size_t n, FieldSpec field,
                              MonomialOrder order = MonomialOrder::degrevlex());

  size_t nvars() const { return vars_.size(); }
  const std::string& var(size_t i) const { return vars_[i]; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::optional<size_t> var_index(const std::string& name) const;
  const FieldSpec& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }

  int cmp(const Monomial& a, const Monomial& b) const { return order_.cmp(a, b); }

 private:
  PolyRing(std::vector<std::string> vars, FieldSpec field, MonomialOrder order);
  std::vector<std::string> vars_;
  FieldSpec field_;
  MonomialOrder order_;
};

}  // namespace secdet
