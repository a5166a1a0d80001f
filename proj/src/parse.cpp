#include <cctype>

#include "secdet/poly.hpp"

namespace secdet {

namespace {

struct Lexer {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) i++;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    return s[i++];
  }
  bool accept(char c) {
    if (peek() == c) {
      i++;
      return true;
    }
    return false;
  }
  mpz_class integer() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) i++;
    if (i == start) throw std::invalid_argument("expected integer at position " + std::to_string(start));
    return mpz_class(s.substr(start, i - start));
  }
  std::string identifier() {
    skip_ws();
    size_t start = i;
    if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
      i++;
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        i++;
    }
    if (i == start) throw std::invalid_argument("expected identifier at position " + std::to_string(start));
    return s.substr(start, i - start);
  }
};

}  // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring) {
  Lexer lx{text};
  const FieldSpec field = ring->field();
  std::vector<Term> terms;

  bool first = true;
  while (true) {
    if (lx.eof()) {
      if (first) throw std::invalid_argument("empty polynomial");
      break;
    }
    bool neg = false;
    if (!first) {
      char op = lx.take();
      if (op == '+') {
        neg = false;
      } else if (op == '-') {
        neg = true;
      } else {
        throw std::invalid_argument(std::string("unexpected token '") + op + "'");
      }
    } else if (lx.accept('-')) {
      neg = true;
    }
    first = false;

    Scalar coeff = Scalar::one(field);
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      mpz_class num = lx.integer();
      mpz_class den = 1;
      if (lx.accept('/')) den = lx.integer();
      coeff = Scalar::from_mpz(num, den, field);
      saw_factor = true;
      if (!lx.accept('*')) {
        // bare constant term
        Monomial m = Monomial::one(ring->nvars());
        terms.push_back({m, neg ? -coeff : coeff});
        continue;
      }
    }
    Monomial m = Monomial::one(ring->nvars());
    while (true) {
      std::string name = lx.identifier();
      auto idx = ring->var_index(name);
      if (!idx) throw std::invalid_argument("unknown variable '" + name + "'");
      int exp = 1;
      if (lx.accept('^')) {
        mpz_class e = lx.integer();
        if (e < 0 || e > 255) throw std::invalid_argument("exponent out of range");
        exp = static_cast<int>(e.get_si());
      }
      m.e[*idx] = static_cast<uint8_t>(m.e[*idx] + exp);
      m.deg = static_cast<uint16_t>(m.deg + exp);
      saw_factor = true;
      if (!lx.accept('*')) break;
      if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
        mpz_class num = lx.integer();
        mpz_class den = 1;
        if (lx.accept('/')) den = lx.integer();
        coeff = coeff * Scalar::from_mpz(num, den, field);
        if (!lx.accept('*')) break;
      }
    }
    if (!saw_factor) throw std::invalid_argument("malformed term");
    terms.push_back({m, neg ? -coeff : coeff});
  }
  return Poly::from_terms(ring, std::move(terms));
}

}  // namespace secdet
