#include "doctest.h"
#include "secdet/poly.hpp"
#include "secdet/rng.hpp"

using namespace secdet;

namespace {

RingPtr qring4() {
  return PolyRing::make_indexed("x", 4, FieldSpec::rationals());
}

Poly random_poly(const RingPtr& R, Rng& rng, int max_terms = 6, int max_deg = 3) {
  std::vector<Term> ts;
  size_t nt = 1 + rng.below(max_terms);
  for (size_t k = 0; k < nt; k++) {
    Monomial m = Monomial::one(R->nvars());
    for (size_t i = 0; i < R->nvars(); i++) {
      uint8_t e = uint8_t(rng.below(max_deg + 1));
      m.e[i] = e;
      m.deg = uint16_t(m.deg + e);
    }
    ts.push_back({m, rng.scalar(R->field())});
  }
  return Poly::from_terms(R, std::move(ts));
}

}  // namespace

TEST_CASE("parse basics") {
  RingPtr R = qring4();
  CHECK(parse_poly("0", R).is_zero());
  Poly p = parse_poly("x0*x2 - x1^2", R);
  CHECK(p.nterms() == 2);
  // degrevlex: x1^2 beats x0*x2 (the twisted-cubic initial ideal is
  // generated by x1^2, x1*x2, x2^2)
  CHECK(p.lt().m == Monomial::var(4, 1, 2));
  CHECK(parse_poly("3*x1^2*x0 - x2", R).str() == "3*x0*x1^2 - x2");
  CHECK(parse_poly("1/2*x0 + 1/2*x0", R) == parse_poly("x0", R));
  CHECK_THROWS(parse_poly("y0", R));
  CHECK_THROWS(parse_poly("x0 +", R));
  CHECK_THROWS(parse_poly("3x0", R));
}

TEST_CASE("print-parse round trip on random polynomials") {
  // derived oracle: print . parse . print == print, over 1000 random draws
  for (auto field : {FieldSpec::rationals(), FieldSpec::gf(32003)}) {
    RingPtr R = PolyRing::make_indexed("x", 4, field);
    Rng rng(42);
    for (int i = 0; i < 500; i++) {
      Poly p = random_poly(R, rng);
      Poly q = parse_poly(p.str(), R);
      CHECK(q == p);
      CHECK(q.str() == p.str());
    }
  }
}

TEST_CASE("evaluation agrees with constant substitution") {
  RingPtr R = qring4();
  Poly p = parse_poly("x0*x3 - x1*x2", R);
  FieldSpec f = R->field();
  std::vector<Scalar> pt{Scalar::one(f), Scalar::zero(f), Scalar::zero(f), Scalar::one(f)};
  CHECK(p.eval(pt) == Scalar::one(f));

  // homogeneous polynomials vanish at the origin
  std::vector<Scalar> zero(4, Scalar::zero(f));
  CHECK(p.eval(zero).is_zero());

  // substitution oracle on 500 random pairs
  Rng rng(9);
  for (int i = 0; i < 500; i++) {
    Poly q = random_poly(R, rng);
    std::vector<Scalar> v;
    std::vector<Poly> consts;
    for (int k = 0; k < 4; k++) {
      v.push_back(rng.scalar(f));
      consts.push_back(Poly::constant(R, v.back()));
    }
    Poly substituted = pullback(q, consts, R);
    CHECK(substituted.degree() <= 0);
    Scalar via_sub = substituted.is_zero() ? Scalar::zero(f) : substituted.lt().c;
    CHECK(q.eval(v) == via_sub);
  }
}

TEST_CASE("pullback through the twisted cubic") {
  RingPtr R = qring4();
  RingPtr P = PolyRing::make({"s", "t"}, R->field());
  std::vector<Poly> cubic = {parse_poly("s^3", P), parse_poly("s^2*t", P),
                             parse_poly("s*t^2", P), parse_poly("t^3", P)};
  CHECK(pullback(parse_poly("x0", R), cubic, P) == parse_poly("s^3", P));
  // all three Hankel 2-minors pull back to zero
  for (const char* m : {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"})
    CHECK(pullback(parse_poly(m, R), cubic, P).is_zero());
  // Veronese conic relation
  RingPtr R3 = PolyRing::make_indexed("x", 3, R->field());
  std::vector<Poly> conic = {parse_poly("s^2", P), parse_poly("s*t", P), parse_poly("t^2", P)};
  CHECK(pullback(parse_poly("x0*x2 - x1^2", R3), conic, P).is_zero());
}

TEST_CASE("gcd") {
  RingPtr R = qring4();
  Poly a = parse_poly("x0^2 - x1^2", R);
  Poly b = parse_poly("x0 - x1", R);
  CHECK(poly_gcd(a, b) == b);
  CHECK(poly_gcd(a, Poly::zero(R)) == a.monic());
  CHECK(poly_gcd(Poly::zero(R), b) == b);

  // multiply-and-divide oracle: gcd(u*a, u*b) = u * gcd(a, b) up to scalar,
  // with gcd(a, b) arranged to be 1
  for (auto field : {FieldSpec::rationals(), FieldSpec::gf(32003)}) {
    RingPtr S = PolyRing::make_indexed("x", 3, field);
    Rng rng(11);
    int done = 0;
    for (int i = 0; done < 60 && i < 400; i++) {
      Poly u = random_poly(S, rng, 3, 2), p = random_poly(S, rng, 3, 2),
           q = random_poly(S, rng, 3, 2);
      if (u.is_zero() || p.is_zero() || q.is_zero()) continue;
      Poly g = poly_gcd(p, q);
      if (g.degree() != 0) continue;  // want coprime pairs
      Poly lhs = poly_gcd(u * p, u * q);
      CHECK(lhs == u.monic());
      done++;
    }
    CHECK(done >= 50);
  }
}

TEST_CASE("exact division") {
  RingPtr R = qring4();
  Poly a = parse_poly("x0^2 - x1^2", R);
  Poly b = parse_poly("x0 + x1", R);
  CHECK(exact_div(a, b) == parse_poly("x0 - x1", R));
  CHECK_THROWS(exact_div(parse_poly("x0^2 + x1", R), b));
}

TEST_CASE("derivative") {
  RingPtr R = qring4();
  Poly p = parse_poly("x0^3 + 2*x0*x1", R);
  CHECK(p.derivative(0) == parse_poly("3*x0^2 + 2*x1", R));
  CHECK(p.derivative(2).is_zero());
}

TEST_CASE("monomial order sanity") {
  // degrevlex tie-break: smaller exponent at the last differing index wins
  RingPtr R = qring4();
  Monomial a = Monomial::var(4, 0) * Monomial::var(4, 2);
  Monomial b = Monomial::var(4, 1) * Monomial::var(4, 1);
  CHECK(R->cmp(a, b) < 0);
  // lex ring
  RingPtr L = PolyRing::make_indexed("x", 4, FieldSpec::rationals(), MonomialOrder::lex());
  CHECK(L->cmp(a, b) > 0);
  Monomial c = Monomial::var(4, 0, 2);
  CHECK(L->cmp(c, a) > 0);
  // block order eliminates the leading block
  RingPtr B = PolyRing::make_indexed("x", 4, FieldSpec::rationals(),
                                     MonomialOrder::block_elim(2));
  Monomial lead = Monomial::var(4, 1);        // in the elimination block
  Monomial tailm = Monomial::var(4, 2, 3);    // only trailing block
  CHECK(B->cmp(lead, tailm) > 0);
}
