#include "doctest.h"
#include "secdet/ideal.hpp"
#include "secdet/rng.hpp"

using namespace secdet;

namespace {

std::vector<Poly> hankel_minors_2x3(const RingPtr& R) {
  return {parse_poly("x0*x2 - x1^2", R), parse_poly("x0*x3 - x1*x2", R),
          parse_poly("x1*x3 - x2^2", R)};
}

}  // namespace

TEST_CASE("principal ideal") {
  RingPtr R = PolyRing::make_indexed("x", 3, FieldSpec::rationals());
  Ideal I(R, {parse_poly("x0", R)});
  CHECK(I.groebner().size() == 1);
  CHECK(I.groebner()[0] == parse_poly("x0", R));
  const HilbertData& h = I.hilbert();
  CHECK(h.codimension == 1);
  CHECK(h.degree == 1);
}

TEST_CASE("twisted cubic minors form a reduced degrevlex GB") {
  RingPtr R = PolyRing::make_indexed("x", 4, FieldSpec::rationals());
  Ideal I(R, hankel_minors_2x3(R));
  const auto& gb = I.groebner();
  REQUIRE(gb.size() == 3);
  // the reduced basis is the three minors, monic
  for (const auto& m : hankel_minors_2x3(R)) {
    bool found = false;
    for (const auto& g : gb)
      if (g == m.monic()) found = true;
    CHECK(found);
  }
  // GB idempotence: recomputing from the basis returns an identical basis
  Ideal J(R, gb);
  CHECK(J.groebner() == gb);
}

TEST_CASE("normal form is linear and decides membership") {
  RingPtr R = PolyRing::make_indexed("x", 4, FieldSpec::gf(32003));
  Ideal I(R, hankel_minors_2x3(R));
  CHECK(I.contains(Poly::zero(R)));
  CHECK(I.contains(parse_poly("x0*x2 - x1^2", R)));
  CHECK_FALSE(I.contains(parse_poly("x0", R)));
  Rng rng(3);
  const FieldSpec f = R->field();
  for (int i = 0; i < 40; i++) {
    // random combinations of generators are members
    Poly p(R);
    for (const auto& g : I.gens()) {
      Monomial m = Monomial::var(4, rng.below(4));
      p = p + g.term_mul(m, rng.scalar(f));
    }
    CHECK(I.contains(p));
  }
  // NF(a p + b q) = a NF(p) + b NF(q)
  for (int i = 0; i < 20; i++) {
    Poly p = parse_poly("x0^2", R).term_mul(Monomial::var(4, rng.below(4)), rng.scalar(f));
    Poly q = parse_poly("x1*x3", R).term_mul(Monomial::var(4, rng.below(4)), rng.scalar(f));
    Scalar a = rng.scalar(f), b = rng.scalar(f);
    CHECK(I.normal_form(p.scaled(a) + q.scaled(b)) ==
          I.normal_form(p).scaled(a) + I.normal_form(q).scaled(b));
  }
}

TEST_CASE("hilbert data of the twisted cubic") {
  for (auto field : {FieldSpec::rationals(), FieldSpec::gf(32003)}) {
    RingPtr R = PolyRing::make_indexed("x", 4, field);
    Ideal I(R, hankel_minors_2x3(R));
    const HilbertData& h = I.hilbert();
    CHECK(h.codimension == 2);
    CHECK(h.degree == 3);
    CHECK(h.numerator == std::vector<mpz_class>{1, 0, -3, 2});
    CHECK(h.numerator_str() == "1 - 3*t^2 + 2*t^3");
  }
}

TEST_CASE("hilbert data of the 4x4 Hankel 3-minors") {
  RingPtr R = PolyRing::make_indexed("x", 7, FieldSpec::gf(32003));
  std::vector<Poly> gens;
  // 3-minors of the catalecticant x_{i+j}, i,j = 0..3, by Laplace expansion
  auto entry = [&](size_t i, size_t j) { return Poly::variable(R, i + j); };
  std::vector<std::array<size_t, 3>> triples = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (const auto& rs : triples)
    for (const auto& cs : triples) {
      Poly det(R);
      size_t perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
      int s[6] = {1, -1, -1, 1, 1, -1};
      for (int k = 0; k < 6; k++) {
        Poly term = entry(rs[0], cs[perm[k][0]]) * entry(rs[1], cs[perm[k][1]]) *
                    entry(rs[2], cs[perm[k][2]]);
        det = s[k] > 0 ? det + term : det - term;
      }
      gens.push_back(det);
    }
  Ideal I(R, gens);
  const HilbertData& h = I.hilbert();
  CHECK(h.codimension == 3);
  CHECK(h.degree == 10);
  // membership of a row-combination consequence
  Rng rng(4);
  Poly comb(R);
  for (const auto& g : I.gens()) comb = comb + g.scaled(rng.scalar(R->field()));
  CHECK(I.contains(comb));
}

TEST_CASE("hilbert data invariances") {
  RingPtr R = PolyRing::make_indexed("x", 4, FieldSpec::gf(32003));
  auto gens = hankel_minors_2x3(R);
  Ideal I(R, gens);
  const HilbertData h0 = I.hilbert();
  // permuted generators
  std::vector<Poly> perm = {gens[2], gens[0], gens[1]};
  Ideal J(R, perm);
  CHECK(J.hilbert().numerator == h0.numerator);
  CHECK(J.hilbert().degree == h0.degree);
  // redundant generator added
  std::vector<Poly> red = gens;
  red.push_back(gens[0].term_mul(Monomial::var(4, 3), Scalar::from_int(5, R->field())));
  Ideal K(R, red);
  CHECK(K.hilbert().numerator == h0.numerator);
  CHECK(K.hilbert().codimension == h0.codimension);
}

TEST_CASE("non-homogeneous input is rejected by hilbert_data") {
  RingPtr R = PolyRing::make_indexed("x", 3, FieldSpec::rationals());
  Ideal I(R, {parse_poly("x0^2 - x1", R)});
  CHECK_THROWS_AS(I.hilbert(), std::invalid_argument);
}

TEST_CASE("budget exceeded is reported") {
  RingPtr R = PolyRing::make_indexed("x", 7, FieldSpec::gf(32003));
  std::vector<Poly> gens;
  Rng rng(12);
  for (int i = 0; i < 6; i++) {
    std::vector<Term> ts;
    for (int k = 0; k < 5; k++) {
      Monomial m = Monomial::one(7);
      for (int rep = 0; rep < 3; rep++) {
        size_t v = rng.below(7);
        m.e[v]++;
        m.deg++;
      }
      ts.push_back({m, rng.scalar(R->field())});
    }
    gens.push_back(Poly::from_terms(R, std::move(ts)));
  }
  Ideal I(R, gens);
  GBOptions tiny;
  tiny.max_steps = 5;
  CHECK_THROWS_AS(I.groebner(tiny), BudgetExceeded);
}

TEST_CASE("elimination recovers the twisted cubic ideal") {
  // ring k[s, t, x0..x3] with an elimination block for {s, t}
  std::vector<std::string> names = {"s", "t", "x0", "x1", "x2", "x3"};
  RingPtr E = PolyRing::make(names, FieldSpec::rationals(), MonomialOrder::block_elim(2));
  std::vector<Poly> gens = {
      parse_poly("x0 - s^3", E), parse_poly("x1 - s^2*t", E), parse_poly("x2 - s*t^2", E),
      parse_poly("x3 - t^3", E)};
  Ideal I(E, gens);
  Ideal J = eliminate(I, {0, 1});
  RingPtr R = J.ring();
  REQUIRE(R->nvars() == 4);
  Ideal hankel(R, {parse_poly("x0*x2 - x1^2", R), parse_poly("x0*x3 - x1*x2", R),
                   parse_poly("x1*x3 - x2^2", R)});
  CHECK(ideal_equal(J, hankel));

  // eliminating nothing returns the ideal unchanged
  Ideal same = eliminate(I, {});
  CHECK(same.gens().size() == I.gens().size());

  // inconsistent system: 1 shows up after full elimination
  RingPtr E2 = PolyRing::make({"s", "x0"}, FieldSpec::rationals(), MonomialOrder::block_elim(1));
  Ideal K(E2, {parse_poly("s - 1", E2), parse_poly("s - 2", E2)});
  Ideal K2 = eliminate(K, {0});
  bool has_one = false;
  for (const auto& g : K2.groebner())
    if (g.degree() == 0) has_one = true;
  CHECK(has_one);

  // wrong order configuration is an error
  RingPtr D = PolyRing::make_indexed("x", 4, FieldSpec::rationals());
  Ideal L(D, {parse_poly("x0", D)});
  CHECK_THROWS_AS(eliminate(L, {0}), std::invalid_argument);
}

TEST_CASE("monomial hilbert recursion base cases") {
  // unit ideal numerator is 0; simple powers multiply out
  std::vector<Monomial> pure = {Monomial::var(3, 0, 2), Monomial::var(3, 1, 3)};
  auto n = monomial_hilbert_numerator(pure, 3);
  // (1 - t^2)(1 - t^3) = 1 - t^2 - t^3 + t^5
  CHECK(n == std::vector<mpz_class>{1, 0, -1, -1, 0, 1});
  CHECK(monomial_dimension(pure, 3) == 1);
  CHECK(monomial_dimension({Monomial::one(3)}, 3) == -1);
}
