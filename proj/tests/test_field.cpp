#include "doctest.h"
#include "secdet/field.hpp"
#include "secdet/rng.hpp"
#include "secdet/scalmat.hpp"

using namespace secdet;

TEST_CASE("rational arithmetic normalizes fractions") {
  FieldSpec f = FieldSpec::rationals();
  Scalar a = Scalar::from_mpz(2, 4, f);
  CHECK(a == Scalar::from_mpz(1, 2, f));
  CHECK((a + a) == Scalar::one(f));
  CHECK((a - a).is_zero());
  CHECK(a.inv() == Scalar::from_int(2, f));
  CHECK(a.str() == "1/2");
  CHECK_THROWS(Scalar::from_mpz(1, 0, f));
}

TEST_CASE("prime field arithmetic") {
  FieldSpec f = FieldSpec::gf(32003);
  Scalar a = Scalar::from_int(-1, f);
  CHECK(a == Scalar::from_int(32002, f));
  CHECK((a * a).is_one());
  for (int64_t v : {1, 2, 7, 31337}) {
    Scalar s = Scalar::from_int(v, f);
    CHECK((s * s.inv()).is_one());
  }
  // fraction with denominator divisible by p is rejected
  CHECK_THROWS(Scalar::from_mpz(1, 32003, f));
  CHECK_THROWS(FieldSpec::gf(32004));
}

TEST_CASE("square roots") {
  FieldSpec f = FieldSpec::gf(32003);
  Rng rng(5);
  int squares = 0;
  for (int i = 0; i < 50; i++) {
    Scalar a = rng.nonzero_scalar(f);
    Scalar sq = a * a;
    Scalar r = Scalar::zero(f);
    REQUIRE(sq.sqrt(&r));
    CHECK(r * r == sq);
    Scalar probe = rng.nonzero_scalar(f);
    if (probe.sqrt(&r)) {
      squares++;
      CHECK(r * r == probe);
    }
  }
  CHECK(squares > 5);
  CHECK(squares < 45);

  FieldSpec q = FieldSpec::rationals();
  Scalar r = Scalar::zero(q);
  CHECK(Scalar::from_mpz(9, 4, q).sqrt(&r));
  CHECK(r == Scalar::from_mpz(3, 2, q));
  CHECK_FALSE(Scalar::from_int(2, q).sqrt(&r));
}

TEST_CASE("exact linear algebra: rref, kernel, solve, inverse, det") {
  FieldSpec f = FieldSpec::gf(32003);
  Rng rng(7);
  for (int trial = 0; trial < 20; trial++) {
    size_t n = 2 + rng.below(4);
    ScalMat A(n, n, f);
    for (size_t i = 0; i < n; i++)
      for (size_t j = 0; j < n; j++) A.at(i, j) = rng.scalar(f);
    auto inv = A.inverse();
    if (A.det().is_zero()) {
      CHECK_FALSE(inv.has_value());
      continue;
    }
    REQUIRE(inv.has_value());
    CHECK(A * *inv == ScalMat::identity(n, f));
    // solve against a known product
    std::vector<Scalar> x;
    for (size_t i = 0; i < n; i++) x.push_back(rng.scalar(f));
    auto b = A.apply(x);
    auto sol = A.solve(b);
    REQUIRE(sol.has_value());
    CHECK(A.apply(*sol) == b);
  }
  // kernel vectors really annihilate
  for (int trial = 0; trial < 10; trial++) {
    ScalMat A(3, 6, f);
    for (size_t i = 0; i < 3; i++)
      for (size_t j = 0; j < 6; j++) A.at(i, j) = rng.scalar(f);
    auto ker = A.kernel();
    CHECK(ker.size() + A.rank() == 6);
    for (const auto& v : ker) {
      auto img = A.apply(v);
      for (const auto& c : img) CHECK(c.is_zero());
    }
  }
}

TEST_CASE("binomials") {
  CHECK(binomial_i64(3, 1) == 3);
  CHECK(binomial_i64(5, 2) == 10);
  CHECK(binomial_i64(6, 2) == 15);
  CHECK(binomial_i64(4, 0) == 1);
  CHECK(binomial_i64(2, 5) == 0);
}
