#include "doctest.h"
#include "secdet/linmat.hpp"

using namespace secdet;

namespace {

LinearMatrix hankel(const RingPtr& R, size_t rows, size_t cols) {
  LinearMatrix M(R, rows, cols, rows == cols);
  for (size_t i = 0; i < rows; i++)
    for (size_t j = 0; j < cols; j++) M.set(i, j, Poly::variable(R, i + j));
  return M;
}

std::vector<Scalar> pt(const RingPtr& R, std::initializer_list<int> v) {
  std::vector<Scalar> out;
  for (int c : v) out.push_back(Scalar::from_int(c, R->field()));
  return out;
}

}  // namespace

TEST_CASE("minors of the 2x3 Hankel are the twisted cubic quadrics") {
  RingPtr R = PolyRing::make_indexed("x", 4, FieldSpec::rationals());
  LinearMatrix M = hankel(R, 2, 3);
  auto m2 = minors(M, 2);
  REQUIRE(m2.size() == 3);
  CHECK(m2[0] == parse_poly("x0*x2 - x1^2", R));
  CHECK(m2[1] == parse_poly("x0*x3 - x1*x2", R));
  CHECK(m2[2] == parse_poly("x1*x3 - x2^2", R));
  // 1-minors flatten the entries
  auto m1 = minors(M, 1);
  CHECK(m1.size() == 6);
  CHECK(m1[0] == parse_poly("x0", R));
  CHECK_THROWS(minors(M, 3));
}

TEST_CASE("minor count and Bareiss agreement") {
  RingPtr R = PolyRing::make_indexed("x", 7, FieldSpec::gf(32003));
  LinearMatrix M(R, 3, 5, false);
  Rng rng(21);
  for (size_t i = 0; i < 3; i++)
    for (size_t j = 0; j < 5; j++) {
      Poly e(R);
      for (size_t k = 0; k < 7; k++) e = e + Poly::variable(R, k).scaled(rng.scalar(R->field()));
      M.set(i, j, e);
    }
  CHECK(minors(M, 3).size() == 10);  // C(3,3) * C(5,3)

  // a 5x5 determinant goes through the fraction-free branch
  RingPtr R2 = PolyRing::make_indexed("y", 9, FieldSpec::gf(32003));
  LinearMatrix H(R2, 5, 5, true);
  for (size_t i = 0; i < 5; i++)
    for (size_t j = 0; j < 5; j++) H.set(i, j, Poly::variable(R2, i + j));
  Poly det5 = det_linmat(H);
  CHECK(det5.is_homogeneous());
  CHECK(det5.degree() == 5);
  // catalecticant determinants vanish on the rational normal curve
  RingPtr P = PolyRing::make({"s", "t"}, R2->field());
  std::vector<Poly> rnc8;
  for (int j = 0; j <= 8; j++) {
    Monomial m = Monomial::one(2);
    m.e[0] = uint8_t(8 - j);
    m.e[1] = uint8_t(j);
    m.deg = 8;
    rnc8.push_back(Poly::term(P, m, Scalar::one(P->field())));
  }
  CHECK(pullback(det5, rnc8, P).is_zero());
}

TEST_CASE("one-genericity of Hankel and counterexamples") {
  RingPtr R = PolyRing::make_indexed("x", 4, FieldSpec::rationals());
  CHECK(is_one_generic(hankel(R, 2, 3)).one_generic);

  // [[x, y], [y, x]] has the witness v = (1, -1), w = (1, 1)
  RingPtr R2 = PolyRing::make({"x", "y"}, FieldSpec::rationals());
  LinearMatrix M(R2, 2, 2, false);
  M.set(0, 0, parse_poly("x", R2));
  M.set(0, 1, parse_poly("y", R2));
  M.set(1, 0, parse_poly("y", R2));
  M.set(1, 1, parse_poly("x", R2));
  OneGenericResult r = is_one_generic(M);
  CHECK_FALSE(r.one_generic);
  REQUIRE(r.witness.has_value());
  Poly form(R2);
  for (size_t i = 0; i < 2; i++)
    for (size_t j = 0; j < 2; j++)
      form = form + M.at(i, j).scaled(r.witness->first[i] * r.witness->second[j]);
  CHECK(form.is_zero());

  // any zero entry kills 1-genericity
  LinearMatrix Z = hankel(R, 2, 3);
  Z.set(1, 2, Poly::zero(R));
  OneGenericResult rz = is_one_generic(Z);
  CHECK_FALSE(rz.one_generic);
  REQUIRE(rz.witness.has_value());
}

TEST_CASE("one-genericity is GL-invariant") {
  RingPtr R = PolyRing::make_indexed("x", 4, FieldSpec::gf(32003));
  LinearMatrix M = hankel(R, 2, 3);
  Rng rng(31);
  const FieldSpec f = R->field();
  for (int trial = 0; trial < 4; trial++) {
    ScalMat A(2, 2, f), B(3, 3, f);
    do {
      for (size_t i = 0; i < 2; i++)
        for (size_t j = 0; j < 2; j++) A.at(i, j) = rng.scalar(f);
    } while (A.det().is_zero());
    do {
      for (size_t i = 0; i < 3; i++)
        for (size_t j = 0; j < 3; j++) B.at(i, j) = rng.scalar(f);
    } while (B.det().is_zero());
    CHECK(is_one_generic(M.apply(A, B)).one_generic);
  }
}

TEST_CASE("gamma regularity") {
  RingPtr R = PolyRing::make_indexed("x", 4, FieldSpec::rationals());
  LinearMatrix M = hankel(R, 2, 3);
  auto z0 = pt(R, {1, 0, 0, 0});
  auto z1 = pt(R, {0, 0, 0, 1});
  CHECK(gamma_regular(M, {}));
  CHECK(gamma_regular(M, {z0, z1}));
  CHECK_FALSE(gamma_regular(M, {z0, z0}));  // repeated point drops codimension
  // rank >= 2 evaluation is a contract violation
  CHECK_THROWS(gamma_regular(M, {pt(R, {1, 0, 0, 1})}));
}

TEST_CASE("normalization at a point") {
  RingPtr R = PolyRing::make_indexed("x", 4, FieldSpec::rationals());
  LinearMatrix M = hankel(R, 2, 3);
  // at (1:0:0:0) the evaluation is already E^{0,0}
  auto z = pt(R, {1, 0, 0, 0});
  auto [w1, N1] = normalize_at_point(M, z);
  ScalMat E1 = N1.eval(z);
  CHECK(E1.at(0, 0).is_one());
  for (size_t i = 0; i < 2; i++)
    for (size_t j = 0; j < 3; j++)
      if (i || j) CHECK(E1.at(i, j).is_zero());
  // composing the witness back recovers M
  auto Ai = w1.A.inverse();
  auto Bi = w1.B.inverse();
  REQUIRE(Ai);
  REQUIRE(Bi);
  CHECK(N1.apply(*Ai, *Bi) == M);

  // at (0:0:0:1): permutation-style witness
  auto y = pt(R, {0, 0, 0, 1});
  auto [w2, N2] = normalize_at_point(M, y);
  ScalMat E2 = N2.eval(y);
  CHECK_FALSE(E2.at(0, 0).is_zero());
  for (size_t i = 0; i < 2; i++)
    for (size_t j = 0; j < 3; j++)
      if (i || j) CHECK(E2.at(i, j).is_zero());

  // errors: rank-2 and zero evaluations
  CHECK_THROWS(normalize_at_point(M, pt(R, {0, 1, 0, 0})));  // rank 2 there
  LinearMatrix Z(R, 2, 2, false);
  Z.set(0, 0, parse_poly("x0", R));
  CHECK_THROWS(normalize_at_point(Z, pt(R, {0, 1, 0, 0})));  // evaluates to zero
}

TEST_CASE("symmetric normalization uses a congruence") {
  RingPtr R = PolyRing::make_indexed("x", 6, FieldSpec::gf(32003));
  // generic symmetric: [x0 x1 x2; x1 x3 x4; x2 x4 x5]
  size_t idx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  LinearMatrix M(R, 3, 3, true);
  for (size_t i = 0; i < 3; i++)
    for (size_t j = 0; j < 3; j++) M.set(i, j, Poly::variable(R, idx[i][j]));
  auto z = pt(R, {1, 0, 0, 0, 0, 0});
  Rng rng(3);
  auto [w, N] = normalize_at_point(M, z, &rng);
  CHECK(w.A == w.B);
  CHECK(N.symmetric());
  ScalMat E = N.eval(z);
  CHECK_FALSE(E.at(0, 0).is_zero());
  for (size_t i = 0; i < 3; i++)
    for (size_t j = 0; j < 3; j++)
      if (i || j) CHECK(E.at(i, j).is_zero());

  // a point where the (0,0) pivot vanishes: e_5 evaluates to E^{2,2}
  auto y = pt(R, {0, 0, 0, 0, 0, 1});
  auto [w2, N2] = normalize_at_point(M, y, &rng);
  ScalMat E2 = N2.eval(y);
  CHECK_FALSE(E2.at(0, 0).is_zero());
  for (size_t i = 0; i < 3; i++)
    for (size_t j = 0; j < 3; j++)
      if (i || j) CHECK(E2.at(i, j).is_zero());
  CHECK(N2.symmetric());
}

TEST_CASE("projection operators") {
  RingPtr R = PolyRing::make_indexed("x", 6, FieldSpec::rationals());
  LinearMatrix M = hankel(R, 2, 5);  // rnc degree 5
  auto z = pt(R, {1, 0, 0, 0, 0, 0});
  auto [w, N] = normalize_at_point(M, z);
  LinearMatrix P = project_pi(N, z);
  CHECK(P.rows() == 2);
  CHECK(P.cols() == 4);
  // the inner projection of the degree-5 Hankel is the degree-4 Hankel in
  // the last five coordinates
  for (size_t i = 0; i < 2; i++)
    for (size_t j = 0; j < 4; j++) CHECK(P.at(i, j) == Poly::variable(R, 1 + i + j));
  // every surviving entry vanishes at z
  for (size_t i = 0; i < 2; i++)
    for (size_t j = 0; j < 4; j++) CHECK(P.at(i, j).eval(z).is_zero());
  CHECK(project_pi_t(N, z) == P.transpose());
  LinearMatrix D = project_partial(N, z);
  CHECK(D.rows() == 1);
  CHECK(D.cols() == 4);
  // unnormalized input is rejected
  CHECK_THROWS(project_pi(M, pt(R, {0, 1, 0, 0, 0, 0})));
}

TEST_CASE("column dependence") {
  RingPtr R = PolyRing::make_indexed("x", 4, FieldSpec::rationals());
  LinearMatrix M = hankel(R, 2, 3);
  const FieldSpec f = R->field();
  std::vector<Poly> col0 = {M.at(0, 0), M.at(1, 0)};
  auto c = column_dependence(col0, M);
  REQUIRE(c);
  CHECK((*c)[0].is_one());
  CHECK((*c)[1].is_zero());
  CHECK((*c)[2].is_zero());
  // 2*col0 - col1
  std::vector<Poly> combo = {M.at(0, 0).scaled(Scalar::from_int(2, f)) - M.at(0, 1),
                             M.at(1, 0).scaled(Scalar::from_int(2, f)) - M.at(1, 1)};
  auto c2 = column_dependence(combo, M);
  REQUIRE(c2);
  CHECK((*c2)[0] == Scalar::from_int(2, f));
  CHECK((*c2)[1] == Scalar::from_int(-1, f));
  // a fresh variable is not a combination
  std::vector<Poly> fresh = {parse_poly("x3", R), parse_poly("x0", R)};
  CHECK_FALSE(column_dependence(fresh, M).has_value());
}

TEST_CASE("gl_equivalent finds witnesses and respects obstructions") {
  RingPtr R = PolyRing::make_indexed("x", 4, FieldSpec::gf(32003));
  LinearMatrix M = hankel(R, 2, 3);
  Rng rng(5);
  auto w0 = gl_equivalent(M, M, rng);
  REQUIRE(w0);
  CHECK(M.apply(w0->A, w0->B) == M);
  // row permutation
  ScalMat P(2, 2, R->field());
  P.at(0, 1) = Scalar::one(R->field());
  P.at(1, 0) = Scalar::one(R->field());
  LinearMatrix MP = M.apply(P, ScalMat::identity(3, R->field()));
  auto w1 = gl_equivalent(M, MP, rng);
  REQUIRE(w1);
  CHECK(M.apply(w1->A, w1->B) == MP);
  // symmetric direction: invert by re-solving
  auto w1b = gl_equivalent(MP, M, rng);
  REQUIRE(w1b);
  CHECK(MP.apply(w1b->A, w1b->B) == M);

  // Hankel vs generic 2x3 in 4 variables: no witness can exist
  Rng grng(8);
  LinearMatrix G(R, 2, 3, false);
  for (size_t i = 0; i < 2; i++)
    for (size_t j = 0; j < 3; j++) {
      Poly e(R);
      for (size_t k = 0; k < 4; k++)
        e = e + Poly::variable(R, k).scaled(grng.scalar(R->field()));
      G.set(i, j, e);
    }
  CHECK_FALSE(gl_equivalent(M, G, rng).has_value());
}

TEST_CASE("gl_equivalent congruence on symmetric matrices") {
  RingPtr R = PolyRing::make_indexed("x", 5, FieldSpec::gf(32003));
  LinearMatrix H = hankel(R, 3, 3);  // catalecticant of the rnc of degree 4
  Rng rng(13);
  const FieldSpec f = R->field();
  GLEquivalenceOptions opt;
  opt.congruence = true;
  for (int trial = 0; trial < 3; trial++) {
    ScalMat W(3, 3, f);
    do {
      for (size_t i = 0; i < 3; i++)
        for (size_t j = 0; j < 3; j++) W.at(i, j) = rng.scalar(f);
    } while (W.det().is_zero());
    LinearMatrix HW = H.apply(W, W);
    HW.set_symmetric(true);
    auto wit = gl_equivalent(H, HW, rng, opt);
    REQUIRE(wit);
    CHECK(wit->A == wit->B);
    CHECK(H.apply(wit->A, wit->A) == HW);
  }
}

TEST_CASE("matrix text round trip") {
  RingPtr R = PolyRing::make_indexed("x", 4, FieldSpec::rationals());
  LinearMatrix M = hankel(R, 2, 3);
  std::string text = M.to_text();
  LinearMatrix M2 = parse_linmat(text, R);
  CHECK(M2 == M);
  CHECK(M2.to_text() == text);  // bit-exact round trip
  RingPtr R5 = PolyRing::make_indexed("x", 5, FieldSpec::gf(32003));
  LinearMatrix S = hankel(R5, 3, 3);
  std::string stext = S.to_text();
  CHECK(stext.rfind("linmat 3 3 symmetric", 0) == 0);
  CHECK(parse_linmat(stext, R5).symmetric());
  CHECK(parse_linmat(stext, R5).to_text() == stext);
}
