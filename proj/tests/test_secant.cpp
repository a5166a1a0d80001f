#include "doctest.h"
#include "secdet/acceptance.hpp"
#include "secdet/secant.hpp"

using namespace secdet;

namespace {
const FieldSpec kGF = FieldSpec::gf(32003);
}

TEST_CASE("minimal degree bound") {
  CHECK(min_degree(2, 1) == 3);
  CHECK(min_degree(4, 2) == 15);
  CHECK(min_degree(3, 2) == 10);
  // symmetry and the q = 1 specialization
  for (int e = 0; e <= 5; e++) {
    CHECK(min_degree(e, 1) == e + 1);
    for (int q = 1; q <= 5; q++)
      if (e >= 1) CHECK(min_degree(e, q) == min_degree(q, e));
  }
  CHECK_THROWS(min_degree(-1, 1));
  CHECK_THROWS(min_degree(2, 0));
}

TEST_CASE("secant point sampling") {
  ParamVariety tc = make_scroll({3}, kGF, 1);
  Rng rng(3);
  // q = 1 gives points of X: they satisfy the quadrics
  Ideal I = implicitize(tc, 2);
  Point p = sample_secant_point(tc, 1, rng);
  for (const auto& g : I.gens()) CHECK(g.eval(p.coords).is_zero());

  // q = 2 points of the rnc of degree 4 annihilate the catalecticant
  ParamVariety r4 = make_scroll({4}, kGF, 1);
  const RingPtr& amb = r4.ambient_ring();
  LinearMatrix H(amb, 3, 3, true);
  for (size_t i = 0; i < 3; i++)
    for (size_t j = 0; j < 3; j++) H.set(i, j, Poly::variable(amb, i + j));
  Poly det = minors(H, 3)[0];
  for (int t = 0; t < 50; t++) {
    Point w = sample_secant_point(r4, 2, rng);
    CHECK(det.eval(w.coords).is_zero());
  }

  // rnc degree 6 with q = 2: all 3-minors of the 4x4 Hankel vanish (200/200)
  ParamVariety r6 = make_scroll({6}, kGF, 1);
  const RingPtr& amb6 = r6.ambient_ring();
  LinearMatrix H4(amb6, 4, 4, true);
  for (size_t i = 0; i < 4; i++)
    for (size_t j = 0; j < 4; j++) H4.set(i, j, Poly::variable(amb6, i + j));
  auto m3 = minors(H4, 3);
  int good = 0;
  for (int t = 0; t < 200; t++) {
    Point w = sample_secant_point(r6, 2, rng);
    bool all = true;
    for (const auto& m : m3)
      if (!m.eval(w.coords).is_zero()) all = false;
    if (all) good++;
  }
  CHECK(good == 200);
}

TEST_CASE("terracini dimensions") {
  Rng rng(5);
  ParamVariety v23 = make_veronese(3, 2, kGF);
  SecantProfile p1 = terracini(v23, 2, rng, 5);
  CHECK(p1.dim_secant == 6);
  CHECK(p1.e == 3);

  ParamVariety tc = make_scroll({3}, kGF, 1);
  SecantProfile p2 = terracini(tc, 2, rng, 5);
  CHECK(p2.dim_secant == 3);  // fills P^3
  CHECK(p2.e == 0);

  ParamVariety s34 = make_scroll({3, 4}, kGF, 2);
  SecantProfile p3 = terracini(s34, 2, rng, 5);
  CHECK(p3.dim_secant == 5);
  CHECK(p3.e == 3);

  // monotonicity in q
  SecantProfile q1 = terracini(s34, 1, rng, 3);
  CHECK(q1.dim_secant <= p3.dim_secant);
}

TEST_CASE("matrix_from_multiplication on the standard families") {
  // nu_2(P^n): the generic symmetric matrix
  ParamVariety v22 = make_veronese(2, 2, kGF);
  LinearMatrix M = family_presentation(v22);
  CHECK(M.rows() == 3);
  CHECK(M.cols() == 3);
  CHECK(M.symmetric());
  // entry (i,j) pulls back to t_i t_j
  const RingPtr& P = v22.param_ring();
  CHECK(v22.pull(M.at(0, 1)) == parse_poly("t0*t1", P));
  CHECK(v22.pull(M.at(2, 2)) == parse_poly("t2^2", P));

  // nu_3(P^2): the 3x6 scroll matrix
  ParamVariety v23 = make_veronese(2, 3, kGF);
  LinearMatrix M2 = family_presentation(v23);
  CHECK(M2.rows() == 3);
  CHECK(M2.cols() == 6);
  CHECK_FALSE(M2.symmetric());
  for (const auto& m : minors(M2, 2)) CHECK(v23.vanishes_on(m));

  // S(1,5) with q = 2: the 3x4 block living only on the second block
  ParamVariety s15 = make_scroll({1, 5}, kGF, 2);
  LinearMatrix M3 = family_presentation(s15);
  CHECK(M3.rows() == 3);
  CHECK(M3.cols() == 4);
  // entries use only the x-coordinates of the degree-5 block (x2..x7)
  for (size_t i = 0; i < 3; i++)
    for (size_t j = 0; j < 4; j++) {
      CHECK(M3.at(i, j).linear_coeff(0).is_zero());
      CHECK(M3.at(i, j).linear_coeff(1).is_zero());
    }

  // an invalid decomposition is rejected
  const RingPtr& Ps = s15.param_ring();
  std::vector<Poly> bad = {parse_poly("s^2", Ps)};
  CHECK_THROWS(matrix_from_multiplication(s15, bad, bad, std::nullopt));
}

TEST_CASE("certify_presentation on the twisted cubic and a broken input") {
  ParamVariety tc = make_scroll({3}, kGF, 1);
  LinearMatrix M = family_presentation(tc);
  Rng rng(7);
  SecantProfile prof = terracini(tc, 1, rng, 5);
  REQUIRE(prof.e == 2);
  CertifyOptions opt;
  opt.secant_trials = 50;
  PresentationVerdict v = certify_presentation(M, tc, 1, prof, rng, opt);
  CHECK(v.kind == PresentationKind::Scroll);
  CHECK(v.all_pass());
  REQUIRE(v.hilbert);
  CHECK(v.hilbert->codimension == 2);
  CHECK(v.hilbert->degree == 3);

  // zero an entry: fails 1-genericity
  LinearMatrix Z = M;
  Z.set(0, 0, Poly::zero(Z.ring()));
  PresentationVerdict vz = certify_presentation(Z, tc, 1, prof, rng, opt);
  CHECK(vz.kind == PresentationKind::NotCertified);
  CHECK(vz.failing == "one_generic");
}

TEST_CASE("certify_presentation classifies the 4x4 Hankel as Veronese type") {
  ParamVariety r6 = make_scroll({6}, kGF, 2);
  LinearMatrix M = rnc_veronese_matrix(r6, 2);
  Rng rng(11);
  SecantProfile prof = terracini(r6, 2, rng, 5);
  CHECK(prof.e == 3);
  CertifyOptions opt;
  opt.secant_trials = 50;
  PresentationVerdict v = certify_presentation(M, r6, 2, prof, rng, opt);
  CHECK(v.kind == PresentationKind::Veronese);
  REQUIRE(v.hilbert);
  CHECK(v.hilbert->degree == 10);
}

TEST_CASE("rank bound at secant points") {
  ParamVariety v23 = make_veronese(3, 2, kGF);
  LinearMatrix M = family_presentation(v23);
  Rng rng(13);
  CHECK(rank_bound_check(M, v23, 2, 50, rng));
  // q = 1 restates the rank-1 hypothesis
  CHECK(rank_bound_check(M, v23, 1, 20, rng));
}

TEST_CASE("factor_presentation recovers the section data") {
  // generic symmetric: s_i = t_i, alpha = 1, u = 1
  ParamVariety v23 = make_veronese(3, 2, kGF);
  LinearMatrix M = family_presentation(v23);
  SectionFactorization sf = factor_presentation(M, v23);
  const RingPtr& P = v23.param_ring();
  CHECK(sf.u == Poly::constant(P, Scalar::one(kGF)));
  REQUIRE(sf.alpha);
  CHECK(sf.alpha->is_one());
  for (size_t i = 0; i < 4; i++) CHECK(sf.s[i] == sf.t[i]);

  // Segre: the literal bilinear split
  ParamVariety seg = make_segre(1, 2, kGF);
  LinearMatrix MS = family_presentation(seg);
  SectionFactorization sfs = factor_presentation(MS, seg);
  const RingPtr& PS = seg.param_ring();
  CHECK(sfs.u == Poly::constant(PS, Scalar::one(kGF)));
  CHECK(sfs.s[0] == parse_poly("s0", PS));
  CHECK(sfs.t[2] == parse_poly("t2", PS));

  // S(1,5), q = 2: u is the base section l2
  ParamVariety s15 = make_scroll({1, 5}, kGF, 2);
  LinearMatrix M3 = family_presentation(s15);
  SectionFactorization sf3 = factor_presentation(M3, s15);
  const RingPtr& P3 = s15.param_ring();
  CHECK(sf3.u == parse_poly("l2", P3));
  CHECK(sf3.s == std::vector<Poly>{parse_poly("s^2", P3), parse_poly("s*t", P3),
                                   parse_poly("t^2", P3)});
  CHECK(sf3.t == std::vector<Poly>{parse_poly("s^3", P3), parse_poly("s^2*t", P3),
                                   parse_poly("s*t^2", P3), parse_poly("t^3", P3)});

  // round trip: rebuilding from the factorization is GL-equivalent
  LinearMatrix R = matrix_from_multiplication(s15, sf3.s, sf3.t, sf3.u);
  Rng rng(17);
  CHECK(gl_equivalent(R, M3, rng).has_value());
}

TEST_CASE("secant_ideal_tiny") {
  Rng rng(19);
  // q = 1 reduces to implicitization
  ParamVariety tc = make_scroll({3}, kGF, 1);
  Ideal I1 = secant_ideal_tiny(tc, 1, 2, rng);
  CHECK(I1.gens().size() == 3);

  // rnc degree 5, q = 2, D = 3: the 3-minors of the 3x4 catalecticant
  ParamVariety r5 = make_scroll({5}, kGF, 1);
  Ideal I2 = secant_ideal_tiny(r5, 2, 3, rng);
  const RingPtr& amb = r5.ambient_ring();
  LinearMatrix C(amb, 3, 4, false);
  for (size_t i = 0; i < 3; i++)
    for (size_t j = 0; j < 4; j++) C.set(i, j, Poly::variable(amb, i + j));
  Ideal J(amb, minors(C, 3));
  CHECK(ideal_equal(I2, J));

  // the guard rejects big instances
  ParamVariety v24 = make_veronese(4, 2, kGF);
  CHECK_THROWS(secant_ideal_tiny(v24, 2, 3, rng));
}
