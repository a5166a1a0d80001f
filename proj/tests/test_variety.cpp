#include "doctest.h"
#include "secdet/variety.hpp"

using namespace secdet;

namespace {
const FieldSpec kGF = FieldSpec::gf(32003);
}

TEST_CASE("scroll constructors") {
  ParamVariety tc = make_scroll({3}, FieldSpec::rationals(), 1);
  CHECK(tc.ambient_dim() == 3);
  CHECK(tc.dim() == 1);
  const RingPtr& P = tc.param_ring();
  CHECK(tc.sections()[0] == parse_poly("s^3", P));
  CHECK(tc.sections()[1] == parse_poly("s^2*t", P));
  CHECK(tc.sections()[3] == parse_poly("t^3", P));

  ParamVariety s12 = make_scroll({1, 2}, kGF, 1);
  CHECK(s12.ambient_dim() == 4);  // 5 sections
  CHECK(s12.dim() == 2);

  ParamVariety s34 = make_scroll({3, 4}, kGF, 2);
  CHECK(s34.sections().size() == 9);
  CHECK(s34.ambient_dim() == 8);
  // block lengths 4 and 5
  CHECK(s34.sections()[0] == parse_poly("l1*s^3", s34.param_ring()));
  CHECK(s34.sections()[4] == parse_poly("l2*s^4", s34.param_ring()));

  CHECK_THROWS(make_scroll({}, kGF));
  CHECK_THROWS(make_scroll({0, 0}, kGF));
}

TEST_CASE("veronese, segre, p1p1 constructors") {
  ParamVariety v22 = make_veronese(2, 2, kGF);
  CHECK(v22.sections().size() == 6);
  ParamVariety v23 = make_veronese(2, 3, kGF);
  CHECK(v23.sections().size() == 10);
  // make_veronese(1, d) is the rational normal curve up to coordinate order
  ParamVariety v13 = make_veronese(1, 3, kGF);
  ParamVariety s3 = make_scroll({3}, kGF);
  CHECK(v13.sections().size() == s3.sections().size());
  for (size_t k = 0; k < 4; k++) {
    CHECK(v13.sections()[k].lt().m.deg == 3);
  }

  ParamVariety seg11 = make_segre(1, 1, kGF);
  CHECK(seg11.sections().size() == 4);
  Ideal I = implicitize(seg11, 2);
  REQUIRE(I.gens().size() == 1);  // the single Segre quadric
  CHECK(seg11.vanishes_on(I.gens()[0]));

  ParamVariety seg22 = make_segre(2, 2, kGF);
  CHECK(seg22.sections().size() == 9);

  ParamVariety p11 = make_p1p1_22(kGF);
  CHECK(p11.sections().size() == 9);
  // sections match s^{2-i} t^i u^{2-j} v^j in row-major order
  CHECK(p11.sections()[0] == parse_poly("s^2*u^2", p11.param_ring()));
  CHECK(p11.sections()[5] == parse_poly("s*t*v^2", p11.param_ring()));
  CHECK(p11.sections()[8] == parse_poly("t^2*v^2", p11.param_ring()));
}

TEST_CASE("del Pezzo blowups") {
  // s = 0 reduces to the 3-Veronese surface
  ParamVariety dp0 = make_delpezzo_blowup({}, kGF);
  ParamVariety v23 = make_veronese(2, 3, kGF);
  REQUIRE(dp0.sections().size() == 10);
  for (size_t k = 0; k < 10; k++) CHECK(dp0.sections()[k].str() == v23.sections()[k].str());

  // one coordinate point: the nine cubic monomials other than t2^3
  auto e2 = std::vector<Scalar>{Scalar::zero(kGF), Scalar::zero(kGF), Scalar::one(kGF)};
  ParamVariety dp1 = make_delpezzo_blowup({e2}, kGF);
  CHECK(dp1.sections().size() == 9);
  for (const auto& s : dp1.sections()) CHECK(s.eval(e2).is_zero());

  // six general points: a cubic surface in P^3
  Rng rng(2);
  std::vector<std::vector<Scalar>> six;
  while (six.size() < 6) {
    std::vector<Scalar> p{rng.scalar(kGF), rng.scalar(kGF), rng.scalar(kGF)};
    auto trial = six;
    trial.push_back(p);
    try {
      make_delpezzo_blowup(trial, kGF);
      six = trial;
    } catch (const std::invalid_argument&) {
    }
  }
  ParamVariety dp6 = make_delpezzo_blowup(six, kGF);
  CHECK(dp6.sections().size() == 4);

  // degenerate configurations are rejected
  auto e0 = std::vector<Scalar>{Scalar::one(kGF), Scalar::zero(kGF), Scalar::zero(kGF)};
  auto e1 = std::vector<Scalar>{Scalar::zero(kGF), Scalar::one(kGF), Scalar::zero(kGF)};
  auto mid = std::vector<Scalar>{Scalar::one(kGF), Scalar::one(kGF), Scalar::zero(kGF)};
  CHECK_THROWS(make_delpezzo_blowup({e0, e0}, kGF));
  CHECK_THROWS(make_delpezzo_blowup({e0, e1, mid}, kGF));  // collinear
  std::vector<std::vector<Scalar>> seven(7, e0);
  CHECK_THROWS(make_delpezzo_blowup(seven, kGF));
}

TEST_CASE("point sampling") {
  ParamVariety tc = make_scroll({3}, FieldSpec::rationals(), 1);
  // at parameters (1, 2) the twisted cubic passes through (1 : 2 : 4 : 8)
  std::vector<Scalar> par{Scalar::one(tc.param_ring()->field()),
                          Scalar::from_int(2, tc.param_ring()->field())};
  std::vector<Scalar> coords;
  for (const auto& s : tc.sections()) coords.push_back(s.eval(par));
  CHECK(coords[0].is_one());
  CHECK(coords[3] == Scalar::from_int(8, tc.param_ring()->field()));

  // sampled points satisfy the degree-2 implicit equations
  ParamVariety tcp = make_scroll({3}, kGF, 1);
  Ideal I = implicitize(tcp, 2);
  REQUIRE(I.gens().size() == 3);
  Rng rng2(7);
  for (int t = 0; t < 50; t++) {
    Point p = sample_point(tcp, rng2);
    for (const auto& g : I.gens()) CHECK(g.eval(p.coords).is_zero());
  }
  // two samples with distinct parameters are linearly independent
  auto pts = sample_points(tcp, 2, rng2);
  ScalMat two = ScalMat::from_rows({pts[0].coords, pts[1].coords}, kGF);
  CHECK(two.rank() == 2);
}

TEST_CASE("tangent spaces") {
  ParamVariety tc = make_scroll({3}, FieldSpec::rationals(), 1);
  const FieldSpec f = FieldSpec::rationals();
  std::vector<Scalar> par{Scalar::one(f), Scalar::zero(f)};
  TangentSpace T = tangent_space(tc, par);
  CHECK(T.spanning_rows.rows() == 2);
  CHECK(T.cutting_forms.rows() == 2);
  // tangent at (1,0) is spanned by e0, e1; cutting forms live on x2, x3
  for (size_t r = 0; r < 2; r++) {
    CHECK(T.cutting_forms.at(r, 0).is_zero());
    CHECK(T.cutting_forms.at(r, 1).is_zero());
  }
  // cutting forms annihilate the base point itself
  for (size_t r = 0; r < T.cutting_forms.rows(); r++) {
    Scalar acc = Scalar::zero(f);
    for (size_t j = 0; j < 4; j++) acc += T.cutting_forms.at(r, j) * T.base.coords[j];
    CHECK(acc.is_zero());
  }

  ParamVariety v2 = make_veronese(2, 2, FieldSpec::rationals());
  std::vector<Scalar> par2{Scalar::one(f), Scalar::zero(f), Scalar::zero(f)};
  TangentSpace T2 = tangent_space(v2, par2);
  CHECK(T2.spanning_rows.rows() == 3);  // projective tangent plane dim 2

  // first-order containment in the implicit quadrics
  ParamVariety v2p = make_veronese(2, 2, kGF);
  Rng rng(9);
  Point p = sample_point(v2p, rng);
  TangentSpace T3 = tangent_space(v2p, *p.param);
  Ideal I = implicitize(v2p, 2);
  REQUIRE(I.gens().size() == 6);
  for (const auto& g : I.gens())
    for (size_t r = 0; r < T3.spanning_rows.rows(); r++) {
      Scalar acc = Scalar::zero(kGF);
      for (size_t v = 0; v < 6; v++)
        acc += g.derivative(v).eval(p.coords) * T3.spanning_rows.at(r, v);
      CHECK(acc.is_zero());
    }
}

TEST_CASE("implicitize kernel dimensions") {
  ParamVariety tc = make_scroll({3}, kGF, 1);
  CHECK(implicitize(tc, 2).gens().size() == 3);
  ParamVariety v22 = make_veronese(2, 2, kGF);
  Ideal Iv = implicitize(v22, 2);
  CHECK(Iv.gens().size() == 6);  // 21 - 15
  for (const auto& g : Iv.gens()) CHECK(v22.vanishes_on(g));
}

TEST_CASE("inner projection of a rational normal curve drops the degree") {
  ParamVariety r5 = make_scroll({5}, kGF, 1);
  Rng rng(11);
  Point z = sample_point(r5, rng);
  auto [proj, wit] = inner_projection(r5, z);
  CHECK(proj.sections().size() == 5);
  CHECK(proj.dim() == 1);
  // quadric count of the image: C(6,2) = 15 minus rank 9 = 6
  Ideal I = implicitize(proj, 2);
  CHECK(I.gens().size() == 6);

  // lifting a form and projecting back is the identity
  Poly ell = Poly::variable(proj.ambient_ring(), 2);
  Poly lift = wit.lift_form(ell);
  auto back = wit.project_form(lift);
  REQUIRE(back);
  CHECK(*back == ell);
  // lifted forms vanish on the center
  CHECK(lift.eval(z.coords).is_zero());
}

TEST_CASE("tangential projection of nu_2(P^3) looks like nu_2(P^2)") {
  ParamVariety v23 = make_veronese(3, 2, kGF);
  Rng rng(13);
  Point p = sample_point(v23, rng);
  TangentSpace T = tangent_space(v23, *p.param);
  auto [proj, wit] = tangential_projection(v23, T);
  CHECK(proj.sections().size() == 6);
  Ideal I = implicitize(proj, 2);
  ParamVariety v22 = make_veronese(2, 2, kGF);
  Ideal J = implicitize(v22, 2);
  CHECK(I.gens().size() == J.gens().size());
  const HilbertData& h = I.hilbert();
  const HilbertData& h2 = J.hilbert();
  CHECK(h.codimension == h2.codimension);
  CHECK(h.degree == h2.degree);
}

TEST_CASE("variety file round trip") {
  std::string text = variety_file_text("scroll", {"a = 3,4", "q = 2"}, kGF, 1);
  ParamVariety V = parse_variety_file(text);
  CHECK(V.sections().size() == 9);
  CHECK(V.tag() == "scroll(3,4)");

  ParamVariety W = parse_variety_file(
      "family = custom\nparams = s,t\nsections = [s^2, s*t, t^2]\nfield = gf:32003\n");
  CHECK(W.sections().size() == 3);
  CHECK(W.dim() == 1);
  CHECK_THROWS(parse_variety_file("family = nonsense\n"));
}
