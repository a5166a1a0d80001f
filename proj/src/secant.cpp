#include "secdet/secant.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace secdet {

int64_t min_degree(int e, int q) {
  if (e < 0 || q < 1) throw std::invalid_argument("min_degree: need e >= 0, q >= 1");
  return binomial_i64(e + q, q);
}

Point sample_secant_point(const ParamVariety& V, int q, Rng& rng) {
  if (q < 1) throw std::invalid_argument("q >= 1 required");
  const FieldSpec f = V.param_ring()->field();
  for (int attempt = 0; attempt < 32; attempt++) {
    std::vector<Point> pts = sample_points(V, size_t(q), rng);
    std::vector<std::vector<Scalar>> rows;
    for (const auto& p : pts) rows.push_back(p.coords);
    if (ScalMat::from_rows(rows, f).rank() != size_t(q)) continue;
    std::vector<Scalar> coords(V.ambient_dim() + 1, Scalar::zero(f));
    for (const auto& p : pts) {
      Scalar c = rng.nonzero_scalar(f);
      for (size_t k = 0; k < coords.size(); k++) coords[k] += p.coords[k].is_zero()
                                                                 ? Scalar::zero(f)
                                                                 : p.coords[k] * c;
    }
    bool nz = false;
    for (const auto& c : coords)
      if (!c.is_zero()) nz = true;
    if (nz) return Point{std::move(coords), std::nullopt};
  }
  throw std::runtime_error("sample_secant_point: retry limit exceeded");
}

SecantProfile terracini(const ParamVariety& V, int q, Rng& rng, int trials) {
  if (trials < 1) throw std::invalid_argument("trials >= 1 required");
  const FieldSpec f = V.param_ring()->field();
  size_t best = 0;
  for (int t = 0; t < trials; t++) {
    ScalMat stack(0, V.ambient_dim() + 1, f);
    bool ok = true;
    for (int i = 0; i < q && ok; i++) {
      for (int retry = 0;; retry++) {
        if (retry >= 8) {
          ok = false;
          break;
        }
        try {
          Point p = sample_point(V, rng);
          TangentSpace ts = tangent_space(V, *p.param);
          stack = stack.rows() ? stack.vstack(ts.spanning_rows) : ts.spanning_rows;
          break;
        } catch (const std::runtime_error&) {
          continue;
        }
      }
    }
    if (ok) best = std::max(best, stack.rank());
  }
  if (best == 0) throw std::runtime_error("terracini: tangent computation failed");
  SecantProfile prof;
  prof.q = q;
  prof.dim_secant = int(best) - 1;
  prof.e = int(V.ambient_dim()) - prof.dim_secant;
  prof.minimal_degree_target = min_degree(prof.e, q);
  return prof;
}

LinearMatrix matrix_from_multiplication(const ParamVariety& V, const std::vector<Poly>& s1,
                                        const std::vector<Poly>& s2,
                                        const std::optional<Poly>& u) {
  const RingPtr& R = V.param_ring();
  const RingPtr& amb = V.ambient_ring();
  const FieldSpec f = R->field();
  Poly base = u ? *u : Poly::constant(R, Scalar::one(f));

  // solve each product against the section span
  std::vector<Poly> targets;
  for (const auto& a : s1)
    for (const auto& b : s2) targets.push_back(a * b * base);
  std::vector<Poly> all = V.sections();
  size_t nsec = all.size();
  for (const auto& t : targets) all.push_back(t);
  // coefficient matrix over shared monomials
  std::map<std::string, size_t> col;
  std::vector<Monomial> mons;
  for (const auto& p : all)
    for (const auto& t : p.terms()) {
      std::string key(reinterpret_cast<const char*>(t.m.e.data()), t.m.n);
      if (!col.count(key)) {
        col[key] = mons.size();
        mons.push_back(t.m);
      }
    }
  ScalMat secmat(nsec, mons.size(), f);
  for (size_t i = 0; i < nsec; i++)
    for (const auto& t : all[i].terms()) {
      std::string key(reinterpret_cast<const char*>(t.m.e.data()), t.m.n);
      secmat.at(i, col[key]) = t.c;
    }
  ScalMat solver = secmat.transpose();

  LinearMatrix M(amb, s1.size(), s2.size());
  for (size_t i = 0; i < s1.size(); i++)
    for (size_t j = 0; j < s2.size(); j++) {
      const Poly& target = targets[i * s2.size() + j];
      std::vector<Scalar> rhs(mons.size(), Scalar::zero(f));
      for (const auto& t : target.terms()) {
        std::string key(reinterpret_cast<const char*>(t.m.e.data()), t.m.n);
        rhs[col[key]] = t.c;
      }
      auto sol = solver.solve(rhs);
      if (!sol)
        throw std::invalid_argument(
            "matrix_from_multiplication: product falls outside the section span");
      Poly entry(amb);
      for (size_t k = 0; k < nsec; k++)
        if (!(*sol)[k].is_zero()) entry = entry + Poly::variable(amb, k).scaled((*sol)[k]);
      M.set(i, j, entry);
    }
  bool sym = s1.size() == s2.size();
  if (sym) {
    for (size_t i = 0; i < s1.size() && sym; i++)
      for (size_t j = 0; j < s2.size() && sym; j++)
        if (M.at(i, j) != M.at(j, i)) sym = false;
  }
  if (sym) M.set_symmetric(true);
  return M;
}

LinearMatrix family_presentation(const ParamVariety& V) {
  if (!V.decomposition())
    throw std::invalid_argument("variety carries no multiplication decomposition");
  const auto& d = *V.decomposition();
  return matrix_from_multiplication(V, d.s1, d.s2, d.u);
}

std::string status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Evidence: return "evidence";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

bool PresentationVerdict::all_pass() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

PresentationVerdict certify_presentation(const LinearMatrix& M, const ParamVariety& V, int q,
                                         const SecantProfile& profile, Rng& rng,
                                         const CertifyOptions& opt) {
  PresentationVerdict verdict;
  auto add = [&](const std::string& name, CheckStatus st, const std::string& note = "") {
    verdict.checks.push_back({name, st, note});
    if (st == CheckStatus::Fail && verdict.failing.empty()) verdict.failing = name;
  };

  // (i) 1-genericity
  OneGenericResult og = is_one_generic(M, opt.gb);
  add("one_generic", og.one_generic ? CheckStatus::Pass : CheckStatus::Fail);

  // (ii) 2-minors vanish on X, symbolically
  bool rank1 = true;
  if (std::min(M.rows(), M.cols()) >= 2)
    for (const auto& m2 : minors(M, 2))
      if (!V.vanishes_on(m2)) {
        rank1 = false;
        break;
      }
  add("rank1_on_X", rank1 ? CheckStatus::Pass : CheckStatus::Fail);

  // (iii) size check against e
  const int e = profile.e;
  bool veronese_size = M.symmetric() && M.rows() == size_t(q) + 2 && e == 3;
  bool scroll_size = M.rows() == size_t(q) + 1 && M.cols() == size_t(e + q);
  add("size_matches_e", (veronese_size || scroll_size) ? CheckStatus::Pass : CheckStatus::Fail,
      veronese_size ? "veronese" : (scroll_size ? "scroll" : ""));

  // (iv) sampled vanishing of (q+1)-minors on secant points
  bool vanish = true;
  if (size_t(q) + 1 <= std::min(M.rows(), M.cols())) {
    auto qm = minors(M, size_t(q) + 1);
    for (int t = 0; t < opt.secant_trials && vanish; t++) {
      Point w = sample_secant_point(V, q, rng);
      for (const auto& f : qm)
        if (!f.eval(w.coords).is_zero()) {
          vanish = false;
          break;
        }
    }
    add("secant_vanishing", vanish ? CheckStatus::Evidence : CheckStatus::Fail,
        vanish ? std::to_string(opt.secant_trials) + "/" + std::to_string(opt.secant_trials)
               : "");
  } else {
    vanish = false;
    add("secant_vanishing", CheckStatus::Fail, "matrix too small for (q+1)-minors");
  }

  // (v) exact Hilbert data of I_{q+1}(M)
  bool degree_ok = false;
  if (!opt.run_hilbert) {
    add("degree_matches", CheckStatus::Skipped, "disabled");
  } else if (size_t(q) + 1 <= std::min(M.rows(), M.cols())) {
    try {
      Ideal I(M.ring(), minors(M, size_t(q) + 1));
      const HilbertData& h = I.hilbert(opt.gb);
      verdict.hilbert = h;
      degree_ok = (h.codimension == e) && (h.degree == min_degree(e, q));
      add("degree_matches", degree_ok ? CheckStatus::Pass : CheckStatus::Fail,
          "codim " + std::to_string(h.codimension) + ", degree " + h.degree.get_str());
    } catch (const BudgetExceeded&) {
      add("degree_matches", CheckStatus::Skipped, "budget exceeded");
    }
  } else {
    add("degree_matches", CheckStatus::Fail, "matrix too small");
  }

  bool core = og.one_generic && rank1 && vanish;
  if (core && veronese_size)
    verdict.kind = PresentationKind::Veronese;
  else if (core && scroll_size)
    verdict.kind = PresentationKind::Scroll;
  else
    verdict.kind = PresentationKind::NotCertified;
  if (verdict.kind != PresentationKind::NotCertified && opt.run_hilbert && !degree_ok) {
    // exact check failed or was skipped: certification is evidence-only
    bool skipped = false;
    for (auto& c : verdict.checks)
      if (c.name == "degree_matches" && c.status == CheckStatus::Skipped) skipped = true;
    if (!skipped) verdict.kind = PresentationKind::NotCertified;
  }
  return verdict;
}

bool rank_bound_check(const LinearMatrix& M, const ParamVariety& V, int q, int trials, Rng& rng) {
  for (int t = 0; t < trials; t++) {
    Point w = sample_secant_point(V, q, rng);
    if (M.eval(w.coords).rank() > size_t(q)) return false;
  }
  return true;
}

SectionFactorization factor_presentation(const LinearMatrix& M, const ParamVariety& V) {
  const RingPtr& R = V.param_ring();
  const size_t a = M.rows(), b = M.cols();
  std::vector<std::vector<Poly>> pull(a, std::vector<Poly>(b, Poly(R)));
  for (size_t i = 0; i < a; i++)
    for (size_t j = 0; j < b; j++) {
      pull[i][j] = V.pull(M.at(i, j));
      if (pull[i][j].is_zero())
        throw std::runtime_error("factor_presentation: an entry pulls back to zero");
    }
  Poly u(R);
  for (const auto& row : pull)
    for (const auto& p : row) u = u.is_zero() ? p : poly_gcd(u, p);
  u = u.monic();

  SectionFactorization out;
  out.u = u;
  for (size_t i = 0; i < a; i++) {
    Poly g(R);
    for (const auto& p : pull[i]) g = g.is_zero() ? p : poly_gcd(g, p);
    out.s.push_back(exact_div(g.monic(), u).monic());
  }
  for (size_t j = 0; j < b; j++) out.t.push_back(exact_div(pull[0][j], out.s[0] * u));
  // verify the two-factor identity exactly
  for (size_t i = 0; i < a; i++)
    for (size_t j = 0; j < b; j++)
      if (pull[i][j] != out.s[i] * out.t[j] * u)
        throw std::runtime_error("factor_presentation: factorization identity fails");
  if (M.symmetric()) {
    // s_i = alpha t_i for a single scalar
    std::optional<Scalar> alpha;
    for (size_t i = 0; i < a; i++) {
      if (out.t[i].is_zero()) throw std::runtime_error("factor_presentation: zero section");
      Poly ratio_num = out.s[i], ratio_den = out.t[i];
      // s_i / t_i must be the constant alpha
      Poly q = exact_div(ratio_num, ratio_den.monic());
      if (q.degree() != 0)
        throw std::runtime_error("factor_presentation: symmetric ratio is not scalar");
      Scalar ai = q.lt().c / ratio_den.lt().c;
      if (!alpha)
        alpha = ai;
      else if (!(*alpha == ai))
        throw std::runtime_error("factor_presentation: symmetric scalars disagree");
    }
    out.alpha = alpha;
  }
  return out;
}

SecantParametrization secant_parametrization(const ParamVariety& V, int q) {
  const RingPtr& R = V.param_ring();
  const FieldSpec f = R->field();
  std::vector<std::string> names;
  for (int i = 1; i <= q; i++) names.push_back("m" + std::to_string(i));
  for (int i = 1; i <= q; i++)
    for (const auto& v : R->vars()) names.push_back(v + "_" + std::to_string(i));
  RingPtr S = PolyRing::make(names, f);
  const size_t np = R->nvars();
  SecantParametrization out;
  out.ring = S;
  for (size_t k = 0; k < V.sections().size(); k++) {
    Poly acc(S);
    for (int i = 0; i < q; i++) {
      std::vector<Poly> map;
      for (size_t v = 0; v < np; v++)
        map.push_back(Poly::variable(S, size_t(q) + size_t(i) * np + v));
      acc = acc + Poly::variable(S, size_t(i)) * pullback(V.sections()[k], map, S);
    }
    out.map.push_back(acc);
  }
  return out;
}

Ideal secant_ideal_tiny(const ParamVariety& V, int q, int D, Rng& rng) {
  if (V.ambient_dim() > 8 || q > 2 || D > 4)
    throw std::invalid_argument("secant_ideal_tiny: instance exceeds the tiny-instance guard");
  if (q == 1) return implicitize(V, D);

  const RingPtr& amb = V.ambient_ring();
  const FieldSpec f = amb->field();
  SecantParametrization par = secant_parametrization(V, q);

  std::vector<Poly> gens;
  for (int d = 1; d <= D; d++) {
    auto mons = monomials_of_degree(amb, d);
    const size_t margin = 20;
    std::vector<std::vector<Scalar>> rows;
    for (size_t s = 0; s < mons.size() + margin; s++) {
      Point w = sample_secant_point(V, q, rng);
      std::vector<Scalar> row;
      for (const auto& m : mons) row.push_back(Poly::term(amb, m, Scalar::one(f)).eval(w.coords));
      rows.push_back(std::move(row));
    }
    ScalMat ev = ScalMat::from_rows(rows, f);
    for (const auto& v : ev.kernel()) {
      Poly g(amb);
      for (size_t k = 0; k < mons.size(); k++)
        if (!v[k].is_zero()) g = g + Poly::term(amb, mons[k], v[k]);
      // certify symbolically on the q-fold parametrization
      if (pullback(g, par.map, par.ring).is_zero()) gens.push_back(g.monic());
    }
  }
  return Ideal(amb, std::move(gens));
}

}  // namespace secdet
